/*
Copyright 2026 The dagmetrics Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "dagmetrics/metrics.hpp"

#include <algorithm>

#include "distance_rows.hpp"

namespace dagmetrics {

std::optional<std::uint32_t> DistanceMap::find(VertexId from, VertexId to) const noexcept {
    auto r = row(from);
    auto it = std::lower_bound(r.begin(), r.end(), to, [](const Entry &e, VertexId v) { return e.target < v; });
    if (it == r.end() || it->target != to)
        return std::nullopt;
    return it->distance;
}

std::size_t DistanceMap::size() const noexcept {
    std::size_t total = 0;
    for (const auto &r : rows_)
        total += r.size();
    return total;
}

Instrumented<StretchResult> stretch(const Dag &g) {
    const std::size_t n = g.vertex_count();
    if (n == 0)
        throw EmptyGraph();

    constexpr std::int64_t unvisited = -1;
    std::vector<std::int64_t> lp(n, unvisited);
    InstrumentationCounters counters;

    // Frame of a suspended LP(v): the next successor to consult and the best
    // value seen so far.
    struct Frame {
        VertexId v;
        std::size_t next;
        std::int64_t best;
    };
    std::vector<Frame> stack;

    auto roots = sources(g);
    for (auto root : roots) {
        if (lp[root.value()] != unvisited)
            continue;
        stack.push_back({root, 0, 0});
        while (!stack.empty()) {
            Frame &f = stack.back();
            auto succ = g.successors(f.v);
            if (f.next < succ.size()) {
                VertexId child = succ[f.next];
                if (lp[child.value()] == unvisited) {
                    stack.push_back({child, 0, 0});
                    continue;
                }
                ++counters.edge_examinations;
                f.best = std::max(f.best, lp[child.value()] + 1);
                ++f.next;
                continue;
            }
            lp[f.v.value()] = f.best;
            ++counters.vertex_evaluations;
            stack.pop_back();
        }
    }

    StretchResult result;
    result.lp.resize(n);
    for (std::size_t v = 0; v < n; ++v)
        result.lp[v] = static_cast<std::uint32_t>(lp[v]);
    // The maximum is taken over the sources only; the smallest-index vertex
    // attaining it is itself a source.
    result.witness_source = roots.front();
    result.stretch = result.lp[roots.front().value()];
    for (auto s : roots) {
        if (result.lp[s.value()] > result.stretch) {
            result.stretch = result.lp[s.value()];
            result.witness_source = s;
        }
    }
    return {std::move(result), counters};
}

namespace detail {

RowBuilder::RowBuilder(std::size_t n) : scratch_(n, 0) {}

std::vector<DistanceMap::Entry> RowBuilder::build(const Dag &g, VertexId p,
                                                  const std::vector<std::vector<DistanceMap::Entry>> &rows,
                                                  std::uint64_t &updates) {
    auto relax = [&](VertexId x, std::uint32_t d) {
        std::uint32_t &slot = scratch_[x.value()];
        if (slot == 0) {
            touched_.push_back(x);
            slot = d;
        } else if (d < slot) {
            slot = d;
        }
        ++updates;
    };

    for (auto child : g.successors(p)) {
        relax(child, 1);
        for (const auto &e : rows[child.value()])
            relax(e.target, e.distance + 1);
    }

    std::sort(touched_.begin(), touched_.end());
    std::vector<DistanceMap::Entry> row;
    row.reserve(touched_.size());
    for (auto x : touched_) {
        row.push_back({x, scratch_[x.value()]});
        scratch_[x.value()] = 0;
    }
    touched_.clear();
    return row;
}

} // namespace detail

DiameterResult diameter_from(const DistanceMap &distances) {
    DiameterResult result;
    for (std::uint32_t u = 0; u < distances.source_count(); ++u) {
        for (const auto &e : distances.row(VertexId(u))) {
            if (e.distance > result.diameter) {
                result.diameter = e.distance;
                result.witness = std::pair{VertexId(u), e.target};
            }
        }
    }
    return result;
}

Instrumented<DiameterResult> diameter(const Dag &g) {
    auto [distances, counters] = all_pairs_distances(g);
    return {diameter_from(distances), counters};
}

namespace serial {

Instrumented<DistanceMap> all_pairs_distances(const Dag &g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<DistanceMap::Entry>> rows(n);
    InstrumentationCounters counters;
    detail::RowBuilder builder(n);

    const auto &order = g.topological_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        rows[it->value()] = builder.build(g, *it, rows, counters.distance_updates);
        ++counters.vertex_evaluations;
        counters.edge_examinations += g.out_degree(*it);
    }
    return {DistanceMap(std::move(rows)), counters};
}

} // namespace serial

} // namespace dagmetrics
