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

#include "dagmetrics/graph.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <sstream>

namespace dagmetrics {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i]))
            ++i;
        std::size_t start = i;
        while (i < line.size() && !is_space(line[i]))
            ++i;
        if (i > start)
            tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

bool valid_label(std::string_view label) {
    if (label.empty() || label.front() == '#')
        return false;
    return std::none_of(label.begin(), label.end(), [](char c) {
        auto u = static_cast<unsigned char>(c);
        return u < 0x20 || u == 0x7f;
    });
}

// Kahn's algorithm with a min-heap so that ties go to the smallest index.
std::vector<VertexId> kahn_order(std::size_t n, const std::vector<std::size_t> &out_offsets,
                                 const std::vector<VertexId> &out_targets, std::vector<std::size_t> in_degree) {
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> ready;
    for (std::size_t v = 0; v < n; ++v)
        if (in_degree[v] == 0)
            ready.push(static_cast<std::uint32_t>(v));

    std::vector<VertexId> order;
    order.reserve(n);
    while (!ready.empty()) {
        std::uint32_t v = ready.top();
        ready.pop();
        order.emplace_back(v);
        for (std::size_t k = out_offsets[v]; k < out_offsets[v + 1]; ++k) {
            auto w = out_targets[k].index;
            if (--in_degree[w] == 0)
                ready.push(w);
        }
    }
    return order;
}

} // namespace

CycleDetected::CycleDetected(std::vector<std::string> cycle)
    : InputError([&] {
          std::string msg = "cycle detected: ";
          for (const auto &label : cycle)
              msg += label + " -> ";
          msg += cycle.empty() ? std::string{} : cycle.front();
          return msg;
      }()),
      cycle_(std::move(cycle)) {}

void DagBuildInput::add_edge(std::string from, std::string to) {
    records_.push_back({std::move(from), std::move(to)});
}

void DagBuildInput::add_vertex(std::string label) { records_.push_back({std::move(label), std::nullopt}); }

std::vector<std::pair<std::string, std::string>> DagBuildInput::edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto &r : records_)
        if (r.to)
            out.emplace_back(r.from, *r.to);
    return out;
}

std::vector<std::string> DagBuildInput::isolated() const {
    std::vector<std::string> out;
    for (const auto &r : records_)
        if (!r.to)
            out.push_back(r.from);
    return out;
}

std::string DagBuildInput::to_text() const {
    std::string text;
    for (const auto &r : records_) {
        text += r.from;
        if (r.to) {
            text += ' ';
            text += *r.to;
        }
        text += '\n';
    }
    return text;
}

DagBuildInput parse_edge_list(std::istream &in) {
    DagBuildInput input;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (tokens.empty() || tokens.front().front() == '#')
            continue;
        if (tokens.size() > 2)
            throw MalformedLine(line_no, "expected 'FROM TO' or a single vertex label, got " +
                                             std::to_string(tokens.size()) + " tokens");
        for (auto t : tokens)
            if (!valid_label(t))
                throw MalformedLine(line_no, "invalid vertex label '" + std::string(t) + "'");
        if (tokens.size() == 2)
            input.add_edge(std::string(tokens[0]), std::string(tokens[1]));
        else
            input.add_vertex(std::string(tokens[0]));
    }
    return input;
}

DagBuildInput parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

Dag Dag::assemble(std::vector<std::string> names, std::vector<Edge> edges) {
    Dag g;
    const std::size_t n = names.size();
    g.names_ = std::move(names);
    g.index_.reserve(n);
    for (std::size_t v = 0; v < n; ++v)
        g.index_.emplace(g.names_[v], VertexId(static_cast<std::uint32_t>(v)));

    std::sort(edges.begin(), edges.end());

    g.out_offsets_.assign(n + 1, 0);
    g.in_offsets_.assign(n + 1, 0);
    for (const auto &e : edges) {
        ++g.out_offsets_[e.from.value() + 1];
        ++g.in_offsets_[e.to.value() + 1];
    }
    for (std::size_t v = 0; v < n; ++v) {
        g.out_offsets_[v + 1] += g.out_offsets_[v];
        g.in_offsets_[v + 1] += g.in_offsets_[v];
    }
    g.out_targets_.resize(edges.size());
    g.in_targets_.resize(edges.size());
    std::vector<std::size_t> out_fill(g.out_offsets_.begin(), g.out_offsets_.end() - 1);
    std::vector<std::size_t> in_fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
    // Edges are sorted by (from, to), so both directions come out sorted.
    for (const auto &e : edges) {
        g.out_targets_[out_fill[e.from.value()]++] = e.to;
        g.in_targets_[in_fill[e.to.value()]++] = e.from;
    }

    std::vector<std::size_t> in_degree(n);
    for (std::size_t v = 0; v < n; ++v)
        in_degree[v] = g.in_offsets_[v + 1] - g.in_offsets_[v];
    g.topo_ = kahn_order(n, g.out_offsets_, g.out_targets_, std::move(in_degree));

    if (g.topo_.size() != n) {
        // Every vertex left out of the order has a predecessor that is also
        // left out, so walking predecessors must eventually revisit a vertex.
        std::vector<bool> ordered(n, false);
        for (auto v : g.topo_)
            ordered[v.value()] = true;
        std::size_t start = 0;
        while (ordered[start])
            ++start;
        std::vector<std::size_t> seen_at(n, std::numeric_limits<std::size_t>::max());
        std::vector<VertexId> walk;
        VertexId cur(static_cast<std::uint32_t>(start));
        while (seen_at[cur.value()] == std::numeric_limits<std::size_t>::max()) {
            seen_at[cur.value()] = walk.size();
            walk.push_back(cur);
            for (auto p : g.predecessors(cur)) {
                if (!ordered[p.value()]) {
                    cur = p;
                    break;
                }
            }
        }
        std::vector<VertexId> cycle(walk.begin() + static_cast<std::ptrdiff_t>(seen_at[cur.value()]), walk.end());
        std::reverse(cycle.begin(), cycle.end());
        std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
        std::vector<std::string> labels;
        for (auto v : cycle)
            labels.push_back(g.names_[v.value()]);
        throw CycleDetected(std::move(labels));
    }
    return g;
}

Dag build_dag(const DagBuildInput &input) {
    std::vector<std::string> names;
    std::unordered_map<std::string, VertexId> index;
    auto intern = [&](const std::string &label) {
        auto [it, inserted] = index.try_emplace(label, VertexId(static_cast<std::uint32_t>(names.size())));
        if (inserted)
            names.push_back(label);
        return it->second;
    };

    std::vector<Edge> edges;
    for (const auto &r : input.records()) {
        VertexId from = intern(r.from);
        if (!r.to)
            continue;
        if (*r.to == r.from)
            throw SelfLoop(r.from);
        edges.push_back({from, intern(*r.to)});
    }

    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end())
        throw DuplicateEdge(names[dup->from.value()], names[dup->to.value()]);

    return Dag::assemble(std::move(names), std::move(edges));
}

Dag Dag::from_edges(std::size_t n, std::span<const std::pair<std::uint32_t, std::uint32_t>> edges) {
    DagBuildInput input;
    for (std::size_t v = 0; v < n; ++v)
        input.add_vertex(std::to_string(v));
    for (auto [u, v] : edges)
        input.add_edge(std::to_string(u), std::to_string(v));
    return build_dag(input);
}

bool Dag::has_edge(VertexId from, VertexId to) const noexcept {
    auto succ = successors(from);
    return std::binary_search(succ.begin(), succ.end(), to);
}

std::optional<VertexId> Dag::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::vector<Edge> Dag::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (std::size_t u = 0; u < vertex_count(); ++u) {
        VertexId from(static_cast<std::uint32_t>(u));
        for (auto to : successors(from))
            out.push_back({from, to});
    }
    return out;
}

const std::vector<VertexId> &topological_order(const Dag &g) { return g.topological_order(); }

std::vector<VertexId> sources(const Dag &g) {
    std::vector<VertexId> out;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
        if (g.in_degree(VertexId(v)) == 0)
            out.emplace_back(v);
    return out;
}

std::vector<VertexId> sinks(const Dag &g) {
    std::vector<VertexId> out;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
        if (g.out_degree(VertexId(v)) == 0)
            out.emplace_back(v);
    return out;
}

std::vector<std::vector<VertexId>> weakly_connected_components(const Dag &g) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<VertexId>> components;
    std::vector<VertexId> stack;
    for (std::uint32_t root = 0; root < n; ++root) {
        if (seen[root])
            continue;
        auto &component = components.emplace_back();
        seen[root] = true;
        stack.emplace_back(root);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            component.push_back(v);
            for (auto nbrs : {g.successors(v), g.predecessors(v)}) {
                for (auto w : nbrs) {
                    if (!seen[w.value()]) {
                        seen[w.value()] = true;
                        stack.push_back(w);
                    }
                }
            }
        }
        std::sort(component.begin(), component.end());
    }
    return components;
}

} // namespace dagmetrics
