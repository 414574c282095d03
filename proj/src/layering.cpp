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

#include "dagmetrics/layering.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

namespace dagmetrics {

namespace {

constexpr std::int64_t unlabeled = std::numeric_limits<std::int64_t>::min();

// Labels of one run, plus what is needed to turn them into layers.
struct LabelState {
    explicit LabelState(const Dag &g)
        : components(weakly_connected_components(g)), lp(stretch(g).result.lp), label(g.vertex_count(), unlabeled) {}

    std::vector<std::vector<VertexId>> components;
    std::vector<std::uint32_t> lp;
    std::vector<std::int64_t> label;

    // Checks the edge between a just-processed vertex and an already
    // labeled neighbour. Edge (from, to) is consistent iff
    // label[to] - label[from] == 1.
    std::optional<UnbalancedWitness> verify(Edge e, VertexId neighbour, std::int64_t attempted) const {
        std::int64_t existing = label[neighbour.value()];
        if (existing == attempted)
            return std::nullopt;
        return UnbalancedWitness{neighbour, existing, attempted, e};
    }

    LayerAssignment normalize() const {
        LayerAssignment out;
        out.layer.resize(label.size());
        out.component_of.resize(label.size());
        for (std::size_t c = 0; c < components.size(); ++c) {
            std::int64_t lowest = std::numeric_limits<std::int64_t>::max();
            for (auto v : components[c])
                lowest = std::min(lowest, label[v.value()]);
            for (auto v : components[c]) {
                out.layer[v.value()] = static_cast<std::uint32_t>(label[v.value()] - lowest);
                out.component_of[v.value()] = static_cast<std::uint32_t>(c);
            }
        }
        return out;
    }
};

} // namespace

VertexId select_seed(const Dag &g, std::span<const VertexId> component, std::span<const std::uint32_t> lp) {
    std::optional<VertexId> seed;
    for (auto v : component) {
        if (g.in_degree(v) != 0)
            continue;
        if (!seed || lp[v.value()] > lp[seed->value()] ||
            (lp[v.value()] == lp[seed->value()] && v < *seed))
            seed = v;
    }
    // Every nonempty component of a DAG contains a source.
    return *seed;
}

Instrumented<LayeringOutcome> layer_pq(const Dag &g) {
    if (g.vertex_count() == 0)
        throw EmptyGraph();
    LabelState state(g);
    InstrumentationCounters counters;

    using Item = std::pair<std::int64_t, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    auto assign = [&](VertexId v, std::int64_t l) {
        state.label[v.value()] = l;
        queue.emplace(l, v);
        ++counters.queue_pushes;
    };

    for (const auto &component : state.components) {
        assign(select_seed(g, component, state.lp), 0);
        while (!queue.empty()) {
            auto [l, o] = queue.top();
            queue.pop();
            ++counters.vertex_evaluations;

            for (auto p : g.predecessors(o)) {
                ++counters.edge_examinations;
                if (state.label[p.value()] == unlabeled)
                    assign(p, l - 1);
                else if (auto w = state.verify({p, o}, p, l - 1))
                    return {*w, counters};
            }
            for (auto c : g.successors(o)) {
                ++counters.edge_examinations;
                if (state.label[c.value()] == unlabeled)
                    assign(c, l + 1);
                else if (auto w = state.verify({o, c}, c, l + 1))
                    return {*w, counters};
            }
        }
    }
    return {state.normalize(), counters};
}

Instrumented<LayeringOutcome> layer_traversal(const Dag &g) {
    if (g.vertex_count() == 0)
        throw EmptyGraph();
    LabelState state(g);
    InstrumentationCounters counters;

    // A suspended Label(v, l) call: neighbours [0, in_degree) are parents,
    // the rest are children.
    struct Frame {
        VertexId v;
        std::size_t next;
    };
    std::vector<Frame> stack;
    auto enter = [&](VertexId v, std::int64_t l) {
        state.label[v.value()] = l;
        ++counters.vertex_evaluations;
        stack.push_back({v, 0});
    };

    for (const auto &component : state.components) {
        enter(select_seed(g, component, state.lp), 0);
        while (!stack.empty()) {
            Frame &f = stack.back();
            const VertexId v = f.v;
            const std::int64_t l = state.label[v.value()];
            auto parents = g.predecessors(v);
            auto children = g.successors(v);
            if (f.next >= parents.size() + children.size()) {
                stack.pop_back();
                continue;
            }
            const std::size_t k = f.next++;
            ++counters.edge_examinations;
            if (k < parents.size()) {
                VertexId p = parents[k];
                if (state.label[p.value()] == unlabeled)
                    enter(p, l - 1);
                else if (auto w = state.verify({p, v}, p, l - 1))
                    return {*w, counters};
            } else {
                VertexId c = children[k - parents.size()];
                if (state.label[c.value()] == unlabeled)
                    enter(c, l + 1);
                else if (auto w = state.verify({v, c}, c, l + 1))
                    return {*w, counters};
            }
        }
    }
    return {state.normalize(), counters};
}

BalanceVerdict check_balanced(const Dag &g) {
    auto [outcome, counters] = layer_traversal(g);
    if (auto *w = std::get_if<UnbalancedWitness>(&outcome))
        return {false, *w};
    return {true, std::nullopt};
}

} // namespace dagmetrics
