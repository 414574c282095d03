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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "dagmetrics/graph.hpp"
#include "dagmetrics/metrics.hpp"

namespace dagmetrics {

/// Layer of every vertex. layer[v] = layer[u] + 1 on every edge and each
/// weak component starts at layer 0.
struct LayerAssignment {
    std::vector<std::uint32_t> layer;
    std::vector<std::uint32_t> component_of;

    friend bool operator==(const LayerAssignment &, const LayerAssignment &) = default;
};

/// First labeled neighbour whose existing label disagrees with the label
/// implied by the edge to it.
struct UnbalancedWitness {
    VertexId vertex;
    std::int64_t existing_label = 0;
    std::int64_t attempted_label = 0;
    Edge via_edge;

    friend bool operator==(const UnbalancedWitness &, const UnbalancedWitness &) = default;
};

using LayeringOutcome = std::variant<LayerAssignment, UnbalancedWitness>;

inline bool is_layered(const LayeringOutcome &outcome) { return std::holds_alternative<LayerAssignment>(outcome); }

/// Source of `component` with the largest lp, smallest index on ties.
VertexId select_seed(const Dag &g, std::span<const VertexId> component, std::span<const std::uint32_t> lp);

/// Layering driven by a min-priority queue keyed on (label, vertex index).
/// Stops at the first conflicting edge. Throws EmptyGraph.
Instrumented<LayeringOutcome> layer_pq(const Dag &g);

/// Layering by depth-first label propagation through parents then children,
/// on an explicit stack. Stops at the first conflicting edge. Throws EmptyGraph.
Instrumented<LayeringOutcome> layer_traversal(const Dag &g);

struct BalanceVerdict {
    bool balanced = false;
    std::optional<UnbalancedWitness> witness;
};

/// Whether layer_traversal succeeds. Throws EmptyGraph.
BalanceVerdict check_balanced(const Dag &g);

} // namespace dagmetrics
