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
#include <string_view>
#include <utility>
#include <vector>

#include "dagmetrics/graph.hpp"

namespace dagmetrics::testing {

inline Dag graph(std::size_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
    return Dag::from_edges(n, edges);
}

inline Dag chain(std::size_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return graph(n, edges);
}

inline Dag diamond() { return graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }
inline Dag diamond_with_chord() { return graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 3}}); }
inline Dag skewed_diamond() { return graph(4, {{0, 1}, {1, 3}, {0, 3}}); }

// a->x, b->x, a->y, b->z, z->y: every ordered pair has at most one path, yet
// no labeling with +1 on every edge exists.
inline Dag gap_graph() { return build_dag(parse_edge_list("a x\nb x\na y\nb z\nz y\n")); }

inline VertexId vid(std::uint32_t i) { return VertexId(i); }

inline std::vector<VertexId> ids(std::initializer_list<std::uint32_t> values) {
    std::vector<VertexId> out;
    for (auto v : values)
        out.emplace_back(v);
    return out;
}

} // namespace dagmetrics::testing
