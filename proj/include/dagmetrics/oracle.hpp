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

// Brute-force reference answers. Nothing here may depend on metrics or
// layering; only the graph accessors are shared.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dagmetrics/graph.hpp"

namespace dagmetrics::oracle {

/// Vertex limit for the exponential enumerations.
inline constexpr std::size_t default_bound = 12;

/// Sorted lengths of every directed path u -> v of at least one edge.
/// Throws TooLarge when the graph has more than `bound` vertices.
std::vector<std::uint32_t> enumerate_path_lengths(const Dag &g, VertexId u, VertexId v,
                                                  std::size_t bound = default_bound);

/// Longest path length over all ordered pairs. Throws TooLarge.
std::uint32_t oracle_stretch(const Dag &g, std::size_t bound = default_bound);

/// Directed BFS distances from `source`; nullopt where unreachable. The
/// source itself is at distance 0.
std::vector<std::optional<std::uint32_t>> bfs_distances(const Dag &g, VertexId source);

/// Largest finite BFS distance over all sources.
std::uint32_t oracle_diameter(const Dag &g);

/// Whether labels with label[to] - label[from] == 1 on every edge exist,
/// decided by union-find with offsets.
bool oracle_graded(const Dag &g);

/// Whether every ordered pair has all its paths of a single length. Throws TooLarge.
bool oracle_all_paths_equal(const Dag &g, std::size_t bound = default_bound);

/// Random DAG: a seeded permutation fixes the topological order, then every
/// forward pair becomes an edge with probability p. Vertices are labeled
/// "0".."n-1"; vertices left without edges are emitted as bare records.
DagBuildInput gen_random_dag(std::size_t n, double p, std::uint64_t seed);

/// Grid of `layers` x `width` vertices where edges only join adjacent
/// layers, each present with probability p. Every vertex off the first layer
/// gets a parent and every vertex off the last layer gets a child, so the
/// grading equals the layer index. Vertex (k, i) is labeled k * width + i.
DagBuildInput gen_layered_dag(std::size_t layers, std::size_t width, double p, std::uint64_t seed);

} // namespace dagmetrics::oracle
