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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dagmetrics/errors.hpp"

namespace dagmetrics {

/// Dense vertex index in [0, n) of the owning graph.
struct VertexId {
    std::uint32_t index = 0;

    constexpr VertexId() = default;
    constexpr explicit VertexId(std::uint32_t i) : index(i) {}

    constexpr std::size_t value() const noexcept { return index; }

    friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

struct Edge {
    VertexId from;
    VertexId to;

    friend constexpr auto operator<=>(const Edge &, const Edge &) = default;
};

/// Records of an edge-list file in line order. A record is either an edge
/// "FROM TO" or a bare vertex declaration "FROM".
class DagBuildInput {
  public:
    struct Record {
        std::string from;
        std::optional<std::string> to;
    };

    void add_edge(std::string from, std::string to);
    void add_vertex(std::string label);

    const std::vector<Record> &records() const noexcept { return records_; }

    std::vector<std::pair<std::string, std::string>> edges() const;
    std::vector<std::string> isolated() const;

    bool empty() const noexcept { return records_.empty(); }

    /// Serializes back to the edge-list text format, one record per line.
    std::string to_text() const;

  private:
    std::vector<Record> records_;
};

/// Immutable, validated, acyclic digraph with unit edge weights.
///
/// Adjacency is stored in compressed-row form for both directions; every
/// neighbour list is sorted by vertex index. The topological order computed
/// during validation is retained.
class Dag {
  public:
    Dag() = default;

    std::size_t vertex_count() const noexcept { return names_.size(); }
    std::size_t edge_count() const noexcept { return out_targets_.size(); }

    std::span<const VertexId> successors(VertexId v) const noexcept {
        return {out_targets_.data() + out_offsets_[v.value()], out_targets_.data() + out_offsets_[v.value() + 1]};
    }
    std::span<const VertexId> predecessors(VertexId v) const noexcept {
        return {in_targets_.data() + in_offsets_[v.value()], in_targets_.data() + in_offsets_[v.value() + 1]};
    }
    std::size_t out_degree(VertexId v) const noexcept { return out_offsets_[v.value() + 1] - out_offsets_[v.value()]; }
    std::size_t in_degree(VertexId v) const noexcept { return in_offsets_[v.value() + 1] - in_offsets_[v.value()]; }

    bool has_edge(VertexId from, VertexId to) const noexcept;

    const std::string &label(VertexId v) const noexcept { return names_[v.value()]; }
    std::optional<VertexId> find(std::string_view label) const;

    /// Every edge, ordered by (from, to).
    std::vector<Edge> edges() const;

    const std::vector<VertexId> &topological_order() const noexcept { return topo_; }

    /// Builds a graph from raw index pairs. Labels default to the decimal index.
    static Dag from_edges(std::size_t n, std::span<const std::pair<std::uint32_t, std::uint32_t>> edges);

  private:
    friend Dag build_dag(const DagBuildInput &input);

    static Dag assemble(std::vector<std::string> names, std::vector<Edge> edges);

    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> index_;
    std::vector<std::size_t> out_offsets_{0};
    std::vector<VertexId> out_targets_;
    std::vector<std::size_t> in_offsets_{0};
    std::vector<VertexId> in_targets_;
    std::vector<VertexId> topo_;
};

/// Tokenizes edge-list text. Throws MalformedLine.
DagBuildInput parse_edge_list(std::istream &in);
DagBuildInput parse_edge_list(std::string_view text);

/// Validates and indexes the input. Indices follow first appearance.
/// Throws SelfLoop, DuplicateEdge or CycleDetected.
Dag build_dag(const DagBuildInput &input);

/// Kahn order, smallest ready index first.
const std::vector<VertexId> &topological_order(const Dag &g);

/// Vertices with no incoming edge, ascending.
std::vector<VertexId> sources(const Dag &g);
/// Vertices with no outgoing edge, ascending.
std::vector<VertexId> sinks(const Dag &g);

/// Weak components; members ascending, components ordered by smallest member.
std::vector<std::vector<VertexId>> weakly_connected_components(const Dag &g);

} // namespace dagmetrics
