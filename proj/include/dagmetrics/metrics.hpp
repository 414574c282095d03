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
#include <utility>
#include <vector>

#include "dagmetrics/graph.hpp"

namespace dagmetrics {

/// Work tallies for a single algorithm call. Fresh per call.
struct InstrumentationCounters {
    std::uint64_t vertex_evaluations = 0;
    std::uint64_t edge_examinations = 0;
    std::uint64_t distance_updates = 0;
    // Priority-queue pushes of layer_pq. Not part of the report schema.
    std::uint64_t queue_pushes = 0;

    friend bool operator==(const InstrumentationCounters &, const InstrumentationCounters &) = default;
};

struct StretchResult {
    /// lp[v]: edges on the longest directed path starting at v.
    std::vector<std::uint32_t> lp;
    std::uint32_t stretch = 0;
    VertexId witness_source;
};

/// Shortest directed distances between every ordered pair (u, v) with v
/// reachable from u by a nonempty path. The diagonal is implicit and absent.
class DistanceMap {
  public:
    struct Entry {
        VertexId target;
        std::uint32_t distance;

        friend bool operator==(const Entry &, const Entry &) = default;
    };

    DistanceMap() = default;
    explicit DistanceMap(std::vector<std::vector<Entry>> rows) : rows_(std::move(rows)) {}

    std::size_t source_count() const noexcept { return rows_.size(); }
    /// Entries of one source, sorted by target.
    std::span<const Entry> row(VertexId source) const noexcept { return rows_[source.value()]; }
    std::optional<std::uint32_t> find(VertexId from, VertexId to) const noexcept;
    /// Total number of stored (source, target) pairs.
    std::size_t size() const noexcept;
    bool empty() const noexcept { return size() == 0; }

    friend bool operator==(const DistanceMap &, const DistanceMap &) = default;

  private:
    std::vector<std::vector<Entry>> rows_;
};

struct DiameterResult {
    std::uint32_t diameter = 0;
    std::optional<std::pair<VertexId, VertexId>> witness;
};

template <class Result> struct Instrumented {
    Result result;
    InstrumentationCounters counters;
};

/// Longest path from every vertex by memoized depth-first evaluation from
/// the sources. Uses an explicit stack. Throws EmptyGraph.
Instrumented<StretchResult> stretch(const Dag &g);

/// All-pairs shortest distances. Vertices are grouped by height (lp) and the
/// rows of one height are built in parallel; every successor of a vertex has
/// a strictly smaller height, so each group only reads finished rows.
Instrumented<DistanceMap> all_pairs_distances(const Dag &g);

/// Maximum entry of the distance map; witness is the lexicographically
/// smallest pair attaining it.
Instrumented<DiameterResult> diameter(const Dag &g);

/// Reads the diameter off an existing distance map.
DiameterResult diameter_from(const DistanceMap &distances);

namespace serial {

/// Reference implementation of all_pairs_distances: one pass in reverse
/// topological order, no threading. Results and counters must match the
/// parallel kernel exactly.
Instrumented<DistanceMap> all_pairs_distances(const Dag &g);

} // namespace serial

} // namespace dagmetrics
