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

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dagmetrics/metrics.hpp"
#include "distance_rows.hpp"

namespace dagmetrics {

namespace {

// Height of every vertex (longest path to a sink) by a reverse topological
// sweep, bucketed by height. Height 0 is the sink set; each following bucket
// is what remains a sink once all lower buckets are removed.
std::vector<std::vector<VertexId>> height_levels(const Dag &g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::uint32_t> height(n, 0);
    std::uint32_t max_height = 0;
    const auto &order = g.topological_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::uint32_t h = 0;
        for (auto c : g.successors(*it))
            h = std::max(h, height[c.value()] + 1);
        height[it->value()] = h;
        max_height = std::max(max_height, h);
    }
    std::vector<std::vector<VertexId>> levels(n == 0 ? 0 : max_height + 1);
    for (std::uint32_t v = 0; v < n; ++v)
        levels[height[v]].emplace_back(v);
    return levels;
}

} // namespace

Instrumented<DistanceMap> all_pairs_distances(const Dag &g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<DistanceMap::Entry>> rows(n);
    std::uint64_t updates = 0;
    std::uint64_t examined = 0;

    const auto levels = height_levels(g);
#pragma omp parallel reduction(+ : updates, examined)
    {
        detail::RowBuilder builder(n);
        for (const auto &level : levels) {
            const auto count = static_cast<std::ptrdiff_t>(level.size());
            // The implicit barrier at the end of the loop finishes a height
            // before any thread starts the next one.
#pragma omp for schedule(dynamic, 64)
            for (std::ptrdiff_t i = 0; i < count; ++i) {
                VertexId p = level[static_cast<std::size_t>(i)];
                rows[p.value()] = builder.build(g, p, rows, updates);
                examined += g.out_degree(p);
            }
        }
    }

    InstrumentationCounters counters;
    counters.vertex_evaluations = n;
    counters.edge_examinations = examined;
    counters.distance_updates = updates;
    return {DistanceMap(std::move(rows)), counters};
}

} // namespace dagmetrics
