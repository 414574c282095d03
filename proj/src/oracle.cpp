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

#include "dagmetrics/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>

namespace dagmetrics::oracle {

namespace {

void require_bound(const Dag &g, std::size_t bound) {
    if (g.vertex_count() > bound)
        throw TooLarge(g.vertex_count(), bound);
}

void walk_paths(const Dag &g, VertexId at, VertexId target, std::uint32_t depth, std::vector<std::uint32_t> &out) {
    for (auto next : g.successors(at)) {
        if (next == target)
            out.push_back(depth + 1);
        else
            walk_paths(g, next, target, depth + 1, out);
    }
}

// Union-find over vertices where offset[v] = label[v] - label[parent[v]].
class OffsetUnionFind {
  public:
    explicit OffsetUnionFind(std::size_t n) : parent_(n), offset_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    // Returns the root of v and label[v] - label[root].
    std::pair<std::size_t, std::int64_t> find(std::size_t v) {
        std::vector<std::size_t> path;
        while (parent_[v] != v) {
            path.push_back(v);
            v = parent_[v];
        }
        const std::size_t root = v;
        // Compress from the node nearest the root outwards.
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
            std::size_t up = parent_[*it];
            if (up != root)
                offset_[*it] += offset_[up];
            parent_[*it] = root;
        }
        return {root, path.empty() ? 0 : offset_[path.front()]};
    }

    // Requires label[b] - label[a] == delta. False on contradiction.
    bool relate(std::size_t a, std::size_t b, std::int64_t delta) {
        auto [ra, oa] = find(a);
        auto [rb, ob] = find(b);
        if (ra == rb)
            return ob - oa == delta;
        parent_[rb] = ra;
        offset_[rb] = delta + oa - ob;
        return true;
    }

  private:
    std::vector<std::size_t> parent_;
    std::vector<std::int64_t> offset_;
};

bool coin(std::mt19937_64 &rng, double p) { return std::bernoulli_distribution(p)(rng); }

} // namespace

std::vector<std::uint32_t> enumerate_path_lengths(const Dag &g, VertexId u, VertexId v, std::size_t bound) {
    require_bound(g, bound);
    std::vector<std::uint32_t> lengths;
    if (u != v)
        walk_paths(g, u, v, 0, lengths);
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

std::uint32_t oracle_stretch(const Dag &g, std::size_t bound) {
    require_bound(g, bound);
    std::uint32_t best = 0;
    for (std::uint32_t u = 0; u < g.vertex_count(); ++u)
        for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
            for (auto len : enumerate_path_lengths(g, VertexId(u), VertexId(v), bound))
                best = std::max(best, len);
    return best;
}

std::vector<std::optional<std::uint32_t>> bfs_distances(const Dag &g, VertexId source) {
    std::vector<std::optional<std::uint32_t>> dist(g.vertex_count());
    std::deque<VertexId> frontier{source};
    dist[source.value()] = 0;
    while (!frontier.empty()) {
        VertexId v = frontier.front();
        frontier.pop_front();
        for (auto w : g.successors(v)) {
            if (!dist[w.value()]) {
                dist[w.value()] = *dist[v.value()] + 1;
                frontier.push_back(w);
            }
        }
    }
    return dist;
}

std::uint32_t oracle_diameter(const Dag &g) {
    std::uint32_t best = 0;
    for (std::uint32_t u = 0; u < g.vertex_count(); ++u)
        for (const auto &d : bfs_distances(g, VertexId(u)))
            if (d)
                best = std::max(best, *d);
    return best;
}

bool oracle_graded(const Dag &g) {
    OffsetUnionFind uf(g.vertex_count());
    for (const auto &e : g.edges())
        if (!uf.relate(e.from.value(), e.to.value(), 1))
            return false;
    return true;
}

bool oracle_all_paths_equal(const Dag &g, std::size_t bound) {
    require_bound(g, bound);
    for (std::uint32_t u = 0; u < g.vertex_count(); ++u) {
        for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
            auto lengths = enumerate_path_lengths(g, VertexId(u), VertexId(v), bound);
            if (!lengths.empty() && lengths.front() != lengths.back())
                return false;
        }
    }
    return true;
}

DagBuildInput gen_random_dag(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);

    DagBuildInput input;
    std::vector<bool> touched(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (coin(rng, p)) {
                input.add_edge(std::to_string(order[i]), std::to_string(order[j]));
                touched[order[i]] = touched[order[j]] = true;
            }
        }
    }
    for (std::size_t v = 0; v < n; ++v)
        if (!touched[v])
            input.add_vertex(std::to_string(v));
    return input;
}

DagBuildInput gen_layered_dag(std::size_t layers, std::size_t width, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto id = [width](std::size_t layer, std::size_t i) { return layer * width + i; };

    // Edges between layer k and k+1, as (i, j) within-layer positions.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> between(layers > 0 ? layers - 1 : 0);
    const std::uint64_t pairs = static_cast<std::uint64_t>(width) * width;
    for (auto &edges : between) {
        if (p >= 1.0) {
            for (std::uint64_t k = 0; k < pairs; ++k)
                edges.emplace_back(k / width, k % width);
        } else if (p > 0.0) {
            // Skip ahead by geometric gaps instead of flipping width^2 coins.
            std::geometric_distribution<std::uint64_t> gap(p);
            for (std::uint64_t k = gap(rng); k < pairs; k += gap(rng) + 1)
                edges.emplace_back(k / width, k % width);
        }
    }

    std::uniform_int_distribution<std::size_t> pick(0, width - 1);
    for (auto &edges : between) {
        std::vector<bool> has_parent(width, false);
        for (auto [i, j] : edges)
            has_parent[j] = true;
        for (std::size_t j = 0; j < width; ++j)
            if (!has_parent[j])
                edges.emplace_back(pick(rng), j);
        std::vector<bool> has_child(width, false);
        for (auto [i, j] : edges)
            has_child[i] = true;
        for (std::size_t i = 0; i < width; ++i)
            if (!has_child[i])
                edges.emplace_back(i, pick(rng));
        std::sort(edges.begin(), edges.end());
    }

    DagBuildInput input;
    if (layers == 1) {
        for (std::size_t i = 0; i < width; ++i)
            input.add_vertex(std::to_string(id(0, i)));
    }
    for (std::size_t k = 0; k < between.size(); ++k)
        for (auto [i, j] : between[k])
            input.add_edge(std::to_string(id(k, i)), std::to_string(id(k + 1, j)));
    return input;
}

} // namespace dagmetrics::oracle
