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

#include <doctest.h>

#include <random>
#include <sstream>

#include "dagmetrics/graph.hpp"
#include "dagmetrics/oracle.hpp"
#include "fixtures.hpp"

using namespace dagmetrics;
using namespace dagmetrics::testing;

using EdgeList = std::vector<std::pair<std::string, std::string>>;

TEST_CASE("parse_edge_list tokenizes edges") {
    auto input = parse_edge_list("a b\nb c\n");
    CHECK(input.edges() == EdgeList{{"a", "b"}, {"b", "c"}});
    CHECK(input.isolated().empty());
}

TEST_CASE("parse_edge_list on empty text") {
    auto input = parse_edge_list("");
    CHECK(input.empty());
    CHECK(build_dag(input).vertex_count() == 0);
}

TEST_CASE("parse_edge_list skips comments and keeps isolated vertices") {
    auto input = parse_edge_list("a b\n# note\nc\n");
    CHECK(input.edges() == EdgeList{{"a", "b"}});
    CHECK(input.isolated() == std::vector<std::string>{"c"});
}

TEST_CASE("parse_edge_list tolerates blank lines, tabs and CRLF") {
    auto input = parse_edge_list("\n  a\tb\r\n   # indented comment\n\n");
    CHECK(input.edges() == EdgeList{{"a", "b"}});
}

TEST_CASE("parse_edge_list rejects malformed lines") {
    SUBCASE("three tokens") {
        try {
            parse_edge_list("a b\nx y z\n");
            FAIL("expected MalformedLine");
        } catch (const MalformedLine &e) {
            CHECK(e.line() == 2);
        }
    }
    SUBCASE("control character in label") {
        CHECK_THROWS_AS(parse_edge_list(std::string("a b\x01\n")), MalformedLine);
    }
    SUBCASE("label starting with a comment marker") {
        CHECK_THROWS_AS(parse_edge_list("a #b\n"), MalformedLine);
    }
}

TEST_CASE("build_dag reports a cycle in edge order") {
    try {
        build_dag(parse_edge_list("a b\nb c\nc a\n"));
        FAIL("expected CycleDetected");
    } catch (const CycleDetected &e) {
        CHECK(e.cycle() == std::vector<std::string>{"a", "b", "c"});
        CHECK(std::string(e.what()) == "cycle detected: a -> b -> c -> a");
    }
}

TEST_CASE("build_dag finds the cycle behind an acyclic prefix") {
    try {
        build_dag(parse_edge_list("s a\na b\nb c\nc d\nd b\nc t\n"));
        FAIL("expected CycleDetected");
    } catch (const CycleDetected &e) {
        CHECK(e.cycle() == std::vector<std::string>{"b", "c", "d"});
    }
}

TEST_CASE("build_dag rejects duplicates and self-loops") {
    try {
        build_dag(parse_edge_list("a b\na b\n"));
        FAIL("expected DuplicateEdge");
    } catch (const DuplicateEdge &e) {
        CHECK(e.from() == "a");
        CHECK(e.to() == "b");
    }
    try {
        build_dag(parse_edge_list("a b\nb b\n"));
        FAIL("expected SelfLoop");
    } catch (const SelfLoop &e) {
        CHECK(e.label() == "b");
    }
}

TEST_CASE("build_dag on the diamond") {
    auto g = build_dag(parse_edge_list("0 1\n0 2\n1 3\n2 3\n"));
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(sources(g) == ids({0}));
    CHECK(sinks(g) == ids({3}));
    CHECK(g.label(vid(2)) == "2");
    CHECK(g.find("3") == vid(3));
    CHECK_FALSE(g.find("4"));
}

TEST_CASE("indices follow first appearance") {
    auto g = build_dag(parse_edge_list("z\nm a\na z\n"));
    CHECK(g.label(vid(0)) == "z");
    CHECK(g.label(vid(1)) == "m");
    CHECK(g.label(vid(2)) == "a");
    CHECK(g.has_edge(vid(1), vid(2)));
    CHECK(g.has_edge(vid(2), vid(0)));
    CHECK_FALSE(g.has_edge(vid(0), vid(2)));
}

TEST_CASE("adjacency is sorted by target index") {
    auto g = build_dag(parse_edge_list("r a\nr b\nr c\nc x\nb x\na x\n"));
    auto succ = g.successors(*g.find("r"));
    CHECK(std::vector<VertexId>(succ.begin(), succ.end()) == ids({1, 2, 3}));
    auto pred = g.predecessors(*g.find("x"));
    CHECK(std::vector<VertexId>(pred.begin(), pred.end()) == ids({1, 2, 3}));
}

TEST_CASE("topological_order examples") {
    CHECK(topological_order(chain(3)) == ids({0, 1, 2}));
    CHECK(topological_order(diamond()) == ids({0, 1, 2, 3}));
    CHECK(topological_order(graph(3, {})) == ids({0, 1, 2}));
    // Smallest ready index first, not insertion order.
    CHECK(topological_order(graph(4, {{3, 0}, {2, 1}})) == ids({2, 1, 3, 0}));
}

TEST_CASE("sources and sinks examples") {
    CHECK(sources(chain(3)) == ids({0}));
    CHECK(sinks(chain(3)) == ids({2}));
    CHECK(sources(graph(3, {})) == ids({0, 1, 2}));
    CHECK(sinks(graph(3, {})) == ids({0, 1, 2}));
    CHECK(sources(diamond()) == ids({0}));
    CHECK(sinks(diamond()) == ids({3}));
}

TEST_CASE("weakly_connected_components examples") {
    using Components = std::vector<std::vector<VertexId>>;
    CHECK(weakly_connected_components(graph(3, {{0, 1}})) == Components{ids({0, 1}), ids({2})});
    CHECK(weakly_connected_components(diamond()) == Components{ids({0, 1, 2, 3})});
    CHECK(weakly_connected_components(graph(3, {})) == Components{ids({0}), ids({1}), ids({2})});
    CHECK(weakly_connected_components(graph(5, {{4, 1}, {3, 0}, {2, 0}})) ==
          Components{ids({0, 2, 3}), ids({1, 4})});
}

TEST_CASE("property: graph invariants on random DAGs") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t n = seed % 25;
        const double p = 0.05 + 0.1 * static_cast<double>(seed % 7);
        auto input = oracle::gen_random_dag(n, p, seed);
        auto g = build_dag(input);
        CAPTURE(seed);

        const auto &order = topological_order(g);
        REQUIRE(order.size() == g.vertex_count());
        std::vector<std::size_t> position(g.vertex_count());
        for (std::size_t i = 0; i < order.size(); ++i)
            position[order[i].value()] = i;
        for (const auto &e : g.edges())
            CHECK(position[e.from.value()] < position[e.to.value()]);

        std::size_t out_sum = 0, in_sum = 0;
        for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
            out_sum += g.out_degree(vid(v));
            in_sum += g.in_degree(vid(v));
            for (auto w : g.successors(vid(v)))
                CHECK(std::find(g.predecessors(w).begin(), g.predecessors(w).end(), vid(v)) !=
                      g.predecessors(w).end());
        }
        CHECK(out_sum == g.edge_count());
        CHECK(in_sum == g.edge_count());

        auto again = build_dag(parse_edge_list(input.to_text()));
        CHECK(again.edges() == g.edges());
        for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
            CHECK(again.label(vid(v)) == g.label(vid(v)));

        std::size_t covered = 0;
        for (const auto &c : weakly_connected_components(g))
            covered += c.size();
        CHECK(covered == g.vertex_count());
    }
}

TEST_CASE("property: any back edge is reported as a cycle") {
    std::mt19937_64 rng(7);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto input = oracle::gen_random_dag(3 + seed % 15, 0.3, seed);
        auto g = build_dag(input);
        auto edges = g.edges();
        if (edges.empty())
            continue;
        const auto &e = edges[rng() % edges.size()];
        input.add_edge(g.label(e.to), g.label(e.from));
        CAPTURE(seed);
        CHECK_THROWS_AS(build_dag(input), CycleDetected);
    }
}
