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

#include "dagmetrics/oracle.hpp"
#include "fixtures.hpp"

using namespace dagmetrics;
using namespace dagmetrics::oracle;
using namespace dagmetrics::testing;

using Lengths = std::vector<std::uint32_t>;

TEST_CASE("enumerate_path_lengths examples") {
    CHECK(enumerate_path_lengths(diamond(), vid(0), vid(3)) == Lengths{2, 2});
    CHECK(enumerate_path_lengths(skewed_diamond(), vid(0), vid(3)) == Lengths{1, 2});
    CHECK(enumerate_path_lengths(chain(3), vid(2), vid(0)).empty());
    CHECK(enumerate_path_lengths(chain(3), vid(1), vid(1)).empty());
}

TEST_CASE("enumeration respects the vertex bound") {
    CHECK_THROWS_AS(enumerate_path_lengths(chain(13), vid(0), vid(12)), TooLarge);
    CHECK(enumerate_path_lengths(chain(13), vid(0), vid(12), 13) == Lengths{12});
    CHECK_THROWS_AS(oracle_stretch(chain(13)), TooLarge);
    CHECK_THROWS_AS(oracle_all_paths_equal(chain(13)), TooLarge);
}

TEST_CASE("complete DAG on twelve vertices stays tractable") {
    auto g = build_dag(gen_random_dag(12, 1.0, 3));
    CHECK(g.edge_count() == 66);
    // 2^10 paths between the first and last vertex of the order.
    auto first = g.topological_order().front();
    auto last = g.topological_order().back();
    CHECK(enumerate_path_lengths(g, first, last).size() == 1024);
    CHECK(oracle_stretch(g) == 11);
}

TEST_CASE("oracle_stretch examples") {
    CHECK(oracle_stretch(diamond()) == 2);
    CHECK(oracle_stretch(graph(3, {})) == 0);
    CHECK(oracle_stretch(chain(5)) == 4);
}

TEST_CASE("oracle_diameter examples") {
    CHECK(oracle_diameter(diamond()) == 2);
    CHECK(oracle_diameter(skewed_diamond()) == 1);
    CHECK(oracle_diameter(graph(1, {})) == 0);
    CHECK(oracle_diameter(chain(300)) == 299);
}

TEST_CASE("oracle_graded examples") {
    CHECK(oracle_graded(diamond()));
    CHECK_FALSE(oracle_graded(skewed_diamond()));
    CHECK_FALSE(oracle_graded(gap_graph()));
    CHECK(oracle_graded(graph(3, {})));
}

TEST_CASE("oracle_all_paths_equal examples") {
    CHECK(oracle_all_paths_equal(diamond()));
    CHECK_FALSE(oracle_all_paths_equal(skewed_diamond()));
    CHECK(oracle_all_paths_equal(gap_graph()));
}

TEST_CASE("gen_random_dag examples") {
    CHECK(gen_random_dag(0, 0.5, 1).empty());
    auto complete = build_dag(gen_random_dag(5, 1.0, 9));
    CHECK(complete.edge_count() == 10);
    CHECK(oracle_stretch(complete) == 4);
    CHECK(gen_random_dag(8, 0.3, 42).to_text() == gen_random_dag(8, 0.3, 42).to_text());
    CHECK(gen_random_dag(8, 0.3, 42).to_text() != gen_random_dag(8, 0.3, 43).to_text());
    CHECK(build_dag(gen_random_dag(7, 0.0, 1)).vertex_count() == 7);
}

TEST_CASE("gen_layered_dag examples") {
    auto chain3 = build_dag(gen_layered_dag(3, 1, 1.0, 0));
    CHECK(chain3.vertex_count() == 3);
    CHECK(chain3.edge_count() == 2);
    CHECK(oracle_stretch(chain3) == 2);

    auto square = build_dag(gen_layered_dag(2, 2, 1.0, 0));
    CHECK(square.edge_count() == 4);
    CHECK(oracle_stretch(square) == 1);

    auto flat = build_dag(gen_layered_dag(1, 4, 0.5, 0));
    CHECK(flat.vertex_count() == 4);
    CHECK(flat.edge_count() == 0);

    // p = 0 still forces one parent and one child per inner vertex.
    auto sparse = build_dag(gen_layered_dag(4, 5, 0.0, 11));
    CHECK(sparse.vertex_count() == 20);
    CHECK(oracle_graded(sparse));
}

TEST_CASE("property: generated layered graphs are graded along their layer index") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t layers = 1 + seed % 6;
        const std::size_t width = 1 + (seed / 6) % 5;
        auto g = build_dag(gen_layered_dag(layers, width, 0.05 * static_cast<double>(seed % 21), seed));
        CAPTURE(seed);
        CHECK(g.vertex_count() == layers * width);
        CHECK(oracle_graded(g));
        for (const auto &e : g.edges())
            CHECK(std::stoul(g.label(e.to)) / width == std::stoul(g.label(e.from)) / width + 1);
        for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
            const auto layer = std::stoul(g.label(vid(v))) / width;
            if (layer > 0)
                CHECK(g.in_degree(vid(v)) > 0);
            if (layer + 1 < layers)
                CHECK(g.out_degree(vid(v)) > 0);
        }
    }
}

TEST_CASE("property: graded implies equal path lengths") {
    std::size_t graded = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        auto g = build_dag(gen_random_dag(1 + seed % 10, 0.15 + 0.05 * static_cast<double>(seed % 6), seed));
        if (oracle_graded(g)) {
            ++graded;
            CHECK(oracle_all_paths_equal(g));
        }
    }
    CHECK(graded > 50);
}
