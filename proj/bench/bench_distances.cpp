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

// Serial reference vs. OpenMP all-pairs distance kernel.

#include <map>

#include <benchmark/benchmark.h>

#include "dagmetrics/metrics.hpp"
#include "dagmetrics/oracle.hpp"

namespace {

using namespace dagmetrics;

const Dag &random_graph(std::size_t n) {
    static std::map<std::size_t, Dag> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, build_dag(oracle::gen_random_dag(n, 8.0 / static_cast<double>(n), 1))).first;
    return it->second;
}

const Dag &layered_graph(std::size_t layers) {
    static std::map<std::size_t, Dag> cache;
    auto it = cache.find(layers);
    if (it == cache.end())
        it = cache.emplace(layers, build_dag(oracle::gen_layered_dag(layers, 64, 0.05, 1))).first;
    return it->second;
}

void report(benchmark::State &state, const Dag &g, const InstrumentationCounters &counters) {
    state.counters["V"] = static_cast<double>(g.vertex_count());
    state.counters["E"] = static_cast<double>(g.edge_count());
    state.counters["updates"] = static_cast<double>(counters.distance_updates);
}

void BM_SerialRandom(benchmark::State &state) {
    const auto &g = random_graph(static_cast<std::size_t>(state.range(0)));
    InstrumentationCounters counters;
    for (auto _ : state) {
        auto r = serial::all_pairs_distances(g);
        counters = r.counters;
        benchmark::DoNotOptimize(r.result);
    }
    report(state, g, counters);
}

void BM_ParallelRandom(benchmark::State &state) {
    const auto &g = random_graph(static_cast<std::size_t>(state.range(0)));
    InstrumentationCounters counters;
    for (auto _ : state) {
        auto r = all_pairs_distances(g);
        counters = r.counters;
        benchmark::DoNotOptimize(r.result);
    }
    report(state, g, counters);
}

void BM_SerialLayered(benchmark::State &state) {
    const auto &g = layered_graph(static_cast<std::size_t>(state.range(0)));
    InstrumentationCounters counters;
    for (auto _ : state) {
        auto r = serial::all_pairs_distances(g);
        counters = r.counters;
        benchmark::DoNotOptimize(r.result);
    }
    report(state, g, counters);
}

void BM_ParallelLayered(benchmark::State &state) {
    const auto &g = layered_graph(static_cast<std::size_t>(state.range(0)));
    InstrumentationCounters counters;
    for (auto _ : state) {
        auto r = all_pairs_distances(g);
        counters = r.counters;
        benchmark::DoNotOptimize(r.result);
    }
    report(state, g, counters);
}

void BM_Stretch(benchmark::State &state) {
    const auto &g = layered_graph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(stretch(g).result.stretch);
    state.counters["V"] = static_cast<double>(g.vertex_count());
}

} // namespace

BENCHMARK(BM_SerialRandom)->RangeMultiplier(2)->Range(256, 2048)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParallelRandom)->RangeMultiplier(2)->Range(256, 2048)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SerialLayered)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParallelLayered)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Stretch)->Arg(64)->Arg(1024)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
