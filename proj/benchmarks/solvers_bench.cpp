/*
 * Copyright 2026 The edom Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include <vector>

#include <edom/generators.hpp>
#include <edom/matching.hpp>
#include <edom/reductions.hpp>
#include <edom/split.hpp>
#include <edom/split_solvers.hpp>
#include <edom/strategy.hpp>

using namespace edom;

namespace {

std::vector<Graph> sample(int delta, int count)
{
    Rng rng(7);
    std::vector<Graph> out;
    for (int i = 0; i < count; ++i) out.push_back(delta == 3 ? random_k14_3split_targeted(rng, 11) : random_k14_split(rng, 11, delta));
    return out;
}

}  // namespace

static void BM_Blossom(benchmark::State& state)
{
    Rng rng(3);
    int n = static_cast<int>(state.range(0));
    Graph g = random_graph(rng, n, 4.0 / n);
    auto edges = g.edges();
    for (auto _ : state) benchmark::DoNotOptimize(maximum_matching(n, edges));
}
BENCHMARK(BM_Blossom)->RangeMultiplier(4)->Range(16, 1024);

static void BM_SplitRecognition(benchmark::State& state)
{
    Rng rng(4);
    int c = static_cast<int>(state.range(0));
    Graph g = random_split_graph(rng, c, c, 3);
    for (auto _ : state) benchmark::DoNotOptimize(split_partition(g));
}
BENCHMARK(BM_SplitRecognition)->RangeMultiplier(2)->Range(8, 32);

static void BM_Solve2Split(benchmark::State& state)
{
    auto gs = sample(2, 50);
    for (auto _ : state)
        for (const auto& g : gs) benchmark::DoNotOptimize(solve_k14_2split(g, *split_partition(g)).value);
}
BENCHMARK(BM_Solve2Split);

static void BM_Solve3Split(benchmark::State& state)
{
    auto gs = sample(3, 50);
    for (auto _ : state)
        for (const auto& g : gs) benchmark::DoNotOptimize(solve_k14_3split(g, *split_partition(g)).value);
}
BENCHMARK(BM_Solve3Split);

static void BM_Closure2Split(benchmark::State& state)
{
    auto gs = sample(2, 20);
    for (auto _ : state)
        for (const auto& g : gs) {
            auto s = strategy_k14_2split(g, *split_partition(g));
            benchmark::DoNotOptimize(verify_closure(g, s).proven);
        }
}
BENCHMARK(BM_Closure2Split);

static void BM_Closure3dmFigure(benchmark::State& state)
{
    auto inst = fig3_instance();
    auto r = reduce_3dm(inst);
    auto s = strategy_3dm(r.constructed, perfect_matchings(inst).front());
    for (auto _ : state) benchmark::DoNotOptimize(verify_closure(r.constructed.graph, s).proven);
}
BENCHMARK(BM_Closure3dmFigure);

static void BM_Reduce3dm(benchmark::State& state)
{
    auto inst = fig3_instance();
    for (auto _ : state) benchmark::DoNotOptimize(reduce_3dm(inst).tree.path_property);
}
BENCHMARK(BM_Reduce3dm);

BENCHMARK_MAIN();
