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

#include <edom/generators.hpp>
#include <edom/oracle.hpp>

using namespace edom;

static void BM_MednPath(benchmark::State& state)
{
    Graph g = path_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(medn_oracle(g));
}
BENCHMARK(BM_MednPath)->DenseRange(5, 13, 2);

static void BM_MednCycle(benchmark::State& state)
{
    Graph g = cycle_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(medn_oracle(g));
}
BENCHMARK(BM_MednCycle)->DenseRange(6, 12, 3);

static void BM_MednRandom(benchmark::State& state)
{
    Rng rng(1);
    Graph g = random_graph(rng, static_cast<int>(state.range(0)), 0.35);
    for (auto _ : state) benchmark::DoNotOptimize(medn_oracle(g));
}
BENCHMARK(BM_MednRandom)->Arg(8)->Arg(10)->Arg(12);

static void BM_EdnPath(benchmark::State& state)
{
    Graph g = path_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(edn_oracle(g).value);
}
BENCHMARK(BM_EdnPath)->DenseRange(5, 11, 3);

static void BM_GammaRandom(benchmark::State& state)
{
    Rng rng(2);
    Graph g = random_graph(rng, static_cast<int>(state.range(0)), 0.2);
    for (auto _ : state) benchmark::DoNotOptimize(gamma_exact(g));
}
BENCHMARK(BM_GammaRandom)->Arg(16)->Arg(24)->Arg(32);
