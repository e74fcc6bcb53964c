// Copyright 2026 The epcx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "epcx/construct/gadget.hpp"
#include "epcx/construct/grid.hpp"
#include "epcx/construct/wall.hpp"
#include "epcx/lset/searches.hpp"
#include "epcx/verify/cycles.hpp"
#include "epcx/verify/gadget_checks.hpp"
#include "epcx/verify/wall_checks.hpp"

using namespace epcx;

static void BM_CountGridCycles(benchmark::State& state) {
  const auto g = construct::build_grid(static_cast<std::size_t>(state.range(0)));
  std::uint64_t n = 0;
  for (auto _ : state) benchmark::DoNotOptimize(n = verify::count_cycles(g));
  state.counters["cycles"] = static_cast<double>(n);
  state.counters["cycles/s"] =
      benchmark::Counter(static_cast<double>(n), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_CountGridCycles)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_GadgetCensus(benchmark::State& state) {
  const auto w = construct::construct_gadget_witness(lset::IntSet::squares(), 1, 1, 1000, 1000);
  verify::VerifyOptions o;
  o.jobs = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify::classify_gadget_cycles(w, o).grid_cycles);
}
BENCHMARK(BM_GadgetCensus)->Arg(1)->Arg(0)->Unit(benchmark::kSecond)->Iterations(1);

static void BM_ChordCrossing(benchmark::State& state) {
  const auto w = construct::construct_wall_witness(lset::IntSet::squares(), 1);
  const auto& a = w.chords[0];
  const auto& b = w.chords[2];
  std::uint64_t paths = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(paths = verify::two_disjoint_paths(w.grid, a.a, a.b, b.a, b.b,
                                                                10'000'000).paths_explored);
  state.counters["paths"] = static_cast<double>(paths);
}
BENCHMARK(BM_ChordCrossing)->Unit(benchmark::kMillisecond);

static void BM_GOf(benchmark::State& state) {
  const auto set = state.range(0) == 0 ? lset::IntSet::squares() : lset::IntSet::primes();
  for (auto _ : state)
    for (std::uint64_t x = 2; x < 2000; ++x) benchmark::DoNotOptimize(lset::g_of(set, x, 100'000));
}
BENCHMARK(BM_GOf)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_FarFromL(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        lset::far_from_l_set(lset::IntSet::squares(), static_cast<std::size_t>(state.range(0)),
                             1'000'000));
}
BENCHMARK(BM_FarFromL)->Arg(8)->Arg(12)->Arg(16);

BENCHMARK_MAIN();
