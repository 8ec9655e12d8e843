// Copyright 2026 The edgescale Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference vs OpenMP batch execution of independent simulations.

#include <vector>

#include <benchmark/benchmark.h>

#include "edgescale/batch.hpp"

namespace {

std::vector<edgescale::SimConfig> make_batch(std::size_t runs, double horizon) {
  std::vector<edgescale::SimConfig> configs(runs);
  for (std::size_t i = 0; i < runs; ++i) {
    configs[i].seed = 1000 + i;
    configs[i].horizon = horizon;
  }
  return configs;
}

void BM_BatchSerial(benchmark::State& state) {
  const auto configs = make_batch(static_cast<std::size_t>(state.range(0)), 3600.0);
  for (auto _ : state) {
    auto out = edgescale::run_batch_summaries(configs, edgescale::Execution::Serial);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BatchParallel(benchmark::State& state) {
  const auto configs = make_batch(static_cast<std::size_t>(state.range(0)), 3600.0);
  for (auto _ : state) {
    auto out = edgescale::run_batch_summaries(configs, edgescale::Execution::Parallel);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = edgescale::batch_threads();
}

BENCHMARK(BM_BatchSerial)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchParallel)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
