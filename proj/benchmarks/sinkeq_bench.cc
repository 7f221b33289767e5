// Copyright 2026 The sinkeq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "sinkeq/dynamics.h"
#include "sinkeq/game.h"
#include "sinkeq/monte_carlo.h"
#include "sinkeq/radio.h"
#include "sinkeq/sink.h"
#include "sinkeq/smoothness.h"

namespace sinkeq {
namespace {

NormalFormGame Radio(int n) {
  return MakeRadioGame(SampleRadioInstance(n, 0.8, 42));
}

void BM_BuildKernel(benchmark::State& state) {
  const NormalFormGame g = Radio(static_cast<int>(state.range(0)));
  const auto mode = state.range(1) ? ResponseMode::kBetter : ResponseMode::kBest;
  for (auto _ : state) {
    benchmark::DoNotOptimize(BuildKernel(g, mode));
  }
  state.SetItemsProcessed(state.iterations() * g.num_profiles());
}
BENCHMARK(BM_BuildKernel)->ArgsProduct({{8, 12, 16}, {0, 1}});

void BM_SinkEquilibria(benchmark::State& state) {
  const NormalFormGame g = Radio(static_cast<int>(state.range(0)));
  const auto mode = state.range(1) ? ResponseMode::kBetter : ResponseMode::kBest;
  const TransitionKernel kernel = BuildKernel(g, mode);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SinkEquilibria(g, kernel));
  }
  state.SetItemsProcessed(state.iterations() * g.num_profiles());
}
BENCHMARK(BM_SinkEquilibria)->ArgsProduct({{8, 12, 16}, {0, 1}});

void BM_BestSmoothness(benchmark::State& state) {
  const NormalFormGame g = Radio(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(BestSmoothness(g, true));
  }
}
BENCHMARK(BM_BestSmoothness)->Arg(8)->Arg(12)->Arg(16);

void BM_CoveringMonteCarlo(benchmark::State& state) {
  const CoveringTrialSpec spec{3, 4, 0.01, 0.01, 2, 1.0};
  const int trials = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunMonteCarlo(spec, trials, seed++));
  }
  state.SetItemsProcessed(state.iterations() * trials);
}
BENCHMARK(BM_CoveringMonteCarlo)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_RadioMonteCarlo(benchmark::State& state) {
  const RadioTrialSpec spec{static_cast<int>(state.range(0)), 0.8};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunMonteCarlo(spec, 100, seed++));
  }
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_RadioMonteCarlo)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace sinkeq

BENCHMARK_MAIN();
