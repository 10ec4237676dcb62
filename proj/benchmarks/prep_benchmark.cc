// Copyright 2026 The smoothprep Authors
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


#include <numbers>
#include <string>

#include <benchmark/benchmark.h>

#include "smoothprep/classical_sampler.h"
#include "smoothprep/quantum_prep.h"
#include "smoothprep/smoothed.h"
#include "smoothprep/vectors.h"

namespace smoothprep {
namespace {

DataVector uniform_vector(benchmark::State& state) {
  return generate_vector("uniform:" + std::to_string(state.range(0)) + ":1");
}

void BM_PrepareRawState(benchmark::State& state) {
  const DataVector x = uniform_vector(state);
  for (auto _ : state) benchmark::DoNotOptimize(prepare_raw_state(x));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PrepareRawState)->RangeMultiplier(16)->Range(256, 1 << 20);

void BM_GroverIterate(benchmark::State& state) {
  const DataVector x = uniform_vector(state);
  AmplitudeAmplifier amp(x);
  for (auto _ : state) {
    amp.iterate(std::numbers::pi, std::numbers::pi);
    benchmark::DoNotOptimize(amp.state());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GroverIterate)->RangeMultiplier(16)->Range(256, 1 << 20);

void BM_Perturb(benchmark::State& state) {
  const DataVector x = zero_vector(static_cast<std::size_t>(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(perturb(x, {0.1, seed++}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Perturb)->RangeMultiplier(16)->Range(256, 1 << 20);

void BM_RoundOffset(benchmark::State& state) {
  const DataVector x = uniform_vector(state);
  for (auto _ : state) benchmark::DoNotOptimize(round_offset(x, 0.05));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RoundOffset)->Arg(1 << 16);

void BM_L2Sample(benchmark::State& state) {
  const DataVector x = uniform_vector(state);
  SamplerConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(l2_sample(x, cfg));
    ++cfg.seed;
  }
}
BENCHMARK(BM_L2Sample)->Arg(16)->Arg(1 << 16);

void BM_EstimateSmoothed(benchmark::State& state) {
  const auto strategy = static_cast<Strategy>(state.range(1));
  const DataVector x = zero_vector(static_cast<std::size_t>(state.range(0)));
  HarnessOptions options;
  options.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_smoothed(strategy, x, 0.1, 100, 7, options));
  }
  state.SetLabel(std::string(to_string(strategy)));
}
BENCHMARK(BM_EstimateSmoothed)
    ->Args({1024, static_cast<int>(Strategy::kNaive)})
    ->Args({1024, static_cast<int>(Strategy::kKnownAmplitudeAA)})
    ->Args({1024, static_cast<int>(Strategy::kClassicalRejection)})
    ->Unit(benchmark::kMillisecond);

void BM_FixedPointSchedule(benchmark::State& state) {
  const double eps = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fixed_point_schedule(eps * eps / 4, 0.1));
}
BENCHMARK(BM_FixedPointSchedule)->Arg(10)->Arg(100);

}  // namespace
}  // namespace smoothprep

BENCHMARK_MAIN();
