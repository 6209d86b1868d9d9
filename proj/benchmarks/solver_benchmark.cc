// Copyright 2026 The Anticipate Authors
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

#include <numbers>

#include "anticipate/anticipative_solver.h"
#include "anticipate/four_state_task.h"
#include "anticipate/shot_simulator.h"

namespace {

using namespace anticipate;

void BM_BuildAuxiliary(benchmark::State &state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto aux = build_auxiliary(0.7, k);
    benchmark::DoNotOptimize(aux.lambda());
  }
}
BENCHMARK(BM_BuildAuxiliary)->Arg(1)->Arg(2);

void BM_LambdaArgmax(benchmark::State &state) {
  auto aux = build_auxiliary(0.7, 2);
  for (auto _ : state) benchmark::DoNotOptimize(lambda_argmax(aux).maximizers.size());
}
BENCHMARK(BM_LambdaArgmax);

void BM_PipelineGrid(benchmark::State &state) {
  auto grid = default_theta_grid();
  for (auto _ : state) {
    double total = 0.0;
    for (double t : grid) {
      TaskParams p(t);
      for (const auto &s : all_scenarios()) total += pipeline_success(s, p);
    }
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size() * 6));
}
BENCHMARK(BM_PipelineGrid);

void BM_TallyRun(benchmark::State &state) {
  const auto shots = static_cast<std::size_t>(state.range(0));
  auto plan = plan_experiment({std::numbers::pi / 3}, shots, kDefaultSeed);
  NoiseModel noise{0.02, kDefaultReadoutFlip};
  for (auto _ : state) {
    auto tally = tally_run(plan, plan.runs[3], noise);
    benchmark::DoNotOptimize(tally.outcome_counts);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TallyRun)->Arg(20000);

void BM_SampleRunRecords(benchmark::State &state) {
  auto plan = plan_experiment({std::numbers::pi / 3}, 20000, kDefaultSeed);
  NoiseModel noise{0.02, kDefaultReadoutFlip};
  for (auto _ : state) {
    auto records = sample_run(plan, plan.runs[3], noise);
    benchmark::DoNotOptimize(records.data());
  }
  state.SetItemsProcessed(state.iterations() * 20000);
}
BENCHMARK(BM_SampleRunRecords);

void BM_FullExperiment(benchmark::State &state) {
  auto plan = plan_experiment(default_theta_grid(), kDefaultShots, kDefaultSeed);
  NoiseModel noise{0.02, kDefaultReadoutFlip};
  for (auto _ : state) {
    auto tallies = simulate(plan, noise, 1);
    benchmark::DoNotOptimize(tallies.data());
  }
  state.SetItemsProcessed(state.iterations() * 400 * static_cast<int64_t>(kDefaultShots));
}
BENCHMARK(BM_FullExperiment)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
