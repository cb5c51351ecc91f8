// Copyright 2026 The petzlab Authors
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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "petzlab/campaign.hpp"
#include "petzlab/opmath.hpp"
#include "petzlab/states.hpp"
#include "petzlab/typicality.hpp"

using namespace petzlab;

namespace {

CampaignConfig campaign_config() {
  CampaignConfig cfg;
  cfg.checks = {InequalityId::kSsa, InequalityId::kNegLogFPt, InequalityId::kMonoChannel};
  cfg.samples = 64;
  cfg.dims = {3, 3, 2};
  return cfg;
}

void BM_CampaignSerial(benchmark::State& state) {
  const CampaignConfig cfg = campaign_config();
  for (auto _ : state) benchmark::DoNotOptimize(run_campaign_serial(cfg));
}

void BM_CampaignParallel(benchmark::State& state) {
  const CampaignConfig cfg = campaign_config();
  for (auto _ : state) benchmark::DoNotOptimize(run_campaign(cfg));
}

struct PtInput {
  Matrix x;
  SpaceShape shape;
};

PtInput pt_input(int d) {
  CounterRng rng(3, 0);
  return {random_ginibre(d * d * 4, d * d * 4, rng), SpaceShape{{"A", d}, {"B", d}, {"C", 4}}};
}

void BM_PartialTraceReference(benchmark::State& state) {
  const PtInput in = pt_input(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::partial_trace(in.x, in.shape, {"A", "B"}));
}

void BM_PartialTraceParallel(benchmark::State& state) {
  const PtInput in = pt_input(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(partial_trace(in.x, in.shape, {"A", "B"}));
}

TypicalProjector qutrit_projector(int n) {
  const DensityOperator rho = diagonal_density({0.5, 0.3, 0.2});
  const DensityOperator sigma = diagonal_density({0.4, 0.35, 0.25});
  return typical_projector(rho, sigma, 0.2, n, TypicalityPath::kExact);
}

void BM_TypicalMassReference(benchmark::State& state) {
  const TypicalProjector tp = qutrit_projector(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::typical_mass(tp));
}

void BM_TypicalMassExact(benchmark::State& state) {
  const TypicalProjector tp = qutrit_projector(static_cast<int>(state.range(0)));
  const DensityOperator rho = diagonal_density({0.5, 0.3, 0.2});
  for (auto _ : state) benchmark::DoNotOptimize(typical_mass(tp, rho));
}

}  // namespace

BENCHMARK(BM_CampaignSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CampaignParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PartialTraceReference)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_PartialTraceParallel)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_TypicalMassReference)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_TypicalMassExact)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
