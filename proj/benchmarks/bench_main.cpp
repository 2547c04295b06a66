// benchmarks/bench_main.cpp

// Copyright 2026 sasvkit authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <vector>

#include "sasvkit/calibration.hpp"
#include "sasvkit/compositional.hpp"
#include "sasvkit/fusion.hpp"
#include "sasvkit/metrics.hpp"
#include "sasvkit/rng.hpp"
#include "sasvkit/simulation.hpp"

namespace {

using namespace sasvkit;

SimulationSpec bench_world(std::uint64_t n) {
  SimulationSpec spec;
  spec.tarbf = {{1.5, 1.5}, {1.0, 0.0, 0.0, 1.0}};
  spec.nonbf = {{-2.0, 1.0}, {1.0, 0.0, 0.0, 1.0}};
  spec.spf = {{1.0, -2.0}, {1.0, 0.0, 0.0, 1.0}};
  spec.priors = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  spec.n_trials = n;
  spec.seed = 17;
  return spec;
}

void IlrRoundTrip(benchmark::State &state) {
  Composition3 c{0.2, 0.3, 0.5};
  for (auto _ : state) {
    const IlrVector r = ilr(c);
    c = ilr_inv(r);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(IlrRoundTrip);

void FuseNonlinear(benchmark::State &state) {
  Xoshiro256StarStar rng(2);
  std::vector<LlrPair> llrs(1024);
  for (auto &l : llrs) {
    l = {20.0 * rng.uniform01() - 10.0, 20.0 * rng.uniform01() - 10.0};
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fuse_nonlinear(llrs[i++ & 1023], 0.3));
  }
}
BENCHMARK(FuseNonlinear);

void BackendLlrs(benchmark::State &state) {
  const SimulationSpec spec = bench_world(1);
  const GaussianBackend backend{spec.spf, spec.nonbf, spec.tarbf};
  Xoshiro256StarStar rng(3);
  std::vector<ScoreVector> scores(1024);
  for (auto &s : scores) {
    s = {6.0 * rng.uniform01() - 3.0, 6.0 * rng.uniform01() - 3.0};
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(backend_llrs(backend, scores[i++ & 1023]));
  }
}
BENCHMARK(BackendLlrs);

void SampleTrials(benchmark::State &state) {
  const SimulationSpec spec = bench_world(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_trials(spec));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(SampleTrials)->Range(1024, 1 << 18);

void ComputeEer(benchmark::State &state) {
  Xoshiro256StarStar rng(4);
  const std::size_t n = state.range(0);
  std::vector<double> targets(n);
  std::vector<double> nontargets(n);
  for (std::size_t i = 0; i < n; ++i) {
    double z0 = 0.0, z1 = 0.0;
    rng.normal_pair(z0, z1);
    targets[i] = 1.0 + z0;
    nontargets[i] = -1.0 + z1;
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_eer(targets, nontargets));
  }
  state.SetItemsProcessed(state.iterations() * 2 * n);
}
BENCHMARK(ComputeEer)->Range(1024, 1 << 17);

void CllrMinPav(benchmark::State &state) {
  Xoshiro256StarStar rng(5);
  const std::size_t n = state.range(0);
  std::vector<double> targets(n);
  std::vector<double> nontargets(n);
  for (std::size_t i = 0; i < n; ++i) {
    double z0 = 0.0, z1 = 0.0;
    rng.normal_pair(z0, z1);
    targets[i] = 1.0 + z0;
    nontargets[i] = -1.0 + z1;
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_cllr_min(targets, nontargets));
  }
  state.SetItemsProcessed(state.iterations() * 2 * n);
}
BENCHMARK(CllrMinPav)->Range(1024, 1 << 16);

void TandemEer(benchmark::State &state) {
  SimulationSpec spec = bench_world(state.range(0));
  const std::vector<TrialScore> trials = sample_trials(spec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_t_eer(trials));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(TandemEer)->Range(1024, 1 << 17);

}  // namespace

BENCHMARK_MAIN();
