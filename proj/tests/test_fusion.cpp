// tests/test_fusion.cpp

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

#include "sasvkit/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "sasvkit/calibration.hpp"
#include "sasvkit/compositional.hpp"
#include "sasvkit/errors.hpp"
#include "sasvkit/metrics.hpp"
#include "sasvkit/rng.hpp"
#include "test_support.hpp"

using namespace sasvkit;

TEST_CASE("sum fusion") {
  CHECK(fuse_sum({0.0, 0.0}) == 0.0);
  CHECK(fuse_sum({1.0, 2.0}) ==
        doctest::Approx(1.2247448713915890).epsilon(1e-15));

  // The 1/sqrt(6) factor cannot change the EER.
  Xoshiro256StarStar rng(0x600D600D600D600DULL);
  std::vector<double> plain_t, plain_n, fused_t, fused_n;
  for (int i = 0; i < 500; ++i) {
    double z0 = 0.0, z1 = 0.0;
    rng.normal_pair(z0, z1);
    plain_t.push_back(1.0 + z0 + 1.0 + z1);
    fused_t.push_back(fuse_sum({1.0 + z0, 1.0 + z1}));
    rng.normal_pair(z0, z1);
    plain_n.push_back(-1.0 + z0 - 1.0 + z1);
    fused_n.push_back(fuse_sum({-1.0 + z0, -1.0 + z1}));
  }
  CHECK(compute_eer(plain_t, plain_n).eer == compute_eer(fused_t, fused_n).eer);
}

TEST_CASE("LLR sum fusion equals the r2 ILR coordinate") {
  CHECK(fuse_llr_sum({0.0, 0.0}) == 0.0);
  for (double l : {-2.0, 0.5, 4.0}) {
    CHECK(fuse_llr_sum({l, l}) ==
          doctest::Approx(2.0 * l / std::sqrt(6.0)).epsilon(1e-14));
  }
  Xoshiro256StarStar rng(0x2222333344445555ULL);
  for (int i = 0; i < 1000; ++i) {
    const LlrPair llrs{10.0 * rng.uniform01() - 5.0,
                       10.0 * rng.uniform01() - 5.0};
    CHECK(fuse_llr_sum(llrs) == likelihood_ilr_from_llrs(llrs).r2);
  }
}

TEST_CASE("non-linear fusion endpoints and constants") {
  CHECK(fuse_nonlinear({2.5, -7.0}, 0.0) == 2.5);
  CHECK(fuse_nonlinear({2.5, -7.0}, 1.0) == -7.0);
  for (double rho : {0.1, 0.5, 0.9}) {
    for (double l : {-3.0, 0.0, 2.0}) {
      CHECK(fuse_nonlinear({l, l}, rho) == doctest::Approx(l).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(fuse_nonlinear({0.0, 0.0}, -0.01), DomainError);
  CHECK_THROWS_AS(fuse_nonlinear({0.0, 0.0}, 1.01), DomainError);
}

TEST_CASE("non-linear fusion is overflow-free at extreme LLRs") {
  CHECK(std::isfinite(fuse_nonlinear({700.0, -700.0}, 0.5)));
  CHECK(std::isfinite(fuse_nonlinear({-700.0, 700.0}, 0.5)));
  CHECK(fuse_nonlinear({700.0, 700.0}, 0.25) ==
        doctest::Approx(700.0).epsilon(1e-12));
}

TEST_CASE("non-linear fusion envelope and monotonicity") {
  Xoshiro256StarStar rng(0xFADEFADEFADEFADEULL);
  for (int i = 0; i < 20000; ++i) {
    const LlrPair llrs{20.0 * rng.uniform01() - 10.0,
                       20.0 * rng.uniform01() - 10.0};
    const double rho = rng.uniform01();
    const double fused = fuse_nonlinear(llrs, rho);
    const double lo = std::min(llrs.llr_asv, llrs.llr_cm);
    const double hi = std::max(llrs.llr_asv, llrs.llr_cm);
    CHECK(fused <= hi + 1e-12);
    CHECK(fused >= lo - std::log(2.0) - 1e-12);

    const double eps = 0.125;
    CHECK(fuse_nonlinear({llrs.llr_asv + eps, llrs.llr_cm}, rho) >= fused);
    CHECK(fuse_nonlinear({llrs.llr_asv, llrs.llr_cm + eps}, rho) >= fused);
  }
}

TEST_CASE("non-linear fusion equals the Gaussian back-end log ratio") {
  GaussianBackend backend;
  backend.tarbf = {{1.5, 1.5}, {1.2, 0.3, 0.3, 0.9}};
  backend.nonbf = {{-2.0, 1.0}, {0.9, -0.2, -0.2, 1.1}};
  backend.spf = {{1.0, -2.0}, {1.0, 0.25, 0.25, 0.8}};
  Xoshiro256StarStar rng(0xCAFED00DCAFED00DULL);
  for (int i = 0; i < 5000; ++i) {
    const double x = 8.0 * rng.uniform01() - 3.0;
    const double y = 8.0 * rng.uniform01() - 3.0;
    const double rho = rng.uniform01();
    const LlrPair llrs = backend_llrs(backend, {x, y});
    const double fused = fuse_nonlinear(llrs, rho);
    const double p_tar = std::exp(gaussian_log_density(backend.tarbf, {x, y}));
    const double p_non = std::exp(gaussian_log_density(backend.nonbf, {x, y}));
    const double p_spf = std::exp(gaussian_log_density(backend.spf, {x, y}));
    const double direct =
        std::log(p_tar / ((1.0 - rho) * p_non + rho * p_spf));
    CHECK(fused == doctest::Approx(direct).epsilon(1e-9));
  }
}

TEST_CASE("sigmoid fusion rules") {
  CHECK(fuse_sigmoid_sum({0.0, 0.0}) == 0.5);
  CHECK(std::abs(fuse_sigmoid_sum({1.0, 700.0}) - 2.0) <= 1e-12);
  CHECK(fuse_sigmoid_sum({0.3, -2.0}) ==
        doctest::Approx(0.41920292202211755).epsilon(1e-15));

  CHECK(fuse_sigmoid_product({0.0, 0.0}) == 0.25);
  CHECK(std::abs(fuse_sigmoid_product({700.0, 700.0}) - 1.0) <= 1e-12);

  Xoshiro256StarStar rng(0x0101010101010101ULL);
  for (int i = 0; i < 5000; ++i) {
    const double a = 10.0 * rng.uniform01() - 5.0;
    const double c = 10.0 * rng.uniform01() - 5.0;
    const double eps = 0.25;
    CHECK(fuse_sigmoid_product({a + eps, c}) >= fuse_sigmoid_product({a, c}));
    CHECK(fuse_sigmoid_product({a, c + eps}) >= fuse_sigmoid_product({a, c}));
  }
}

namespace {

std::vector<std::pair<LlrPair, ClassLabel>> noise_cm_world(std::uint64_t seed,
                                                           int n_per_class) {
  // ASV LLRs separate all classes perfectly; CM LLRs are pure noise.
  Xoshiro256StarStar rng(seed);
  std::vector<std::pair<LlrPair, ClassLabel>> dev;
  for (int i = 0; i < n_per_class; ++i) {
    const double noise = 2.0 * rng.uniform01() - 1.0;
    dev.push_back({{10.0 + rng.uniform01(), noise}, ClassLabel::kTarBf});
    dev.push_back({{-10.0 - rng.uniform01(), 2.0 * rng.uniform01() - 1.0},
                   ClassLabel::kNonBf});
    dev.push_back({{-10.0 - rng.uniform01(), 2.0 * rng.uniform01() - 1.0},
                   ClassLabel::kSpf});
  }
  return dev;
}

}  // namespace

TEST_CASE("grid search prefers the informative stream") {
  const auto dev = noise_cm_world(0xDEAD10CCULL, 100);
  const Priors priors(Composition3{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
  const CostMatrix costs{1.0, 1.0, 1.0};
  const double rho =
      grid_search_rho(dev, GridObjective::kMinSasvEer, priors, costs);
  CHECK(rho == 0.0);
}

TEST_CASE("grid search on an exchangeable world is symmetric in rho") {
  // Mirroring every trial (streams swapped, non.bf <-> spf) makes the fused
  // score multiset at rho identical to the one at 1-rho.
  Xoshiro256StarStar rng(0x3141592653589793ULL);
  std::vector<std::pair<LlrPair, ClassLabel>> dev;
  for (int i = 0; i < 150; ++i) {
    double z0 = 0.0, z1 = 0.0;
    rng.normal_pair(z0, z1);
    const LlrPair tar{1.5 + z0, 1.5 + z1};
    dev.push_back({tar, ClassLabel::kTarBf});
    dev.push_back({{tar.llr_cm, tar.llr_asv}, ClassLabel::kTarBf});
    rng.normal_pair(z0, z1);
    const LlrPair non{-2.0 + z0, 1.0 + z1};
    dev.push_back({non, ClassLabel::kNonBf});
    dev.push_back({{non.llr_cm, non.llr_asv}, ClassLabel::kSpf});
    rng.normal_pair(z0, z1);
    const LlrPair spf{1.0 + z0, -2.0 + z1};
    dev.push_back({spf, ClassLabel::kSpf});
    dev.push_back({{spf.llr_cm, spf.llr_asv}, ClassLabel::kNonBf});
  }

  auto eer_at = [&dev](double rho) {
    std::vector<double> t, n;
    for (const auto &[llrs, label] : dev) {
      (label == ClassLabel::kTarBf ? t : n).push_back(
          fuse_nonlinear(llrs, rho));
    }
    return compute_eer(t, n).eer;
  };
  for (double rho : {0.0, 0.13, 0.25, 0.4}) {
    CHECK(std::abs(eer_at(rho) - eer_at(1.0 - rho)) <= 1e-9);
  }
}

TEST_CASE("grid search degenerate grid and determinism") {
  const auto dev = noise_cm_world(0xFACEFACEULL, 30);
  const Priors priors(Composition3{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
  const CostMatrix costs{1.0, 1.0, 1.0};
  const std::vector<double> single{0.5};
  CHECK(grid_search_rho(dev, GridObjective::kMinSasvEer, priors, costs,
                        single) == 0.5);

  // Result must not depend on grid evaluation order.
  std::vector<double> grid = default_rho_grid();
  std::vector<double> reversed(grid.rbegin(), grid.rend());
  const double fwd = grid_search_rho(dev, GridObjective::kMinEmpiricalRisk,
                                     priors, costs, grid);
  const double rev = grid_search_rho(dev, GridObjective::kMinEmpiricalRisk,
                                     priors, costs, reversed);
  CHECK(fwd == rev);
}

TEST_CASE("grid search requires all three classes") {
  std::vector<std::pair<LlrPair, ClassLabel>> dev;
  for (int i = 0; i < 10; ++i) {
    dev.push_back({{1.0, 1.0}, ClassLabel::kTarBf});
    dev.push_back({{-1.0, -1.0}, ClassLabel::kNonBf});
  }
  const Priors priors(Composition3{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
  CHECK_THROWS_AS(
      grid_search_rho(dev, GridObjective::kMinSasvEer, priors, {1, 1, 1}),
      FitError);
}
