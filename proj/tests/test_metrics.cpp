// tests/test_metrics.cpp

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

#include "sasvkit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "sasvkit/errors.hpp"
#include "sasvkit/rng.hpp"
#include "test_support.hpp"

using namespace sasvkit;

namespace {

std::vector<TrialScore> make_trials(
    const std::vector<std::tuple<double, double, ClassLabel>> &rows) {
  std::vector<TrialScore> trials;
  for (const auto &[a, c, label] : rows) {
    trials.push_back({"t", a, c, label});
  }
  return trials;
}

}  // namespace

TEST_CASE("EER on hand-checked lists") {
  const EerResult sep = compute_eer(std::vector<double>{2.0, 3.0},
                                    std::vector<double>{0.0, 1.0});
  CHECK(sep.eer == 0.0);
  const EerResult half = compute_eer(std::vector<double>{0.0, 2.0},
                                     std::vector<double>{1.0, 3.0});
  CHECK(half.eer == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(compute_eer(std::vector<double>{1.0}, std::vector<double>{}),
                  MetricError);
}

TEST_CASE("EER equals the quadratic brute force on random small lists") {
  Xoshiro256StarStar rng(0xE2E2E2E2E2E2E2E2ULL);
  for (int round = 0; round < 300; ++round) {
    const std::size_t nt = 1 + static_cast<std::size_t>(rng.uniform01() * 25);
    const std::size_t nn = 1 + static_cast<std::size_t>(rng.uniform01() * 25);
    std::vector<double> targets(nt);
    std::vector<double> nontargets(nn);
    for (double &s : targets) s = std::floor(rng.uniform01() * 12.0) * 0.5;
    for (double &s : nontargets) {
      s = std::floor(rng.uniform01() * 12.0) * 0.5 - 1.0;
    }
    const double got = compute_eer(targets, nontargets).eer;
    const double expect = testing::brute_force_eer(targets, nontargets);
    CHECK(std::abs(got - expect) <= 1e-12);
  }
}

TEST_CASE("EER is invariant under strictly increasing transforms") {
  Xoshiro256StarStar rng(0x1DEA1DEA1DEA1DEAULL);
  for (int round = 0; round < 40; ++round) {
    std::vector<double> targets;
    std::vector<double> nontargets;
    for (int i = 0; i < 60; ++i) {
      double z0 = 0.0, z1 = 0.0;
      rng.normal_pair(z0, z1);
      targets.push_back(1.0 + z0);
      nontargets.push_back(-1.0 + z1);
    }
    const double base = compute_eer(targets, nontargets).eer;
    auto mapped = [&](auto f) {
      std::vector<double> t, n;
      for (double s : targets) t.push_back(f(s));
      for (double s : nontargets) n.push_back(f(s));
      return compute_eer(t, n).eer;
    };
    CHECK(mapped([](double s) { return 2.5 * s + 7.0; }) == base);
    CHECK(mapped([](double s) { return std::atan(s); }) == base);
    CHECK(mapped([](double s) { return std::exp(0.3 * s); }) == base);
  }
}

TEST_CASE("Cllr reference values") {
  const std::vector<double> zeros(10, 0.0);
  CHECK(compute_cllr(zeros, zeros) == 1.0);

  const std::vector<double> hi(5, 700.0);
  const std::vector<double> lo(5, -700.0);
  CHECK(compute_cllr(hi, lo) <= 1e-12);
  CHECK_THROWS_AS(compute_cllr(hi, {}), MetricError);

  // Infinite LLRs from pure PAV pools must stay well-behaved.
  const std::vector<double> inf_t{std::numeric_limits<double>::infinity(),
                                  1.0};
  const std::vector<double> inf_n{-std::numeric_limits<double>::infinity(),
                                  -1.0};
  CHECK(std::isfinite(compute_cllr(inf_t, inf_n)));
}

TEST_CASE("PAV fit matches exhaustive isotonic regression on small lists") {
  Xoshiro256StarStar rng(0x9A9A9A9A9A9A9A9AULL);
  for (int round = 0; round < 200; ++round) {
    const std::size_t nt = 1 + static_cast<std::size_t>(rng.uniform01() * 5);
    const std::size_t nn = 1 + static_cast<std::size_t>(rng.uniform01() * 5);
    std::vector<double> targets(nt);
    std::vector<double> nontargets(nn);
    for (double &s : targets) s = std::floor(rng.uniform01() * 20.0);
    for (double &s : nontargets) s = std::floor(rng.uniform01() * 20.0);

    // Build the grouped, sorted representation the brute force needs.
    std::vector<double> scores;
    scores.insert(scores.end(), targets.begin(), targets.end());
    scores.insert(scores.end(), nontargets.begin(), nontargets.end());
    std::sort(scores.begin(), scores.end());
    scores.erase(std::unique(scores.begin(), scores.end()), scores.end());
    const double wt = 0.5 / static_cast<double>(nt);
    const double wn = 0.5 / static_cast<double>(nn);
    std::vector<double> values;
    std::vector<double> weights;
    for (double s : scores) {
      double w = 0.0;
      double ws = 0.0;
      for (double t : targets) {
        if (t == s) {
          w += wt;
          ws += wt;
        }
      }
      for (double n : nontargets) {
        if (n == s) w += wn;
      }
      values.push_back(ws / w);
      weights.push_back(w);
    }
    const std::vector<double> expect =
        testing::brute_force_isotonic(values, weights);

    const PavLlrs pav = pav_recalibrate(targets, nontargets);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const std::size_t g = static_cast<std::size_t>(
          std::lower_bound(scores.begin(), scores.end(), targets[i]) -
          scores.begin());
      const double p = 1.0 / (1.0 + std::exp(-pav.target_llrs[i]));
      CHECK(p == doctest::Approx(expect[g]).epsilon(1e-10));
    }
    for (std::size_t i = 0; i < nontargets.size(); ++i) {
      const std::size_t g = static_cast<std::size_t>(
          std::lower_bound(scores.begin(), scores.end(), nontargets[i]) -
          scores.begin());
      const double p = 1.0 / (1.0 + std::exp(-pav.nontarget_llrs[i]));
      CHECK(p == doctest::Approx(expect[g]).epsilon(1e-10));
    }
  }
}

TEST_CASE("PAV output is monotone in the score") {
  Xoshiro256StarStar rng(0x8888111188881111ULL);
  std::vector<double> targets;
  std::vector<double> nontargets;
  for (int i = 0; i < 150; ++i) {
    double z0 = 0.0, z1 = 0.0;
    rng.normal_pair(z0, z1);
    targets.push_back(0.8 + z0);
    nontargets.push_back(-0.8 + z1);
  }
  const PavLlrs pav = pav_recalibrate(targets, nontargets);
  std::vector<std::pair<double, double>> pairs;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    pairs.push_back({targets[i], pav.target_llrs[i]});
  }
  for (std::size_t i = 0; i < nontargets.size(); ++i) {
    pairs.push_back({nontargets[i], pav.nontarget_llrs[i]});
  }
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    CHECK(pairs[i].second >= pairs[i - 1].second);
  }
}

TEST_CASE("Cllr_min bounds and invariances") {
  Xoshiro256StarStar rng(0x4242424242424242ULL);
  for (int round = 0; round < 100; ++round) {
    std::vector<double> targets;
    std::vector<double> nontargets;
    for (int i = 0; i < 40; ++i) {
      double z0 = 0.0, z1 = 0.0;
      rng.normal_pair(z0, z1);
      targets.push_back(0.5 + z0);
      nontargets.push_back(-0.5 + z1);
    }
    const double cllr = compute_cllr(targets, nontargets);
    const double cllr_min = compute_cllr_min(targets, nontargets);
    CHECK(cllr_min <= cllr + 1e-12);
    CHECK(cllr_min >= 0.0);
    CHECK(cllr_min <= 1.0 + 1e-12);

    // Identical under a strictly increasing transform.
    std::vector<double> t2;
    std::vector<double> n2;
    for (double s : targets) t2.push_back(std::exp(0.4 * s) + 3.0);
    for (double s : nontargets) n2.push_back(std::exp(0.4 * s) + 3.0);
    CHECK(compute_cllr_min(t2, n2) == cllr_min);
  }

  // Perfect separation and full anti-calibration.
  const std::vector<double> hi{3.0, 4.0, 5.0};
  const std::vector<double> lo{0.0, 1.0, 2.0};
  CHECK(compute_cllr_min(hi, lo) <= 1e-12);
  CHECK(compute_cllr_min(lo, hi) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Cllr of true LLRs is close to its PAV floor") {
  Xoshiro256StarStar rng(0x1000200030004000ULL);
  std::vector<double> targets;
  std::vector<double> nontargets;
  const double m = 1.0;
  for (int i = 0; i < 100000; ++i) {
    double z0 = 0.0, z1 = 0.0;
    rng.normal_pair(z0, z1);
    targets.push_back(2.0 * m * (m + z0));
    nontargets.push_back(2.0 * m * (-m + z1));
  }
  const double cllr = compute_cllr(targets, nontargets);
  const double cllr_min = compute_cllr_min(targets, nontargets);
  CHECK(cllr - cllr_min <= 0.01);
}

TEST_CASE("t-EER equals the exhaustive vertex on the constructed set") {
  const std::vector<TrialScore> nine = make_trials({
      {5, 5, ClassLabel::kTarBf},
      {4, 4, ClassLabel::kTarBf},
      {0, 0, ClassLabel::kTarBf},
      {3, 3, ClassLabel::kNonBf},
      {-2, 4, ClassLabel::kNonBf},
      {4, -2, ClassLabel::kNonBf},
      {2, 2, ClassLabel::kSpf},
      {-1, 3, ClassLabel::kSpf},
      {3, -1, ClassLabel::kSpf},
  });

  // Exhaustive grid search over all threshold pairs: collect every point
  // where the three error rates agree exactly.
  std::vector<double> ta{-1e18, -2, -1, 0, 2, 3, 4, 5};
  std::vector<double> tc{-1e18, -2, -1, 0, 2, 3, 4, 5};
  std::vector<double> equal_rates;
  for (double a : ta) {
    for (double c : tc) {
      int acc[3] = {0, 0, 0};
      for (const TrialScore &t : nine) {
        if (t.s_asv > a && t.s_cm > c) ++acc[static_cast<int>(*t.label)];
      }
      // Exact rational comparison: each class has 3 trials.
      const int missed = 3 - acc[2];
      if (missed == acc[1] && missed == acc[0]) {
        equal_rates.push_back(missed / 3.0);
      }
    }
  }
  REQUIRE(!equal_rates.empty());
  const double expect =
      *std::min_element(equal_rates.begin(), equal_rates.end());
  CHECK(expect == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(compute_t_eer(nine) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("t-EER is zero when either stream separates perfectly") {
  const std::vector<TrialScore> both = make_trials({
      {5, 5, ClassLabel::kTarBf},
      {6, 6, ClassLabel::kTarBf},
      {-5, 5, ClassLabel::kNonBf},
      {-6, 4, ClassLabel::kNonBf},
      {5, -5, ClassLabel::kSpf},
      {4, -6, ClassLabel::kSpf},
  });
  CHECK(compute_t_eer(both) == 0.0);

  // The CM stream alone separates targets here; ASV is useless.
  const std::vector<TrialScore> cm_only = make_trials({
      {0, 5, ClassLabel::kTarBf},
      {1, 4, ClassLabel::kTarBf},
      {0, 4, ClassLabel::kTarBf},
      {1, 3, ClassLabel::kNonBf},
      {0, 3, ClassLabel::kNonBf},
      {1, -2, ClassLabel::kNonBf},
      {0, 2, ClassLabel::kSpf},
      {1, 3, ClassLabel::kSpf},
      {0, -1, ClassLabel::kSpf},
  });
  CHECK(compute_t_eer(cm_only) == 0.0);
}

TEST_CASE("t-EER is invariant to independent monotone stream transforms") {
  Xoshiro256StarStar rng(0x77007700770077ULL);
  std::vector<TrialScore> trials;
  for (int i = 0; i < 60; ++i) {
    double z0 = 0.0, z1 = 0.0;
    rng.normal_pair(z0, z1);
    trials.push_back({"t", 1.2 + z0, 1.2 + z1, ClassLabel::kTarBf});
    rng.normal_pair(z0, z1);
    trials.push_back({"n", -1.2 + z0, 1.2 + z1, ClassLabel::kNonBf});
    rng.normal_pair(z0, z1);
    trials.push_back({"s", 1.0 + z0, -1.2 + z1, ClassLabel::kSpf});
  }
  const double base = compute_t_eer(trials);
  CHECK(base > 0.0);

  std::vector<TrialScore> mapped = trials;
  for (TrialScore &t : mapped) {
    t.s_asv = std::exp(0.3 * t.s_asv) + 5.0;
    t.s_cm = 2.0 * std::atan(t.s_cm) - 1.0;
  }
  CHECK(std::abs(compute_t_eer(mapped) - base) <= 1e-12);
}

TEST_CASE("t-EER requires all three classes") {
  const std::vector<TrialScore> two = make_trials({
      {1, 1, ClassLabel::kTarBf},
      {-1, -1, ClassLabel::kNonBf},
  });
  CHECK_THROWS_AS(compute_t_eer(two), MetricError);
}
