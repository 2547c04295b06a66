// core/src/fusion.cpp

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

#include <cmath>

#include "sasvkit/errors.hpp"
#include "sasvkit/math_util.hpp"
#include "sasvkit/metrics.hpp"

namespace sasvkit {

namespace {

void check_finite_pair(double a, double b, const char *what) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError(std::string("non-finite ") + what);
  }
}

}  // namespace

double fuse_sum(ScoreVector s) {
  check_finite_pair(s.s_asv, s.s_cm, "score vector");
  return (s.s_asv + s.s_cm) * inv_sqrt6();
}

double fuse_llr_sum(const LlrPair &llrs) {
  check_finite_pair(llrs.llr_asv, llrs.llr_cm, "LLR pair");
  return (llrs.llr_asv + llrs.llr_cm) * inv_sqrt6();
}

double fuse_nonlinear(const LlrPair &llrs, double rho) {
  check_finite_pair(llrs.llr_asv, llrs.llr_cm, "LLR pair");
  if (!(rho >= 0.0) || !(rho <= 1.0)) {
    throw DomainError("rho must lie in [0, 1]");
  }
  const double t_non = std::log1p(-rho) - llrs.llr_asv;
  const double t_spf = std::log(rho) - llrs.llr_cm;
  return -logsumexp2(t_non, t_spf);
}

double fuse_sigmoid_sum(ScoreVector s) {
  check_finite_pair(s.s_asv, s.s_cm, "score vector");
  return sigmoid(s.s_cm) + s.s_asv;
}

double fuse_sigmoid_product(ScoreVector s) {
  check_finite_pair(s.s_asv, s.s_cm, "score vector");
  return sigmoid(s.s_asv) * sigmoid(s.s_cm);
}

std::vector<double> default_rho_grid() {
  std::vector<double> grid(101);
  for (int i = 0; i <= 100; ++i) grid[i] = static_cast<double>(i) / 100.0;
  return grid;
}

namespace {

double sasv_eer_objective(
    std::span<const std::pair<LlrPair, ClassLabel>> dev_trials, double rho) {
  std::vector<double> targets;
  std::vector<double> nontargets;
  for (const auto &[llrs, label] : dev_trials) {
    const double fused = fuse_nonlinear(llrs, rho);
    if (label == ClassLabel::kTarBf) {
      targets.push_back(fused);
    } else {
      nontargets.push_back(fused);
    }
  }
  return compute_eer(targets, nontargets).eer;
}

double risk_objective(std::span<const std::pair<LlrPair, ClassLabel>> dev_trials,
                      double rho, const Priors &priors,
                      const CostMatrix &costs) {
  // Optimal-policy decision with the candidate rho substituted for the
  // prior-derived one; beta and the cost ratios stay prior/cost driven.
  const double log_beta = std::log(priors.beta());
  double total = 0.0;
  for (const auto &[llrs, label] : dev_trials) {
    const double t_non = std::log(costs.c_fa_nonbf / costs.c_miss_tarbf) +
                         std::log1p(-rho) - llrs.llr_asv;
    const double t_spf = std::log(costs.c_fa_spf / costs.c_miss_tarbf) +
                         std::log(rho) - llrs.llr_cm;
    const bool accept = log_beta > logsumexp2(t_non, t_spf);
    switch (label) {
      case ClassLabel::kTarBf:
        if (!accept) total += costs.c_miss_tarbf;
        break;
      case ClassLabel::kNonBf:
        if (accept) total += costs.c_fa_nonbf;
        break;
      case ClassLabel::kSpf:
        if (accept) total += costs.c_fa_spf;
        break;
    }
  }
  return total / static_cast<double>(dev_trials.size());
}

}  // namespace

double grid_search_rho(
    std::span<const std::pair<LlrPair, ClassLabel>> dev_trials,
    GridObjective objective, const Priors &priors, const CostMatrix &costs,
    std::span<const double> grid) {
  if (grid.empty()) throw DomainError("empty rho grid");
  bool seen[3] = {false, false, false};
  for (const auto &[llrs, label] : dev_trials) {
    seen[static_cast<int>(label)] = true;
  }
  if (!seen[0] || !seen[1] || !seen[2]) {
    throw FitError("grid search needs all three classes in the dev set");
  }

  // Evaluate the whole curve first; the selection below is then independent
  // of evaluation order.
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double rho = grid[i];
    if (!(rho >= 0.0) || !(rho <= 1.0)) {
      throw DomainError("rho grid value outside [0, 1]");
    }
    values[i] = objective == GridObjective::kMinSasvEer
                    ? sasv_eer_objective(dev_trials, rho)
                    : risk_objective(dev_trials, rho, priors, costs);
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (values[i] < values[best] ||
        (values[i] == values[best] && grid[i] < grid[best])) {
      best = i;
    }
  }
  return grid[best];
}

double grid_search_rho(
    std::span<const std::pair<LlrPair, ClassLabel>> dev_trials,
    GridObjective objective, const Priors &priors, const CostMatrix &costs) {
  const std::vector<double> grid = default_rho_grid();
  return grid_search_rho(dev_trials, objective, priors, costs, grid);
}

}  // namespace sasvkit
