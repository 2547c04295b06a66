// core/src/simulation.cpp

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

#include "sasvkit/simulation.hpp"

#include <cmath>
#include <cstdio>

#include "sasvkit/errors.hpp"
#include "sasvkit/rng.hpp"

namespace sasvkit {

void validate_spec(const SimulationSpec &spec) {
  validate_composition(spec.priors);
  if (spec.n_trials < 1) throw DomainError("n_trials must be at least 1");
  const Gaussian2 *classes[3] = {&spec.spf, &spec.nonbf, &spec.tarbf};
  for (const Gaussian2 *g : classes) {
    if (!std::isfinite(g->mean.x) || !std::isfinite(g->mean.y)) {
      throw DomainError("class mean must be finite");
    }
    if (!is_symmetric(g->cov, 1e-12)) {
      throw DomainError("class covariance must be symmetric within 1e-12");
    }
    if (!(min_eigenvalue_sym(g->cov) > 0.0)) {
      throw DomainError("class covariance must be positive-definite");
    }
  }
}

std::vector<TrialScore> sample_trials(const SimulationSpec &spec) {
  validate_spec(spec);
  const Gaussian2 *classes[3] = {&spec.spf, &spec.nonbf, &spec.tarbf};
  const Chol2 chol[3] = {cholesky_lower(spec.spf.cov),
                         cholesky_lower(spec.nonbf.cov),
                         cholesky_lower(spec.tarbf.cov)};
  const double c_spf = spec.priors.p_spf;
  const double c_nonbf = c_spf + spec.priors.p_nonbf;

  Xoshiro256StarStar rng(spec.seed);
  std::vector<TrialScore> trials;
  trials.reserve(spec.n_trials);
  char id[32];
  for (std::uint64_t i = 0; i < spec.n_trials; ++i) {
    const double u = rng.uniform01();
    const int k = u < c_spf ? 0 : (u < c_nonbf ? 1 : 2);
    double z0 = 0.0;
    double z1 = 0.0;
    rng.normal_pair(z0, z1);
    const Vec2 s = classes[k]->mean + apply_chol(chol[k], {z0, z1});
    std::snprintf(id, sizeof(id), "t%07llu",
                  static_cast<unsigned long long>(i + 1));
    trials.push_back(
        {id, s.x, s.y, static_cast<ClassLabel>(k)});
  }
  return trials;
}

LlrPair true_llrs(const SimulationSpec &spec, ScoreVector s) {
  if (!std::isfinite(s.s_asv) || !std::isfinite(s.s_cm)) {
    throw DomainError("non-finite score vector");
  }
  const Vec2 v{s.s_asv, s.s_cm};
  const double log_tar = gaussian_log_density(spec.tarbf, v);
  LlrPair out;
  out.llr_asv = log_tar - gaussian_log_density(spec.nonbf, v);
  out.llr_cm = log_tar - gaussian_log_density(spec.spf, v);
  return out;
}

double empirical_risk(const SimulationSpec &spec,
                      std::span<const TrialScore> trials, PolicyKind policy,
                      const Priors &policy_priors, const CostMatrix &costs) {
  if (trials.empty()) throw DomainError("empirical risk needs trials");
  double total = 0.0;
  for (const TrialScore &t : trials) {
    if (!t.label) throw DomainError("empirical risk needs labeled trials");
    const LlrPair llrs = true_llrs(spec, {t.s_asv, t.s_cm});
    const Action action =
        policy == PolicyKind::kOptimalLlr
            ? decide_optimal_llr(llrs, policy_priors, costs)
            : decide_linear(llrs, policy_priors);
    if (action == Action::kAccept) {
      if (*t.label == ClassLabel::kNonBf) total += costs.c_fa_nonbf;
      if (*t.label == ClassLabel::kSpf) total += costs.c_fa_spf;
    } else if (*t.label == ClassLabel::kTarBf) {
      total += costs.c_miss_tarbf;
    }
  }
  return total / static_cast<double>(trials.size());
}

BoundaryGrid export_boundary_grid(const GridParams &params,
                                  const Priors &priors,
                                  const CostMatrix &costs,
                                  const std::optional<Priors> &mismatched) {
  if (!(params.step > 0.0)) throw DomainError("grid step must be positive");
  if (!(params.asv_max >= params.asv_min) ||
      !(params.cm_max >= params.cm_min)) {
    throw DomainError("grid ranges must be non-empty");
  }
  const auto cells_on = [&params](double lo, double hi) {
    return static_cast<std::size_t>(
               std::floor((hi - lo) / params.step + 1e-9)) +
           1;
  };
  const std::size_t n_asv = cells_on(params.asv_min, params.asv_max);
  const std::size_t n_cm = cells_on(params.cm_min, params.cm_max);

  BoundaryGrid grid;
  grid.params = params;
  grid.cells.reserve(n_asv * n_cm);
  for (std::size_t i = 0; i < n_asv; ++i) {
    const double la = params.asv_min + static_cast<double>(i) * params.step;
    for (std::size_t j = 0; j < n_cm; ++j) {
      const double lc = params.cm_min + static_cast<double>(j) * params.step;
      const LlrPair llrs{la, lc};
      BoundaryCell cell;
      cell.llr_asv = la;
      cell.llr_cm = lc;
      cell.linear_accept = decide_linear(llrs, priors) == Action::kAccept;
      cell.optimal_accept =
          decide_optimal_llr(llrs, priors, costs) == Action::kAccept;
      if (mismatched) {
        cell.mismatched_accept =
            decide_optimal_llr(llrs, *mismatched, costs) == Action::kAccept;
      }
      grid.cells.push_back(cell);
    }
  }
  return grid;
}

}  // namespace sasvkit
