// sasvkit/simulation.hpp

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

#ifndef SASVKIT_SIMULATION_HPP_
#define SASVKIT_SIMULATION_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sasvkit/calibration.hpp"
#include "sasvkit/decision.hpp"
#include "sasvkit/types.hpp"

namespace sasvkit {

// Synthetic score world: one full-covariance 2-D Gaussian per class over
// (s_asv, s_cm), class priors, trial count, and the 64-bit stream seed.
struct SimulationSpec {
  Gaussian2 spf;
  Gaussian2 nonbf;
  Gaussian2 tarbf;
  Composition3 priors{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  std::uint64_t n_trials = 0;
  std::uint64_t seed = 0;
};

// Throws DomainError on invalid priors, non-SPD covariances, or n_trials < 1.
void validate_spec(const SimulationSpec &spec);

// Draws n_trials labeled trials. Per trial the stream is consumed in a fixed
// order (one uniform for the class label against the cumulative priors in
// (spf, non.bf, tar.bf) order, then one Box-Muller pair mapped through the
// lower Cholesky factor of the class covariance), so identical spec and seed
// reproduce identical trials bit for bit.
std::vector<TrialScore> sample_trials(const SimulationSpec &spec);

// Exact LLRs of the generating Gaussians at a score vector.
LlrPair true_llrs(const SimulationSpec &spec, ScoreVector s);

enum class PolicyKind { kOptimalLlr, kLinearLlr };

// Average decision cost over the trials when the policy decides from the
// world's true LLRs. policy_priors may differ from the world priors to study
// mis-matched operating assumptions.
double empirical_risk(const SimulationSpec &spec,
                      std::span<const TrialScore> trials, PolicyKind policy,
                      const Priors &policy_priors, const CostMatrix &costs);

// Rectangular grid over (llr_asv, llr_cm) with per-cell decisions of the
// linear and optimal policies, plus an optional mismatched-prior variant of
// the optimal policy.
struct GridParams {
  double asv_min = 0.0;
  double asv_max = 0.0;
  double cm_min = 0.0;
  double cm_max = 0.0;
  double step = 0.0;
};

struct BoundaryCell {
  double llr_asv = 0.0;
  double llr_cm = 0.0;
  bool linear_accept = false;
  bool optimal_accept = false;
  std::optional<bool> mismatched_accept;
};

struct BoundaryGrid {
  GridParams params;
  std::vector<BoundaryCell> cells;  // llr_asv outer, llr_cm inner, ascending
};

BoundaryGrid export_boundary_grid(const GridParams &params,
                                  const Priors &priors,
                                  const CostMatrix &costs,
                                  const std::optional<Priors> &mismatched);

}  // namespace sasvkit

#endif  // SASVKIT_SIMULATION_HPP_
