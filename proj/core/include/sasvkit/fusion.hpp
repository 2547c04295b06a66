// sasvkit/fusion.hpp

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

#ifndef SASVKIT_FUSION_HPP_
#define SASVKIT_FUSION_HPP_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sasvkit/decision.hpp"
#include "sasvkit/types.hpp"

namespace sasvkit {

enum class FusionKind {
  kSumRaw,
  kSumCalibrated,
  kLlrSum,
  kLlrNonlinear,
  kSigmoidSum,
  kSigmoidProduct,
};

// rho is meaningful (and required) only for kLlrNonlinear.
struct FusionRule {
  FusionKind kind = FusionKind::kSumRaw;
  std::optional<double> rho;
};

// (s_asv + s_cm) / sqrt(6). The scale factor keeps the fused value on the
// ILR axis; it does not change the score's discrimination power.
double fuse_sum(ScoreVector s);

// (llr_asv + llr_cm) / sqrt(6); equals the r2 ILR coordinate of the
// likelihood vector.
double fuse_llr_sum(const LlrPair &llrs);

// -log[(1-rho) e^{-llr_asv} + rho e^{-llr_cm}], max-shifted so it is
// overflow-free for |LLR| <= 700. rho = 0 reduces exactly to llr_asv and
// rho = 1 to llr_cm. Throws DomainError for rho outside [0,1].
double fuse_nonlinear(const LlrPair &llrs, double rho);

// sigmoid(s_cm) + s_asv (posterior-style reference rule).
double fuse_sigmoid_sum(ScoreVector s);

// sigmoid(s_asv) * sigmoid(s_cm) (posterior-style reference rule).
double fuse_sigmoid_product(ScoreVector s);

enum class GridObjective { kMinSasvEer, kMinEmpiricalRisk };

// The default search grid {0, 0.01, ..., 1.00}.
std::vector<double> default_rho_grid();

// Picks the grid rho minimizing the objective over the labeled development
// LLR pairs; ties break toward the smallest rho regardless of evaluation
// order. kMinSasvEer pools non.bf and spf as the negative class;
// kMinEmpiricalRisk averages the cost of the optimal-policy decision taken
// with the candidate rho in place of the prior-derived one. Throws FitError
// unless all three classes are present.
double grid_search_rho(
    std::span<const std::pair<LlrPair, ClassLabel>> dev_trials,
    GridObjective objective, const Priors &priors, const CostMatrix &costs,
    std::span<const double> grid);

double grid_search_rho(
    std::span<const std::pair<LlrPair, ClassLabel>> dev_trials,
    GridObjective objective, const Priors &priors, const CostMatrix &costs);

}  // namespace sasvkit

#endif  // SASVKIT_FUSION_HPP_
