// sasvkit/decision.hpp

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

#ifndef SASVKIT_DECISION_HPP_
#define SASVKIT_DECISION_HPP_

#include "sasvkit/compositional.hpp"
#include "sasvkit/types.hpp"

namespace sasvkit {

// Costs of the three wrong outcomes of the two-action, three-class task;
// correct outcomes cost zero. All entries nonnegative, at least one positive.
struct CostMatrix {
  double c_miss_tarbf = 1.0;
  double c_fa_nonbf = 1.0;
  double c_fa_spf = 1.0;
};

void validate_costs(const CostMatrix &costs);

enum class Action { kReject = 0, kAccept = 1 };

// Class priors plus the two derived ratios used by the LLR-domain policies:
//   rho  = pi_spf / (pi_nonbf + pi_spf)   (spoof prevalence prior),
//   beta = pi_tarbf / (pi_nonbf + pi_spf) (target prior odds).
// rho and beta are always recomputed from pi, never stored.
class Priors {
 public:
  explicit Priors(const Composition3 &pi);

  const Composition3 &pi() const { return pi_; }
  double rho() const { return pi_.p_spf / (pi_.p_nonbf + pi_.p_spf); }
  double beta() const { return pi_.p_tarbf / (pi_.p_nonbf + pi_.p_spf); }

 private:
  Composition3 pi_;
};

// Expected cost of an action under the posterior:
//   R(accept) = c_fa_nonbf * P(non.bf) + c_fa_spf * P(spf),
//   R(reject) = c_miss_tarbf * P(tar.bf).
double conditional_risk(Action action, const Composition3 &posterior,
                        const CostMatrix &costs);

// Accept iff R(reject) > R(accept); ties reject.
Action decide_optimal_posterior(const Composition3 &posterior,
                                const CostMatrix &costs);

// Same policy in the LLR domain:
//   accept iff beta > (c_fa_nonbf/c_miss) e^{-llr_asv} (1-rho)
//                   + (c_fa_spf /c_miss) e^{-llr_cm } rho,
// evaluated in the log domain. Throws DomainError when c_miss_tarbf is 0.
Action decide_optimal_llr(const LlrPair &llrs, const Priors &priors,
                          const CostMatrix &costs);

// The linear (sum-of-LLRs) rule:
//   accept iff llr_asv + llr_cm > log(pi_spf * pi_nonbf / pi_tarbf^2).
// Necessary but not sufficient for the optimal rule with equal costs.
Action decide_linear(const LlrPair &llrs, const Priors &priors);

// Cost table for the three-action variant; c[y][a] is the cost of choosing
// class a when the truth is y, classes in the fixed (spf, non.bf, tar.bf)
// order.
struct TernaryCostMatrix {
  double c[3][3] = {};
};

// Utility table, u[y][a]; each diagonal entry must exceed the other entries
// of its row.
struct UtilityMatrix {
  double u[3][3] = {};
};

// argmin over the three actions of sum_y c[y][a] P(y); ties break to the
// lowest class index.
int decide_ternary_cost(const Composition3 &posterior,
                        const TernaryCostMatrix &costs);

// argmax over the three actions of sum_y u[y][a] P(y); ties break to the
// lowest class index. With a scalar diagonal utility this is the posterior
// argmax.
int decide_utility_argmax(const Composition3 &posterior,
                          const UtilityMatrix &utility);

}  // namespace sasvkit

#endif  // SASVKIT_DECISION_HPP_
