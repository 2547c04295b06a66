// core/src/decision.cpp

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

#include "sasvkit/decision.hpp"

#include <cmath>

#include "sasvkit/errors.hpp"
#include "sasvkit/math_util.hpp"

namespace sasvkit {

void validate_costs(const CostMatrix &costs) {
  const double c[3] = {costs.c_miss_tarbf, costs.c_fa_nonbf, costs.c_fa_spf};
  for (double v : c) {
    if (!std::isfinite(v) || v < 0.0) {
      throw DomainError("decision costs must be finite and nonnegative");
    }
  }
  if (c[0] == 0.0 && c[1] == 0.0 && c[2] == 0.0) {
    throw DomainError("at least one decision cost must be positive");
  }
}

Priors::Priors(const Composition3 &pi) : pi_(pi) { validate_composition(pi_); }

double conditional_risk(Action action, const Composition3 &posterior,
                        const CostMatrix &costs) {
  if (action == Action::kAccept) {
    return costs.c_fa_nonbf * posterior.p_nonbf +
           costs.c_fa_spf * posterior.p_spf;
  }
  return costs.c_miss_tarbf * posterior.p_tarbf;
}

Action decide_optimal_posterior(const Composition3 &posterior,
                                const CostMatrix &costs) {
  const double r_accept = conditional_risk(Action::kAccept, posterior, costs);
  const double r_reject = conditional_risk(Action::kReject, posterior, costs);
  return r_reject > r_accept ? Action::kAccept : Action::kReject;
}

Action decide_optimal_llr(const LlrPair &llrs, const Priors &priors,
                          const CostMatrix &costs) {
  if (!(costs.c_miss_tarbf > 0.0)) {
    throw DomainError("decide_optimal_llr requires c_miss_tarbf > 0");
  }
  const double rho = priors.rho();
  const double t_non = std::log(costs.c_fa_nonbf / costs.c_miss_tarbf) +
                       std::log1p(-rho) - llrs.llr_asv;
  const double t_spf = std::log(costs.c_fa_spf / costs.c_miss_tarbf) +
                       std::log(rho) - llrs.llr_cm;
  const double log_rhs = logsumexp2(t_non, t_spf);
  return std::log(priors.beta()) > log_rhs ? Action::kAccept
                                           : Action::kReject;
}

Action decide_linear(const LlrPair &llrs, const Priors &priors) {
  const Composition3 &pi = priors.pi();
  const double threshold =
      std::log(pi.p_spf * pi.p_nonbf / (pi.p_tarbf * pi.p_tarbf));
  return llrs.llr_asv + llrs.llr_cm > threshold ? Action::kAccept
                                                : Action::kReject;
}

int decide_ternary_cost(const Composition3 &posterior,
                        const TernaryCostMatrix &costs) {
  const double p[3] = {posterior.p_spf, posterior.p_nonbf, posterior.p_tarbf};
  int best = 0;
  double best_risk = 0.0;
  for (int a = 0; a < 3; ++a) {
    double risk = 0.0;
    for (int y = 0; y < 3; ++y) risk += costs.c[y][a] * p[y];
    if (a == 0 || risk < best_risk) {
      best = a;
      best_risk = risk;
    }
  }
  return best;
}

int decide_utility_argmax(const Composition3 &posterior,
                          const UtilityMatrix &utility) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j && !(utility.u[i][i] > utility.u[i][j])) {
        throw DomainError("utility diagonal must dominate its row");
      }
    }
  }
  const double p[3] = {posterior.p_spf, posterior.p_nonbf, posterior.p_tarbf};
  int best = 0;
  double best_gain = 0.0;
  for (int a = 0; a < 3; ++a) {
    double gain = 0.0;
    for (int y = 0; y < 3; ++y) gain += utility.u[y][a] * p[y];
    if (a == 0 || gain > best_gain) {
      best = a;
      best_gain = gain;
    }
  }
  return best;
}

}  // namespace sasvkit
