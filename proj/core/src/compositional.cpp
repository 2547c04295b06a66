// core/src/compositional.cpp

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

#include "sasvkit/compositional.hpp"

#include <algorithm>
#include <cmath>

#include "sasvkit/errors.hpp"
#include "sasvkit/math_util.hpp"

namespace sasvkit {

namespace {

void check_positive_finite(double v, const char *what) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw DomainError(std::string(what) +
                      " must be strictly positive and finite");
  }
}

IlrVector ilr_impl(double x_spf, double x_nonbf, double x_tarbf) {
  check_positive_finite(x_spf, "spf component");
  check_positive_finite(x_nonbf, "non.bf component");
  check_positive_finite(x_tarbf, "tar.bf component");
  IlrVector r;
  r.r1 = inv_sqrt2() * std::log(x_nonbf / x_spf);
  r.r2 = inv_sqrt6() * std::log(x_tarbf * x_tarbf / (x_spf * x_nonbf));
  return r;
}

}  // namespace

void validate_composition(const Composition3 &c) {
  check_positive_finite(c.p_spf, "p_spf");
  check_positive_finite(c.p_nonbf, "p_nonbf");
  check_positive_finite(c.p_tarbf, "p_tarbf");
  const double sum = c.p_spf + c.p_nonbf + c.p_tarbf;
  if (std::abs(sum - 1.0) > 1e-12) {
    throw DomainError("composition components must sum to 1 within 1e-12");
  }
}

Composition3 closure(const PositiveVector3 &v) {
  check_positive_finite(v.w_spf, "w_spf");
  check_positive_finite(v.w_nonbf, "w_nonbf");
  check_positive_finite(v.w_tarbf, "w_tarbf");
  const double sum = v.w_spf + v.w_nonbf + v.w_tarbf;
  return {v.w_spf / sum, v.w_nonbf / sum, v.w_tarbf / sum};
}

IlrVector ilr(const Composition3 &c) {
  return ilr_impl(c.p_spf, c.p_nonbf, c.p_tarbf);
}

IlrVector ilr(const PositiveVector3 &v) {
  return ilr_impl(v.w_spf, v.w_nonbf, v.w_tarbf);
}

Composition3 ilr_inv(const IlrVector &r) {
  if (!std::isfinite(r.r1) || !std::isfinite(r.r2)) {
    throw DomainError("ilr_inv requires finite coordinates");
  }
  // Solve ln(x2/x1) = sqrt(2) r1 and ln(x3^2/(x1 x2)) = sqrt(6) r2 with
  // x1 = 1, then renormalize through a max shift so exp cannot overflow.
  const double u = std::sqrt(2.0) * r.r1;
  const double v = std::sqrt(6.0) * r.r2;
  const double e1 = 0.0;
  const double e2 = u;
  const double e3 = 0.5 * (u + v);
  const double m = std::max({e1, e2, e3});
  const double x1 = std::exp(e1 - m);
  const double x2 = std::exp(e2 - m);
  const double x3 = std::exp(e3 - m);
  const double sum = x1 + x2 + x3;
  return {x1 / sum, x2 / sum, x3 / sum};
}

IlrVector likelihood_ilr_from_llrs(const LlrPair &llrs) {
  if (!std::isfinite(llrs.llr_asv) || !std::isfinite(llrs.llr_cm)) {
    throw DomainError("likelihood_ilr_from_llrs requires finite LLRs");
  }
  IlrVector r;
  r.r1 = inv_sqrt2() * (llrs.llr_cm - llrs.llr_asv);
  r.r2 = inv_sqrt6() * (llrs.llr_asv + llrs.llr_cm);
  return r;
}

}  // namespace sasvkit
