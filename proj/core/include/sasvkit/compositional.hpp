// sasvkit/compositional.hpp

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

#ifndef SASVKIT_COMPOSITIONAL_HPP_
#define SASVKIT_COMPOSITIONAL_HPP_

#include "sasvkit/types.hpp"

namespace sasvkit {

// Point on the 3-class probability simplex, components in the fixed class
// order (spf, non.bf, tar.bf). Components must be strictly positive and sum
// to 1 within 1e-12; validate_composition checks this.
struct Composition3 {
  double p_spf = 0.0;
  double p_nonbf = 0.0;
  double p_tarbf = 0.0;
};

// Unnormalized positive vector, e.g. per-class likelihood density values.
struct PositiveVector3 {
  double w_spf = 0.0;
  double w_nonbf = 0.0;
  double w_tarbf = 0.0;
};

// Isometric-log-ratio coordinates of a 3-part composition:
//   r1 = (1/sqrt(2)) ln(x_nonbf / x_spf)        balance of non.bf vs spf,
//   r2 = (1/sqrt(6)) ln(x_tarbf^2 / (x_spf x_nonbf))
//                                               balance of tar.bf vs the rest.
struct IlrVector {
  double r1 = 0.0;
  double r2 = 0.0;
};

// Throws DomainError unless all components are strictly positive, finite,
// and sum to 1 within 1e-12.
void validate_composition(const Composition3 &c);

// Normalizes a strictly positive finite vector onto the simplex.
Composition3 closure(const PositiveVector3 &v);

// ILR transform; scale invariant, so it applies to unnormalized positive
// vectors as well as compositions. Zero or negative components are rejected,
// never clamped.
IlrVector ilr(const Composition3 &c);
IlrVector ilr(const PositiveVector3 &v);

// Inverse ILR; ilr(ilr_inv(r)) == r within 1e-10.
Composition3 ilr_inv(const IlrVector &r);

// ILR coordinates of the likelihood vector expressed through the two LLRs:
//   r1 = (1/sqrt(2)) (llr_cm - llr_asv),
//   r2 = (1/sqrt(6)) (llr_asv + llr_cm).
IlrVector likelihood_ilr_from_llrs(const LlrPair &llrs);

}  // namespace sasvkit

#endif  // SASVKIT_COMPOSITIONAL_HPP_
