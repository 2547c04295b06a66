// sasvkit/metrics.hpp

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

#ifndef SASVKIT_METRICS_HPP_
#define SASVKIT_METRICS_HPP_

#include <span>
#include <vector>

#include "sasvkit/types.hpp"

namespace sasvkit {

struct EerResult {
  double eer = 0.0;
  double threshold = 0.0;
};

// Equal error rate with the "accept iff score > tau" convention. Operating
// points are -inf plus every distinct observed score; the miss/false-accept
// crossing is located by linear interpolation between adjacent points.
// Throws MetricError unless both sides are nonempty.
EerResult compute_eer(std::span<const double> target_scores,
                      std::span<const double> nontarget_scores);

// Cllr in bits:
//   (1/2) [ mean_targets log2(1 + e^{-llr}) + mean_nontargets log2(1 + e^{llr}) ].
// Stable for |llr| <= 700 and exact at +-inf inputs.
double compute_cllr(std::span<const double> target_llrs,
                    std::span<const double> nontarget_llrs);

// Optimal monotone recalibration: LLRs of the pool-adjacent-violators
// isotonic fit of the class indicator on the score order, with the two
// classes weighted to an effective prior of 0.5. Trials sharing a score are
// pooled up front, so any strictly increasing transform of the scores leaves
// the result unchanged. Output LLRs may be +-inf for pure end pools.
struct PavLlrs {
  std::vector<double> target_llrs;     // input order preserved
  std::vector<double> nontarget_llrs;  // input order preserved
};

PavLlrs pav_recalibrate(std::span<const double> target_scores,
                        std::span<const double> nontarget_scores);

// Cllr of the PAV-recalibrated scores; never exceeds compute_cllr of the
// same inputs.
double compute_cllr_min(std::span<const double> target_scores,
                        std::span<const double> nontarget_scores);

// Concurrent tandem EER of the joint rule "accept iff s_asv > tau_asv and
// s_cm > tau_cm". For each CM threshold the ASV threshold is placed at the
// interpolated point where the tandem miss rate equals the non-target
// false-accept rate; the returned value is the common rate where the spoof
// false-accept rate meets that path, again linearly interpolated (the
// smallest such crossing when the discrete path touches equality more than
// once). Depends on score ranks only, so independent strictly increasing
// transforms of either stream do not change it. Throws MetricError unless
// all three classes are present.
double compute_t_eer(std::span<const TrialScore> trials);

// The Table-style summary for one fused system. Rates are fractions in
// [0,1]; the Cllr triple is in bits.
struct MetricsReport {
  double sasv_eer = 0.0;
  double eer_threshold = 0.0;
  double cllr = 0.0;
  double cllr_min = 0.0;
  double cllr_calib = 0.0;
  double t_eer = 0.0;
};

}  // namespace sasvkit

#endif  // SASVKIT_METRICS_HPP_
