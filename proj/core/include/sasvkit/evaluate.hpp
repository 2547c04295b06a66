// sasvkit/evaluate.hpp

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

#ifndef SASVKIT_EVALUATE_HPP_
#define SASVKIT_EVALUATE_HPP_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sasvkit/calibration.hpp"
#include "sasvkit/fusion.hpp"
#include "sasvkit/metrics.hpp"
#include "sasvkit/types.hpp"

namespace sasvkit {

// The eight experimental systems:
//   b1    raw score sum                 b1c   affine-calibrated score sum
//   l2    backend LLR sum               l2c   calibrated backend LLR sum
//   l3    non-linear backend LLR fusion l3c   calibrated non-linear fusion
//   b1v2  sigmoid(s_cm) + s_asv         post  sigmoid(s_asv)*sigmoid(s_cm)
enum class SystemId { kB1, kB1c, kL2, kL2c, kL3, kL3c, kB1v2, kPost };

const char *to_string(SystemId id);
std::optional<SystemId> system_from_string(std::string_view s);

FusionKind rule_for(SystemId id);
bool system_needs_backend(SystemId id);
bool system_needs_score_calibration(SystemId id);  // b1c
bool system_needs_llr_calibration(SystemId id);    // l2c, l3c
bool system_needs_rho(SystemId id);                // l3, l3c

// Every model the eight systems can require. Absent entries are only an
// error when the selected system needs them.
struct FittedModels {
  std::optional<AffineCalibration> affine_asv;      // raw s_asv, b1c
  std::optional<AffineCalibration> affine_cm;       // raw s_cm, b1c
  std::optional<AffineCalibration> affine_llr_asv;  // llr_asv stream, l2c/l3c
  std::optional<AffineCalibration> affine_llr_cm;   // llr_cm stream, l2c/l3c
  std::optional<GaussianBackend> backend;           // l2/l2c/l3/l3c
};

// Per-trial outputs of one system: the fused score and the two per-stream
// inputs the rule consumed (what the tandem metric sees).
struct SystemScores {
  std::vector<double> fused;
  std::vector<ScoreVector> streams;
};

// Throws DomainError when a required model (or rho) is missing.
SystemScores compute_system_scores(std::span<const TrialScore> trials,
                                   SystemId system, const FittedModels &models,
                                   std::optional<double> rho);

// Per-trial LLR pairs of the generative route, optionally affine-calibrated
// per stream (the l2c/l3c pre-fusion step).
std::vector<LlrPair> backend_llr_pairs(std::span<const TrialScore> trials,
                                       const FittedModels &models,
                                       bool calibrated);

// Full metric report of one system on a labeled trial set: SASV-EER over
// tar.bf vs pooled (non.bf, spf), the Cllr decomposition of the fused score
// treated as an LLR, and the tandem EER of the per-stream inputs.
MetricsReport evaluate_system(std::span<const TrialScore> trials,
                              SystemId system, const FittedModels &models,
                              std::optional<double> rho);

}  // namespace sasvkit

#endif  // SASVKIT_EVALUATE_HPP_
