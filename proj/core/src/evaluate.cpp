// core/src/evaluate.cpp

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

#include "sasvkit/evaluate.hpp"

#include <algorithm>
#include <cmath>

#include "sasvkit/errors.hpp"
#include "sasvkit/math_util.hpp"

namespace sasvkit {

const char *to_string(SystemId id) {
  switch (id) {
    case SystemId::kB1: return "b1";
    case SystemId::kB1c: return "b1c";
    case SystemId::kL2: return "l2";
    case SystemId::kL2c: return "l2c";
    case SystemId::kL3: return "l3";
    case SystemId::kL3c: return "l3c";
    case SystemId::kB1v2: return "b1v2";
    case SystemId::kPost: return "post";
  }
  return "?";
}

std::optional<SystemId> system_from_string(std::string_view s) {
  if (s == "b1") return SystemId::kB1;
  if (s == "b1c") return SystemId::kB1c;
  if (s == "l2") return SystemId::kL2;
  if (s == "l2c") return SystemId::kL2c;
  if (s == "l3") return SystemId::kL3;
  if (s == "l3c") return SystemId::kL3c;
  if (s == "b1v2") return SystemId::kB1v2;
  if (s == "post") return SystemId::kPost;
  return std::nullopt;
}

FusionKind rule_for(SystemId id) {
  switch (id) {
    case SystemId::kB1: return FusionKind::kSumRaw;
    case SystemId::kB1c: return FusionKind::kSumCalibrated;
    case SystemId::kL2:
    case SystemId::kL2c: return FusionKind::kLlrSum;
    case SystemId::kL3:
    case SystemId::kL3c: return FusionKind::kLlrNonlinear;
    case SystemId::kB1v2: return FusionKind::kSigmoidSum;
    case SystemId::kPost: return FusionKind::kSigmoidProduct;
  }
  return FusionKind::kSumRaw;
}

bool system_needs_backend(SystemId id) {
  return id == SystemId::kL2 || id == SystemId::kL2c || id == SystemId::kL3 ||
         id == SystemId::kL3c;
}

bool system_needs_score_calibration(SystemId id) {
  return id == SystemId::kB1c;
}

bool system_needs_llr_calibration(SystemId id) {
  return id == SystemId::kL2c || id == SystemId::kL3c;
}

bool system_needs_rho(SystemId id) {
  return id == SystemId::kL3 || id == SystemId::kL3c;
}

std::vector<LlrPair> backend_llr_pairs(std::span<const TrialScore> trials,
                                       const FittedModels &models,
                                       bool calibrated) {
  if (!models.backend) {
    throw DomainError("backend model required to compute LLR pairs");
  }
  if (calibrated && (!models.affine_llr_asv || !models.affine_llr_cm)) {
    throw DomainError("LLR-stream calibrations required for this system");
  }
  std::vector<LlrPair> out;
  out.reserve(trials.size());
  for (const TrialScore &t : trials) {
    LlrPair llrs = backend_llrs(*models.backend, {t.s_asv, t.s_cm});
    if (calibrated) {
      llrs.llr_asv = apply_affine(*models.affine_llr_asv, llrs.llr_asv);
      llrs.llr_cm = apply_affine(*models.affine_llr_cm, llrs.llr_cm);
    }
    out.push_back(llrs);
  }
  return out;
}

SystemScores compute_system_scores(std::span<const TrialScore> trials,
                                   SystemId system, const FittedModels &models,
                                   std::optional<double> rho) {
  if (system_needs_rho(system) && !rho) {
    throw DomainError("rho required for the non-linear fusion systems");
  }
  SystemScores out;
  out.fused.reserve(trials.size());
  out.streams.reserve(trials.size());

  switch (system) {
    case SystemId::kB1:
      for (const TrialScore &t : trials) {
        const ScoreVector s{t.s_asv, t.s_cm};
        out.fused.push_back(fuse_sum(s));
        out.streams.push_back(s);
      }
      break;
    case SystemId::kB1c: {
      if (!models.affine_asv || !models.affine_cm) {
        throw DomainError("score calibrations required for system b1c");
      }
      for (const TrialScore &t : trials) {
        const ScoreVector s{apply_affine(*models.affine_asv, t.s_asv),
                            apply_affine(*models.affine_cm, t.s_cm)};
        out.fused.push_back(fuse_sum(s));
        out.streams.push_back(s);
      }
      break;
    }
    case SystemId::kL2:
    case SystemId::kL2c:
    case SystemId::kL3:
    case SystemId::kL3c: {
      const bool calibrated = system_needs_llr_calibration(system);
      const std::vector<LlrPair> llrs =
          backend_llr_pairs(trials, models, calibrated);
      const bool nonlinear = rule_for(system) == FusionKind::kLlrNonlinear;
      for (const LlrPair &l : llrs) {
        out.fused.push_back(nonlinear ? fuse_nonlinear(l, *rho)
                                      : fuse_llr_sum(l));
        out.streams.push_back({l.llr_asv, l.llr_cm});
      }
      break;
    }
    case SystemId::kB1v2:
      for (const TrialScore &t : trials) {
        const ScoreVector s{t.s_asv, t.s_cm};
        out.fused.push_back(fuse_sigmoid_sum(s));
        out.streams.push_back({t.s_asv, sigmoid(t.s_cm)});
      }
      break;
    case SystemId::kPost:
      for (const TrialScore &t : trials) {
        const ScoreVector s{t.s_asv, t.s_cm};
        out.fused.push_back(fuse_sigmoid_product(s));
        out.streams.push_back({sigmoid(t.s_asv), sigmoid(t.s_cm)});
      }
      break;
  }
  return out;
}

MetricsReport evaluate_system(std::span<const TrialScore> trials,
                              SystemId system, const FittedModels &models,
                              std::optional<double> rho) {
  for (const TrialScore &t : trials) {
    if (!t.label) throw MetricError("evaluation needs labeled trials");
  }
  const SystemScores scores = compute_system_scores(trials, system, models, rho);

  std::vector<double> fused_tar;
  std::vector<double> fused_neg;
  for (std::size_t i = 0; i < trials.size(); ++i) {
    if (*trials[i].label == ClassLabel::kTarBf) {
      fused_tar.push_back(scores.fused[i]);
    } else {
      fused_neg.push_back(scores.fused[i]);
    }
  }
  if (fused_tar.empty() || fused_neg.empty()) {
    throw MetricError("evaluation needs target and non-target trials");
  }

  MetricsReport report;
  const EerResult eer = compute_eer(fused_tar, fused_neg);
  report.sasv_eer = eer.eer;
  report.eer_threshold = eer.threshold;
  report.cllr = compute_cllr(fused_tar, fused_neg);
  report.cllr_min = compute_cllr_min(fused_tar, fused_neg);
  double calib = report.cllr - report.cllr_min;
  if (calib < 0.0 && calib >= -1e-12) calib = 0.0;
  report.cllr_calib = calib;

  std::vector<TrialScore> stream_trials(trials.begin(), trials.end());
  for (std::size_t i = 0; i < stream_trials.size(); ++i) {
    stream_trials[i].s_asv = scores.streams[i].s_asv;
    stream_trials[i].s_cm = scores.streams[i].s_cm;
  }
  report.t_eer = compute_t_eer(stream_trials);
  return report;
}

}  // namespace sasvkit
