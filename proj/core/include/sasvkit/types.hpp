// sasvkit/types.hpp

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

#ifndef SASVKIT_TYPES_HPP_
#define SASVKIT_TYPES_HPP_

#include <optional>
#include <string>
#include <string_view>

namespace sasvkit {

// The three trial classes, in the fixed order (spf, non.bf, tar.bf) used
// everywhere in this library (vector indices, serialization, tie-breaks).
enum class ClassLabel { kSpf = 0, kNonBf = 1, kTarBf = 2 };

inline const char *to_string(ClassLabel label) {
  switch (label) {
    case ClassLabel::kSpf: return "spf";
    case ClassLabel::kNonBf: return "non.bf";
    case ClassLabel::kTarBf: return "tar.bf";
  }
  return "?";
}

inline std::optional<ClassLabel> label_from_string(std::string_view s) {
  if (s == "spf") return ClassLabel::kSpf;
  if (s == "non.bf") return ClassLabel::kNonBf;
  if (s == "tar.bf") return ClassLabel::kTarBf;
  return std::nullopt;
}

// Raw or calibrated (ASV, CM) score pair of one trial.
struct ScoreVector {
  double s_asv = 0.0;
  double s_cm = 0.0;
};

// The two log-likelihood ratios (natural log) the fusion rules consume:
// llr_asv = LLR(tar.bf vs non.bf), llr_cm = LLR(tar.bf vs spf).
struct LlrPair {
  double llr_asv = 0.0;
  double llr_cm = 0.0;
};

// One evaluation trial; label is absent for unlabeled ("-") rows.
struct TrialScore {
  std::string trial_id;
  double s_asv = 0.0;
  double s_cm = 0.0;
  std::optional<ClassLabel> label;
};

}  // namespace sasvkit

#endif  // SASVKIT_TYPES_HPP_
