// tests/test_evaluate.cpp

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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "sasvkit/errors.hpp"
#include "sasvkit/simulation.hpp"

using namespace sasvkit;

namespace {

// Scale-mismatched world: the ASV axis carries full separation but at a
// scale 100x smaller than the CM axis; classes are score-correlated so the
// joint backend genuinely beats per-stream calibration.
SimulationSpec mismatched_world(std::uint64_t seed, std::uint64_t n) {
  SimulationSpec spec;
  const double c = 0.6 * std::sqrt(1e-4);
  spec.tarbf = {{0.03, 2.5}, {1e-4, c, c, 1.0}};
  spec.nonbf = {{-0.03, 2.0}, {1e-4, -c, -c, 1.0}};
  spec.spf = {{0.02, -2.0}, {1e-4, c, c, 1.0}};
  spec.priors = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  spec.n_trials = n;
  spec.seed = seed;
  return spec;
}

FittedModels fit_all_models(const std::vector<TrialScore> &dev) {
  FittedModels models;
  std::vector<double> asv_pos, asv_neg, cm_pos, cm_neg;
  for (const TrialScore &t : dev) {
    if (*t.label == ClassLabel::kTarBf) asv_pos.push_back(t.s_asv);
    if (*t.label == ClassLabel::kNonBf) asv_neg.push_back(t.s_asv);
    if (*t.label == ClassLabel::kSpf) {
      cm_neg.push_back(t.s_cm);
    } else {
      cm_pos.push_back(t.s_cm);
    }
  }
  models.affine_asv = fit_affine_logistic(asv_pos, asv_neg);
  models.affine_cm = fit_affine_logistic(cm_pos, cm_neg);
  models.backend = fit_gaussian_backend(dev);

  const std::vector<LlrPair> llrs = backend_llr_pairs(dev, models, false);
  std::vector<double> la_pos, la_neg, lc_pos, lc_neg;
  for (std::size_t i = 0; i < dev.size(); ++i) {
    if (*dev[i].label == ClassLabel::kTarBf) la_pos.push_back(llrs[i].llr_asv);
    if (*dev[i].label == ClassLabel::kNonBf) la_neg.push_back(llrs[i].llr_asv);
    if (*dev[i].label == ClassLabel::kSpf) {
      lc_neg.push_back(llrs[i].llr_cm);
    } else {
      lc_pos.push_back(llrs[i].llr_cm);
    }
  }
  models.affine_llr_asv = fit_affine_logistic(la_pos, la_neg);
  models.affine_llr_cm = fit_affine_logistic(lc_pos, lc_neg);
  return models;
}

}  // namespace

TEST_CASE("system table round trips and requirement flags") {
  for (SystemId id : {SystemId::kB1, SystemId::kB1c, SystemId::kL2,
                      SystemId::kL2c, SystemId::kL3, SystemId::kL3c,
                      SystemId::kB1v2, SystemId::kPost}) {
    CHECK(system_from_string(to_string(id)) == id);
  }
  CHECK(!system_from_string("l5").has_value());
  CHECK(rule_for(SystemId::kL3c) == FusionKind::kLlrNonlinear);
  CHECK(rule_for(SystemId::kPost) == FusionKind::kSigmoidProduct);
  CHECK(system_needs_backend(SystemId::kL2));
  CHECK(!system_needs_backend(SystemId::kB1v2));
  CHECK(system_needs_rho(SystemId::kL3));
  CHECK(!system_needs_rho(SystemId::kL2c));
}

TEST_CASE("missing models are reported before any metric runs") {
  std::vector<TrialScore> trials{{"a", 0.1, 0.2, ClassLabel::kTarBf}};
  FittedModels empty;
  CHECK_THROWS_AS(compute_system_scores(trials, SystemId::kB1c, empty, {}),
                  DomainError);
  CHECK_THROWS_AS(compute_system_scores(trials, SystemId::kL2, empty, {}),
                  DomainError);
  CHECK_THROWS_AS(compute_system_scores(trials, SystemId::kL3, empty, 0.5),
                  DomainError);
  FittedModels backend_only;
  backend_only.backend = GaussianBackend{
      {{1.0, -2.0}, {1.0, 0.0, 0.0, 1.0}},
      {{-2.0, 1.0}, {1.0, 0.0, 0.0, 1.0}},
      {{1.5, 1.5}, {1.0, 0.0, 0.0, 1.0}}};
  CHECK_THROWS_AS(compute_system_scores(trials, SystemId::kL3, backend_only,
                                        std::nullopt),
                  DomainError);
  CHECK_NOTHROW(compute_system_scores(trials, SystemId::kL3, backend_only,
                                      0.5));
}

TEST_CASE("full report on a simulated split satisfies the invariants") {
  const SimulationSpec dev_spec = mismatched_world(101, 20000);
  SimulationSpec eval_spec = dev_spec;
  eval_spec.seed = 202;
  const std::vector<TrialScore> dev = sample_trials(dev_spec);
  const std::vector<TrialScore> eval = sample_trials(eval_spec);
  const FittedModels models = fit_all_models(dev);

  const MetricsReport report =
      evaluate_system(eval, SystemId::kL3c, models, 0.5);
  CHECK(report.sasv_eer >= 0.0);
  CHECK(report.sasv_eer <= 1.0);
  CHECK(report.cllr_min <= report.cllr + 1e-12);
  CHECK(report.cllr_calib >= 0.0);
  CHECK(std::abs(report.cllr - report.cllr_min - report.cllr_calib) <= 1e-12);
  CHECK(report.t_eer >= 0.0);
}

TEST_CASE("LLR-fusing systems share one t-EER; so do the raw-score systems") {
  const SimulationSpec dev_spec = mismatched_world(303, 15000);
  SimulationSpec eval_spec = dev_spec;
  eval_spec.seed = 404;
  const std::vector<TrialScore> dev = sample_trials(dev_spec);
  const std::vector<TrialScore> eval = sample_trials(eval_spec);
  const FittedModels models = fit_all_models(dev);

  const MetricsReport l2 = evaluate_system(eval, SystemId::kL2, models, {});
  const MetricsReport l2c = evaluate_system(eval, SystemId::kL2c, models, {});
  const MetricsReport l3 = evaluate_system(eval, SystemId::kL3, models, 0.4);
  const MetricsReport l3c = evaluate_system(eval, SystemId::kL3c, models, 0.4);
  CHECK(l2.t_eer == l2c.t_eer);
  CHECK(l2.t_eer == l3.t_eer);
  CHECK(l2.t_eer == l3c.t_eer);

  const MetricsReport b1 = evaluate_system(eval, SystemId::kB1, models, {});
  const MetricsReport b1c = evaluate_system(eval, SystemId::kB1c, models, {});
  const MetricsReport b1v2 = evaluate_system(eval, SystemId::kB1v2, models, {});
  const MetricsReport post = evaluate_system(eval, SystemId::kPost, models, {});
  CHECK(b1.t_eer == b1c.t_eer);
  CHECK(b1.t_eer == b1v2.t_eer);
  CHECK(b1.t_eer == post.t_eer);
}

TEST_CASE("calibration rescues the scale-mismatched world") {
  const SimulationSpec dev_spec = mismatched_world(505, 20000);
  SimulationSpec eval_spec = dev_spec;
  eval_spec.seed = 606;
  const std::vector<TrialScore> dev = sample_trials(dev_spec);
  const std::vector<TrialScore> eval = sample_trials(eval_spec);
  const FittedModels models = fit_all_models(dev);

  const MetricsReport b1 = evaluate_system(eval, SystemId::kB1, models, {});
  const MetricsReport b1c = evaluate_system(eval, SystemId::kB1c, models, {});
  CHECK(b1c.sasv_eer < b1.sasv_eer);
}

TEST_CASE("degenerate single-class input raises MetricError") {
  std::vector<TrialScore> trials;
  for (int i = 0; i < 5; ++i) {
    trials.push_back({"t", 1.0 * i, 2.0 * i, ClassLabel::kTarBf});
  }
  FittedModels models;
  CHECK_THROWS_AS(evaluate_system(trials, SystemId::kB1, models, {}),
                  MetricError);
  std::vector<TrialScore> unlabeled{{"u", 0.0, 0.0, std::nullopt}};
  CHECK_THROWS_AS(evaluate_system(unlabeled, SystemId::kB1, models, {}),
                  MetricError);
}
