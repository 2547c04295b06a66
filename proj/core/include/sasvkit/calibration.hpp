// sasvkit/calibration.hpp

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

#ifndef SASVKIT_CALIBRATION_HPP_
#define SASVKIT_CALIBRATION_HPP_

#include <span>
#include <vector>

#include "sasvkit/mat2.hpp"
#include "sasvkit/types.hpp"

namespace sasvkit {

// Affine score-to-LLR map f(s) = a*s + b. A successful fit guarantees a > 0
// so the calibrated scores keep the raw score order.
struct AffineCalibration {
  double scale_a = 1.0;
  double offset_b = 0.0;
};

// Fits (a, b) by logistic regression with class-balanced cross-entropy, so
// the learned a*s + b approximates the LLR at effective prior 0.5 (the
// training set's own prior log odds never enters the objective).
//
// Deterministic: Newton iterations with backtracking from (a, b) = (1, 0),
// stopping when the gradient infinity norm falls to 1e-8 or after 10000
// iterations. Throws FitError when either side is empty or the fitted slope
// is not positive; DomainError on non-finite scores.
AffineCalibration fit_affine_logistic(std::span<const double> positive_scores,
                                      std::span<const double> negative_scores);

// Returns a*score + b; throws DomainError on a non-finite score.
double apply_affine(const AffineCalibration &cal, double score);

// Full-covariance 2-D Gaussian over the (s_asv, s_cm) score vector.
struct Gaussian2 {
  Vec2 mean;
  Mat2 cov;
};

// Per-class score distributions for the generative back-end.
struct GaussianBackend {
  Gaussian2 spf;
  Gaussian2 nonbf;
  Gaussian2 tarbf;
};

// Throws DomainError unless every covariance is symmetric within 1e-12 and
// positive-definite.
void validate_backend(const GaussianBackend &backend);

// log N(s; mean, cov).
double gaussian_log_density(const Gaussian2 &g, Vec2 s);

// Maximum-likelihood per-class estimates: sample mean and biased (1/N)
// covariance with the full off-diagonal term. A covariance whose smallest
// eigenvalue falls below 1e-12 gets eps*I added, eps = 1e-9 * trace / 2;
// if it is still not positive-definite the fit fails. Throws FitError when
// any class has fewer than 3 labeled trials.
GaussianBackend fit_gaussian_backend(std::span<const TrialScore> trials);

// LLRs from log densities (no density underflow):
//   llr_asv = log N(s; tar.bf) - log N(s; non.bf),
//   llr_cm  = log N(s; tar.bf) - log N(s; spf).
LlrPair backend_llrs(const GaussianBackend &backend, ScoreVector s);

}  // namespace sasvkit

#endif  // SASVKIT_CALIBRATION_HPP_
