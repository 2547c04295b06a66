// core/src/calibration.cpp

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

#include "sasvkit/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "sasvkit/errors.hpp"
#include "sasvkit/math_util.hpp"

namespace sasvkit {

namespace {

constexpr double kGradTol = 1e-8;
constexpr int kMaxIter = 10000;
constexpr double kTwoPiLog = 1.8378770664093453;  // log(2*pi)

void check_finite_scores(std::span<const double> scores) {
  for (double s : scores) {
    if (!std::isfinite(s)) throw DomainError("non-finite score");
  }
}

// Class-balanced negative log-likelihood of sigma(a*s + b) and its
// derivatives. With weights 1/(2 Npos) and 1/(2 Nneg) the effective prior is
// 0.5, so the fitted a*s + b is an LLR rather than a posterior logit.
struct LogisticObjective {
  std::span<const double> pos;
  std::span<const double> neg;
  double wp = 0.0;
  double wn = 0.0;

  double loss(double a, double b) const {
    double l = 0.0;
    for (double s : pos) l += wp * softplus(-(a * s + b));
    for (double s : neg) l += wn * softplus(a * s + b);
    return l;
  }

  void grad_hess(double a, double b, double g[2], double h[3]) const {
    g[0] = g[1] = h[0] = h[1] = h[2] = 0.0;
    for (double s : pos) {
      const double p = sigmoid(-(a * s + b));  // residual toward label 1
      const double lam = p * (1.0 - p);
      g[0] += wp * (-s) * p;
      g[1] += wp * (-1.0) * p;
      h[0] += wp * lam * s * s;
      h[1] += wp * lam * s;
      h[2] += wp * lam;
    }
    for (double s : neg) {
      const double p = sigmoid(a * s + b);
      const double lam = p * (1.0 - p);
      g[0] += wn * s * p;
      g[1] += wn * p;
      h[0] += wn * lam * s * s;
      h[1] += wn * lam * s;
      h[2] += wn * lam;
    }
  }
};

}  // namespace

AffineCalibration fit_affine_logistic(
    std::span<const double> positive_scores,
    std::span<const double> negative_scores) {
  if (positive_scores.empty() || negative_scores.empty()) {
    throw FitError("logistic calibration needs both classes");
  }
  check_finite_scores(positive_scores);
  check_finite_scores(negative_scores);

  LogisticObjective obj{positive_scores, negative_scores,
                        0.5 / static_cast<double>(positive_scores.size()),
                        0.5 / static_cast<double>(negative_scores.size())};

  double a = 1.0;
  double b = 0.0;
  double g[2];
  double h[3];
  for (int iter = 0; iter < kMaxIter; ++iter) {
    obj.grad_hess(a, b, g, h);
    if (std::max(std::abs(g[0]), std::abs(g[1])) <= kGradTol) break;
    // Newton step on the 2x2 Hessian [h0 h1; h1 h2], damped if near-singular.
    double d = h[0] * h[2] - h[1] * h[1];
    const double ridge = 1e-12 * (h[0] + h[2]);
    if (d <= ridge * ridge) {
      h[0] += ridge;
      h[2] += ridge;
      d = h[0] * h[2] - h[1] * h[1];
    }
    const double da = -(h[2] * g[0] - h[1] * g[1]) / d;
    const double db = -(-h[1] * g[0] + h[0] * g[1]) / d;
    const double l0 = obj.loss(a, b);
    double step = 1.0;
    while (step > 1e-16 && obj.loss(a + step * da, b + step * db) > l0) {
      step *= 0.5;
    }
    a += step * da;
    b += step * db;
  }

  if (!(a > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw FitError("logistic calibration produced a non-positive slope");
  }
  return {a, b};
}

double apply_affine(const AffineCalibration &cal, double score) {
  if (!std::isfinite(score)) throw DomainError("non-finite score");
  return cal.scale_a * score + cal.offset_b;
}

void validate_backend(const GaussianBackend &backend) {
  const Gaussian2 *classes[3] = {&backend.spf, &backend.nonbf, &backend.tarbf};
  for (const Gaussian2 *g : classes) {
    if (!std::isfinite(g->mean.x) || !std::isfinite(g->mean.y)) {
      throw DomainError("backend mean must be finite");
    }
    if (!is_symmetric(g->cov, 1e-12)) {
      throw DomainError("backend covariance must be symmetric within 1e-12");
    }
    if (!(min_eigenvalue_sym(g->cov) > 0.0)) {
      throw DomainError("backend covariance must be positive-definite");
    }
  }
}

double gaussian_log_density(const Gaussian2 &g, Vec2 s) {
  const Vec2 d = s - g.mean;
  return -kTwoPiLog - 0.5 * std::log(det(g.cov)) - 0.5 * quad_form_inv(g.cov, d);
}

GaussianBackend fit_gaussian_backend(std::span<const TrialScore> trials) {
  std::size_t count[3] = {0, 0, 0};
  double sum_a[3] = {0, 0, 0};
  double sum_c[3] = {0, 0, 0};
  for (const TrialScore &t : trials) {
    if (!t.label) continue;
    if (!std::isfinite(t.s_asv) || !std::isfinite(t.s_cm)) {
      throw DomainError("non-finite score in backend training data");
    }
    const int k = static_cast<int>(*t.label);
    ++count[k];
    sum_a[k] += t.s_asv;
    sum_c[k] += t.s_cm;
  }
  for (int k = 0; k < 3; ++k) {
    if (count[k] < 3) {
      throw FitError(std::string("backend fit needs at least 3 trials of "
                                 "class ") +
                     to_string(static_cast<ClassLabel>(k)));
    }
  }

  Gaussian2 cls[3];
  for (int k = 0; k < 3; ++k) {
    cls[k].mean = {sum_a[k] / static_cast<double>(count[k]),
                   sum_c[k] / static_cast<double>(count[k])};
  }
  double saa[3] = {0, 0, 0};
  double sac[3] = {0, 0, 0};
  double scc[3] = {0, 0, 0};
  for (const TrialScore &t : trials) {
    if (!t.label) continue;
    const int k = static_cast<int>(*t.label);
    const double da = t.s_asv - cls[k].mean.x;
    const double dc = t.s_cm - cls[k].mean.y;
    saa[k] += da * da;
    sac[k] += da * dc;
    scc[k] += dc * dc;
  }
  for (int k = 0; k < 3; ++k) {
    const double n = static_cast<double>(count[k]);
    Mat2 cov{saa[k] / n, sac[k] / n, sac[k] / n, scc[k] / n};
    if (min_eigenvalue_sym(cov) < 1e-12) {
      const double eps = 1e-9 * trace(cov) / 2.0;
      cov.m00 += eps;
      cov.m11 += eps;
    }
    if (!(min_eigenvalue_sym(cov) > 0.0)) {
      throw FitError(std::string("degenerate covariance for class ") +
                     to_string(static_cast<ClassLabel>(k)));
    }
    cls[k].cov = cov;
  }
  return {cls[0], cls[1], cls[2]};
}

LlrPair backend_llrs(const GaussianBackend &backend, ScoreVector s) {
  if (!std::isfinite(s.s_asv) || !std::isfinite(s.s_cm)) {
    throw DomainError("non-finite score vector");
  }
  const Vec2 v{s.s_asv, s.s_cm};
  const double log_tar = gaussian_log_density(backend.tarbf, v);
  LlrPair out;
  out.llr_asv = log_tar - gaussian_log_density(backend.nonbf, v);
  out.llr_cm = log_tar - gaussian_log_density(backend.spf, v);
  return out;
}

}  // namespace sasvkit
