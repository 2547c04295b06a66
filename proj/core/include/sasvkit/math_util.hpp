// sasvkit/math_util.hpp

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

#ifndef SASVKIT_MATH_UTIL_HPP_
#define SASVKIT_MATH_UTIL_HPP_

#include <algorithm>
#include <cmath>

namespace sasvkit {

inline constexpr double kLn2 = 0.6931471805599453;

inline double inv_sqrt2() {
  static const double v = 1.0 / std::sqrt(2.0);
  return v;
}

inline double inv_sqrt6() {
  static const double v = 1.0 / std::sqrt(6.0);
  return v;
}

// Overflow-free logistic sigmoid.
inline double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

// log(1 + e^x); exact limits at +-inf.
inline double softplus(double x) {
  if (x > 0.0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

// log(e^a + e^b) with max shift; tolerates -inf arguments.
inline double logsumexp2(double a, double b) {
  const double m = std::max(a, b);
  if (std::isinf(m) && m < 0.0) return m;
  return m + std::log1p(std::exp(std::min(a, b) - m));
}

}  // namespace sasvkit

#endif  // SASVKIT_MATH_UTIL_HPP_
