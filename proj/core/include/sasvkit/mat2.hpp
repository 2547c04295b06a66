// sasvkit/mat2.hpp

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

#ifndef SASVKIT_MAT2_HPP_
#define SASVKIT_MAT2_HPP_

#include <cmath>

namespace sasvkit {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }

// Row-major 2x2 matrix.
struct Mat2 {
  double m00 = 0.0, m01 = 0.0;
  double m10 = 0.0, m11 = 0.0;
};

inline double det(const Mat2 &m) { return m.m00 * m.m11 - m.m01 * m.m10; }

inline double trace(const Mat2 &m) { return m.m00 + m.m11; }

inline bool is_symmetric(const Mat2 &m, double tol) {
  return std::abs(m.m01 - m.m10) <= tol;
}

// Eigenvalues of a symmetric 2x2 matrix, closed form.
inline double min_eigenvalue_sym(const Mat2 &m) {
  const double t = 0.5 * trace(m);
  const double d = det(m);
  const double disc = std::sqrt(std::max(t * t - d, 0.0));
  return t - disc;
}

inline double max_eigenvalue_sym(const Mat2 &m) {
  const double t = 0.5 * trace(m);
  const double d = det(m);
  const double disc = std::sqrt(std::max(t * t - d, 0.0));
  return t + disc;
}

// x^T M^{-1} x for symmetric positive-definite M.
inline double quad_form_inv(const Mat2 &m, Vec2 v) {
  const double d = det(m);
  return (m.m11 * v.x * v.x - (m.m01 + m.m10) * v.x * v.y +
          m.m00 * v.y * v.y) /
         d;
}

// Lower Cholesky factor L with M = L L^T; caller must ensure M is SPD.
struct Chol2 {
  double l00 = 0.0, l10 = 0.0, l11 = 0.0;
};

inline Chol2 cholesky_lower(const Mat2 &m) {
  Chol2 c;
  c.l00 = std::sqrt(m.m00);
  c.l10 = m.m10 / c.l00;
  c.l11 = std::sqrt(m.m11 - c.l10 * c.l10);
  return c;
}

inline Vec2 apply_chol(const Chol2 &c, Vec2 z) {
  return {c.l00 * z.x, c.l10 * z.x + c.l11 * z.y};
}

}  // namespace sasvkit

#endif  // SASVKIT_MAT2_HPP_
