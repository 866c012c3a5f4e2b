// Copyright 2026 The casteljau Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <casteljau/exactnum.hpp>
#include <casteljau/matrix.hpp>

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace casteljau {

// Roots of f(x) = -a0 + a1 x + a2 x^2 + ... by the nested ladder
// x_i = a0 / (a1 + x_{i-1} (a2 + x_{i-2} (a3 + ... + x_1 a_i))).
template <class S>
std::vector<S> root_ladder(const std::vector<S>& a, std::size_t order) {
  if (a.size() < 2 || a[1] == S(0)) throw DomainError("root_ladder: a1 must be nonzero");
  if (order < 1) throw DomainError("root_ladder: order must be >= 1");
  auto coef = [&](std::size_t k) { return k < a.size() ? a[k] : S(0); };
  std::vector<S> x;
  for (std::size_t i = 1; i <= order; ++i) {
    // Horner from the innermost term x_1 a_i outward.
    S inner = S(0);
    for (std::size_t k = i; k >= 2; --k) inner = x[i - k] * (coef(k) + inner);
    S den = coef(1) + inner;
    if (den == S(0)) throw DomainError("root_ladder: zero denominator");
    x.push_back(coef(0) / den);
  }
  return x;
}

template <class S>
using Vec3 = std::array<S, 3>;

template <class S>
Vec3<S> cross(const Vec3<S>& a, const Vec3<S>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class S>
S dot(const Vec3<S>& a, const Vec3<S>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class S>
bool is_zero_vec(const Vec3<S>& v) {
  return v[0] == S(0) && v[1] == S(0) && v[2] == S(0);
}

// a x^2 + 2 f x y + b y^2 + 2 e x + 2 d y + c as a symmetric 3x3 matrix.
template <class S>
Matrix<S> conic(const S& a, const S& b, const S& c, const S& d, const S& e, const S& f) {
  return Matrix<S>{{a, f, e}, {f, b, d}, {e, d, c}};
}

template <class S>
void check_conic(const Matrix<S>& F) {
  if (F.rows() != 3 || F.cols() != 3) throw DomainError("conic matrix must be 3x3");
  if (!F.is_symmetric()) throw DomainError("conic matrix must be symmetric");
  bool any = false;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) any = any || F(i, j) != S(0);
  if (!any) throw DomainError("conic matrix is zero");
}

template <class S>
Vec3<S> mul(const Matrix<S>& F, const Vec3<S>& v) {
  Vec3<S> r{S(0), S(0), S(0)};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r[i] += F(i, j) * v[j];
  return r;
}

template <class S>
S quadratic_form(const Matrix<S>& F, const Vec3<S>& v) {
  return dot(v, mul(F, v));
}

// Scale so the largest-magnitude coordinate becomes +1.
template <class S>
Vec3<S> normalize_max(const Vec3<S>& v) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (ScalarTraits<S>::abs(v[i]) > ScalarTraits<S>::abs(v[k])) k = i;
  if (v[k] == S(0)) throw DomainError("cannot normalize the zero vector");
  const S s = v[k];
  return {v[0] / s, v[1] / s, v[2] / s};
}

template <class S>
Vec3<S> polar_line(const Matrix<S>& F, const Vec3<S>& M) {
  check_conic(F);
  Vec3<S> l = mul(F, M);
  if (is_zero_vec(l)) throw DomainError("polar_line: point lies in the kernel of F");
  return l;
}

template <class S>
struct IntersectStep {
  Vec3<S> P;  // conjugate point FM ^ GM
  Vec3<S> I;  // improved estimate
};

template <class S>
IntersectStep<S> intersect_step(const Matrix<S>& F, const Matrix<S>& G, const Vec3<S>& M) {
  check_conic(F);
  check_conic(G);
  const Vec3<S> FM = mul(F, M), GM = mul(G, M);
  Vec3<S> P = cross(FM, GM);
  if (is_zero_vec(P)) throw DomainError("intersect_step: polars of M coincide");
  const Vec3<S> FP = mul(F, P), GP = mul(G, P);
  const Vec3<S> u = cross(FM, GP), v = cross(FP, GM);
  if (is_zero_vec(u) && is_zero_vec(v)) throw DomainError("intersect_step: degenerate cross products");
  Vec3<S> I;
  if (is_zero_vec(u)) {
    I = normalize_max(v);
  } else if (is_zero_vec(v)) {
    I = normalize_max(u);
  } else {
    Vec3<S> nu = normalize_max(u), nv = normalize_max(v);
    I = {nu[0] + nv[0], nu[1] + nv[1], nu[2] + nv[2]};
  }
  if constexpr (!ScalarTraits<S>::exact) {
    P = normalize_max(P);
    I = normalize_max(I);
  }
  return {P, I};
}

enum class IterateStatus { converged, not_converged, degenerate };

template <class S>
struct IterateResult {
  std::vector<Vec3<S>> points;  // M, I, Omega, ... two entries per cycle after M
  IterateStatus status = IterateStatus::not_converged;
};

// Residual of a homogeneous point on a conic, scale-free.
inline double conic_residual(const Matrix<double>& F, const Vec3<double>& M) {
  Vec3<double> n = normalize_max(M);
  double scale = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) scale = std::max(scale, std::fabs(F(i, j)));
  return std::fabs(quadratic_form(F, n)) / scale;
}

inline IterateResult<double> intersect_iterate(const Matrix<double>& F, const Matrix<double>& G,
                                               const Vec3<double>& M0, std::size_t cycles,
                                               double tol = 1e-13) {
  IterateResult<double> res;
  res.points.push_back(normalize_max(M0));
  try {
    for (std::size_t k = 0; k < cycles; ++k)
      for (int half = 0; half < 2; ++half)
        res.points.push_back(intersect_step(F, G, res.points.back()).I);
  } catch (const DomainError&) {
    const auto& last = res.points.back();
    res.status = conic_residual(F, last) < tol && conic_residual(G, last) < tol
                     ? IterateStatus::converged
                     : IterateStatus::degenerate;
    return res;
  }
  const auto& last = res.points.back();
  for (double v : last)
    if (!std::isfinite(v)) {
      res.status = IterateStatus::degenerate;
      return res;
    }
  res.status = conic_residual(F, last) < tol && conic_residual(G, last) < tol
                   ? IterateStatus::converged
                   : IterateStatus::not_converged;
  return res;
}

// Sequential ladder passes on three quadrics f, g, h (4x4 symmetric,
// homogeneous (x, y, z, 1)); f updates x, g updates y, h updates z.
inline std::vector<std::array<double, 3>> quadric_ladder(
    const std::array<Matrix<double>, 3>& Q, std::array<double, 3> X, std::size_t sweeps,
    std::size_t order = 2) {
  for (const auto& q : Q)
    if (q.rows() != 4 || q.cols() != 4 || !q.is_symmetric())
      throw DomainError("quadric_ladder: quadrics must be symmetric 4x4");
  std::vector<std::array<double, 3>> trace{X};
  for (std::size_t s = 0; s < sweeps; ++s) {
    for (std::size_t v = 0; v < 3; ++v) {
      const auto& q = Q[v];
      std::vector<double> h{X[0], X[1], X[2], 1.0};
      std::vector<double> qh = q.apply(h);
      double fx = 0;
      for (std::size_t i = 0; i < 4; ++i) fx += h[i] * qh[i];
      std::vector<double> a{-fx, 2 * qh[v], q(v, v)};
      if (a[1] == 0) throw DomainError("quadric_ladder: vanishing partial derivative");
      X[v] += root_ladder(a, order).back();
    }
    trace.push_back(X);
  }
  return trace;
}

}  // namespace casteljau
