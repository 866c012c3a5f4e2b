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
#include <optional>
#include <utility>

namespace casteljau {

// Coefficients (t, x, y, z) of t + xi + yj + zk.
template <class S>
struct Quat {
  S t = S(0), x = S(0), y = S(0), z = S(0);

  S norm() const { return t * t + x * x + y * y + z * z; }
  std::array<S, 4> vec() const { return {t, x, y, z}; }
  static Quat from(const std::array<S, 4>& v) { return {v[0], v[1], v[2], v[3]}; }
  friend bool operator==(const Quat& a, const Quat& b) {
    return a.t == b.t && a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

// Columns q, qi, qj, qk.
template <class S>
Matrix<S> quat_matrix(const Quat<S>& q) {
  const auto& [t, x, y, z] = q;
  return {{t, -x, -y, -z}, {x, t, -z, y}, {y, z, t, -x}, {z, -y, x, t}};
}

// Rows q, iq, jq, kq.
template <class S>
Matrix<S> anti_matrix(const Quat<S>& q) {
  const auto& [t, x, y, z] = q;
  return {{t, x, y, z}, {-x, t, -z, y}, {-y, z, t, -x}, {-z, -y, x, t}};
}

// Transpose of the quaternion matrix, i.e. the conjugate. Not the anti-quaternion.
template <class S>
Matrix<S> conjugate_matrix(const Quat<S>& q) {
  return quat_matrix(q).transpose();
}

template <class S>
Matrix<S> flip_matrix() {
  Matrix<S> v = Matrix<S>::identity(4);
  v(0, 0) = S(-1);
  return v;
}

template <class S>
Matrix<S> unit_i() { return quat_matrix(Quat<S>{S(0), S(1), S(0), S(0)}); }
template <class S>
Matrix<S> unit_j() { return quat_matrix(Quat<S>{S(0), S(0), S(1), S(0)}); }
template <class S>
Matrix<S> unit_k() { return quat_matrix(Quat<S>{S(0), S(0), S(0), S(1)}); }

// Reads (t,x,y,z) back from a matrix with the quaternion sign pattern.
template <class S>
std::optional<Quat<S>> as_quat(const Matrix<S>& m) {
  if (m.rows() != 4 || m.cols() != 4) return std::nullopt;
  Quat<S> q{m(0, 0), m(1, 0), m(2, 0), m(3, 0)};
  if (quat_matrix(q) != m) return std::nullopt;
  return q;
}

template <class S>
std::optional<Quat<S>> as_anti(const Matrix<S>& m) {
  if (m.rows() != 4 || m.cols() != 4) return std::nullopt;
  Quat<S> q{m(0, 0), m(0, 1), m(0, 2), m(0, 3)};
  if (anti_matrix(q) != m) return std::nullopt;
  return q;
}

// Hamilton product via matrices: Q1 Q2 is again a quaternion matrix.
template <class S>
Quat<S> mul_qq(const Quat<S>& a, const Quat<S>& b) {
  const auto p = quat_matrix(a) * quat_matrix(b);
  return Quat<S>{p(0, 0), p(1, 0), p(2, 0), p(3, 0)};
}

// Q1* Q2* is again an anti-quaternion matrix.
template <class S>
Quat<S> mul_aa(const Quat<S>& a, const Quat<S>& b) {
  const auto p = anti_matrix(a) * anti_matrix(b);
  return Quat<S>{p(0, 0), p(0, 1), p(0, 2), p(0, 3)};
}

// Q1* Q2, which equals Q2 Q1*.
template <class S>
Matrix<S> mul_qa(const Quat<S>& anti_factor, const Quat<S>& quat_factor) {
  return anti_matrix(anti_factor) * quat_matrix(quat_factor);
}

// The K, L, M, N entries of Q1* Q2* and the k, l, m, n split.
template <class S>
struct KLMN {
  S K, L, M, N;
  S k, l, m, n;
};

template <class S>
KLMN<S> klmn(const Quat<S>& q1, const Quat<S>& q2) {
  const auto& [d, a, b, c] = q1;
  const auto& [t, x, y, z] = q2;
  KLMN<S> r;
  r.K = d * t - a * x - b * y - c * z;
  r.L = a * t + d * x - c * y + b * z;
  r.M = b * t + c * x + d * y - a * z;
  r.N = c * t - b * x + a * y + d * z;
  const S four = S(4);
  r.k = (d + a + b + c) * (t + x + y + z) / four;
  r.l = (d + a - b - c) * (t + x - y - z) / four;
  r.m = (d - a + b - c) * (t - x + y - z) / four;
  r.n = (d - a - b + c) * (t - x - y + z) / four;
  return r;
}

// R = Q Q* / n for q = (d, a, b, c); axis (a, b, c).
template <class S>
Matrix<S> rotation(const Quat<S>& q) {
  const S n = q.norm();
  if (ScalarTraits<S>::is_zero(n)) throw DomainError("rotation: zero quaternion");
  Matrix<S> r = quat_matrix(q) * anti_matrix(q);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = r(i, j) / n;
  return r;
}

template <class S>
std::array<S, 3> rotate(const Quat<S>& q, const std::array<S, 3>& v) {
  const auto w = rotation(q).apply({S(0), v[0], v[1], v[2]});
  return {w[1], w[2], w[3]};
}

// Tetragonal transformation without its leading factor 1/2.
template <class S>
Matrix<S> tetragonal_unscaled(const Matrix<S>& A) {
  if (A.rows() != 4 || A.cols() != 4) throw DomainError("tetragonal: need a 4x4 matrix");
  auto a = [&](int i, int j) { return A(i, j); };
  return {{a(0, 0) + a(1, 1) + a(2, 2) + a(3, 3), a(0, 1) - a(1, 0) - a(2, 3) + a(3, 2),
           a(0, 2) + a(1, 3) - a(2, 0) - a(3, 1), a(0, 3) - a(1, 2) + a(2, 1) - a(3, 0)},
          {-a(0, 1) + a(1, 0) - a(2, 3) + a(3, 2), a(0, 0) + a(1, 1) - a(2, 2) - a(3, 3),
           -a(0, 3) + a(1, 2) + a(2, 1) - a(3, 0), a(0, 2) + a(1, 3) + a(2, 0) + a(3, 1)},
          {-a(0, 2) + a(1, 3) + a(2, 0) - a(3, 1), a(0, 3) + a(1, 2) + a(2, 1) + a(3, 0),
           a(0, 0) - a(1, 1) + a(2, 2) - a(3, 3), -a(0, 1) - a(1, 0) + a(2, 3) + a(3, 2)},
          {-a(0, 3) - a(1, 2) + a(2, 1) + a(3, 0), -a(0, 2) + a(1, 3) - a(2, 0) + a(3, 1),
           a(0, 1) + a(1, 0) + a(2, 3) + a(3, 2), a(0, 0) - a(1, 1) - a(2, 2) + a(3, 3)}};
}

// T(A) with the factor 1/2, so T(Q1* Q2) = 2 q2 q1^t.
template <class S>
Matrix<S> tetragonal(const Matrix<S>& A) {
  auto t = tetragonal_unscaled(A);
  const S half = S(1) / S(2);
  return half * t;
}

namespace detail {

template <class S>
std::optional<S> exact_fourth_root(const S& v) {
  if constexpr (ScalarTraits<S>::exact) {
    if (v.sign() <= 0) return std::nullopt;
    auto root4 = [](const BigInt& n) -> std::optional<BigInt> {
      BigInt r = boost::multiprecision::sqrt(boost::multiprecision::sqrt(n));
      for (BigInt c = r; c <= r + 1; ++c)
        if (c * c * c * c == n) return c;
      return std::nullopt;
    };
    auto p = root4(v.num());
    auto q = root4(v.den());
    if (!p || !q) return std::nullopt;
    return S(*p, *q);
  } else {
    if (v <= 0) return std::nullopt;
    return std::sqrt(std::sqrt(v));
  }
}

}  // namespace detail

// Splits A = Q1* Q2 when T(A)/2 = q2 q1^t has rank one. Returns (q1, q2).
template <class S>
std::optional<std::pair<Quat<S>, Quat<S>>> decompose(const Matrix<S>& A, double tol = 1e-12) {
  const Matrix<S> B = (S(1) / S(2)) * tetragonal(A);
  std::size_t pi = 0, pj = 0;
  S best = S(0);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (ScalarTraits<S>::abs(B(i, j)) > best) {
        best = ScalarTraits<S>::abs(B(i, j));
        pi = i;
        pj = j;
      }
  if (ScalarTraits<S>::is_zero(best)) return std::nullopt;

  std::array<S, 4> q1, q2;
  for (std::size_t k = 0; k < 4; ++k) {
    q1[k] = B(pi, k) / B(pi, pj);
    q2[k] = B(k, pj);
  }
  if constexpr (ScalarTraits<S>::exact) {
    // integer-primitive q1 when possible
    BigInt l = 1, g = 0;
    for (const auto& v : q1) l = l / big_gcd(l, v.den()) * v.den();
    for (const auto& v : q1) g = big_gcd(g, (v * S(l)).num());
    const S s = S(l, g);
    for (auto& v : q1) v = v * s;
    for (auto& v : q2) v = v / s;
  }
  Quat<S> a = Quat<S>::from(q1), b = Quat<S>::from(q2);
  if (auto mu = detail::exact_fourth_root<S>(b.norm() / a.norm())) {
    for (auto& v : q1) v = v * *mu;
    for (auto& v : q2) v = v / *mu;
    a = Quat<S>::from(q1);
    b = Quat<S>::from(q2);
  }
  const auto back = mul_qa(a, b);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if constexpr (ScalarTraits<S>::exact) {
        if (back(i, j) != A(i, j)) return std::nullopt;
      } else {
        if (std::fabs(back(i, j) - A(i, j)) > tol * (1 + std::fabs(A(i, j)))) return std::nullopt;
      }
    }
  return std::make_pair(a, b);
}

}  // namespace casteljau
