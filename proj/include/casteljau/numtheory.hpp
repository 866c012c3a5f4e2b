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

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <utility>

namespace casteljau {

inline BigInt cube(const BigInt& v) { return v * v * v; }

// L1^3 - L2^3 = M^3 - 1 = R1^3 + R2^3
struct CubeIdentity {
  BigInt L1, L2, M, R1, R2;

  bool holds() const {
    const BigInt mid = cube(M) - 1;
    return cube(L1) - cube(L2) == mid && cube(R1) + cube(R2) == mid;
  }
  // L1^3 = R1^3 + R2^3 + L2^3
  bool three_cubes() const { return cube(L1) == cube(R1) + cube(R2) + cube(L2); }
  std::string str() const {
    std::ostringstream os;
    os << L1 << "^3 - " << L2 << "^3 = " << M << "^3 - 1 = " << R1 << "^3 + " << R2 << "^3";
    return os.str();
  }
};

inline CubeIdentity meneard(unsigned n) {
  if (n < 1) throw DomainError("meneard: n must be >= 1");
  const BigInt a = big_pow(BigInt(3), 4 * n - 2);
  const BigInt b = big_pow(BigInt(3), n);
  const BigInt c = big_pow(BigInt(3), 3 * n - 1);
  CubeIdentity id{a + b, c + 1, a, a - b, c - 1};
  if (!id.holds()) throw DomainError("meneard: identity failed");
  return id;
}

// (Z+Y)^3 = (Z-Y)^3 + (X+1)^3 + (X-1)^3
inline bool three_cube_check(const BigInt& X, const BigInt& Y, const BigInt& Z) {
  return cube(Z + Y) == cube(Z - Y) + cube(X + 1) + cube(X - 1);
}

// Same identity after cancelling: X^3 + 3X = Y^3 + 3YZ^2.
inline bool three_cube_reduced(const BigInt& X, const BigInt& Y, const BigInt& Z) {
  return cube(X) + 3 * X == cube(Y) + 3 * Y * Z * Z;
}

// Sparse bivariate integer polynomial in X, Y.
class BiPoly {
 public:
  BiPoly() = default;
  static BiPoly monomial(const BigInt& c, int px, int py) {
    BiPoly p;
    if (c != 0) p.t_[{px, py}] = c;
    return p;
  }
  static BiPoly X() { return monomial(1, 1, 0); }
  static BiPoly Y() { return monomial(1, 0, 1); }

  bool is_zero() const { return t_.empty(); }
  const std::map<std::pair<int, int>, BigInt>& terms() const { return t_; }

  friend BiPoly operator+(BiPoly a, const BiPoly& b) {
    for (const auto& [k, v] : b.t_) a.add(k, v);
    return a;
  }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) {
    for (const auto& [k, v] : b.t_) a.add(k, -v);
    return a;
  }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, va] : a.t_)
      for (const auto& [kb, vb] : b.t_) r.add({ka.first + kb.first, ka.second + kb.second}, va * vb);
    return r;
  }
  friend BiPoly operator*(long long s, const BiPoly& a) { return monomial(s, 0, 0) * a; }

  BigInt eval(const BigInt& x, const BigInt& y) const {
    BigInt s = 0;
    for (const auto& [k, v] : t_) s += v * big_pow(x, k.first) * big_pow(y, k.second);
    return s;
  }

 private:
  void add(std::pair<int, int> k, const BigInt& v) {
    auto it = t_.find(k);
    if (it == t_.end()) {
      if (v != 0) t_[k] = v;
      return;
    }
    it->second += v;
    if (it->second == 0) t_.erase(it);
  }
  std::map<std::pair<int, int>, BigInt> t_;
};

// aX^2 + bXY + cY^2
inline BiPoly quadratic_form(long long a, long long b, long long c) {
  const auto X = BiPoly::X(), Y = BiPoly::Y();
  return a * (X * X) + b * (X * Y) + c * (Y * Y);
}

inline BiPoly cube(const BiPoly& p) { return p * p * p; }

struct RamanujanForms {
  // first: three cubes summing to a cube
  std::array<BiPoly, 4> first{quadratic_form(3, 5, -5), quadratic_form(4, -4, 6),
                              quadratic_form(5, -5, -3), quadratic_form(6, -4, 4)};
  // second: two sums of two cubes
  std::array<BiPoly, 4> second{quadratic_form(1, 9, -1), quadratic_form(12, -4, 2),
                               quadratic_form(9, -7, -1), quadratic_form(10, 0, 2)};

  BiPoly first_residual() const {
    return cube(first[0]) + cube(first[1]) + cube(first[2]) - cube(first[3]);
  }
  BiPoly second_residual() const {
    return cube(second[0]) + cube(second[1]) - cube(second[2]) - cube(second[3]);
  }
};

struct RamanujanCheck {
  bool first = false;
  bool second = false;
  std::array<BigInt, 4> first_values, second_values;
};

inline RamanujanCheck ramanujan_forms(const BigInt& X, const BigInt& Y) {
  const RamanujanForms f;
  RamanujanCheck r;
  for (int i = 0; i < 4; ++i) {
    r.first_values[i] = f.first[i].eval(X, Y);
    r.second_values[i] = f.second[i].eval(X, Y);
  }
  const auto& a = r.first_values;
  const auto& b = r.second_values;
  r.first = cube(a[0]) + cube(a[1]) + cube(a[2]) == cube(a[3]);
  r.second = cube(b[0]) + cube(b[1]) == cube(b[2]) + cube(b[3]);
  return r;
}

// (X, Y, Z, T) proportional to the u, v parameterisation of X^3 + Y^3 + Z^3 = T^3.
inline std::array<BigInt, 4> euler_parametrization(const BigInt& u, const BigInt& v) {
  const BigInt u2 = u * u, v2 = v * v;
  const BigInt X = 9 * v2 * v - 3 * v2 * u + 3 * u2 * v - u2 * u + 1;
  const BigInt Y = 9 * v2 * v + 3 * v2 * u + 3 * u2 * v + u2 * u - 1;
  const BigInt Z = u2 * u2 + 6 * u2 * v2 + 9 * v2 * v2 - u - 3 * v;
  const BigInt T = u2 * u2 + 6 * u2 * v2 + 9 * v2 * v2 - u + 3 * v;
  return {X, Y, Z, T};
}

inline bool euler_check(const BigInt& u, const BigInt& v) {
  const auto [X, Y, Z, T] = euler_parametrization(u, v);
  return cube(X) + cube(Y) + cube(Z) == cube(T);
}

// The n = 1 identity halved: 6^3 - 5^3 = (9/2)^3 - (1/2)^3 = 3^3 + 4^3.
inline bool halved_meneard_gives_euler() {
  const auto id = meneard(1);
  const Rational two(2);
  auto c = [](const Rational& r) { return r * r * r; };
  const Rational l1 = Rational(id.L1) / two, l2 = Rational(id.L2) / two;
  const Rational m = Rational(id.M) / two, one = Rational(1) / two;
  const Rational r1 = Rational(id.R1) / two, r2 = Rational(id.R2) / two;
  return c(l1) - c(l2) == c(m) - c(one) && c(m) - c(one) == c(r1) + c(r2) &&
         l1 == Rational(6) && l2 == Rational(5) && r1 == Rational(3) && r2 == Rational(4);
}

}  // namespace casteljau
