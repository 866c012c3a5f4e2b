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

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace casteljau {

// Dense integer polynomial, constant term first, no trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long long> c) {
    for (auto v : c) c_.push_back(v);
    trim();
  }
  explicit IntPolynomial(std::vector<BigInt> c) : c_(std::move(c)) { trim(); }

  const std::vector<BigInt>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  const BigInt& leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
  }

  BigInt operator()(const BigInt& x) const {
    BigInt acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }
  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + Rational(c_[i]);
    return acc;
  }
  double eval(double x) const {
    double acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].convert_to<double>();
    return acc;
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return IntPolynomial(std::move(c));
  }
  IntPolynomial operator-() const {
    std::vector<BigInt> c = c_;
    for (auto& v : c) v = -v;
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(c));
  }

  IntPolynomial derivative() const {
    std::vector<BigInt> c;
    for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * static_cast<long long>(i));
    return IntPolynomial(std::move(c));
  }

  BigInt content() const {
    BigInt g = 0;
    for (const auto& v : c_) g = big_gcd(g, v);
    return g;
  }

  IntPolynomial primitive() const {
    if (is_zero()) return {};
    BigInt g = content();
    std::vector<BigInt> c = c_;
    for (auto& v : c) v /= g;
    if (c.back() < 0)
      for (auto& v : c) v = -v;
    return IntPolynomial(std::move(c));
  }

  // Plain "x" notation, highest degree first.
  std::string str(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const BigInt& a = c_[i];
      if (a == 0) continue;
      BigInt mag = a < 0 ? BigInt(-a) : a;
      if (out.empty())
        out += a < 0 ? "-" : "";
      else
        out += a < 0 ? " - " : " + ";
      if (i == 0 || mag != 1) out += mag.str();
      if (i >= 1) out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

  // Comma list, constant first.
  std::string coeff_str() const {
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) out += (i ? "," : "") + c_[i].str();
    return out.empty() ? "0" : out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

inline IntPolynomial parse_int_polynomial(const std::string& csv) {
  std::vector<BigInt> c;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t end = csv.find(',', start);
    if (end == std::string::npos) end = csv.size();
    Rational v = Rational::parse(csv.substr(start, end - start));
    if (!v.is_integer()) throw DomainError("polynomial coefficients must be integers");
    c.push_back(v.num());
    start = end + 1;
  }
  return IntPolynomial(std::move(c));
}

// Pseudo-remainder sequence gcd over Z, returned primitive.
inline IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
  a = a.primitive();
  b = b.primitive();
  while (!b.is_zero()) {
    // pseudo-division of a by b
    std::vector<BigInt> r = a.coeffs();
    const auto& bc = b.coeffs();
    const BigInt lb = bc.back();
    const int db = b.degree();
    while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
      const BigInt lr = r.back();
      const std::size_t shift = r.size() - bc.size();
      for (auto& v : r) v *= lb;
      for (std::size_t i = 0; i < bc.size(); ++i) r[shift + i] -= lr * bc[i];
      while (!r.empty() && r.back() == 0) r.pop_back();
    }
    a = std::move(b);
    b = IntPolynomial(std::move(r)).primitive();
  }
  return a;
}

inline bool is_squarefree(const IntPolynomial& p) {
  if (p.degree() <= 0) return true;
  return poly_gcd(p, p.derivative()).degree() == 0;
}

}  // namespace casteljau
