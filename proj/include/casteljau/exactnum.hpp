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

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace casteljau {

using BigInt = boost::multiprecision::cpp_int;

// Raised for any precondition violation on numeric input.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline BigInt big_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline BigInt big_pow(const BigInt& base, unsigned e) {
  BigInt r = 1, b = base;
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// Correctly scaled conversion; works for values far outside the double
// range of the numerator or denominator alone.
inline double ratio_to_double(const BigInt& num, const BigInt& den) {
  if (num == 0) return 0.0;
  bool neg = (num < 0) != (den < 0);
  BigInt n = num < 0 ? BigInt(-num) : num;
  BigInt d = den < 0 ? BigInt(-den) : den;
  long shift = static_cast<long>(boost::multiprecision::msb(n)) -
               static_cast<long>(boost::multiprecision::msb(d));
  // Aim for a 64 bit quotient.
  long up = 63 - shift;
  BigInt q = up >= 0 ? BigInt((n << up) / d) : BigInt(n / (d << -up));
  double v = std::ldexp(q.convert_to<double>(), static_cast<int>(-up));
  return neg ? -v : v;
}

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int v) : num_(v), den_(1) {}  // NOLINT implicit by design
  Rational(long v) : num_(v), den_(1) {}  // NOLINT
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT
  Rational(const BigInt& v) : num_(v), den_(1) {}  // NOLINT
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    normalize();
  }

  // Exact value of a finite double.
  static Rational from_double(double v) {
    if (!std::isfinite(v)) throw DomainError("non-finite value");
    if (v == 0.0) return Rational();
    int e = 0;
    double m = std::frexp(v, &e);
    auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
    e -= 53;
    BigInt n = mant;
    BigInt d = 1;
    if (e >= 0)
      n <<= e;
    else
      d <<= -e;
    return Rational(n, d);
  }

  // Accepts "p", "p/q", and plain decimals such as "-1.25" or "3e-2".
  static Rational parse(std::string_view s) {
    auto trim = [](std::string_view v) {
      while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front())))
        v.remove_prefix(1);
      while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back())))
        v.remove_suffix(1);
      return v;
    };
    s = trim(s);
    if (s.empty()) throw DomainError("empty rational");
    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
      BigInt n = parse_int(trim(s.substr(0, slash)));
      BigInt d = parse_int(trim(s.substr(slash + 1)));
      if (d == 0) throw DomainError("zero denominator");
      return Rational(n, d);
    }
    return parse_decimal(s);
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  double to_double() const { return ratio_to_double(num_, den_); }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }
  Rational& operator+=(const Rational& o) {
    if (den_ == o.den_) {
      num_ += o.num_;
    } else {
      num_ = num_ * o.den_ + o.num_ * den_;
      den_ *= o.den_;
    }
    normalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw DomainError("division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

  // Largest integer not above the value.
  BigInt floor() const {
    BigInt q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) q -= 1;
    return q;
  }

 private:
  static BigInt parse_int(std::string_view s) {
    if (s.empty()) throw DomainError("empty integer");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) throw DomainError("bad integer");
    BigInt v = 0;
    for (; i < s.size(); ++i) {
      char c = s[i];
      if (c < '0' || c > '9') throw DomainError("bad integer: " + std::string(s));
      v = v * 10 + (c - '0');
    }
    return neg ? BigInt(-v) : v;
  }

  static Rational parse_decimal(std::string_view s) {
    std::string_view mant = s;
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string_view::npos) {
      mant = s.substr(0, epos);
      std::string e(s.substr(epos + 1));
      try {
        std::size_t used = 0;
        exp10 = std::stol(e, &used);
        if (used != e.size()) throw DomainError("bad exponent");
      } catch (const std::logic_error&) {
        throw DomainError("bad exponent: " + std::string(s));
      }
    }
    std::string digits;
    auto dot = mant.find('.');
    if (dot != std::string_view::npos) {
      digits = std::string(mant.substr(0, dot)) + std::string(mant.substr(dot + 1));
      exp10 -= static_cast<long>(mant.size() - dot - 1);
      if (digits == "" || digits == "-" || digits == "+")
        throw DomainError("bad decimal: " + std::string(s));
    } else {
      digits = std::string(mant);
    }
    BigInt n = parse_int(digits);
    BigInt d = 1;
    if (exp10 >= 0)
      n *= big_pow(10, static_cast<unsigned>(exp10));
    else
      d = big_pow(10, static_cast<unsigned>(-exp10));
    return Rational(n, d);
  }

  void normalize() {
    if (den_ == 0) throw DomainError("zero denominator");
    if (den_ < 0) {
      den_ = -den_;
      num_ = -num_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = big_gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// Scalar plumbing shared by the generic algorithms.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static Rational from_int(long long v) { return Rational(v); }
  static Rational from_double(double v) { return Rational::from_double(v); }
  static double to_double(const Rational& v) { return v.to_double(); }
  static bool is_zero(const Rational& v) { return v.sign() == 0; }
  static Rational abs(const Rational& v) { return casteljau::abs(v); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double from_int(long long v) { return static_cast<double>(v); }
  static double from_double(double v) { return v; }
  static double to_double(double v) { return v; }
  static bool is_zero(double v) { return v == 0.0; }
  static double abs(double v) { return std::fabs(v); }
};

// 100-digit binary float, for measuring convergence far below double rounding.
using BigFloat = boost::multiprecision::cpp_bin_float_100;

template <>
struct ScalarTraits<BigFloat> {
  static constexpr bool exact = false;
  static BigFloat from_int(long long v) { return BigFloat(v); }
  static BigFloat from_double(double v) { return BigFloat(v); }
  static double to_double(const BigFloat& v) { return v.convert_to<double>(); }
  static bool is_zero(const BigFloat& v) { return v == 0; }
  static BigFloat abs(const BigFloat& v) { return boost::multiprecision::abs(v); }
};

template <class S>
S scalar(long long v) {
  return ScalarTraits<S>::from_int(v);
}

template <class S>
double as_double(const S& v) {
  return ScalarTraits<S>::to_double(v);
}

struct ContinuedFraction {
  enum class Terminator { exact, truncated };
  std::vector<BigInt> quotients;
  Terminator terminator = Terminator::exact;
};

struct ConvergentPair {
  BigInt S;
  BigInt D;
  int index = 0;
};

struct EuclidResult {
  ContinuedFraction quotients;
  BigInt gcd;
  std::vector<BigInt> remainders;
};

inline EuclidResult euclid(const BigInt& n0, const BigInt& n1) {
  if (n1 <= 0) throw DomainError("euclid: n1 must be positive");
  if (n0 < 0) throw DomainError("euclid: n0 must be non-negative");
  EuclidResult res;
  BigInt a = n0, b = n1;
  while (true) {
    BigInt q = a / b;
    BigInt r = a % b;
    res.quotients.quotients.push_back(q);
    if (r == 0) {
      if (res.remainders.empty()) res.remainders.push_back(0);
      res.gcd = b;
      break;
    }
    res.remainders.push_back(r);
    a = std::move(b);
    b = std::move(r);
  }
  return res;
}

// Quotients of a non-negative rational, with q_1 possibly zero.
inline ContinuedFraction continued_fraction(const Rational& x) {
  if (x.sign() < 0) throw DomainError("continued_fraction: negative value");
  ContinuedFraction cf;
  BigInt a = x.num(), b = x.den();
  while (b != 0) {
    cf.quotients.push_back(a / b);
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return cf;
}

// Pairs for i = 1..p; seeds (S_-1, D_-1) = (0, 1) and (S_0, D_0) = (1, 0).
inline std::vector<ConvergentPair> convergents(const ContinuedFraction& cf) {
  if (cf.quotients.empty()) throw DomainError("convergents: empty fraction");
  std::vector<ConvergentPair> out;
  out.reserve(cf.quotients.size());
  BigInt s_prev = 0, d_prev = 1, s = 1, d = 0;
  int i = 0;
  for (const auto& q : cf.quotients) {
    BigInt s_next = s * q + s_prev;
    BigInt d_next = d * q + d_prev;
    s_prev = std::move(s);
    d_prev = std::move(d);
    s = std::move(s_next);
    d = std::move(d_next);
    out.push_back({s, d, ++i});
  }
  return out;
}

inline Rational cf_value(const ContinuedFraction& cf, std::size_t depth) {
  if (depth < 1 || depth > cf.quotients.size())
    throw DomainError("cf_value: depth out of range");
  // Evaluate the nested fraction from the inside out.
  Rational v = Rational(cf.quotients[depth - 1]);
  for (std::size_t k = depth - 1; k-- > 0;) {
    if (v.sign() == 0) throw DomainError("cf_value: zero partial quotient");
    v = Rational(cf.quotients[k]) + Rational(1) / v;
  }
  return v;
}

}  // namespace casteljau
