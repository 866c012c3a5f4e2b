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
#include <casteljau/polynomial.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace casteljau {

inline int sign_variations(const IntPolynomial& p) {
  int count = 0, last = 0;
  for (const auto& c : p.coeffs()) {
    int s = c < 0 ? -1 : (c > 0 ? 1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// Coefficients of p(x + alpha) by repeated synthetic division.
inline IntPolynomial taylor_shift(const IntPolynomial& p, const BigInt& alpha) {
  std::vector<BigInt> c = p.coeffs();
  if (alpha == 0 || c.size() < 2) return p;
  const std::size_t n = c.size() - 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = n - 1; j + 1 > i; --j) c[j] += alpha * c[j + 1];
  return IntPolynomial(std::move(c));
}

// x^n p(1/x) for n the degree of p.
inline IntPolynomial reciprocal_transform(const IntPolynomial& p) {
  std::vector<BigInt> c(p.coeffs().rbegin(), p.coeffs().rend());
  return IntPolynomial(std::move(c));
}

inline IntPolynomial negate_argument(const IntPolynomial& p) {
  std::vector<BigInt> c = p.coeffs();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return IntPolynomial(std::move(c));
}

// Exact quotient by (x - alpha); alpha must be a root.
inline IntPolynomial deflate(const IntPolynomial& p, const BigInt& alpha) {
  const auto& c = p.coeffs();
  if (c.size() < 2) throw DomainError("deflate: constant polynomial");
  std::vector<BigInt> q(c.size() - 1);
  BigInt carry = 0;
  for (std::size_t i = c.size(); i-- > 1;) {
    carry = c[i] + carry * alpha;
    q[i - 1] = carry;
  }
  if (c[0] + carry * alpha != 0) throw DomainError("deflate: alpha is not a root");
  return IntPolynomial(std::move(q));
}

// Shift tables row by row: p(x), p(x+1), ..., p(x+count).
inline std::vector<IntPolynomial> shift_rows(const IntPolynomial& p, int count) {
  std::vector<IntPolynomial> rows{p};
  for (int i = 1; i <= count; ++i) rows.push_back(taylor_shift(rows.back(), 1));
  return rows;
}

// x = (a y + b) / (c y + d)
struct Mobius {
  BigInt a = 1, b = 0, c = 0, d = 1;

  // y = alpha + 1/z
  Mobius then_cf(const BigInt& alpha) const {
    return {a * alpha + b, a, c * alpha + d, c};
  }
  // y = z + s
  Mobius then_shift(const BigInt& s) const { return {a, a * s + b, c, c * s + d}; }
  // y = 1 / (1 + z)
  Mobius then_unit() const { return {b, a + b, d, c + d}; }

  Rational at(const Rational& y) const {
    return (Rational(a) * y + Rational(b)) / (Rational(c) * y + Rational(d));
  }
  std::optional<Rational> at_zero() const {
    if (d == 0) return std::nullopt;
    return Rational(b, d);
  }
  std::optional<Rational> at_infinity() const {
    if (c == 0) return std::nullopt;
    return Rational(a, c);
  }
};

struct IsolatedRoot {
  Rational lo = 0;
  std::optional<Rational> hi;  // empty means unbounded
  bool exact = false;
  Rational value = 0;  // exact root when exact
  bool negative = false;
  Mobius map;
  IntPolynomial reduced;  // polynomial in the map's variable
  ContinuedFraction cf;
  double approx = 0;
};

enum class IsolationStrategy { linear_scan, bisection_tree };

namespace detail {

inline BigInt positive_root_bound(const IntPolynomial& q) {
  const auto& c = q.coeffs();
  BigInt lead = c.back() < 0 ? BigInt(-c.back()) : c.back();
  BigInt m = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    BigInt v = c[i] < 0 ? BigInt(-c[i]) : c[i];
    BigInt r = (v + lead - 1) / lead;
    if (r > m) m = r;
  }
  return m + 1;
}

inline void record_exact(std::vector<IsolatedRoot>& out, const Rational& v) {
  IsolatedRoot r;
  r.exact = true;
  r.value = v;
  r.lo = v;
  r.hi = v;
  out.push_back(std::move(r));
}

inline void record_isolated(std::vector<IsolatedRoot>& out, const IntPolynomial& q,
                            const Mobius& m) {
  IsolatedRoot r;
  auto z = m.at_zero();
  auto inf = m.at_infinity();
  if (z && inf) {
    r.lo = std::min(*z, *inf);
    r.hi = std::max(*z, *inf);
  } else {
    r.lo = z ? *z : *inf;
  }
  r.map = m;
  r.reduced = q;
  out.push_back(std::move(r));
}

inline void scan(IntPolynomial q, const Mobius& m, std::vector<IsolatedRoot>& out) {
  if (q.degree() <= 0) return;
  if (q.coeff(0) == 0) {
    record_exact(out, *m.at_zero());
    q = deflate(q, 0);
    if (q.degree() <= 0) return;
  }
  const BigInt bound = positive_root_bound(q);
  for (BigInt alpha = 0; alpha <= bound; ++alpha) {
    IntPolynomial s = taylor_shift(q, alpha);
    // an integer root at alpha shows up as a vanishing constant term
    if (alpha > 0 && s.coeff(0) == 0) {
      record_exact(out, m.at(Rational(alpha)));
      q = deflate(q, alpha);
      if (q.degree() <= 0) return;
      s = taylor_shift(q, alpha);
    }
    if (sign_variations(s) == 0) break;
    // roots in (alpha, alpha + 1) become positive roots of r1
    IntPolynomial r1 = taylor_shift(reciprocal_transform(s), 1);
    if (r1.coeff(0) == 0) r1 = deflate(r1, 0);
    const int v = sign_variations(r1);
    const Mobius m1 = m.then_cf(alpha).then_shift(1);
    if (v == 1)
      record_isolated(out, r1, m1);
    else if (v >= 2)
      scan(r1, m1, out);
  }
}

inline void tree(IntPolynomial q, const Mobius& m, std::vector<IsolatedRoot>& out) {
  if (q.degree() <= 0) return;
  if (q.coeff(0) == 0) {
    record_exact(out, *m.at_zero());
    q = deflate(q, 0);
    if (q.degree() <= 0) return;
  }
  const int v = sign_variations(q);
  if (v == 0) return;
  if (v == 1) {
    record_isolated(out, q, m);
    return;
  }
  if (q(BigInt(1)) == 0) {
    record_exact(out, m.at(Rational(1)));
    q = deflate(q, 1);
  }
  tree(taylor_shift(q, 1), m.then_shift(1), out);
  tree(taylor_shift(reciprocal_transform(q), 1), m.then_unit(), out);
}

// Largest k >= 0 with the single positive root of q above k; sets exact if q(k) == 0.
inline BigInt root_floor(const IntPolynomial& q, bool& exact) {
  exact = false;
  auto above = [&](const BigInt& k) {
    IntPolynomial s = taylor_shift(q, k);
    return s.coeff(0) != 0 && sign_variations(s) >= 1;
  };
  BigInt lo = 0, hi = 1;
  while (above(hi)) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (above(mid))
      lo = mid;
    else
      hi = mid;
  }
  if (q(hi) == 0) {
    exact = true;
    return hi;
  }
  return lo;
}

}  // namespace detail

// Quotients of the root carried by (q, m); q has one simple positive root.
inline ContinuedFraction expand_cf(IntPolynomial q, Mobius m, std::size_t depth) {
  ContinuedFraction cf;
  cf.terminator = ContinuedFraction::Terminator::truncated;
  while (cf.quotients.size() < depth) {
    auto z = m.at_zero();
    auto inf = m.at_infinity();
    if (z && inf) {
      const Rational lo = std::min(*z, *inf), hi = std::max(*z, *inf);
      const BigInt k = lo.floor();
      if (hi <= Rational(k + 1) && lo.sign() >= 0) {
        cf.quotients.push_back(k);
        // remaining value x' = 1 / (x - k)
        m = Mobius{m.c, m.d, m.a - k * m.c, m.b - k * m.d};
        continue;
      }
    }
    bool exact = false;
    const BigInt alpha = detail::root_floor(q, exact);
    if (exact) {
      ContinuedFraction tail = continued_fraction(m.at(Rational(alpha)));
      for (auto& v : tail.quotients) {
        if (cf.quotients.size() >= depth) return cf;
        cf.quotients.push_back(v);
      }
      cf.terminator = ContinuedFraction::Terminator::exact;
      return cf;
    }
    q = reciprocal_transform(taylor_shift(q, alpha));
    m = m.then_cf(alpha);
  }
  return cf;
}

inline std::vector<IsolatedRoot> isolate_positive_roots(
    const IntPolynomial& p, std::size_t depth,
    IsolationStrategy strategy = IsolationStrategy::linear_scan) {
  if (p.degree() < 1) throw DomainError("isolate: polynomial must have degree >= 1");
  if (!is_squarefree(p)) throw DomainError("isolate: polynomial is not squarefree");
  std::vector<IsolatedRoot> out;
  IntPolynomial q = p;
  // a root at zero is not positive
  if (q.coeff(0) == 0) q = deflate(q, 0);
  if (strategy == IsolationStrategy::linear_scan)
    detail::scan(q, Mobius{}, out);
  else
    detail::tree(q, Mobius{}, out);
  for (auto& r : out) {
    if (r.exact) {
      r.cf = continued_fraction(r.value);
      r.approx = r.value.to_double();
    } else {
      r.cf = expand_cf(r.reduced, r.map, std::max<std::size_t>(depth, 1));
      // the float value comes from a long expansion, independent of depth
      ContinuedFraction longer = expand_cf(r.reduced, r.map, 40);
      r.approx = cf_value(longer, longer.quotients.size()).to_double();
    }
  }
  std::sort(out.begin(), out.end(),
            [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.approx < b.approx; });
  return out;
}

// All real roots: negative ones via p(-x), zero when p(0) = 0.
inline std::vector<IsolatedRoot> isolate_real_roots(
    const IntPolynomial& p, std::size_t depth,
    IsolationStrategy strategy = IsolationStrategy::linear_scan) {
  if (p.degree() < 1) throw DomainError("isolate: polynomial must have degree >= 1");
  if (!is_squarefree(p)) throw DomainError("isolate: polynomial is not squarefree");
  std::vector<IsolatedRoot> out;
  for (auto r : isolate_positive_roots(negate_argument(p), depth, strategy)) {
    r.negative = true;
    r.approx = -r.approx;
    Rational lo = r.lo;
    if (r.hi) {
      r.lo = -*r.hi;
      r.hi = -lo;
    } else {
      r.lo = -lo;  // unbounded below; lo holds the finite end negated
    }
    if (r.exact) r.value = -r.value;
    out.push_back(std::move(r));
  }
  if (p.coeff(0) == 0) {
    IsolatedRoot z;
    z.exact = true;
    z.cf.quotients = {0};
    out.push_back(z);
  }
  for (auto& r : isolate_positive_roots(p, depth, strategy)) out.push_back(std::move(r));
  std::sort(out.begin(), out.end(),
            [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.approx < b.approx; });
  return out;
}

struct Linear {
  BigInt coef = 0;
  BigInt constant = 0;

  std::string str(const std::string& var) const {
    std::string out;
    if (coef != 0) {
      if (coef == -1)
        out = "-";
      else if (coef != 1)
        out = coef.str();
      out += var;
    }
    if (constant != 0 || out.empty()) {
      if (out.empty())
        out = constant.str();
      else
        out += constant < 0 ? " - " + BigInt(-constant).str() : " + " + constant.str();
    }
    return out;
  }
  friend bool operator==(const Linear& x, const Linear& y) {
    return x.coef == y.coef && x.constant == y.constant;
  }
};

struct SubstitutionRow {
  int index = 0;  // 0 for x, k for x_k, -j for backward rows
  std::string variable;
  IntPolynomial equation;        // leading coefficient made positive
  std::optional<BigInt> quotient;  // variable = quotient + 1/next
  Linear P, Q, PQ;               // x = PQ / Q with P = PQ - Q
};

inline std::string row_variable(int index) {
  if (index == 0) return "x";
  return "x" + std::to_string(index);
}

// Forward Vincent rows for the largest positive root plus optional
// backward rows x_{-j} = beta_j + 1/x_{-j+1}.
inline std::vector<SubstitutionRow> backward_table(const IntPolynomial& p, std::size_t depth,
                                                   const std::vector<BigInt>& backward = {}) {
  auto roots = isolate_positive_roots(p, depth);
  if (roots.empty()) throw DomainError("backward_table: no positive root");
  const IsolatedRoot& root = roots.back();
  const auto& qs = root.cf.quotients;
  auto positive = [](IntPolynomial e) { return e.leading() < 0 ? -e : e; };

  std::vector<SubstitutionRow> rows;
  // backward rows, nearest first, then reversed for display
  {
    IntPolynomial eq = p;
    Linear N{1, 0}, D{0, 1};
    std::vector<SubstitutionRow> back;
    int idx = 0;
    for (const auto& beta : backward) {
      eq = taylor_shift(reciprocal_transform(eq), -beta);
      Linear N2{N.constant, N.coef - N.constant * beta};
      Linear D2{D.constant, D.coef - D.constant * beta};
      N = N2;
      D = D2;
      --idx;
      SubstitutionRow r;
      r.index = idx;
      r.variable = "x[" + std::to_string(idx) + "]";
      r.equation = positive(eq);
      r.quotient = beta;
      r.PQ = N;
      r.Q = D;
      r.P = Linear{N.coef - D.coef, N.constant - D.constant};
      back.push_back(r);
    }
    rows.assign(back.rbegin(), back.rend());
  }
  IntPolynomial eq = p;
  Linear N{1, 0}, D{0, 1};
  for (std::size_t k = 0; k <= depth; ++k) {
    SubstitutionRow r;
    r.index = static_cast<int>(k);
    r.variable = row_variable(r.index);
    r.equation = positive(eq);
    r.PQ = N;
    r.Q = D;
    r.P = Linear{N.coef - D.coef, N.constant - D.constant};
    const bool more = k < depth && k < qs.size() && !(root.exact && k + 1 == qs.size());
    if (more) r.quotient = qs[k];
    rows.push_back(r);
    if (!more) break;
    const BigInt& alpha = qs[k];
    eq = reciprocal_transform(taylor_shift(eq, alpha));
    N = Linear{N.coef * alpha + N.constant, N.coef};
    D = Linear{D.coef * alpha + D.constant, D.coef};
  }
  return rows;
}

}  // namespace casteljau
