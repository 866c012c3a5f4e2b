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

#include <casteljau/decasteljau.hpp>

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace casteljau {

// sigma_1..sigma_n of the given parameters, built one parameter at a time.
template <class S>
std::vector<S> elementary_symmetric(const std::vector<S>& values) {
  if (values.empty()) throw DomainError("elementary_symmetric: no values");
  std::vector<S> sig(values.size() + 1, S(0));
  sig[0] = S(1);
  for (std::size_t m = 0; m < values.size(); ++m)
    for (std::size_t i = m + 1; i >= 1; --i) sig[i] += values[m] * sig[i - 1];
  return std::vector<S>(sig.begin() + 1, sig.end());
}

template <class S>
Point<S> index_reduce(const Point<S>& left, const Point<S>& right, const S& t0,
                      const S& tn, const S& t) {
  if (t0 == tn) throw DomainError("index_reduce: coalesced knots t0 == tn");
  return lerp(left, right, (t - t0) / (tn - t0));
}

// Polar form of a Bezier curve; slot k is consumed at level k.
template <class S>
Point<S> blossom_eval(const ControlPolygon<S>& poly, const std::vector<S>& args) {
  poly.validate();
  if (args.size() != poly.degree())
    throw DomainError("blossom_eval: argument count must equal the degree");
  std::vector<Point<S>> w = poly.points;
  for (std::size_t r = 1; r < w.size(); ++r) {
    const S alpha = poly.local(args[r - 1]);
    for (std::size_t i = 0; i + r < w.size(); ++i) w[i] = lerp(w[i], w[i + 1], alpha);
  }
  return w.front();
}

template <class S>
void check_knots(const std::vector<S>& knots) {
  for (std::size_t i = 1; i < knots.size(); ++i)
    if (knots[i] < knots[i - 1]) throw DomainError("knot sequence must be non-decreasing");
}

// Full triangle: level r holds n+1-r points, point i carrying the
// arguments u[i+r..i+n-1] plus r copies of t.
template <class S>
std::vector<std::vector<Point<S>>> de_boor_tableau(const std::vector<Point<S>>& b,
                                                   const std::vector<S>& knots,
                                                   const S& t) {
  if (b.empty()) throw DomainError("de_boor_eval: no poles");
  const std::size_t n = b.size() - 1;
  if (knots.size() != 2 * n) throw DomainError("de_boor_eval: need 2n knots");
  check_knots(knots);
  if (n > 0 && (t < knots[n - 1] || t > knots[n]))
    throw DomainError("de_boor_eval: t outside the central span");
  std::vector<std::vector<Point<S>>> tab{b};
  for (std::size_t r = 1; r <= n; ++r) {
    const auto& prev = tab.back();
    std::vector<Point<S>> cur;
    for (std::size_t i = 0; i + r <= n; ++i)
      cur.push_back(index_reduce(prev[i], prev[i + 1], knots[i + r - 1], knots[i + n], t));
    tab.push_back(std::move(cur));
  }
  return tab;
}

template <class S>
Point<S> de_boor_eval(const std::vector<Point<S>>& b, const std::vector<S>& knots,
                      const S& t) {
  return de_boor_tableau(b, knots, t).back().front();
}

template <class S>
Point<S> aitken_eval(const std::vector<Point<S>>& a, const std::vector<S>& nodes,
                     const S& t) {
  if (a.empty() || a.size() != nodes.size())
    throw DomainError("aitken_eval: need one node per point");
  for (std::size_t i = 1; i < nodes.size(); ++i)
    if (!(nodes[i - 1] < nodes[i]))
      throw DomainError("aitken_eval: nodes must be strictly increasing");
  std::vector<Point<S>> w = a;
  for (std::size_t r = 1; r < w.size(); ++r)
    for (std::size_t i = 0; i + r < w.size(); ++i)
      w[i] = index_reduce(w[i], w[i + 1], nodes[i], nodes[i + r], t);
  return w.front();
}

enum class PoleKind { primitive, simple, progressive, on_curve };

inline std::string to_string(PoleKind k) {
  switch (k) {
    case PoleKind::primitive: return "primitive";
    case PoleKind::simple: return "simple";
    case PoleKind::progressive: return "progressive";
    case PoleKind::on_curve: return "on-curve";
  }
  return "?";
}

template <class T>
PoleKind pole_classify(const std::vector<T>& seq) {
  if (seq.empty()) throw DomainError("pole_classify: empty index sequence");
  if (!std::is_sorted(seq.begin(), seq.end()))
    throw DomainError("pole_classify: sequence must be sorted");
  std::set<T> distinct(seq.begin(), seq.end());
  if (distinct.size() == 1) return PoleKind::on_curve;
  if (distinct.size() == seq.size()) return PoleKind::progressive;
  if (distinct.size() == 2) return PoleKind::simple;
  return PoleKind::primitive;
}

inline Rational binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return Rational(r);
}

// Monomials x^i replaced by sigma_i(args) / C(n, i).
template <class S>
S polar_of_monomials(const std::vector<S>& coeffs, const std::vector<S>& args) {
  const std::size_t n = args.size();
  std::size_t deg = coeffs.size();
  while (deg > 0 && coeffs[deg - 1] == S(0)) --deg;
  if (deg == 0) return S(0);
  if (deg - 1 > n) throw DomainError("polar_of_monomials: degree exceeds argument count");
  S acc = coeffs[0];
  if (n == 0) return acc;
  const auto sig = elementary_symmetric(args);
  for (std::size_t i = 1; i < deg; ++i) {
    S c(binomial(n, i).num().template convert_to<long long>());
    acc += coeffs[i] * sig[i - 1] / c;
  }
  return acc;
}

}  // namespace casteljau
