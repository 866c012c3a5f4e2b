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

#include <cmath>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

namespace casteljau {

template <class S>
using Point = std::vector<S>;

template <class S>
Point<S> lerp(const Point<S>& a, const Point<S>& b, const S& alpha) {
  if (a.size() != b.size()) throw DomainError("point dimension mismatch");
  Point<S> r(a.size());
  S beta = S(1) - alpha;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = beta * a[i] + alpha * b[i];
  return r;
}

template <class S>
struct ControlPolygon {
  std::vector<Point<S>> points;
  S t0 = S(0);
  S t1 = S(1);

  std::size_t degree() const { return points.empty() ? 0 : points.size() - 1; }
  std::size_t dim() const { return points.empty() ? 0 : points.front().size(); }

  void validate() const {
    if (points.empty()) throw DomainError("control polygon is empty");
    if (!(t0 < t1)) throw DomainError("control polygon interval must have t0 < t1");
    for (const auto& p : points)
      if (p.size() != points.front().size())
        throw DomainError("control points differ in dimension");
  }

  S local(const S& t) const { return (t - t0) / (t1 - t0); }
};

template <class S>
Point<S> eval(const ControlPolygon<S>& poly, const S& t) {
  poly.validate();
  const S alpha = poly.local(t);
  std::vector<Point<S>> w = poly.points;
  for (std::size_t r = 1; r < w.size(); ++r)
    for (std::size_t i = 0; i + r < w.size(); ++i) w[i] = lerp(w[i], w[i + 1], alpha);
  return w.front();
}

template <class S>
std::pair<ControlPolygon<S>, ControlPolygon<S>> subdivide(const ControlPolygon<S>& poly,
                                                           const S& t) {
  poly.validate();
  if (!(poly.t0 < t && t < poly.t1))
    throw DomainError("subdivide: parameter must lie strictly inside the interval");
  const S alpha = poly.local(t);
  std::vector<Point<S>> w = poly.points;
  const std::size_t n = w.size();
  ControlPolygon<S> left{{}, poly.t0, t}, right{{}, t, poly.t1};
  left.points.push_back(w.front());
  std::vector<Point<S>> back{w.back()};
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i + r < n; ++i) w[i] = lerp(w[i], w[i + 1], alpha);
    left.points.push_back(w.front());
    back.push_back(w[n - 1 - r]);
  }
  right.points.assign(back.rbegin(), back.rend());
  return {left, right};
}

// Values at t0 + k*step for k < count; after the setup only additions are used.
template <class S>
std::vector<Point<S>> forward_difference_table(const ControlPolygon<S>& poly,
                                               const S& step, std::size_t count) {
  poly.validate();
  if (count < 1) throw DomainError("forward_difference_table: count must be >= 1");
  const std::size_t n = poly.degree();
  std::vector<Point<S>> diff;
  for (std::size_t k = 0; k <= n; ++k)
    diff.push_back(eval(poly, poly.t0 + S(static_cast<long long>(k)) * step));
  for (std::size_t r = 1; r <= n; ++r)
    for (std::size_t i = n; i >= r; --i)
      for (std::size_t d = 0; d < diff[i].size(); ++d) diff[i][d] -= diff[i - 1][d];
  std::vector<Point<S>> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(diff[0]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t d = 0; d < diff[i].size(); ++d) diff[i][d] += diff[i + 1][d];
  }
  return out;
}

// F_{n+1} = 2F_n - F_{n-1} - k F_n with F_0 = 0, F_1 = sin(phi).
template <class S>
std::vector<S> trig_recurrence(const S& sin_phi, const S& k, std::size_t count) {
  if (count < 1) throw DomainError("trig_table: count must be >= 1");
  std::vector<S> f;
  f.reserve(count + 1);
  f.push_back(S(0));
  f.push_back(sin_phi);
  for (std::size_t n = 1; n < count; ++n)
    f.push_back(S(2) * f[n] - f[n - 1] - k * f[n]);
  return f;
}

inline std::vector<double> trig_table(double phi, std::size_t count) {
  double h = std::sin(phi / 2);
  return trig_recurrence<double>(std::sin(phi), 4 * h * h, count);
}

// Exact form: k = 2 - 2 cos(phi) needs only cos(phi), so a rational point
// on the unit circle gives an exact table.
inline std::vector<Rational> trig_table_exact(const Rational& sin_phi,
                                              const Rational& cos_phi,
                                              std::size_t count) {
  if (sin_phi * sin_phi + cos_phi * cos_phi != Rational(1))
    throw DomainError("trig_table_exact: (cos, sin) is not on the unit circle");
  return trig_recurrence<Rational>(sin_phi, Rational(2) - Rational(2) * cos_phi, count);
}

struct FocalRay {
  double radius = 1;
  double angle = 0;
};

struct FocalFan {
  double fx = 0;
  double fy = 0;
  std::vector<FocalRay> rays;

  void validate() const {
    if (rays.empty()) throw DomainError("focal fan has no rays");
    for (const auto& r : rays)
      if (!(r.radius > 0)) throw DomainError("focal fan radii must be positive");
    for (std::size_t i = 1; i < rays.size(); ++i) {
      double gap = std::fabs(rays[i].angle - rays[i - 1].angle);
      if (!(gap > 0 && gap < std::numbers::pi))
        throw DomainError("focal fan angle gaps must lie in (0, pi)");
      if (i > 1 && (rays[i].angle - rays[i - 1].angle) *
                           (rays[i - 1].angle - rays[i - 2].angle) <= 0)
        throw DomainError("focal fan angles must be strictly monotone");
    }
  }

  std::pair<double, double> to_xy(const FocalRay& r) const {
    return {fx + r.radius * std::cos(r.angle), fy + r.radius * std::sin(r.angle)};
  }
};

// Inverse radii blend with sine weights; tau turns away from the first ray.
inline FocalRay focal_step(const FocalRay& r0, const FocalRay& r1, double sigma,
                           double tau) {
  const double gap = r0.angle - r1.angle;
  const double total = sigma + tau;
  if (sigma < 0 || tau < 0) throw DomainError("focal_step: sigma and tau must be >= 0");
  if (!(total > 0 && total < std::numbers::pi))
    throw DomainError("focal_step: degenerate fan, sigma + tau outside (0, pi)");
  if (std::fabs(std::fabs(gap) - total) > 1e-12 * (1 + total))
    throw DomainError("focal_step: sigma + tau must equal the angle between rays");
  const double s = std::sin(total);
  const double inv = std::sin(sigma) / (s * r0.radius) + std::sin(tau) / (s * r1.radius);
  if (!(inv > 0)) throw DomainError("focal_step: point escapes to infinity");
  const double dir = gap >= 0 ? 1.0 : -1.0;
  return {1.0 / inv, r0.angle - dir * tau};
}

inline FocalRay focal_eval(const FocalFan& fan, double u) {
  fan.validate();
  std::vector<FocalRay> w = fan.rays;
  for (std::size_t r = 1; r < w.size(); ++r)
    for (std::size_t i = 0; i + r < w.size(); ++i) {
      const double gap = std::fabs(w[i].angle - w[i + 1].angle);
      if (gap == 0) continue;
      w[i] = focal_step(w[i], w[i + 1], (1 - u) * gap, u * gap);
    }
  return w.front();
}

}  // namespace casteljau
