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
#include <string>

namespace casteljau {

struct TendencyPair {
  double d0 = 0;
  double d1 = 0;
};

struct ToleranceBudget {
  double T1 = 0;  // normal
  double T2 = 0;  // geodesic
  double T3 = 0;  // between grooves
  double R = 0;   // cutter radius
  double T = 0;   // total
};

// Three readings of the denominator in the deviation formula.
enum class DeviationVariant {
  sum_twice_root,   // |d0+d1| + 2 sqrt(D), agrees with the cubic maximum
  diff_twice_root,  // |d0-d1| + 2 sqrt(D)
  sum_root,         // |d0+d1| + sqrt(D)
};

inline std::string to_string(DeviationVariant v) {
  switch (v) {
    case DeviationVariant::sum_twice_root: return "sum-twice-root";
    case DeviationVariant::diff_twice_root: return "diff-twice-root";
    case DeviationVariant::sum_root: return "sum-root";
  }
  return "?";
}

inline DeviationVariant parse_deviation_variant(const std::string& s) {
  if (s == "sum-twice-root") return DeviationVariant::sum_twice_root;
  if (s == "diff-twice-root") return DeviationVariant::diff_twice_root;
  if (s == "sum-root") return DeviationVariant::sum_root;
  throw DomainError("unknown deviation variant: " + s);
}

inline constexpr DeviationVariant kDefaultDeviation = DeviationVariant::sum_twice_root;

namespace detail {

inline double deviation_core(double d0, double d1, DeviationVariant v) {
  const double delta = d0 * d0 - d0 * d1 + d1 * d1;
  const double root = std::sqrt(delta);
  const double s = std::fabs(d0 + d1);
  double den = 0;
  switch (v) {
    case DeviationVariant::sum_twice_root: den = s + 2 * root; break;
    case DeviationVariant::diff_twice_root: den = std::fabs(d0 - d1) + 2 * root; break;
    case DeviationVariant::sum_root: den = s + root; break;
  }
  if (den == 0) return 0;
  return (s + delta / den) / 9;
}

}  // namespace detail

inline double max_deviation(const TendencyPair& t,
                            DeviationVariant v = kDefaultDeviation) {
  return detail::deviation_core(t.d0, t.d1, v);
}

// Distance of the cubic arc from its chord at unit parameter x.
inline double tendency_cubic(const TendencyPair& t, double x) {
  return x * (1 - x) * (t.d0 * (1 - x) + t.d1 * x);
}

inline TendencyPair extrapolate_tendencies(const TendencyPair& t, double rho) {
  const double g = t.d0 - t.d1;
  const double r2 = rho * rho;
  return {r2 * (t.d0 + (1 - rho) * g), r2 * (t.d1 + 2 * (1 - rho) * g)};
}

inline double normal_deviation(const TendencyPair& t) {
  return detail::deviation_core(t.d0, t.d1, DeviationVariant::sum_root);
}

inline double geodesic_deviation(const TendencyPair& delta, double R) {
  if (!(R > 0)) throw DomainError("geodesic_deviation: radius must be positive");
  const double hm = detail::deviation_core(delta.d0, delta.d1, DeviationVariant::sum_root);
  return hm * hm / (2 * R);
}

inline double groove_width(double e, double f, double g, double E_S) {
  const double det = e * g - f * f;
  if (!(det > 0) || !(e > 0)) throw DomainError("groove_width: metric not positive definite");
  if (!(E_S > 0)) throw DomainError("groove_width: E_S must be positive");
  return 2 * std::sqrt(2 * e * E_S / det);
}

inline bool budget_ok(double E_N, double E_G, double T) { return E_N + E_G <= T; }

}  // namespace casteljau
