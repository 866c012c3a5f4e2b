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

#include <casteljau/blossom.hpp>
#include <casteljau/matrix.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace casteljau {

struct Characteristic {
  int n = 0;  // segment degree
  int c = 0;  // continuity order
  int r = 0;  // restitution degree
  int q = 0;  // sample count, 0 when not from a configuration
  int s = 0;  // segment count, 0 when not from a configuration
  bool from_table = false;
  std::string label;

  int p() const { return n - c; }
  int m() const { return n + 1; }

  void validate() const {
    if (n < 1) throw DomainError("characteristic: n must be >= 1");
    if (c < 0 || c > n - 1) throw DomainError("characteristic: need 0 <= c <= n-1");
    if (r < 1 || r > n) throw DomainError("characteristic: need 1 <= r <= n");
  }

  std::string str() const {
    return "(" + std::to_string(n) + "," + std::to_string(c) + "," + std::to_string(r) + ")";
  }
};

inline Characteristic characteristic(int n, int c, int r) {
  Characteristic ch;
  ch.n = n;
  ch.c = c;
  ch.r = r;
  ch.validate();
  return ch;
}

inline bool operator==(const Characteristic& a, const Characteristic& b) {
  return a.n == b.n && a.c == b.c && a.r == b.r;
}

// Monic node product over a scalar divisor; coefficients low degree first.
struct WeightPolynomial {
  std::vector<Rational> coefficients;
  Rational divisor = 1;

  std::vector<Rational> normalized() const {
    std::vector<Rational> out = coefficients;
    for (auto& v : out) v /= divisor;
    return out;
  }
  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t i = coefficients.size(); i-- > 0;) acc = acc * x + coefficients[i];
    return acc / divisor;
  }
};

inline std::vector<WeightPolynomial> lagrange_weights(const std::vector<Rational>& nodes) {
  if (nodes.empty()) throw DomainError("lagrange_weights: no nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (nodes[i] == nodes[j]) throw DomainError("lagrange_weights: duplicate nodes");
  std::vector<WeightPolynomial> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    WeightPolynomial w;
    w.coefficients = {Rational(1)};
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j == i) continue;
      std::vector<Rational> next(w.coefficients.size() + 1, Rational(0));
      for (std::size_t k = 0; k < w.coefficients.size(); ++k) {
        next[k + 1] += w.coefficients[k];
        next[k] -= nodes[j] * w.coefficients[k];
      }
      w.coefficients = std::move(next);
      w.divisor *= nodes[i] - nodes[j];
    }
    out.push_back(std::move(w));
  }
  return out;
}

struct SmoothingMatrix {
  Matrix<Rational> entries;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<long> sample_columns;  // sample index per column when columns are samples

  // Least common multiple of the entry denominators.
  BigInt common_denominator() const {
    BigInt l = 1;
    for (std::size_t i = 0; i < entries.rows(); ++i)
      for (std::size_t j = 0; j < entries.cols(); ++j) {
        const BigInt& d = entries(i, j).den();
        l = l / big_gcd(l, d) * d;
      }
    return l;
  }

  bool rows_affine() const {
    for (std::size_t i = 0; i < entries.rows(); ++i) {
      Rational sum = 0;
      for (std::size_t j = 0; j < entries.cols(); ++j) sum += entries(i, j);
      if (sum != Rational(1)) return false;
    }
    return true;
  }

  bool centro_symmetric() const {
    const std::size_t R = entries.rows(), C = entries.cols();
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t j = 0; j < C; ++j)
        if (entries(i, j) != entries(R - 1 - i, C - 1 - j)) return false;
    return true;
  }

  std::string str() const {
    BigInt d = common_denominator();
    std::string out = "1/" + d.str() + " *\n";
    for (std::size_t i = 0; i < entries.rows(); ++i) {
      out += (i < row_labels.size() ? row_labels[i] : std::string()) + " [";
      for (std::size_t j = 0; j < entries.cols(); ++j) {
        Rational v = entries(i, j) * Rational(d);
        out += (j ? " " : "") + v.str();
      }
      out += "]\n";
    }
    return out;
  }
};

struct SmoothingOptions {
  // Sample parameter values; empty means the integer grid t_i = i.
  std::vector<Rational> nodes;
  // Clamp Lagrange windows into [0, sample_count - 1]; 0 disables clamping.
  long sample_count = 0;
};

namespace detail {

inline long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline long ceil_rational(const Rational& x) {
  return -static_cast<long>((-x).floor());
}

inline std::string window_label(const std::vector<Rational>& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + w[i].str();
  return s + "]";
}

class Plan {
 public:
  Plan(const Characteristic& ch, const SmoothingOptions& opt) : ch_(ch), opt_(opt) {
    ch_.validate();
    if (!opt_.nodes.empty()) {
      for (std::size_t i = 1; i < opt_.nodes.size(); ++i)
        if (!(opt_.nodes[i - 1] < opt_.nodes[i]))
          throw DomainError("smoothing: nodes must be strictly increasing");
      if (opt_.nodes.size() < 2) throw DomainError("smoothing: need at least two nodes");
    }
    if (opt_.sample_count > 0 && opt_.sample_count < ch_.r + 1)
      throw DomainError("smoothing: fewer samples than r + 1");
  }

  const Characteristic& ch() const { return ch_; }

  // Parameter of node j; outside the supplied range the end spacing repeats.
  Rational node(long j) const {
    if (opt_.nodes.empty()) return Rational(j);
    const long N = static_cast<long>(opt_.nodes.size());
    if (j < 0) return opt_.nodes[0] + Rational(j) * (opt_.nodes[1] - opt_.nodes[0]);
    if (j >= N)
      return opt_.nodes[N - 1] + Rational(j - N + 1) * (opt_.nodes[N - 1] - opt_.nodes[N - 2]);
    return opt_.nodes[static_cast<std::size_t>(j)];
  }

  long knot_index(long g) const { return floor_div(g, ch_.p()); }
  Rational knot(long g) const { return node(knot_index(g)); }

  std::vector<Rational> window(long g) const {
    std::vector<Rational> w;
    for (long k = 0; k < ch_.n; ++k) w.push_back(knot(g + k));
    return w;
  }

  // First sample of the r+1 node window nearest the pole's knot centre.
  long lagrange_start(long g) const {
    Rational sum = 0;
    for (long k = 0; k < ch_.n; ++k) sum += Rational(knot_index(g + k));
    Rational mean = sum / Rational(ch_.n);
    long s = ceil_rational(mean - Rational(ch_.r, 2) - Rational(1, 2));
    if (opt_.sample_count > 0) s = std::clamp(s, 0L, opt_.sample_count - 1 - ch_.r);
    return s;
  }

  // Weights over samples s..s+r for the pole with window start g.
  std::pair<long, std::vector<Rational>> h_row(long g) const {
    long s = lagrange_start(g);
    std::vector<Rational> nodes;
    for (long j = 0; j <= ch_.r; ++j) nodes.push_back(node(s + j));
    auto ls = lagrange_weights(nodes);
    auto args = window(g);
    std::vector<Rational> row;
    for (const auto& l : ls) row.push_back(polar_of_monomials(l.normalized(), args));
    return {s, row};
  }

  long first_pole(long segment) const { return segment * ch_.p() + ch_.p() - ch_.n; }

  std::vector<Rational> local_knots(long segment) const {
    std::vector<Rational> u;
    long g0 = first_pole(segment);
    for (long k = 0; k < 2 * ch_.n; ++k) u.push_back(knot(g0 + k));
    return u;
  }

 private:
  Characteristic ch_;
  SmoothingOptions opt_;
};

inline std::vector<std::vector<Rational>> windows_of(const std::vector<Rational>& u, int n) {
  std::vector<std::vector<Rational>> w;
  for (std::size_t i = 0; i + n <= u.size(); ++i)
    w.emplace_back(u.begin() + i, u.begin() + i + n);
  return w;
}

inline std::vector<Rational> multiset_minus(const std::vector<Rational>& a,
                                            const std::vector<Rational>& b) {
  std::vector<Rational> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Rows expressing each new window through two old ones, or nullopt.
inline std::optional<Matrix<Rational>> reduction_rows(
    const std::vector<std::vector<Rational>>& old_w,
    const std::vector<std::vector<Rational>>& new_w) {
  Matrix<Rational> K(new_w.size(), old_w.size());
  for (std::size_t r = 0; r < new_w.size(); ++r) {
    const auto& w = new_w[r];
    bool done = false;
    for (std::size_t j = 0; j < old_w.size() && !done; ++j)
      if (old_w[j] == w) {
        K(r, j) = 1;
        done = true;
      }
    for (std::size_t ia = 0; ia < old_w.size() && !done; ++ia)
      for (std::size_t ib = ia + 1; ib < old_w.size() && !done; ++ib) {
        auto a_only = multiset_minus(old_w[ia], old_w[ib]);
        auto b_only = multiset_minus(old_w[ib], old_w[ia]);
        if (a_only.size() != 1 || b_only.size() != 1) continue;
        std::vector<Rational> shared;
        std::set_intersection(old_w[ia].begin(), old_w[ia].end(), old_w[ib].begin(),
                              old_w[ib].end(), std::back_inserter(shared));
        auto x_only = multiset_minus(w, shared);
        if (x_only.size() != 1 || multiset_minus(shared, w).size() != 0) continue;
        const Rational& a = a_only[0];
        const Rational& b = b_only[0];
        const Rational alpha = (x_only[0] - a) / (b - a);
        K(r, ia) = Rational(1) - alpha;
        K(r, ib) = alpha;
        done = true;
      }
    if (!done) return std::nullopt;
  }
  return K;
}

inline std::vector<Rational> insert_sorted(std::vector<Rational> u, const Rational& v) {
  u.insert(std::upper_bound(u.begin(), u.end(), v), v);
  return u;
}

struct ChainStep {
  Matrix<Rational> K;
  std::vector<std::vector<Rational>> from;
  std::vector<std::vector<Rational>> to;
};

// Raises the multiplicity of both segment ends to n, one knot per side per step.
inline std::vector<ChainStep> insertion_chain(std::vector<Rational> u, const Rational& a,
                                              const Rational& b, int n) {
  std::vector<ChainStep> steps;
  auto mult = [](const std::vector<Rational>& v, const Rational& x) {
    return static_cast<int>(std::count(v.begin(), v.end(), x));
  };
  while (mult(u, a) < n || mult(u, b) < n) {
    auto old_w = windows_of(u, n);
    auto lower = [&](std::vector<Rational> v) {
      if (mult(v, a) >= n) return v;
      v.erase(v.begin());
      return insert_sorted(v, a);
    };
    auto upper = [&](std::vector<Rational> v) {
      if (mult(v, b) >= n) return v;
      v.pop_back();
      return insert_sorted(v, b);
    };
    auto both = upper(lower(u));
    auto nw = windows_of(both, n);
    if (auto K = reduction_rows(old_w, nw)) {
      steps.push_back({*K, old_w, nw});
      u = std::move(both);
      continue;
    }
    auto one = mult(u, a) < n ? lower(u) : upper(u);
    nw = windows_of(one, n);
    auto K = reduction_rows(old_w, nw);
    if (!K) throw DomainError("knot insertion: no two-term reduction exists");
    steps.push_back({*K, old_w, nw});
    u = std::move(one);
  }
  return steps;
}

}  // namespace detail

// H for segment [t_0, t_1]: rows are the n+1 spline poles, columns the samples.
inline SmoothingMatrix h_matrix(const Characteristic& ch, const SmoothingOptions& opt = {},
                                long segment = 0) {
  detail::Plan plan(ch, opt);
  const long g0 = plan.first_pole(segment);
  std::vector<std::pair<long, std::vector<Rational>>> rows;
  long lo = 0, hi = 0;
  for (long i = 0; i <= ch.n; ++i) {
    rows.push_back(plan.h_row(g0 + i));
    long s = rows.back().first;
    if (i == 0 || s < lo) lo = s;
    if (i == 0 || s + ch.r > hi) hi = s + ch.r;
  }
  SmoothingMatrix H;
  H.entries = Matrix<Rational>(rows.size(), static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& [s, w] = rows[i];
    for (std::size_t j = 0; j < w.size(); ++j)
      H.entries(i, static_cast<std::size_t>(s - lo) + j) = w[j];
    H.row_labels.push_back("b" + detail::window_label(plan.window(g0 + static_cast<long>(i))));
  }
  for (long j = lo; j <= hi; ++j) {
    H.sample_columns.push_back(j);
    H.col_labels.push_back("a" + std::to_string(j));
  }
  return H;
}

inline std::vector<SmoothingMatrix> knot_insertion_chain(const Characteristic& ch,
                                                         const SmoothingOptions& opt = {},
                                                         long segment = 0) {
  detail::Plan plan(ch, opt);
  auto steps = detail::insertion_chain(plan.local_knots(segment), plan.node(segment),
                                       plan.node(segment + 1), ch.n);
  std::vector<SmoothingMatrix> out;
  for (auto& st : steps) {
    SmoothingMatrix m;
    m.entries = st.K;
    for (const auto& w : st.to) m.row_labels.push_back(detail::window_label(w));
    for (const auto& w : st.from) m.col_labels.push_back(detail::window_label(w));
    out.push_back(std::move(m));
  }
  if (out.empty()) {
    SmoothingMatrix id;
    id.entries = Matrix<Rational>::identity(static_cast<std::size_t>(ch.n + 1));
    for (const auto& w : detail::windows_of(plan.local_knots(segment), ch.n)) {
      id.row_labels.push_back(detail::window_label(w));
      id.col_labels.push_back(detail::window_label(w));
    }
    out.push_back(std::move(id));
  }
  return out;
}

// C = K_last ... K_1 H: Bezier points of one segment from the samples.
inline SmoothingMatrix smoothing_matrix(const Characteristic& ch,
                                        const SmoothingOptions& opt = {}, long segment = 0) {
  SmoothingMatrix H = h_matrix(ch, opt, segment);
  Matrix<Rational> C = H.entries;
  for (const auto& K : knot_insertion_chain(ch, opt, segment)) C = K.entries * C;
  // Drop sample columns that no Bezier point uses.
  auto zero_col = [&](std::size_t j) {
    for (std::size_t i = 0; i < C.rows(); ++i)
      if (C(i, j).sign() != 0) return false;
    return true;
  };
  std::size_t lo = 0, hi = C.cols();
  while (lo + 1 < hi && zero_col(lo)) ++lo;
  while (hi - 1 > lo && zero_col(hi - 1)) --hi;
  SmoothingMatrix out;
  out.entries = Matrix<Rational>(C.rows(), hi - lo);
  for (std::size_t i = 0; i < C.rows(); ++i)
    for (std::size_t j = lo; j < hi; ++j) out.entries(i, j - lo) = C(i, j);
  for (int k = 0; k <= ch.n; ++k) out.row_labels.push_back("c" + std::to_string(k));
  out.col_labels.assign(H.col_labels.begin() + lo, H.col_labels.begin() + hi);
  out.sample_columns.assign(H.sample_columns.begin() + lo, H.sample_columns.begin() + hi);
  return out;
}

template <class S>
S from_rational(const Rational& v) {
  if constexpr (std::is_same_v<S, Rational>)
    return v;
  else
    return static_cast<S>(v.to_double());
}

// Bezier segments over every node gap of the samples, windows clamped at the ends.
template <class S>
std::vector<ControlPolygon<S>> smooth(const Characteristic& ch,
                                      const std::vector<Point<S>>& samples,
                                      SmoothingOptions opt = {}) {
  if (samples.size() < 2) throw DomainError("smooth: need at least two samples");
  if (!opt.nodes.empty() && opt.nodes.size() != samples.size())
    throw DomainError("smooth: node count must match sample count");
  opt.sample_count = static_cast<long>(samples.size());
  std::vector<ControlPolygon<S>> out;
  detail::Plan plan(ch, opt);
  for (long k = 0; k + 1 < static_cast<long>(samples.size()); ++k) {
    SmoothingMatrix C = smoothing_matrix(ch, opt, k);
    ControlPolygon<S> seg;
    seg.t0 = from_rational<S>(plan.node(k));
    seg.t1 = from_rational<S>(plan.node(k + 1));
    const std::size_t dim = samples.front().size();
    for (std::size_t i = 0; i < C.entries.rows(); ++i) {
      Point<S> p(dim, S(0));
      for (std::size_t j = 0; j < C.entries.cols(); ++j) {
        const auto& a = samples[static_cast<std::size_t>(C.sample_columns[j])];
        S w = from_rational<S>(C.entries(i, j));
        for (std::size_t d = 0; d < dim; ++d) p[d] += w * a[d];
      }
      seg.points.push_back(std::move(p));
    }
    out.push_back(std::move(seg));
  }
  return out;
}

namespace detail {

struct TableEntry {
  int n, c, r;
  const char* label;
};

inline const std::map<std::pair<int, int>, TableEntry>& configuration_table() {
  static const std::map<std::pair<int, int>, TableEntry> table = {
      {{4, 2}, {3, 1, 2, ""}},          {{4, 3}, {3, 1, 1, "CR spline"}},
      {{4, 4}, {3, 2, 1, "B-spline"}},  {{6, 2}, {5, 2, 4, ""}},
      {{6, 3}, {5, 3, 3, ""}},          {{6, 4}, {3, 2, 3, "B-spline"}},
      {{6, 5}, {4, 3, 1, "B-spline"}},  {{6, 6}, {5, 4, 1, "B-spline"}},
      {{8, 2}, {7, 3, 6, ""}},          {{8, 3}, {5, 3, 5, ""}},
      {{8, 4}, {7, 5, 4, ""}},          {{8, 5}, {4, 3, 3, "B-spline"}},
      {{8, 6}, {5, 4, 3, "B-spline"}},  {{10, 2}, {9, 4, 8, ""}},
      {{10, 3}, {8, 5, 7, ""}},         {{10, 4}, {7, 5, 6, ""}},
      {{10, 5}, {9, 7, 5, ""}},         {{10, 6}, {5, 4, 5, "B-spline"}},
      {{12, 2}, {11, 5, 10, "Riabenki"}}, {{12, 3}, {11, 7, 9, ""}},
      {{12, 4}, {11, 8, 8, ""}},        {{12, 5}, {9, 7, 7, ""}},
      {{12, 6}, {11, 9, 6, ""}},        {{14, 3}, {11, 7, 11, ""}},
      {{14, 4}, {11, 8, 10, ""}},       {{14, 5}, {9, 7, 9, ""}},
      {{14, 6}, {11, 9, 8, ""}},        {{16, 3}, {14, 9, 13, ""}},
      {{16, 4}, {15, 11, 12, ""}},      {{16, 5}, {14, 11, 11, ""}},
      {{16, 6}, {11, 9, 10, ""}},       {{18, 3}, {17, 11, 15, ""}},
      {{18, 4}, {15, 11, 14, ""}},      {{18, 5}, {14, 11, 13, ""}},
      {{18, 6}, {17, 14, 12, ""}},      {{20, 3}, {17, 11, 17, ""}},
      {{20, 4}, {19, 14, 16, ""}},      {{20, 5}, {19, 15, 15, ""}},
      {{20, 6}, {17, 14, 14, ""}},
  };
  return table;
}

}  // namespace detail

// Printed configuration when tabulated, otherwise r = q - s, n = s p - 1, c = n - p.
inline Characteristic configuration(int q, int s) {
  const auto& table = detail::configuration_table();
  if (auto it = table.find({q, s}); it != table.end()) {
    const auto& e = it->second;
    return {e.n, e.c, e.r, q, s, true, e.label};
  }
  if (s < 1 || q <= s) throw DomainError("configuration: need q > s >= 1 off the table");
  const int r = q - s;
  for (int p = 1; p <= q; ++p) {
    const int n = s * p - 1;
    const int c = n - p;
    if (n >= r && c >= 0) {
      Characteristic ch{n, c, r, q, s, false, ""};
      ch.validate();
      return ch;
    }
  }
  throw DomainError("configuration: unsupported (q, s)");
}

// Damped square-wave series with nested ratios (p-i)/(p+i).
inline double trig_smooth_value(int p, double phi) {
  if (p < 1) throw DomainError("trig_smooth: p must be >= 1");
  double acc = 0;
  for (int i = p - 1; i >= 1; --i) {
    const double term = std::cos((2 * i + 1) * phi) / (2 * i + 1);
    acc = static_cast<double>(p - i) / (p + i) * (term - acc);
  }
  return std::cos(phi) - acc;
}

inline std::vector<double> trig_smooth(int p, const std::vector<double>& phi_grid) {
  std::vector<double> out;
  out.reserve(phi_grid.size());
  for (double phi : phi_grid) out.push_back(trig_smooth_value(p, phi));
  return out;
}

inline std::vector<double> fourier_square_wave(int terms, const std::vector<double>& phi_grid) {
  if (terms < 1) throw DomainError("fourier_square_wave: terms must be >= 1");
  std::vector<double> out;
  for (double phi : phi_grid) {
    double acc = 0;
    for (int i = 0; i < terms; ++i)
      acc += (i % 2 ? -1.0 : 1.0) * std::cos((2 * i + 1) * phi) / (2 * i + 1);
    out.push_back(acc);
  }
  return out;
}

}  // namespace casteljau
