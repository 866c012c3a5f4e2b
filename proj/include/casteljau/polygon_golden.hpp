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
#include <casteljau/polynomial.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace casteljau {

// Anti-triangular ones matrix of order n: entry (i,j) is 1 iff i+j >= n-1.
inline Matrix<BigInt> golden_matrix(std::size_t n) {
  if (n < 2) throw DomainError("golden_matrix: order must be >= 2");
  Matrix<BigInt> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = (i + j + 1 >= n) ? 1 : 0;
  return m;
}

inline Matrix<BigInt> golden_power(std::size_t n, unsigned k) {
  return matrix_power(golden_matrix(n), k);
}

// Last row of M^k divided by its first entry.
inline std::vector<Rational> diagonal_ratios(std::size_t n, unsigned k) {
  if (k < 1) throw DomainError("diagonal_ratios: k must be >= 1");
  const auto p = golden_power(n, k);
  std::vector<Rational> out;
  for (std::size_t j = 0; j < n; ++j) out.emplace_back(p(n - 1, j), p(n - 1, 0));
  return out;
}

// d_k = sin(k pi / N) / sin(pi / N); d_0 = 0 and d_k = d_{N-k}.
inline double polygon_diagonal(int N, int k) {
  if (N < 3) throw DomainError("polygon_diagonal: N must be >= 3");
  const double a = std::numbers::pi / N;
  return std::sin(k * a) / std::sin(a);
}

// d_1..d_n of the regular (2n+1)-gon.
inline std::vector<double> trig_diagonals(std::size_t n) {
  std::vector<double> d;
  for (std::size_t k = 1; k <= n; ++k)
    d.push_back(polygon_diagonal(static_cast<int>(2 * n + 1), static_cast<int>(k)));
  return d;
}

struct PtolemyCheck {
  std::vector<double> ratios;
  std::vector<double> residuals;  // ratio minus the first ratio
  double max_residual() const {
    double m = 0;
    for (double r : residuals) m = std::max(m, std::fabs(r));
    return m;
  }
};

// Golden-ratio chain for N = p + q + r. The telescoped form needs q to be
// the middle index (N-1)/2, so p + r = q + 1.
inline PtolemyCheck ptolemy_identities(int N, int p, int q, int r,
                                       const std::vector<double>& diag = {}) {
  if (N < 3 || N % 2 == 0) throw DomainError("ptolemy: N must be odd and >= 3");
  if (p < 1 || q < 1 || r < 1 || p + q + r != N)
    throw DomainError("ptolemy: need positive p, q, r with p + q + r = N");
  if (q != (N - 1) / 2) throw DomainError("ptolemy: q must equal (N-1)/2");
  auto d = [&](int k) {
    k = ((k % N) + N) % N;
    if (k > N / 2) k = N - k;
    if (k == 0) return 0.0;
    if (!diag.empty()) {
      if (static_cast<std::size_t>(k) > diag.size())
        throw DomainError("ptolemy: diagonal index out of range");
      return diag[k - 1];
    }
    return polygon_diagonal(N, k);
  };
  PtolemyCheck c;
  for (int j = 0; j + 2 <= r; ++j) c.ratios.push_back((d(r - j) - d(r - j - 1)) / d(p + j));
  c.ratios.push_back(d(1) / d(q));
  double sum = 0;
  for (int i = std::min(p, q); i <= std::max(p, q); ++i) sum += d(i);
  c.ratios.push_back(d(r) / sum);
  for (double x : c.ratios) c.residuals.push_back(x - c.ratios.front());
  return c;
}

struct HeptagonDiagonals {
  double u, d, t;
};

inline HeptagonDiagonals heptagon_diagonals() {
  return {polygon_diagonal(7, 1), polygon_diagonal(7, 2), polygon_diagonal(7, 3)};
}

// Roots of x^3 + x^2 - 2x - 1: t/d, -u/t, -d/u.
inline std::vector<double> heptagon_cubic_roots() {
  const auto h = heptagon_diagonals();
  return {h.t / h.d, -h.u / h.t, -h.d / h.u};
}

// ---------------------------------------------------------------------------
// Generalised Euclid: repeatedly subtract the second largest value from the
// largest as often as possible.

struct EuclidStep {
  std::size_t minuend = 0;     // slot reduced
  std::size_t subtrahend = 0;  // slot subtracted
  BigInt count = 0;
  char minuend_label = 'A';
  char subtrahend_label = 'B';
  bool vanished = false;        // exact relation found, slot dropped
  std::vector<BigInt> relation; // integer combination of inputs equal to zero
  std::vector<BigInt> multipliers;  // updated Hermite column for the subtrahend
};

template <class S>
struct EuclidTrace {
  std::vector<S> inputs;
  std::vector<EuclidStep> steps;
  std::vector<S> values;     // current values per slot (zero when dropped)
  Matrix<BigInt> hermite;    // inputs = hermite * values
  std::optional<std::string> period;
  std::size_t period_start = 0;
  std::size_t period_length = 0;
  std::optional<S> period_scale;  // values after one period / before
  std::optional<S> gcd;           // last survivor when everything else vanished

  // Quotients of the two-value case, one per step.
  std::vector<BigInt> quotients() const {
    std::vector<BigInt> q;
    for (const auto& s : steps) q.push_back(s.count);
    return q;
  }
};

namespace detail {

inline BigInt floor_ratio(const Rational& a, const Rational& b, double) { return (a / b).floor(); }

inline BigInt floor_ratio(double a, double b, double tol) {
  return BigInt(static_cast<long long>(std::floor(a / b * (1 + tol))));
}

template <class S>
bool is_negligible(const S& r, const S& ref, double tol) {
  if constexpr (ScalarTraits<S>::exact) {
    (void)ref;
    (void)tol;
    return r.sign() <= 0;
  } else {
    return r <= tol * ref;
  }
}

template <class S>
S big_to_scalar(const BigInt& v) {
  if constexpr (ScalarTraits<S>::exact)
    return S(v);
  else
    return static_cast<double>(v);
}

inline std::string pattern_label(const std::vector<EuclidStep>& steps, std::size_t from,
                                 std::size_t len) {
  std::string s;
  for (std::size_t i = from; i < from + len; ++i) {
    s += steps[i].minuend_label;
    if (steps[i].count > 1) s += steps[i].count.str();
  }
  return s;
}

}  // namespace detail

template <class S>
EuclidTrace<S> generalized_euclid(const std::vector<S>& values, std::size_t max_steps,
                                  double tol = 1e-12, double period_tol = 1e-10) {
  const std::size_t n = values.size();
  if (n < 2) throw DomainError("generalized_euclid: need at least two values");
  for (const auto& v : values)
    if (!(v > S(0))) throw DomainError("generalized_euclid: values must be positive");

  EuclidTrace<S> tr;
  tr.inputs = values;
  tr.values = values;
  tr.hermite = Matrix<BigInt>::identity(n);
  Matrix<BigInt> dirichlet = Matrix<BigInt>::identity(n);  // values = dirichlet * inputs

  std::vector<std::size_t> alive(n);
  for (std::size_t i = 0; i < n; ++i) alive[i] = i;
  auto sorted_slots = [&] {
    auto o = alive;
    std::stable_sort(o.begin(), o.end(),
                     [&](std::size_t a, std::size_t b) { return tr.values[a] > tr.values[b]; });
    return o;
  };
  // Lineage letters follow the initial decreasing order.
  std::vector<char> label(n);
  {
    auto o = sorted_slots();
    for (std::size_t r = 0; r < n; ++r) label[o[r]] = static_cast<char>('A' + r);
  }

  struct Snapshot {
    std::vector<char> order;
    std::vector<S> normalized;
    S top;
  };
  std::vector<Snapshot> history;
  auto snapshot = [&] {
    Snapshot s;
    auto o = sorted_slots();
    s.top = tr.values[o.front()];
    for (auto k : o) {
      s.order.push_back(label[k]);
      s.normalized.push_back(tr.values[k] / s.top);
    }
    return s;
  };
  auto same = [&](const Snapshot& a, const Snapshot& b) {
    if (a.order != b.order) return false;
    for (std::size_t i = 0; i < a.normalized.size(); ++i) {
      if constexpr (ScalarTraits<S>::exact) {
        if (a.normalized[i] != b.normalized[i]) return false;
      } else {
        if (std::fabs(a.normalized[i] - b.normalized[i]) > period_tol) return false;
      }
    }
    return true;
  };
  history.push_back(snapshot());

  for (std::size_t step = 0; step < max_steps && alive.size() >= 2; ++step) {
    auto o = sorted_slots();
    const std::size_t a = o[0], b = o[1];
    BigInt c = detail::floor_ratio(tr.values[a], tr.values[b], tol);
    if (c < 1) c = 1;
    S rem = tr.values[a] - detail::big_to_scalar<S>(c) * tr.values[b];

    EuclidStep st;
    st.minuend = a;
    st.subtrahend = b;
    st.count = c;
    st.minuend_label = label[a];
    st.subtrahend_label = label[b];
    for (std::size_t i = 0; i < n; ++i) {
      tr.hermite(i, b) += c * tr.hermite(i, a);
      dirichlet(a, i) -= c * dirichlet(b, i);
    }
    st.multipliers = tr.hermite.col(b);
    if (detail::is_negligible(rem, tr.values[b], tol)) {
      st.vanished = true;
      st.relation = dirichlet.row(a);
      tr.values[a] = S(0);
      alive.erase(std::find(alive.begin(), alive.end(), a));
    } else {
      tr.values[a] = rem;
    }
    tr.steps.push_back(std::move(st));

    if (alive.size() < 2) break;
    history.push_back(snapshot());
    if (!tr.period) {
      const auto& now = history.back();
      for (std::size_t i = 0; i + 1 < history.size(); ++i) {
        if (same(history[i], now)) {
          tr.period_start = i;
          tr.period_length = history.size() - 1 - i;
          tr.period = detail::pattern_label(tr.steps, i, tr.period_length);
          tr.period_scale = now.top / history[i].top;
          break;
        }
      }
    }
  }
  if (alive.size() == 1) tr.gcd = tr.values[alive.front()];
  return tr;
}

// ---------------------------------------------------------------------------
// Double-entry storage table for the heptagon: columns are coefficient
// vectors over (t, d, u), updated cyclically by b+=c, a+=b, b+=a, c+=b.

struct StorageTable {
  std::vector<std::string> column_labels;
  std::vector<std::string> row_labels;
  std::vector<std::vector<BigInt>> rows;  // rows[r][col]
};

inline StorageTable storage_table(std::size_t n_steps) {
  using V = std::vector<BigInt>;
  V c{1, 0, 0}, b{0, 1, 0}, a{0, 0, 1};
  std::vector<V> cols{c, b, a};
  StorageTable tab;
  tab.column_labels = {"c", "b", "a"};
  static const char* names[] = {"b+c", "a+b", "b+a", "c+b"};
  for (std::size_t s = 0; s < n_steps; ++s) {
    V* target = nullptr;
    const V* add = nullptr;
    switch (s % 4) {
      case 0: target = &b; add = &c; break;
      case 1: target = &a; add = &b; break;
      case 2: target = &b; add = &a; break;
      default: target = &c; add = &b; break;
    }
    for (int i = 0; i < 3; ++i) (*target)[i] += (*add)[i];
    cols.push_back(*target);
    tab.column_labels.push_back(names[s % 4]);
  }
  // functionals over (t, d, u)
  struct F {
    const char* name;
    int t, d, u;
  };
  static const F fs[] = {{"t", 1, 0, 0},     {"d", 0, 1, 0},     {"u", 0, 0, 1},
                         {"t-d", 1, -1, 0},  {"d-u", 0, 1, -1},  {"2u-d", 0, -1, 2},
                         {"2d-u-t", -1, 2, -1}};
  for (const auto& f : fs) {
    tab.row_labels.push_back(f.name);
    std::vector<BigInt> r;
    for (const auto& col : cols) r.push_back(f.t * col[0] + f.d * col[1] + f.u * col[2]);
    tab.rows.push_back(std::move(r));
  }
  return tab;
}

// Matrix taking (c, b, a) to the columns after one full cycle.
inline Matrix<BigInt> storage_cycle_matrix() {
  const auto tab = storage_table(4);
  Matrix<BigInt> m(3, 3);
  // final c, b, a are columns 6, 5, 4 (c+b, b+a, a+b)
  const std::size_t src[3] = {6, 5, 4};
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i) m(i, j) = tab.rows[i][src[j]];
  return m;
}

// det(M - xI) by interpolating exact determinants at x = 0..n.
inline IntPolynomial characteristic_poly(const Matrix<BigInt>& m) {
  if (m.rows() != m.cols()) throw DomainError("characteristic_poly: matrix must be square");
  const std::size_t n = m.rows();
  std::vector<Rational> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    Matrix<BigInt> s = m;
    for (std::size_t i = 0; i < n; ++i) s(i, i) -= BigInt(k);
    xs.emplace_back(static_cast<long long>(k));
    ys.emplace_back(n ? determinant(s) : BigInt(1));
  }
  // Newton divided differences, then expand.
  std::vector<Rational> dd = ys;
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = n; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  std::vector<Rational> poly{dd[n]};
  for (std::size_t j = n; j-- > 0;) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * xs[j];
    }
    next[0] += dd[j];
    poly = std::move(next);
  }
  std::vector<BigInt> out;
  for (const auto& c : poly) {
    if (!c.is_integer()) throw DomainError("characteristic_poly: non-integer coefficient");
    out.push_back(c.num());
  }
  return IntPolynomial(std::move(out));
}

// ---------------------------------------------------------------------------
// Real/virtual sequences: V_{k+1/2} = V_{k-1/2} + R_k, R_{k+1} = R_{k-1} + V_{k+1/2}.

struct RVSequences {
  std::vector<BigInt> r;  // r[i] = R_{i-1}
  std::vector<BigInt> v;  // v[i] = V_{i-1/2}

  const BigInt& R(int k) const { return r.at(static_cast<std::size_t>(k + 1)); }
  // V_{k+1/2}
  const BigInt& V(int k) const { return v.at(static_cast<std::size_t>(k + 1)); }

  // The block form of M^k.
  Matrix<BigInt> block(int k) const {
    return {{R(k - 1), V(k - 1), R(k)},
            {V(k - 1), R(k - 1) + R(k), V(k)},
            {R(k), V(k), R(k + 1)}};
  }
};

inline RVSequences rv_sequences(int k_max) {
  if (k_max < 1) throw DomainError("rv_sequences: k_max must be >= 1");
  RVSequences s;
  s.r = {1, 0};  // R_{-1}, R_0
  s.v = {0};     // V_{-1/2}
  for (int k = 0; k <= k_max; ++k) {
    s.v.push_back(s.v.back() + s.R(k));                 // V_{k+1/2}
    s.r.push_back(s.R(k - 1) + s.V(k));                 // R_{k+1}
  }
  return s;
}

// ---------------------------------------------------------------------------
// DH stripe: H blocks by column recurrences, D blocks by row recurrences.

struct DHBlocks {
  std::vector<Matrix<BigInt>> H;
  std::vector<Matrix<BigInt>> D;
};

inline Matrix<BigInt> dh_seed() {
  return {{0, 0, 0, 1}, {1, 0, 1, 1}, {-1, 1, 0, 0}, {1, 0, 1, 0}};
}

inline DHBlocks dh_blocks(std::size_t k_max) {
  const auto seed = dh_seed();
  std::vector<std::vector<BigInt>> h, d;
  for (std::size_t j = 0; j < 4; ++j) h.push_back(seed.col(j));
  for (std::size_t i = 0; i < 4; ++i) d.push_back(seed.row(i));
  auto add = [](const std::vector<BigInt>& x, const std::vector<BigInt>& y, int sy) {
    std::vector<BigInt> z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + sy * y[i];
    return z;
  };
  for (std::size_t blk = 1; blk <= k_max; ++blk) {
    const std::size_t b = 4 * (blk - 1);
    h.push_back(add(h[b + 2], h[b + 3], 1));
    h.push_back(add(h[b + 1], h[b + 4], 1));
    h.push_back(add(h[b + 4], h[b + 5], 1));
    h.push_back(add(h[b + 3], h[b + 6], 1));
    d.push_back(add(d[b + 0], d[b + 3], -1));
    d.push_back(add(d[b + 3], d[b + 2], -1));
    d.push_back(add(d[b + 2], d[b + 5], -1));
    d.push_back(add(d[b + 5], d[b + 4], -1));
  }
  DHBlocks out;
  for (std::size_t blk = 0; blk <= k_max; ++blk) {
    Matrix<BigInt> H(4, 4), D(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        H(i, j) = h[4 * blk + j][i];
        D(i, j) = d[4 * blk + i][j];
      }
    out.H.push_back(std::move(H));
    out.D.push_back(std::move(D));
  }
  return out;
}

}  // namespace casteljau
