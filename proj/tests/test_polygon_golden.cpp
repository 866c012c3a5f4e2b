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

#include <casteljau/polygon_golden.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "support.hpp"

namespace cj = casteljau;
using cj::BigInt;
using cj::Matrix;
using cj::Rational;

namespace {

Matrix<BigInt> big(std::initializer_list<std::initializer_list<long long>> rows) {
  Matrix<BigInt> m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST(GoldenMatrix, SmallOrders) {
  EXPECT_EQ(cj::golden_matrix(2), big({{0, 1}, {1, 1}}));
  EXPECT_EQ(cj::golden_matrix(3), big({{0, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
  EXPECT_EQ(cj::golden_matrix(4),
            big({{0, 0, 0, 1}, {0, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 1, 1}}));
  EXPECT_THROW(cj::golden_matrix(1), cj::DomainError);
}

TEST(GoldenMatrix, HeptagonPowers) {
  EXPECT_EQ(cj::golden_power(3, 0), Matrix<BigInt>::identity(3));
  EXPECT_EQ(cj::golden_power(3, 2), big({{1, 1, 1}, {1, 2, 2}, {1, 2, 3}}));
  EXPECT_EQ(cj::golden_power(3, 6), big({{14, 25, 31}, {25, 45, 56}, {31, 56, 70}}));
  const auto r = cj::diagonal_ratios(3, 6);
  EXPECT_EQ(r[0], Rational(1));
  EXPECT_EQ(r[1], Rational(56, 31));
  EXPECT_EQ(r[2], Rational(70, 31));
}

TEST(GoldenMatrix, FibonacciForPentagon) {
  BigInt a = 0, b = 1;
  for (unsigned k = 1; k <= 40; ++k) {
    const BigInt c = a + b;
    a = b;
    b = c;
    // M^k = [[F(k-1), F(k)], [F(k), F(k+1)]]
    EXPECT_EQ(cj::golden_power(2, k)(1, 1), b) << k;
  }
}

TEST(GoldenMatrix, RatiosApproachDiagonals) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto d = cj::trig_diagonals(n);
    const auto r = cj::diagonal_ratios(n, 30);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(r[i].to_double(), d[i] / d[0], 1e-9);
  }
}

TEST(GoldenMatrix, PowersSymmetric) {
  for (std::size_t n = 2; n <= 6; ++n)
    for (unsigned k = 0; k <= 30; ++k) EXPECT_TRUE(cj::golden_power(n, k).is_symmetric());
}

TEST(GoldenMatrix, ConvergenceIsMonotone) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto d = cj::trig_diagonals(n);
    double prev = INFINITY;
    for (unsigned k = 3; k <= 25; ++k) {
      const auto r = cj::diagonal_ratios(n, k);
      double err = 0;
      for (std::size_t i = 0; i < n; ++i)
        err = std::max(err, std::fabs(r[i].to_double() - d[i] / d[0]));
      EXPECT_LE(err, prev + 1e-15) << "n=" << n << " k=" << k;
      prev = err;
    }
  }
}

TEST(Ptolemy, AllPartitions) {
  for (int N : {3, 5, 7, 9, 11}) {
    const int q = (N - 1) / 2;
    for (int p = 1; p <= q; ++p) {
      const auto c = cj::ptolemy_identities(N, p, q, q + 1 - p);
      EXPECT_LT(c.max_residual(), 1e-12) << N << " " << p;
    }
  }
}

TEST(Ptolemy, PentagonIsGolden) {
  const double phi = std::numbers::phi;
  EXPECT_NEAR(cj::polygon_diagonal(5, 2), phi, 1e-14);
  const auto c = cj::ptolemy_identities(5, 1, 2, 2);
  EXPECT_NEAR(c.ratios.front(), 1 / phi, 1e-14);
}

TEST(Ptolemy, RejectsBadPartitions) {
  EXPECT_THROW(cj::ptolemy_identities(7, 1, 2, 4), cj::DomainError);
  EXPECT_THROW(cj::ptolemy_identities(8, 2, 3, 3), cj::DomainError);
  EXPECT_THROW(cj::ptolemy_identities(7, 0, 3, 4), cj::DomainError);
}

TEST(Heptagon, ChainOfRatios) {
  const auto h = cj::heptagon_diagonals();
  const double r = h.u / h.t;
  EXPECT_NEAR((h.t - h.d) / h.u, r, 1e-14);
  EXPECT_NEAR((h.d - h.u) / h.d, r, 1e-14);
  EXPECT_NEAR(h.t / (h.u + h.d + h.t), r, 1e-14);
}

TEST(Heptagon, CubicRoots) {
  const auto x = cj::heptagon_cubic_roots();
  double sum = 0, prod = 1;
  for (double v : x) {
    EXPECT_NEAR(v * v * v + v * v - 2 * v - 1, 0, 1e-13);
    sum += v;
    prod *= v;
  }
  EXPECT_NEAR(sum, -1, 1e-13);
  EXPECT_NEAR(prod, 1, 1e-13);
}

TEST(GeneralizedEuclid, TwoValuesMatchEuclid) {
  const auto tr = cj::generalized_euclid<Rational>({Rational(99), Rational(70)}, 50);
  EXPECT_EQ(tr.quotients(), cj::euclid(BigInt(99), BigInt(70)).quotients.quotients);
  ASSERT_TRUE(tr.gcd);
  EXPECT_EQ(*tr.gcd, Rational(1));
  ASSERT_TRUE(tr.steps.back().vanished);
  // relation: 70*99 - 99*70 up to sign
  const auto& rel = tr.steps.back().relation;
  EXPECT_EQ(rel[0] * 99 + rel[1] * 70, 0);
}

TEST(GeneralizedEuclid, RandomPairsMatchEuclid) {
  cj::testing::Gen g(11);
  for (int i = 0; i < 200; ++i) {
    const long long a = g.integer(1, 5000), b = g.integer(1, 5000);
    const auto tr = cj::generalized_euclid<Rational>({Rational(a), Rational(b)}, 200);
    const auto e = cj::euclid(BigInt(std::max(a, b)), BigInt(std::min(a, b)));
    EXPECT_EQ(tr.quotients(), e.quotients.quotients) << a << " " << b;
    ASSERT_TRUE(tr.gcd);
    EXPECT_EQ(*tr.gcd, Rational(e.gcd));
  }
}

TEST(GeneralizedEuclid, HermiteInvariant) {
  const std::vector<Rational> in{Rational(1001), Rational(715), Rational(455)};
  const auto tr = cj::generalized_euclid(in, 100);
  for (std::size_t i = 0; i < 3; ++i) {
    Rational s(0);
    for (std::size_t j = 0; j < 3; ++j) s += Rational(tr.hermite(i, j)) * tr.values[j];
    EXPECT_EQ(s, in[i]);
  }
  ASSERT_TRUE(tr.gcd);
  EXPECT_EQ(*tr.gcd, Rational(13));
}

TEST(GeneralizedEuclid, HeptagonPeriod) {
  const auto h = cj::heptagon_diagonals();
  const auto tr = cj::generalized_euclid<double>({h.t, h.d, h.u}, 40);
  ASSERT_TRUE(tr.period);
  EXPECT_EQ(*tr.period, "ABCB");
  ASSERT_TRUE(tr.period_scale);
  EXPECT_NEAR(*tr.period_scale, h.u * h.u / (h.t * h.t), 1e-10);
  EXPECT_FALSE(tr.gcd);
}

TEST(GeneralizedEuclid, LogarithmMultipliers) {
  const std::vector<double> in{std::log(2.0), std::log(3.0), std::log(5.0), std::log(7.0)};
  const auto tr = cj::generalized_euclid(in, 40);
  const std::vector<BigInt> want{171, 271, 397, 480};
  bool found = false;
  for (const auto& s : tr.steps) found = found || s.multipliers == want;
  EXPECT_TRUE(found);
}

TEST(GeneralizedEuclid, RejectsBadInput) {
  EXPECT_THROW(cj::generalized_euclid<double>({1.0}, 5), cj::DomainError);
  EXPECT_THROW(cj::generalized_euclid<double>({1.0, -2.0}, 5), cj::DomainError);
}

TEST(StorageTable, Rows) {
  const auto tab = cj::storage_table(4);
  const std::vector<std::vector<long long>> want{
      {1, 0, 0, 1, 1, 2, 3},    {0, 1, 0, 1, 1, 2, 2},  {0, 0, 1, 0, 1, 1, 1},
      {1, -1, 0, 0, 0, 0, 1},   {0, 1, -1, 1, 0, 1, 1}, {0, -1, 2, -1, 1, 0, 0},
      {-1, 2, -1, 1, 0, 1, 0}};
  ASSERT_EQ(tab.rows.size(), want.size());
  for (std::size_t r = 0; r < want.size(); ++r)
    for (std::size_t c = 0; c < 7; ++c) EXPECT_EQ(tab.rows[r][c], want[r][c]) << r << "," << c;
  EXPECT_EQ(tab.row_labels[6], "2d-u-t");
  EXPECT_EQ(tab.column_labels[3], "b+c");
  EXPECT_EQ(cj::storage_table(0).rows[0].size(), 3u);
}

TEST(StorageTable, CycleCharacteristic) {
  EXPECT_EQ(cj::characteristic_poly(cj::storage_cycle_matrix()),
            cj::IntPolynomial({1, -5, 6, -1}));
  EXPECT_EQ(cj::characteristic_poly(Matrix<BigInt>::identity(2)), cj::IntPolynomial({1, -2, 1}));
}

TEST(StorageTable, RelationInverse) {
  const auto m = big({{3, 2, 1}, {2, 2, 1}, {1, 1, 1}});
  const auto inv = big({{1, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  EXPECT_EQ(m * inv, Matrix<BigInt>::identity(3));
  EXPECT_EQ(inv * m, Matrix<BigInt>::identity(3));
  // The sign-flipped variant does not invert m.
  const auto flipped = big({{1, -1, 0}, {-1, 2, 1}, {0, 1, 2}});
  EXPECT_NE(m * flipped, Matrix<BigInt>::identity(3));
}

TEST(RVSequences, BlocksArePowers) {
  const auto s = cj::rv_sequences(30);
  for (int k = 1; k <= 28; ++k) EXPECT_EQ(s.block(k), cj::golden_power(3, k)) << k;
  const std::vector<long long> r{1, 0, 1, 1, 3, 6, 14, 31, 70};
  for (int k = -1; k + 1 < static_cast<int>(r.size()); ++k) EXPECT_EQ(s.R(k), r[k + 1]) << k;
  EXPECT_THROW(cj::rv_sequences(0), cj::DomainError);
}

TEST(DHBlocks, Golden) {
  const auto b = cj::dh_blocks(3);
  EXPECT_EQ(b.H[0], cj::dh_seed());
  EXPECT_EQ(b.H[1], big({{1, 1, 2, 3}, {2, 2, 4, 5}, {0, 1, 1, 1}, {1, 1, 2, 2}}));
  EXPECT_EQ(b.H[2], big({{5, 6, 11, 14}, {9, 11, 20, 25}, {2, 3, 5, 6}, {4, 5, 9, 11}}));
  EXPECT_EQ(b.H[3].col(0), (std::vector<BigInt>{25, 45, 11, 20}));
  EXPECT_EQ(b.D[1], big({{-1, 0, -1, 1}, {2, -1, 1, 0}, {-3, 2, -1, 0}, {3, -1, 2, -1}}));
  EXPECT_EQ(b.D[3], big({{-14, 5, -9, 5}, {19, -9, 10, -4}, {-28, 14, -14, 5}, {33, -14, 19, -9}}));
}
