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

#include <casteljau/numtheory.hpp>

#include <gtest/gtest.h>

#include "support.hpp"

namespace cj = casteljau;
using cj::BigInt;

TEST(Meneard, SmallCases) {
  const auto a = cj::meneard(1);
  EXPECT_EQ(a.str(), "12^3 - 10^3 = 9^3 - 1 = 6^3 + 8^3");
  EXPECT_EQ(cj::meneard(2).str(), "738^3 - 244^3 = 729^3 - 1 = 720^3 + 242^3");
  EXPECT_EQ(cj::meneard(3).str(), "59076^3 - 6562^3 = 59049^3 - 1 = 59022^3 + 6560^3");
  EXPECT_THROW(cj::meneard(0), cj::DomainError);
}

TEST(Meneard, HoldsForLargerN) {
  for (unsigned n = 1; n <= 8; ++n) {
    const auto id = cj::meneard(n);
    EXPECT_TRUE(id.holds()) << n;
    EXPECT_TRUE(id.three_cubes()) << n;
  }
  // n = 8 needs well over 128 bits
  EXPECT_GT(cj::cube(cj::meneard(8).M), BigInt(1) << 128);
}

TEST(ThreeCubes, Examples) {
  EXPECT_TRUE(cj::three_cube_check(243, 9, 729));
  EXPECT_TRUE(cj::three_cube_check(0, 0, 0));
  EXPECT_TRUE(cj::three_cube_check(1, 1, 1));
  EXPECT_FALSE(cj::three_cube_check(2, 1, 1));
}

TEST(ThreeCubes, ReducedFormAgrees) {
  int hits = 0;
  for (long long x = -12; x <= 12; ++x)
    for (long long y = -12; y <= 12; ++y)
      for (long long z = -12; z <= 12; ++z) {
        const bool full = cj::three_cube_check(x, y, z);
        EXPECT_EQ(full, cj::three_cube_reduced(x, y, z)) << x << " " << y << " " << z;
        hits += full;
      }
  EXPECT_GT(hits, 1);
}

TEST(Ramanujan, UnitArguments) {
  const auto a = cj::ramanujan_forms(1, 0);
  EXPECT_TRUE(a.first);
  EXPECT_TRUE(a.second);
  EXPECT_EQ(a.first_values, (std::array<BigInt, 4>{3, 4, 5, 6}));
  EXPECT_EQ(a.second_values, (std::array<BigInt, 4>{1, 12, 9, 10}));
  EXPECT_EQ(cj::cube(BigInt(1)) + cj::cube(BigInt(12)), 1729);
  const auto b = cj::ramanujan_forms(0, 1);
  EXPECT_TRUE(b.first);
  EXPECT_TRUE(b.second);
}

TEST(Ramanujan, RandomArguments) {
  cj::testing::Gen g(22);
  for (int i = 0; i < 500; ++i) {
    const auto r = cj::ramanujan_forms(g.integer(-100, 100), g.integer(-100, 100));
    EXPECT_TRUE(r.first);
    EXPECT_TRUE(r.second);
  }
}

TEST(Ramanujan, SymbolicResidualsVanish) {
  const cj::RamanujanForms f;
  EXPECT_TRUE(f.first_residual().is_zero());
  EXPECT_TRUE(f.second_residual().is_zero());
  // a single wrong coefficient is caught
  auto bad = f;
  bad.first[0] = cj::quadratic_form(3, 5, -4);
  EXPECT_FALSE(bad.first_residual().is_zero());
}

TEST(BiPoly, Arithmetic) {
  const auto X = cj::BiPoly::X(), Y = cj::BiPoly::Y();
  const auto p = (X + Y) * (X - Y);
  EXPECT_TRUE((p - (X * X - Y * Y)).is_zero());
  EXPECT_EQ(cj::cube(X + Y).eval(2, 3), 125);
  EXPECT_EQ(cj::quadratic_form(1, 2, 1).eval(4, -1), 9);
}

TEST(Euler, Parametrization) {
  for (long long u = -6; u <= 6; ++u)
    for (long long v = -6; v <= 6; ++v) EXPECT_TRUE(cj::euler_check(u, v)) << u << "," << v;
  EXPECT_TRUE(cj::halved_meneard_gives_euler());
}
