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

#include <cstdint>
#include <random>
#include <vector>

namespace casteljau::testing {

// Fixed-seed generators so every property run is reproducible.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long long integer(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng_);
  }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  Rational rational(long long lo, long long hi, long long max_den = 12) {
    const long long d = integer(1, max_den);
    return Rational(BigInt(integer(lo * d, hi * d)), BigInt(d));
  }
  Rational nonzero_rational(long long lo, long long hi, long long max_den = 12) {
    Rational r;
    do r = rational(lo, hi, max_den);
    while (r.sign() == 0);
    return r;
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline bool lowest_terms(const Rational& r) {
  return r.den() > 0 && big_gcd(r.num(), r.den()) == 1;
}

}  // namespace casteljau::testing
