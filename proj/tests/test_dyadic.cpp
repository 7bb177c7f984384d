//  Copyright 2026 The latfix Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include <random>

#include "doctest.h"
#include "latfix/dyadic.hpp"

using latfix::Dyadic;

TEST_CASE("dyadic basics") {
  CHECK(Dyadic::zero().is_zero());
  CHECK(Dyadic::zero() == Dyadic::zero());
  CHECK(Dyadic::pow2(0) == Dyadic::from_uint(1));
  CHECK(Dyadic::pow2(3) == Dyadic::from_uint(8));
  CHECK(Dyadic::pow2(-1).to_double() == doctest::Approx(0.5));
  CHECK(Dyadic::zero() < Dyadic::pow2(-100));
}

TEST_CASE("dyadic addition carries") {
  // 2^-3 + 2^-3 = 2^-2
  CHECK(Dyadic::pow2(-3) + Dyadic::pow2(-3) == Dyadic::pow2(-2));
  // geometric tail: sum of 2^-i for i in [N, 63] + 2^-63 = 2^-(N-1)
  Dyadic s;
  for (int i = 5; i <= 63; ++i) s = s + Dyadic::pow2(-i);
  s = s + Dyadic::pow2(-63);
  CHECK(s == Dyadic::pow2(-4));
}

TEST_CASE("dyadic ordering agrees with doubles at moderate scale") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> exp_pick(-40, 8);
  for (int trial = 0; trial < 500; ++trial) {
    Dyadic a, b;
    double da = 0, db = 0;
    for (int k = 0; k < 6; ++k) {
      int e1 = exp_pick(rng), e2 = exp_pick(rng);
      a = a + Dyadic::pow2(e1);
      da += std::ldexp(1.0, e1);
      b = b + Dyadic::pow2(e2);
      db += std::ldexp(1.0, e2);
    }
    CHECK(Dyadic::cmp(a, b) == (da < db ? -1 : (da > db ? 1 : 0)));
    CHECK(a.to_double() == doctest::Approx(da));
  }
}

TEST_CASE("dyadic scaling") {
  Dyadic x = Dyadic::pow2(-5) + Dyadic::pow2(-9);
  CHECK(x.scaled_pow2(1) == x + x);
  CHECK(x.scaled_pow2(0) == x);
  // canonical numerator stays odd
  CHECK(x.numerator_hex() == "11");  // 2^4 + 1
  CHECK(x.exponent() == -9);
}

TEST_CASE("dyadic huge exponents stay exact") {
  Dyadic a = Dyadic::pow2(-5000) + Dyadic::pow2(-4000);
  Dyadic b = Dyadic::pow2(-4000) + Dyadic::pow2(-5000);
  CHECK(a == b);
  CHECK(Dyadic::pow2(-5001) < Dyadic::pow2(-5000));
  Dyadic s;
  for (int i = 0; i < 3000; ++i) s = s + Dyadic::pow2(-i);
  // 2 - 2^-2999
  CHECK(s < Dyadic::pow2(1));
  CHECK(s + Dyadic::pow2(-2999) == Dyadic::pow2(1));
}
