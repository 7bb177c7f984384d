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

#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "latfix/autonet.hpp"
#include "latfix/lattice.hpp"

using namespace latfix;

namespace {

LatticePtr m3() { return std::get<LatticePtr>(gallery("m3")); }
LatticePtr n5() { return std::get<LatticePtr>(gallery("n5")); }

// brute-force order-isomorphism search, feasible for tiny lattices
bool order_isomorphic(const Lattice& a, const Lattice& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < a.size() && ok; ++x)
      for (int y = 0; y < a.size(); ++y)
        if (a.leq(x, y) != b.leq(perm[x], perm[y])) {
          ok = false;
          break;
        }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("one-element lattice") {
  auto L = Lattice::from_covers(1, {});
  CHECK(L->size() == 1);
  CHECK(L->bottom() == L->top());
  CHECK(L->flags().trivial);
}

TEST_CASE("M3 diamond: valid lattice, not distributive") {
  auto L = m3();
  CHECK(L->size() == 5);
  CHECK_FALSE(L->flags().distributive);
  // the standard witness triple: a ^ (b v c) = a while (a^b) v (a^c) = 0
  CHECK(L->meet(1, L->join(2, 3)) == 1);
  CHECK(L->join(L->meet(1, 2), L->meet(1, 3)) == 0);
}

TEST_CASE("cover cycle rejected") {
  CHECK_THROWS_WITH_AS(Lattice::from_covers(3, {{0, 1}, {1, 0}}),
                       doctest::Contains("cycle"), Error);
}

TEST_CASE("missing bounds rejected") {
  // two incomparable two-element islands: no joins across
  CHECK_THROWS_AS(Lattice::from_covers(2, {}), Error);
  // 4-element "bowtie" without a unique lub for the two minimal elements
  CHECK_THROWS_AS(Lattice::from_covers(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}),
                  Error);
}

TEST_CASE("powerset basics") {
  auto L0 = Lattice::powerset(0);
  CHECK(L0->size() == 1);
  CHECK(L0->flags().trivial);

  auto L2 = Lattice::powerset(2);
  CHECK(L2->size() == 4);
  CHECK(L2->complement(0b01) == 0b10);

  auto L3 = Lattice::powerset(3);
  CHECK(L3->flags().distributive);
  CHECK(L3->flags().complemented);
  CHECK(L3->flags().boolean_algebra);
  CHECK(L3->flags().frame);
  // flags must agree with the exhaustive triple sweep
  CHECK_FALSE(sweep::distributive_violation_serial(*L3).has_value());
  CHECK(sweep::distributive_violation_serial(*m3()).has_value());
}

TEST_CASE("powerset cap") {
  Config tight;
  tight.max_lattice_size = 8;
  CHECK_THROWS_AS(Lattice::powerset(4, tight), Error);
  try {
    Lattice::powerset(4, tight);
  } catch (const Error& e) {
    CHECK(e.code() == Err::SizeCapExceeded);
  }
}

TEST_CASE("chain and product") {
  auto c2 = Lattice::chain(2);
  CHECK(c2->flags().boolean_algebra);
  auto c5 = Lattice::chain(5);
  CHECK(c5->flags().chain);
  CHECK(c5->flags().distributive);
  CHECK_FALSE(c5->flags().complemented);

  auto p = Lattice::product({Lattice::chain(2), Lattice::chain(2)});
  CHECK(order_isomorphic(*p, *Lattice::powerset(2)));
  CHECK(p->flags().boolean_algebra);
  CHECK(p->ids_are_bitmasks());

  auto p33 = Lattice::product({Lattice::chain(3), Lattice::chain(3)});
  CHECK(p33->size() == 9);
  CHECK(p33->flags().distributive);
  CHECK_FALSE(p33->flags().complemented);
  // mixed-radix row-major ids: (x0,x1) -> 3*x0 + x1
  ProductCodec codec = ProductCodec::for_product(*p33);
  CHECK(codec.encode({2, 1}) == 7);
  CHECK(p33->join(codec.encode({1, 0}), codec.encode({0, 2})) ==
        codec.encode({1, 2}));
}

TEST_CASE("join_set and meet_set conventions") {
  auto L = Lattice::powerset(3);
  ElementSet empty(L->size());
  CHECK(L->join_set(empty) == L->bottom());
  CHECK(L->meet_set(empty) == L->top());
  ElementSet s = ElementSet::of(L->size(), {0b001, 0b010});
  CHECK(L->join_set(s) == 0b011);
}

TEST_CASE("upset and downset") {
  auto c4 = Lattice::chain(4);
  CHECK(c4->upset(ElementSet::of(4, {1})) == ElementSet::of(4, {1, 2, 3}));
  auto L = Lattice::powerset(2);
  CHECK(L->downset(ElementSet::of(4, {0b11})).count() == 4);
  CHECK(L->downset(ElementSet::of(4, {L->bottom()})) ==
        ElementSet::of(4, {L->bottom()}));
}

TEST_CASE("classification gallery") {
  CHECK_FALSE(n5()->flags().distributive);
  CHECK_FALSE(m3()->flags().distributive);
  auto c5 = Lattice::chain(5);
  CHECK(c5->flags().chain);
  CHECK_FALSE(c5->flags().complemented);
  for (int n = 0; n <= 5; ++n)
    CHECK(Lattice::powerset(n)->flags().boolean_algebra);
}

TEST_CASE("opposite is an involution") {
  for (auto L : {Lattice::powerset(2), Lattice::chain(3), m3(), n5()}) {
    auto opp = L->opposite();
    CHECK(opp->bottom() == L->top());
    CHECK(opp->join(1, 2) == L->meet(1, 2));
    auto back = opp->opposite();
    CHECK(back->same_structure(*L));
    for (int x = 0; x < L->size(); ++x)
      for (int y = 0; y < L->size(); ++y) CHECK(back->leq(x, y) == L->leq(x, y));
  }
  CHECK(order_isomorphic(*Lattice::powerset(2)->opposite(),
                         *Lattice::powerset(2)));
  // opposite(chain) relabels top and bottom
  auto oc = Lattice::chain(3)->opposite();
  CHECK(oc->bottom() == 2);
  CHECK(oc->top() == 0);
}

TEST_CASE("cached tables satisfy absorption and associativity") {
  for (auto L : {Lattice::powerset(2), Lattice::chain(4), m3(), n5()}) {
    for (int x = 0; x < L->size(); ++x)
      for (int y = 0; y < L->size(); ++y) {
        CHECK(L->join(x, L->meet(x, y)) == x);
        CHECK(L->meet(x, L->join(x, y)) == x);
        for (int z = 0; z < L->size(); ++z) {
          CHECK(L->join(x, L->join(y, z)) == L->join(L->join(x, y), z));
          CHECK(L->meet(x, L->meet(y, z)) == L->meet(L->meet(x, y), z));
        }
      }
  }
}

TEST_CASE("boolean lattices satisfy De Morgan") {
  auto L = Lattice::powerset(3);
  for (int x = 0; x < L->size(); ++x) {
    CHECK(L->complement(L->complement(x)) == x);
    for (int y = 0; y < L->size(); ++y)
      CHECK(L->complement(L->join(x, y)) ==
            L->meet(L->complement(x), L->complement(y)));
  }
}

TEST_CASE("explicit diamond equals powerset classification") {
  // free distributive check on an explicitly-built boolean cube
  auto cube = Lattice::from_covers(
      8, {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3}, {2, 6}, {4, 5},
          {4, 6}, {3, 7}, {5, 7}, {6, 7}});
  CHECK(cube->flags().boolean_algebra);
  CHECK(order_isomorphic(*cube, *Lattice::powerset(3)));
}

TEST_CASE("sampled table laws above the exhaustive cutoff") {
  auto L = Lattice::product(
      {Lattice::chain(5), Lattice::chain(5), Lattice::chain(3)});
  REQUIRE(L->size() == 75);
  std::mt19937_64 rng(251);
  std::uniform_int_distribution<int> pick(0, L->size() - 1);
  for (int t = 0; t < 4000; ++t) {
    int x = pick(rng), y = pick(rng), z = pick(rng);
    CHECK(L->join(x, L->meet(x, y)) == x);
    CHECK(L->meet(x, L->join(x, y)) == x);
    CHECK(L->join(x, L->join(y, z)) == L->join(L->join(x, y), z));
    CHECK(L->meet(x, L->meet(y, z)) == L->meet(L->meet(x, y), z));
  }
}

TEST_CASE("power sets classify boolean up to the default cap") {
  for (int n = 0; n <= 12; ++n) {
    auto L = Lattice::powerset(n);
    CHECK(L->flags().boolean_algebra);
    CHECK(L->flags().frame);
  }
  CHECK_THROWS_AS(Lattice::powerset(13), Error);
}
