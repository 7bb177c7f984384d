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

#ifndef LATFIX_LATTICE_HPP_
#define LATFIX_LATTICE_HPP_

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "latfix/config.hpp"
#include "latfix/element_set.hpp"
#include "latfix/error.hpp"

namespace latfix {

struct LatticeFlags {
  bool distributive = false;
  bool complemented = false;
  bool boolean_algebra = false;
  bool chain = false;
  bool frame = false;  // on a finite lattice the frame law collapses to
                       // binary distributivity, so frame == distributive
  bool trivial = false;
};

class Lattice;
using LatticePtr = std::shared_ptr<const Lattice>;

/// A finite complete lattice over dense element ids 0..n-1, with cached
/// join/meet tables, bottom/top, classification flags, and (when the
/// lattice is complemented) a complement table.
///
/// Canonical id orders are fixed per constructor: power sets use bitmask
/// ids over the ground set, chains ascend 0 < 1 < ... < k-1, and products
/// use mixed-radix row-major ids over the factor list (last factor varies
/// fastest). Instances are immutable after construction and safe to share
/// read-only across threads.
class Lattice {
 public:
  enum class Kind { Explicit, PowerSet, Chain, Product };

  /// Order = reflexive-transitive closure of the cover pairs (u,v), u < v.
  static LatticePtr from_covers(int n,
                                const std::vector<std::pair<int, int>>& covers,
                                const Config& cfg = {});
  static LatticePtr powerset(int ground, const Config& cfg = {});
  static LatticePtr chain(int k, const Config& cfg = {});
  static LatticePtr product(const std::vector<LatticePtr>& factors,
                            const Config& cfg = {});

  int size() const { return n_; }
  bool leq(ElemId a, ElemId b) const { return order_[a].contains(b); }
  ElemId join(ElemId a, ElemId b) const { return join_[idx(a, b)]; }
  ElemId meet(ElemId a, ElemId b) const { return meet_[idx(a, b)]; }
  ElemId bottom() const { return bottom_; }
  ElemId top() const { return top_; }
  const LatticeFlags& flags() const { return flags_; }

  bool has_complement() const { return !complement_.empty(); }
  ElemId complement(ElemId x) const { return complement_[x]; }

  ElemId join_set(const ElementSet& s) const;  // join of empty set = bottom
  ElemId meet_set(const ElementSet& s) const;  // meet of empty set = top

  ElementSet upset(const ElementSet& s) const;
  ElementSet downset(const ElementSet& s) const;
  ElementSet upset(ElemId x) const;
  ElementSet downset(ElemId x) const;

  /// Order reversed, join/meet and bottom/top swapped.
  LatticePtr opposite() const;

  /// Elements x != bottom that are not the join of the elements strictly
  /// below them.
  std::vector<ElemId> join_irreducibles() const;

  /// True when element ids behave as bitmasks: join = bitwise or,
  /// meet = bitwise and, n a power of two. Power-set lattices qualify,
  /// as do products of two-element chains.
  bool ids_are_bitmasks() const;

  Kind kind() const { return kind_; }
  int ground() const { return ground_; }  // power sets only
  const std::vector<LatticePtr>& factors() const { return factors_; }

  bool same_structure(const Lattice& o) const;

 private:
  Lattice() = default;
  size_t idx(ElemId a, ElemId b) const {
    return static_cast<size_t>(a) * n_ + b;
  }
  void finish_from_order();       // derives joins/meets/bounds, validates
  void classify_exhaustive();     // O(n^3) distributivity sweep
  void fill_complement_table();   // leaves table empty if not complemented

  int n_ = 0;
  std::vector<ElementSet> order_;  // order_[a] = set of b with a <= b
  std::vector<ElemId> join_, meet_;
  ElemId bottom_ = 0, top_ = 0;
  std::vector<ElemId> complement_;  // empty iff not complemented
  LatticeFlags flags_;
  Kind kind_ = Kind::Explicit;
  int ground_ = -1;
  std::vector<LatticePtr> factors_;
};

/// Mixed-radix codec for product lattices (row-major: last factor fastest).
struct ProductCodec {
  std::vector<int> radices;

  explicit ProductCodec(const std::vector<int>& r) : radices(r) {}
  static ProductCodec for_product(const Lattice& prod);

  int size() const {
    int s = 1;
    for (int r : radices) s *= r;
    return s;
  }
  ElemId encode(const std::vector<int>& coords) const;
  std::vector<int> decode(ElemId id) const;
};

}  // namespace latfix

#endif  // LATFIX_LATTICE_HPP_
