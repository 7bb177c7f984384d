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

#ifndef LATFIX_AUTONET_HPP_
#define LATFIX_AUTONET_HPP_

#include <string>
#include <variant>

#include "latfix/digraph.hpp"
#include "latfix/robert.hpp"

namespace latfix {

/// Automata network: one local rule table per coordinate, each total over
/// the full product state space. States are product-lattice ids
/// (mixed-radix, row-major over the coordinate list).
class Network {
 public:
  /// Coordinate alphabets given as chain sizes.
  Network(std::vector<int> alphabets, std::vector<std::vector<int>> rules,
          const Config& cfg = {});
  /// Arbitrary finite lattices per coordinate.
  Network(std::vector<LatticePtr> coords, std::vector<std::vector<int>> rules,
          const Config& cfg = {});

  int coordinate_count() const { return static_cast<int>(coords_.size()); }
  int state_count() const { return product_->size(); }
  const LatticePtr& product_lattice() const { return product_; }
  const std::vector<LatticePtr>& coordinates() const { return coords_; }
  const std::vector<std::vector<int>>& rules() const { return rules_; }

  int local_value(int coord, ElemId state) const {
    return rules_[coord][state];
  }
  ElemId step(ElemId state) const;

  /// The whole network as a self-map on the product lattice.
  LatMap as_latmap() const;
  /// Boolean networks only: the same dynamics on the power set lattice of
  /// the coordinate set, coordinate i carried by bit i.
  LatMap as_powerset_map(const Config& cfg = {}) const;

 private:
  std::vector<LatticePtr> coords_;
  std::vector<std::vector<int>> rules_;
  LatticePtr product_;
};

/// Arc (i,j) present iff some single-coordinate change at i flips the
/// local rule of j.
Digraph interaction_graph(const Network& net);

/// Decided through the finite criterion: the interaction graph is a
/// subgraph of d.
bool depends_on_digraph(const Network& net, const Digraph& d);
/// The definitional sweep over all state pairs and all vertex subsets;
/// exponential, kept as a cross-check oracle for small instances.
bool depends_on_digraph_definitional(const Network& net, const Digraph& d);

/// Acyclic interaction graph: build the topological vertex order, lift its
/// prefix sets to product-lattice elements and certify nilpotent(n) via
/// the stepwise sweep. NotAcyclic carries a cycle witness.
Certificate robert_original(const Network& net, const Config& cfg = {});

/// Inflationary peeling from i: repeat s <- s union {v : in(v) subset s}
/// n times; i is a feedback vertex set iff everything gets peeled.
bool fvs_check(const Digraph& d, const std::vector<int>& fvs);
/// Product of the fvs coordinate alphabet sizes, with the injectivity of
/// the fvs projection on Fix verified. NotAnFVS otherwise.
FeedbackReport feedback_original(const Network& net, const std::vector<int>& fvs,
                                 const Config& cfg = {});

/// Digraph lifted to a graph on a product lattice: collapse each
/// coordinate to bottom/nonbottom, apply the in-neighbourhood map, then
/// re-embed with per-coordinate tops. Pre-meet dependency on the lift is
/// equivalent to dependency on the digraph.
LatMap lift_digraph(const Digraph& d, LatticePtr product);

struct ConverseResult {
  LinearOrder order;       // ascending; positions are chain element ids
  LatticePtr chain;        // the chain lattice on that order
  LatMap phi_on_chain;     // input map transported to the chain
  LatMap f;                // K-meet-nilpotent graph that phi depends on
  int K = 0;
  int e = 0;               // original-id fixed point
};
/// For a nilpotent self-map on a plain finite set: build a chain order
/// (depth-major, image-position within a depth level, id tie-break) that
/// makes the map monotone and top-fixing, and return the lower adjoint as
/// the dependency graph. All postconditions are verified.
ConverseResult converse_construction(const std::vector<int>& table,
                                     const Config& cfg = {});

/// Named example instances.
using GalleryObject = std::variant<LatticePtr, Digraph, Network>;
/// Names: liar, hypodox, plus_network (param q), ray (param n),
/// backwards_ray (param n), stairway_heaven (param n), stairway_hell
/// (param n), m3, n5.
GalleryObject gallery(const std::string& name, int param = -1,
                      const Config& cfg = {});

}  // namespace latfix

#endif  // LATFIX_AUTONET_HPP_
