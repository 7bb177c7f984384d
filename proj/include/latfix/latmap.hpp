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

#ifndef LATFIX_LATMAP_HPP_
#define LATFIX_LATMAP_HPP_

#include <optional>
#include <span>
#include <vector>

#include "latfix/digraph.hpp"
#include "latfix/lattice.hpp"

namespace latfix {

/// Total self-map on a lattice, stored as a table indexed by element id.
/// Whether the map is a graph (join-preserving) or monotone is a property
/// checked by the predicates below, not an invariant of the type.
class LatMap {
 public:
  LatMap(LatticePtr lat, std::vector<ElemId> table);

  ElemId operator()(ElemId x) const { return tab_[x]; }
  const Lattice& lattice() const { return *lat_; }
  const LatticePtr& lattice_ptr() const { return lat_; }
  std::span<const ElemId> table() const { return tab_; }
  int size() const { return static_cast<int>(tab_.size()); }

  bool operator==(const LatMap& o) const;

  static LatMap identity(LatticePtr lat);
  static LatMap constant(LatticePtr lat, ElemId e);

  LatMap compose(const LatMap& g) const;  // x -> (*this)(g(x))
  LatMap iterate(int k) const;            // k-fold composition, k >= 0
  LatMap pointwise_join(const LatMap& o) const;
  bool leq_pointwise(const LatMap& o) const;

 private:
  LatticePtr lat_;
  std::vector<ElemId> tab_;
};

/// Permutation of element ids; position in the vector is the rank
/// (ascending).
struct LinearOrder {
  std::vector<ElemId> ascending;

  int position_of(ElemId x) const {
    for (size_t i = 0; i < ascending.size(); ++i)
      if (ascending[i] == x) return static_cast<int>(i);
    return -1;
  }
};

bool is_monotone(const LatMap& f);
bool is_graph(const LatMap& f);
bool is_cograph(const LatMap& f);
/// First pair (x,y) with f(x v y) != f(x) v f(y), or x=y=bottom when
/// f(bottom) != bottom; nullopt when f is a graph.
std::optional<std::pair<ElemId, ElemId>> graph_violation(const LatMap& f);

void require_graph(const LatMap& f, const char* who);
void require_cograph(const LatMap& f, const char* who);

/// Upper adjoint: residual(psi)(a) = join of { x : psi(x) <= a }.
LatMap residual(const LatMap& psi);
/// Lower adjoint: residuated_map(psi)(b) = meet of { y : psi(y) >= b }.
LatMap residuated_map(const LatMap& psi);

/// In-neighbourhood map of a digraph on the power set lattice of its
/// vertices (ids as bitmasks).
LatMap digraph_to_graph(const Digraph& d, LatticePtr powerset);
/// Inverse of the above; requires a bitmask-id lattice and a graph.
Digraph graph_to_digraph(const LatMap& f);

enum class ClosureKind { Reflexive, Transitive, ReflexiveTransitive };
LatMap closure(const LatMap& f, ClosureKind kind);

/// Transitive closure dominates the identity pointwise.
bool is_non_degenerate(const LatMap& f);

ElementSet fixed_points(const LatMap& psi);
/// Fix(f) == { bottom }; requires a graph.
bool is_fixed_point_free(const LatMap& f);

/// Linear order where y <= f^t(x) forces x strictly before y, for all
/// x,y != bottom. Bottom placed first, remaining ties broken by ascending
/// element id. Fails with NotFixedPointFree (witness attached) otherwise.
LinearOrder topological_sort(const LatMap& f);

/// Closed under arbitrary joins and meets (hence contains bottom and top).
bool is_bitopology(const Lattice& lat, const ElementSet& t);
/// Witness subset {x,y} whose join or meet escapes t, or the empty vector
/// when bottom/top is missing; nullopt when t is a bi-topology.
std::optional<std::vector<ElemId>> bitopology_violation(const Lattice& lat,
                                                        const ElementSet& t);
/// h(x) = meet of (T intersect up-set of x): a reflexive transitive graph
/// with Fix(h) = T.
LatMap bitopology_graph(LatticePtr lat, const ElementSet& t);

/// Restriction x -> f(x) meet a on the principal ideal of a, re-indexed
/// over the sublattice. Frame lattices only.
struct SublatticeMap {
  LatticePtr sub;
  LatMap map;
  std::vector<ElemId> embed;  // sub id -> original id
};
SublatticeMap induced_subgraph(const LatMap& f, ElemId a,
                               const Config& cfg = {});

}  // namespace latfix

#endif  // LATFIX_LATMAP_HPP_
