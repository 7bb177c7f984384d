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

#ifndef LATFIX_DYNAMICS_HPP_
#define LATFIX_DYNAMICS_HPP_

#include <optional>
#include <vector>

#include "latfix/dyadic.hpp"
#include "latfix/latmap.hpp"

namespace latfix {

/// Eventually constant sequence of lattice elements: a_i = prefix[min(i,N)]
/// with N = stable_from and prefix of length N+1.
struct ESeq {
  LatticePtr lattice;
  std::vector<ElemId> prefix;
  int stable_from = 0;

  ESeq(LatticePtr lat, std::vector<ElemId> pre);

  ElemId at(int i) const {
    return prefix[i < stable_from ? i : stable_from];
  }
  ElemId tail_value() const { return prefix[stable_from]; }

  static ESeq constant(LatticePtr lat, ElemId v);
  bool same_sequence(const ESeq& o) const;
};

enum class Side { Meet, Join };

/// Orbit of x under phi split at the first repeat.
struct Orbit {
  std::vector<ElemId> transient;
  std::vector<ElemId> cycle;  // nonempty; cycle[0] is the first repeated value
};
Orbit iterate_orbit(const LatMap& phi, ElemId x);

ElementSet fix_set(const LatMap& phi);
/// Forward orbit of the periodic points (equivalently: points with an
/// infinite backward chain; the two coincide on a finite universe).
ElementSet par_set(const LatMap& phi);
/// Stabilized intersection of the iterated images of the whole universe.
ElementSet pyr_set(const LatMap& phi);

/// The unique e every trajectory ends at, when all cycles collapse to a
/// single fixed point.
std::optional<ElemId> converges(const LatMap& phi);
/// converges plus Pyr(phi) = {e}.
std::optional<ElemId> strongly_converges(const LatMap& phi);

/// Orbit of bottom as an eventually constant sequence with minimal
/// stable index. PeriodicTail (carrying the cycle) when the orbit ends in
/// a cycle longer than one.
ESeq M_seq(const LatMap& psi);
/// Orbit of top, same contract.
ESeq J_seq(const LatMap& psi);

struct DeltaResult {
  std::vector<int> indices;  // disagreement indices strictly below stable_from
  bool tail = false;         // membership for every i >= stable_from
  int stable_from = 0;
};
/// Disagreement set of s,t relative to A: i is in it iff s^a_i != t^a_i
/// (meet side; the join side uses s v a_i).
DeltaResult delta_A(const ESeq& a, ElemId s, ElemId t, Side side = Side::Meet);
/// Sum of 2^-i over the disagreement set, tail summed in closed form
/// (2^{-(N-1)} for a full tail starting at N).
Dyadic d_A(const ESeq& a, ElemId s, ElemId t, Side side = Side::Meet);

struct SeqFlags {
  bool covering = false;
  bool metric = false;
  bool complete = false;
};
/// covering: the side-join of A is the side-top; metric: every x is
/// recovered as the side-join of x against A. On a finite lattice a
/// bounded metric is automatically complete, so complete == metric.
SeqFlags classify_seq(const ESeq& a, Side side);

/// z_i ^ a_j == z_j ^ a_j for all i >= j (meet side), with the tail handled
/// by stabilization. Returns a violating (i,j) pair instead of true.
struct CauchyReport {
  bool strongly_cauchy = false;
  std::optional<std::pair<int, int>> violation;
  bool limit_identity = false;  // A_Z == A_z for z = side-join of A_Z
};
CauchyReport strongly_cauchy_oracle(const ESeq& a, const ESeq& z,
                                    Side side = Side::Meet);

/// Minimal K with psi^K(top) = bottom (Side::Meet) or psi^K(bottom) = top
/// (Side::Join); searches until the relevant orbit repeats.
std::optional<int> nilpotency_index(const LatMap& psi, Side side);
/// Meet of all iterates of top equals bottom (Side::Meet); evaluated
/// exactly over the orbit prefix plus one full period.
bool is_asymptotically_nilpotent(const LatMap& psi, Side side);

/// B = intersection of the down-sets of the iterated images.
ElementSet B_set(const LatMap& phi);
/// C = down-set of the meet of all iterates of top; the infinite meet is
/// evaluated exactly over the orbit prefix plus one full period, so
/// periodic tails are honored rather than rejected.
ElementSet C_set(const LatMap& phi);

enum class DepKind { PreMeet, PreJoin, PostMeet, PostJoin };
const char* dep_kind_name(DepKind k);
Side dep_side(DepKind k);  // side of the witness sequence for this kind

/// Boundary + chaining checks for a candidate witness sequence, then the
/// sequence classification on the kind's side. Boundary: a_0 = bottom for
/// meet kinds, top for join kinds. Chaining (i >= 1): pre-meet
/// alpha(a_i) <= a_{i-1}; pre-join beta(b_i) >= b_{i-1}; post-meet
/// gamma(c_{i-1}) >= c_i; post-join delta(d_{i-1}) <= d_i.
SeqFlags check_witness(DepKind kind, const LatMap& map, const ESeq& a);
/// Same checks with a free starting element (feedback-bound use).
SeqFlags check_witness_free_start(DepKind kind, const LatMap& map,
                                  const ESeq& a);

/// Canonical witness: pre-meet M(residual(alpha)) for graphs, pre-join
/// J(residuated(beta)) for co-graphs, post-meet M(gamma) and post-join
/// J(delta) for monotone maps.
ESeq canonical_witness(DepKind kind, const LatMap& map);

}  // namespace latfix

#endif  // LATFIX_DYNAMICS_HPP_
