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

#ifndef LATFIX_BOOLALG_HPP_
#define LATFIX_BOOLALG_HPP_

#include <optional>

#include "latfix/dependency.hpp"
#include "latfix/dynamics.hpp"
#include "latfix/latmap.hpp"

// Specializations for complete Boolean algebras: dual, transpose,
// symmetric graphs, the four-way dependency equivalence, precarious
// graphs, and fixed point-free sets.

namespace latfix {

void require_boolean(const Lattice& lat, const char* who);

/// psi*(x) = not psi(not x).
LatMap dual_map(const LatMap& psi);
/// Transpose of a graph: dual of the residual. On digraph maps this is
/// exactly arc reversal.
LatMap transpose(const LatMap& f);
/// Co-transpose: dual of the lower adjoint.
LatMap cotranspose(const LatMap& psi);

bool is_symmetric(const LatMap& f);  // f == transpose(f)
/// Sigma f = f composed with its transpose.
LatMap sigma(const LatMap& f);

/// Least s with x v s = y v s; the set of all such s is exactly the
/// principal filter of the returned element (verified).
ElemId difference_floor(const Lattice& lat, ElemId x, ElemId y);

/// The subgraph of transpose(f) induced by t is fixed point-free;
/// also checked through the equivalent condition
/// (u <= t and transpose(f)(u) >= u imply u = bottom).
bool is_fpf_set(const LatMap& f, ElemId t, const Config& cfg = {});

struct FourWayReport {
  bool pre_meet_on_f = false;
  bool pre_join_on_dual = false;
  bool post_meet_on_residual = false;
  bool post_join_on_transpose = false;
  bool all() const {
    return pre_meet_on_f && pre_join_on_dual && post_meet_on_residual &&
           post_join_on_transpose;
  }
};
/// Evaluates the four dependency verdicts that are provably equivalent for
/// graphs on Boolean algebras and asserts they agree (EquivalenceViolated
/// aborts with the instance; it can only mean an implementation bug).
FourWayReport four_way_equivalence(const LatMap& f, const LatMap& phi,
                                   const Config& cfg = {});

struct PrecariousReport {
  bool fpf = false;  // transpose(f) fixed point-free
  /// When not fpf: the canonical mapping with >= 2 fixed points that
  /// pre-meet-depends on f (namely transpose(f)), verified.
  std::optional<LatMap> hypodox;
};
PrecariousReport precarious_analysis(const LatMap& f, const Config& cfg = {});

}  // namespace latfix

#endif  // LATFIX_BOOLALG_HPP_
