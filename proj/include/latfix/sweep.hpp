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

#ifndef LATFIX_SWEEP_HPP_
#define LATFIX_SWEEP_HPP_

#include <array>
#include <optional>

#include "latfix/dynamics.hpp"
#include "latfix/latmap.hpp"

// Exhaustive pair/triple sweeps, each in two builds: an OpenMP kernel and
// a serial reference kept for testing. Both return the lexicographically
// least witness, so results are identical regardless of thread count.

namespace latfix::sweep {

using Triple = std::array<ElemId, 3>;  // (x, y, s), x < y

/// First (x,y,s) violating the dependency implication of `kind` for
/// (phi, rho); nullopt when the dependency holds.
std::optional<Triple> dep_violation(DepKind kind, const LatMap& phi,
                                    const LatMap& rho);
std::optional<Triple> dep_violation_serial(DepKind kind, const LatMap& phi,
                                           const LatMap& rho);

/// First x with x^(yvz) != (x^y)v(x^z) for some y,z; nullopt when the
/// lattice is distributive.
std::optional<Triple> distributive_violation(const Lattice& lat);
std::optional<Triple> distributive_violation_serial(const Lattice& lat);

/// First pair (x,y) with d_A(phi x, phi y) > (1/2) d_A(x, y), exact
/// dyadic comparison.
std::optional<std::pair<ElemId, ElemId>> contraction_violation(
    const LatMap& phi, const ESeq& a, Side side);
std::optional<std::pair<ElemId, ElemId>> contraction_violation_serial(
    const LatMap& phi, const ESeq& a, Side side);

/// First pair (x,y) with x^lo = y^lo but phi(x)^hi != phi(y)^hi.
std::optional<std::pair<ElemId, ElemId>> step_violation(const LatMap& phi,
                                                        ElemId lo, ElemId hi);

}  // namespace latfix::sweep

#endif  // LATFIX_SWEEP_HPP_
