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

#ifndef LATFIX_DEPENDENCY_HPP_
#define LATFIX_DEPENDENCY_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <random>

#include "latfix/config.hpp"
#include "latfix/dynamics.hpp"
#include "latfix/sweep.hpp"

namespace latfix {

/// Exhaustive check of the dependency implication over all (x,y,s)
/// triples. Refuses with SweepCapExceeded when |L|^3 exceeds the
/// configured budget; never samples.
bool depends(DepKind kind, const LatMap& phi, const LatMap& rho,
             const Config& cfg = {});

/// First violating triple in lexicographic (x,y,s) id order, or nullopt
/// when the dependency holds.
std::optional<sweep::Triple> violation_witness(DepKind kind, const LatMap& phi,
                                               const LatMap& rho,
                                               const Config& cfg = {});

/// Randomized spot-check of the implication; explicitly opt-in and never
/// used by any certificate path.
bool depends_sampled(DepKind kind, const LatMap& phi, const LatMap& rho,
                     long long samples, std::uint64_t seed);

/// Monotone envelope Gamma(a) = join of gamma(b) over b <= a; post-meet
/// dependency on gamma and on Gamma coincide on frames.
LatMap canonical_gamma(const LatMap& gamma);

/// FNV-1a digest of a completed dependency sweep (kind, tables, verdict);
/// recorded in certificates so the sweep can be re-verified independently.
std::uint64_t dependency_sweep_digest(DepKind kind, const LatMap& phi,
                                      const LatMap& rho, bool verdict);

}  // namespace latfix

#endif  // LATFIX_DEPENDENCY_HPP_
