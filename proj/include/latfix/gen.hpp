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

#ifndef LATFIX_GEN_HPP_
#define LATFIX_GEN_HPP_

#include <random>

#include "latfix/autonet.hpp"
#include "latfix/latmap.hpp"

// Seeded instance generators for tests, the acceptance suite and the
// benchmark. All draws go through the supplied engine, so a fixed seed
// reproduces the exact instance stream.

namespace latfix::gen {

using Rng = std::mt19937_64;

Digraph random_digraph(int n, double arc_prob, Rng& rng);
Digraph random_dag(int n, double arc_prob, Rng& rng);

/// Uniformly random table (no structure).
LatMap random_map(LatticePtr lat, Rng& rng);
/// theta <= psi pointwise, uniform over the dominated tables.
LatMap random_dominated_map(const LatMap& psi, Rng& rng);

/// Join-preserving map. Distributive lattices: free assignment on the
/// join-irreducibles, extended by joins (this reaches every graph).
/// Non-distributive lattices up to 6 elements: rejection over all tables.
LatMap random_graph_on(LatticePtr lat, Rng& rng);
/// Every graph on the lattice; feasible for the same sizes as above.
std::vector<LatMap> all_graphs(LatticePtr lat);

/// Network whose coordinate j reads only its in-neighbours in d
/// (so the network depends on d by construction).
Network random_network_on_digraph(const Digraph& d,
                                  const std::vector<int>& alphabets, Rng& rng,
                                  const Config& cfg = {});

/// Map on {0..n-1} whose only cycle is one fixed point.
std::vector<int> random_nilpotent_table(int n, Rng& rng);

}  // namespace latfix::gen

#endif  // LATFIX_GEN_HPP_
