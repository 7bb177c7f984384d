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

#ifndef LATFIX_DIGRAPH_HPP_
#define LATFIX_DIGRAPH_HPP_

#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace latfix {

/// Finite digraph under the in-neighbourhood convention:
/// D(I) = { u : exists v in I with (u,v) an arc }.
struct Digraph {
  int n = 0;
  std::set<std::pair<int, int>> arcs;

  Digraph() = default;
  Digraph(int vertices, std::vector<std::pair<int, int>> arc_list);

  bool has_arc(int u, int v) const { return arcs.count({u, v}) > 0; }

  std::vector<int> in_neighbours(int v) const;
  std::vector<int> out_neighbours(int u) const;

  /// In-neighbourhood of a vertex set, as a sorted vector.
  std::vector<int> image(const std::vector<int>& vs) const;

  Digraph reversed() const;

  bool is_acyclic() const;
  /// A directed cycle (v_0,...,v_{k-1}) with arcs v_i -> v_{i+1}, if any.
  std::optional<std::vector<int>> find_cycle() const;
  /// Vertex order with arcs only from earlier to later; min-id tie-break.
  /// Empty optional when the digraph has a cycle.
  std::optional<std::vector<int>> topological_vertex_order() const;
  /// Length of the longest directed walk (acyclic digraphs only).
  int longest_walk_length() const;
};

}  // namespace latfix

#endif  // LATFIX_DIGRAPH_HPP_
