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

#include "latfix/digraph.hpp"

#include <algorithm>
#include <string>

#include "latfix/error.hpp"

namespace latfix {

Digraph::Digraph(int vertices, std::vector<std::pair<int, int>> arc_list)
    : n(vertices) {
  for (auto [u, v] : arc_list) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(Err::BadDescriptor, "arc (" + std::to_string(u) + "," +
                                   std::to_string(v) +
                                   ") references a vertex outside 0.." +
                                   std::to_string(n - 1));
    arcs.insert({u, v});
  }
}

std::vector<int> Digraph::in_neighbours(int v) const {
  std::vector<int> r;
  for (auto [a, b] : arcs)
    if (b == v) r.push_back(a);
  return r;
}

std::vector<int> Digraph::out_neighbours(int u) const {
  std::vector<int> r;
  for (auto [a, b] : arcs)
    if (a == u) r.push_back(b);
  return r;
}

std::vector<int> Digraph::image(const std::vector<int>& vs) const {
  std::vector<char> in_set(n, 0), out(n, 0);
  for (int v : vs) in_set[v] = 1;
  for (auto [u, v] : arcs)
    if (in_set[v]) out[u] = 1;
  std::vector<int> r;
  for (int u = 0; u < n; ++u)
    if (out[u]) r.push_back(u);
  return r;
}

Digraph Digraph::reversed() const {
  Digraph r;
  r.n = n;
  for (auto [u, v] : arcs) r.arcs.insert({v, u});
  return r;
}

std::optional<std::vector<int>> Digraph::find_cycle() const {
  std::vector<std::vector<int>> succ(n);
  for (auto [u, v] : arcs) succ[u].push_back(v);
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<int> parent(n, -1);

  for (int s = 0; s < n; ++s) {
    if (state[s]) continue;
    std::vector<std::pair<int, size_t>> stack = {{s, 0}};
    state[s] = 1;
    while (!stack.empty()) {
      auto& [u, i] = stack.back();
      if (i < succ[u].size()) {
        int v = succ[u][i++];
        if (state[v] == 0) {
          state[v] = 1;
          parent[v] = u;
          stack.push_back({v, 0});
        } else if (state[v] == 1) {
          std::vector<int> cyc = {u};
          for (int w = u; w != v; w = parent[w]) cyc.push_back(parent[w]);
          std::reverse(cyc.begin(), cyc.end());
          return cyc;
        }
      } else {
        state[u] = 2;
        stack.pop_back();
      }
    }
  }
  return std::nullopt;
}

bool Digraph::is_acyclic() const { return !find_cycle().has_value(); }

std::optional<std::vector<int>> Digraph::topological_vertex_order() const {
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> succ(n);
  for (auto [u, v] : arcs) {
    succ[u].push_back(v);
    indeg[v]++;
  }
  std::vector<int> order;
  std::vector<char> placed(n, 0);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!placed[v] && indeg[v] == 0) {
        pick = v;
        break;
      }
    if (pick < 0) return std::nullopt;
    placed[pick] = 1;
    order.push_back(pick);
    for (int w : succ[pick]) indeg[w]--;
  }
  return order;
}

int Digraph::longest_walk_length() const {
  auto order = topological_vertex_order();
  if (!order) fail(Err::NotAcyclic, "longest walk is undefined on a cyclic digraph");
  std::vector<int> best(n, 0);
  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    int u = *it;
    for (int v : out_neighbours(u)) best[u] = std::max(best[u], 1 + best[v]);
  }
  int m = 0;
  for (int u = 0; u < n; ++u) m = std::max(m, best[u]);
  return m;
}

}  // namespace latfix
