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

#include "latfix/gen.hpp"

#include <algorithm>
#include <numeric>

namespace latfix::gen {

Digraph random_digraph(int n, double arc_prob, Rng& rng) {
  std::bernoulli_distribution arc(arc_prob);
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (arc(rng)) arcs.push_back({u, v});
  return Digraph(n, arcs);
}

Digraph random_dag(int n, double arc_prob, Rng& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution arc(arc_prob);
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (arc(rng)) arcs.push_back({perm[i], perm[j]});
  return Digraph(n, arcs);
}

LatMap random_map(LatticePtr lat, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, lat->size() - 1);
  std::vector<ElemId> t(lat->size());
  for (auto& v : t) v = pick(rng);
  return LatMap(std::move(lat), std::move(t));
}

LatMap random_dominated_map(const LatMap& psi, Rng& rng) {
  const Lattice& L = psi.lattice();
  std::vector<ElemId> t(L.size());
  for (int x = 0; x < L.size(); ++x) {
    std::vector<ElemId> below = L.downset(psi(x)).to_vector();
    std::uniform_int_distribution<size_t> pick(0, below.size() - 1);
    t[x] = below[pick(rng)];
  }
  return LatMap(psi.lattice_ptr(), std::move(t));
}

namespace {

LatMap extend_from_irreducibles(LatticePtr lat, const std::vector<ElemId>& ji,
                                const std::vector<ElemId>& values) {
  const Lattice& L = *lat;
  std::vector<ElemId> t(L.size());
  for (int x = 0; x < L.size(); ++x) {
    ElemId acc = L.bottom();
    for (size_t k = 0; k < ji.size(); ++k)
      if (L.leq(ji[k], x)) acc = L.join(acc, values[k]);
    t[x] = acc;
  }
  return LatMap(std::move(lat), std::move(t));
}

constexpr int kEnumerableSize = 6;  // 6^6 tables are still cheap to filter

}  // namespace

LatMap random_graph_on(LatticePtr lat, Rng& rng) {
  const Lattice& L = *lat;
  if (L.flags().distributive) {
    // join-irreducibles are join-prime here, so any assignment extends
    std::vector<ElemId> ji = L.join_irreducibles();
    std::uniform_int_distribution<int> pick(0, L.size() - 1);
    std::vector<ElemId> vals(ji.size());
    for (auto& v : vals) v = pick(rng);
    return extend_from_irreducibles(lat, ji, vals);
  }
  if (L.size() <= kEnumerableSize) {
    std::vector<LatMap> graphs = all_graphs(lat);
    std::uniform_int_distribution<size_t> pick(0, graphs.size() - 1);
    return graphs[pick(rng)];
  }
  fail(Err::BadDescriptor,
       "random_graph_on supports distributive lattices and tiny ones only");
}

std::vector<LatMap> all_graphs(LatticePtr lat) {
  const Lattice& L = *lat;
  std::vector<LatMap> out;
  if (L.flags().distributive) {
    std::vector<ElemId> ji = L.join_irreducibles();
    double count = 1;
    for (size_t i = 0; i < ji.size(); ++i) count *= L.size();
    if (count > 2e5)
      fail(Err::BadDescriptor, "too many graphs to enumerate on this lattice");
    std::vector<ElemId> vals(ji.size(), 0);
    while (true) {
      out.push_back(extend_from_irreducibles(lat, ji, vals));
      size_t k = 0;
      while (k < vals.size() && ++vals[k] == L.size()) vals[k++] = 0;
      if (k == vals.size()) break;
    }
    return out;
  }
  if (L.size() > kEnumerableSize)
    fail(Err::BadDescriptor, "graph enumeration is limited to tiny lattices");
  std::vector<ElemId> t(L.size(), 0);
  while (true) {
    LatMap f(lat, t);
    if (is_graph(f)) out.push_back(f);
    int k = 0;
    while (k < L.size() && ++t[k] == L.size()) t[k++] = 0;
    if (k == L.size()) break;
  }
  return out;
}

Network random_network_on_digraph(const Digraph& d,
                                  const std::vector<int>& alphabets, Rng& rng,
                                  const Config& cfg) {
  if (static_cast<int>(alphabets.size()) != d.n)
    fail(Err::BadDescriptor, "one alphabet per vertex required");
  long long states = 1;
  for (int q : alphabets) states *= q;

  // rule j: a random function of the in-neighbour coordinates only
  std::vector<std::vector<int>> ins(d.n);
  for (auto [u, v] : d.arcs) ins[v].push_back(u);
  for (auto& v : ins) std::sort(v.begin(), v.end());

  ProductCodec codec{alphabets};
  std::vector<std::vector<int>> rules(d.n, std::vector<int>(states));
  for (int j = 0; j < d.n; ++j) {
    long long dom = 1;
    for (int u : ins[j]) dom *= alphabets[u];
    std::uniform_int_distribution<int> pick(0, alphabets[j] - 1);
    std::vector<int> local(dom);
    for (auto& v : local) v = pick(rng);
    for (long long s = 0; s < states; ++s) {
      std::vector<int> coords = codec.decode(static_cast<ElemId>(s));
      long long key = 0;
      for (int u : ins[j]) key = key * alphabets[u] + coords[u];
      rules[j][s] = local[key];
    }
  }
  return Network(alphabets, rules, cfg);
}

std::vector<int> random_nilpotent_table(int n, Rng& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  // perm[0] is the fixed point; everything else maps strictly down-rank
  std::vector<int> table(n);
  table[perm[0]] = perm[0];
  for (int r = 1; r < n; ++r) {
    std::uniform_int_distribution<int> pick(0, r - 1);
    table[perm[r]] = perm[pick(rng)];
  }
  return table;
}

}  // namespace latfix::gen
