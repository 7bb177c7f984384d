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

#include "latfix/latmap.hpp"

#include <algorithm>
#include <string>

namespace latfix {

LatMap::LatMap(LatticePtr lat, std::vector<ElemId> table)
    : lat_(std::move(lat)), tab_(std::move(table)) {
  if (static_cast<int>(tab_.size()) != lat_->size())
    fail(Err::BadDescriptor,
         "map table has " + std::to_string(tab_.size()) + " entries, lattice has " +
             std::to_string(lat_->size()));
  for (ElemId v : tab_)
    if (v < 0 || v >= lat_->size())
      fail(Err::BadDescriptor,
           "map table entry " + std::to_string(v) + " is not an element id");
}

bool LatMap::operator==(const LatMap& o) const {
  return (lat_ == o.lat_ || lat_->same_structure(*o.lat_)) && tab_ == o.tab_;
}

LatMap LatMap::identity(LatticePtr lat) {
  std::vector<ElemId> t(lat->size());
  for (int i = 0; i < lat->size(); ++i) t[i] = i;
  return LatMap(std::move(lat), std::move(t));
}

LatMap LatMap::constant(LatticePtr lat, ElemId e) {
  std::vector<ElemId> t(lat->size(), e);
  return LatMap(std::move(lat), std::move(t));
}

LatMap LatMap::compose(const LatMap& g) const {
  std::vector<ElemId> t(tab_.size());
  for (size_t x = 0; x < tab_.size(); ++x) t[x] = tab_[g.tab_[x]];
  return LatMap(lat_, std::move(t));
}

LatMap LatMap::iterate(int k) const {
  LatMap r = identity(lat_);
  for (int i = 0; i < k; ++i) r = compose(r);
  return r;
}

LatMap LatMap::pointwise_join(const LatMap& o) const {
  std::vector<ElemId> t(tab_.size());
  for (size_t x = 0; x < tab_.size(); ++x) t[x] = lat_->join(tab_[x], o.tab_[x]);
  return LatMap(lat_, std::move(t));
}

bool LatMap::leq_pointwise(const LatMap& o) const {
  for (size_t x = 0; x < tab_.size(); ++x)
    if (!lat_->leq(tab_[x], o.tab_[x])) return false;
  return true;
}

bool is_monotone(const LatMap& f) {
  const Lattice& L = f.lattice();
  for (int x = 0; x < L.size(); ++x)
    for (int y = 0; y < L.size(); ++y)
      if (L.leq(x, y) && !L.leq(f(x), f(y))) return false;
  return true;
}

std::optional<std::pair<ElemId, ElemId>> graph_violation(const LatMap& f) {
  const Lattice& L = f.lattice();
  // On a finite lattice every subset join folds into binary joins plus the
  // empty join, so f(bottom) = bottom and binary preservation suffice.
  if (f(L.bottom()) != L.bottom())
    return std::make_pair(L.bottom(), L.bottom());
  for (int x = 0; x < L.size(); ++x)
    for (int y = x + 1; y < L.size(); ++y)
      if (f(L.join(x, y)) != L.join(f(x), f(y))) return std::make_pair(x, y);
  return std::nullopt;
}

bool is_graph(const LatMap& f) { return !graph_violation(f).has_value(); }

bool is_cograph(const LatMap& f) {
  const Lattice& L = f.lattice();
  if (f(L.top()) != L.top()) return false;
  for (int x = 0; x < L.size(); ++x)
    for (int y = x + 1; y < L.size(); ++y)
      if (f(L.meet(x, y)) != L.meet(f(x), f(y))) return false;
  return true;
}

void require_graph(const LatMap& f, const char* who) {
  if (auto w = graph_violation(f))
    fail(Err::NotAGraph,
         std::string(who) + ": map is not a graph (join preservation fails at x=" +
             std::to_string(w->first) + ", y=" + std::to_string(w->second) + ")",
         {w->first, w->second});
}

void require_cograph(const LatMap& f, const char* who) {
  if (!is_cograph(f))
    fail(Err::NotACograph, std::string(who) + ": map is not a co-graph");
}

LatMap residual(const LatMap& psi) {
  const Lattice& L = psi.lattice();
  std::vector<ElemId> t(L.size());
  for (int a = 0; a < L.size(); ++a) {
    ElemId r = L.bottom();
    for (int x = 0; x < L.size(); ++x)
      if (L.leq(psi(x), a)) r = L.join(r, x);
    t[a] = r;
  }
  return LatMap(psi.lattice_ptr(), std::move(t));
}

LatMap residuated_map(const LatMap& psi) {
  const Lattice& L = psi.lattice();
  std::vector<ElemId> t(L.size());
  for (int b = 0; b < L.size(); ++b) {
    ElemId r = L.top();
    for (int y = 0; y < L.size(); ++y)
      if (L.leq(b, psi(y))) r = L.meet(r, y);
    t[b] = r;
  }
  return LatMap(psi.lattice_ptr(), std::move(t));
}

LatMap digraph_to_graph(const Digraph& d, LatticePtr powerset) {
  if (!powerset->ids_are_bitmasks() || powerset->size() != (1 << d.n))
    fail(Err::NotAPowerSet,
         "digraph_to_graph: lattice is not the power set of the vertex set");
  int n = powerset->size();
  // in-neighbourhood of each singleton, as a bitmask
  std::vector<ElemId> single(d.n, 0);
  for (auto [u, v] : d.arcs) single[v] |= 1 << u;
  std::vector<ElemId> t(n, 0);
  for (int x = 0; x < n; ++x)
    for (int v = 0; v < d.n; ++v)
      if (x & (1 << v)) t[x] |= single[v];
  return LatMap(std::move(powerset), std::move(t));
}

Digraph graph_to_digraph(const LatMap& f) {
  const Lattice& L = f.lattice();
  if (!L.ids_are_bitmasks())
    fail(Err::NotAPowerSet, "graph_to_digraph: lattice ids are not bitmasks");
  require_graph(f, "graph_to_digraph");
  int ground = 0;
  while ((1 << ground) < L.size()) ++ground;
  std::vector<std::pair<int, int>> arcs;
  for (int v = 0; v < ground; ++v) {
    ElemId img = f(1 << v);
    for (int u = 0; u < ground; ++u)
      if (img & (1 << u)) arcs.push_back({u, v});
  }
  return Digraph(ground, arcs);
}

LatMap closure(const LatMap& f, ClosureKind kind) {
  require_graph(f, "closure");
  const Lattice& L = f.lattice();
  auto reflexive = [&](const LatMap& g) {
    return g.pointwise_join(LatMap::identity(g.lattice_ptr()));
  };
  auto transitive = [&](const LatMap& g) {
    // bigjoin of g^i for i >= 1: iterate P <- g v (P o g) until stable.
    // The table is pointwise nondecreasing, so this stops within |L| rounds.
    LatMap p = g;
    for (int round = 0; round <= L.size(); ++round) {
      LatMap next = g.pointwise_join(p.compose(g));
      if (next == p) return p;
      p = next;
    }
    fail(Err::Internal, "transitive closure did not stabilize within |L| rounds");
  };
  switch (kind) {
    case ClosureKind::Reflexive:
      return reflexive(f);
    case ClosureKind::Transitive:
      return transitive(f);
    case ClosureKind::ReflexiveTransitive:
      return transitive(reflexive(f));
  }
  fail(Err::Internal, "unknown closure kind");
}

bool is_non_degenerate(const LatMap& f) {
  LatMap t = closure(f, ClosureKind::Transitive);
  return LatMap::identity(f.lattice_ptr()).leq_pointwise(t);
}

ElementSet fixed_points(const LatMap& psi) {
  ElementSet s(psi.size());
  for (int x = 0; x < psi.size(); ++x)
    if (psi(x) == x) s.insert(x);
  return s;
}

bool is_fixed_point_free(const LatMap& f) {
  require_graph(f, "is_fixed_point_free");
  ElementSet fix = fixed_points(f);
  return fix.count() == 1 && fix.contains(f.lattice().bottom());
}

LinearOrder topological_sort(const LatMap& f) {
  require_graph(f, "topological_sort");
  const Lattice& L = f.lattice();
  LatMap t = closure(f, ClosureKind::Transitive);
  // witness for the converse direction: some x != bottom with x <= f^t(x)
  for (int x = 0; x < L.size(); ++x)
    if (x != L.bottom() && L.leq(x, t(x)))
      fail(Err::NotFixedPointFree,
           "topological_sort: element " + std::to_string(x) +
               " satisfies x <= f^t(x), so the graph is not fixed point-free",
           {x});

  int n = L.size();
  // strict precedence: x before y whenever y <= f^t(x)  (x,y != bottom)
  std::vector<std::vector<int>> succ(n);
  std::vector<int> indeg(n, 0);
  for (int x = 0; x < n; ++x) {
    if (x == L.bottom()) continue;
    for (int y = 0; y < n; ++y) {
      if (y == L.bottom() || y == x) continue;
      if (L.leq(y, t(x))) {
        succ[x].push_back(y);
        indeg[y]++;
      }
    }
  }
  LinearOrder out;
  out.ascending.push_back(L.bottom());
  std::vector<char> placed(n, 0);
  placed[L.bottom()] = 1;
  for (int step = 1; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!placed[v] && indeg[v] == 0) {
        pick = v;
        break;
      }
    if (pick < 0)
      fail(Err::Internal, "topological_sort: precedence relation has a cycle");
    placed[pick] = 1;
    out.ascending.push_back(pick);
    for (int w : succ[pick]) indeg[w]--;
  }
  return out;
}

std::optional<std::vector<ElemId>> bitopology_violation(const Lattice& lat,
                                                        const ElementSet& t) {
  // Closure under the empty subset puts bottom (empty join) and top
  // (empty meet) in t; binary closure then covers every finite subset.
  if (!t.contains(lat.bottom()) || !t.contains(lat.top()))
    return std::vector<ElemId>{};
  auto members = t.to_vector();
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = i + 1; j < members.size(); ++j) {
      if (!t.contains(lat.join(members[i], members[j])) ||
          !t.contains(lat.meet(members[i], members[j])))
        return std::vector<ElemId>{members[i], members[j]};
    }
  return std::nullopt;
}

bool is_bitopology(const Lattice& lat, const ElementSet& t) {
  return !bitopology_violation(lat, t).has_value();
}

LatMap bitopology_graph(LatticePtr lat, const ElementSet& t) {
  if (auto w = bitopology_violation(*lat, t)) {
    std::vector<long long> ids(w->begin(), w->end());
    fail(Err::NotABitopology,
         w->empty() ? "subset does not contain bottom and top"
                    : "subset is not closed under join/meet of " +
                          std::to_string((*w)[0]) + " and " +
                          std::to_string((*w)[1]),
         ids);
  }
  std::vector<ElemId> tab(lat->size());
  for (int x = 0; x < lat->size(); ++x)
    tab[x] = lat->meet_set(t & lat->upset(x));
  return LatMap(std::move(lat), std::move(tab));
}

SublatticeMap induced_subgraph(const LatMap& f, ElemId a, const Config& cfg) {
  const Lattice& L = f.lattice();
  if (!L.flags().frame)
    fail(Err::NotAFrame, "induced_subgraph requires a frame lattice");
  require_graph(f, "induced_subgraph");

  std::vector<ElemId> embed = L.downset(a).to_vector();  // ascending ids
  std::vector<int> back(L.size(), -1);
  for (size_t i = 0; i < embed.size(); ++i) back[embed[i]] = static_cast<int>(i);

  std::vector<std::pair<int, int>> covers;
  int m = static_cast<int>(embed.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || !L.leq(embed[i], embed[j])) continue;
      bool cover = true;
      for (int k = 0; k < m && cover; ++k)
        if (k != i && k != j && L.leq(embed[i], embed[k]) &&
            L.leq(embed[k], embed[j]))
          cover = false;
      if (cover) covers.push_back({i, j});
    }
  LatticePtr sub = Lattice::from_covers(m, covers, cfg);

  std::vector<ElemId> tab(m);
  for (int i = 0; i < m; ++i) tab[i] = back[L.meet(f(embed[i]), a)];
  return SublatticeMap{sub, LatMap(sub, std::move(tab)), std::move(embed)};
}

}  // namespace latfix
