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

#include "latfix/autonet.hpp"

#include <algorithm>
#include <numeric>
#include <string>


namespace latfix {

namespace {

std::vector<LatticePtr> chains_for(const std::vector<int>& alphabets,
                                   const Config& cfg) {
  std::vector<LatticePtr> c;
  for (int q : alphabets) c.push_back(Lattice::chain(q, cfg));
  return c;
}

}  // namespace

Network::Network(std::vector<int> alphabets, std::vector<std::vector<int>> rules,
                 const Config& cfg)
    : Network(chains_for(alphabets, cfg), std::move(rules), cfg) {}

Network::Network(std::vector<LatticePtr> coords,
                 std::vector<std::vector<int>> rules, const Config& cfg)
    : coords_(std::move(coords)), rules_(std::move(rules)) {
  if (coords_.empty()) fail(Err::BadDescriptor, "network needs >= 1 coordinate");
  product_ = Lattice::product(coords_, cfg);
  if (rules_.size() != coords_.size())
    fail(Err::BadDescriptor, "network needs one rule table per coordinate");
  for (size_t j = 0; j < rules_.size(); ++j) {
    if (static_cast<int>(rules_[j].size()) != product_->size())
      fail(Err::BadDescriptor,
           "rule table " + std::to_string(j) + " must cover all " +
               std::to_string(product_->size()) + " states");
    for (int v : rules_[j])
      if (v < 0 || v >= coords_[j]->size())
        fail(Err::BadDescriptor, "rule table " + std::to_string(j) +
                                     " contains an out-of-alphabet value");
  }
}

ElemId Network::step(ElemId state) const {
  ProductCodec codec = ProductCodec::for_product(*product_);
  std::vector<int> next(coords_.size());
  for (size_t j = 0; j < coords_.size(); ++j) next[j] = rules_[j][state];
  return codec.encode(next);
}

LatMap Network::as_latmap() const {
  ProductCodec codec = ProductCodec::for_product(*product_);
  std::vector<ElemId> tab(product_->size());
  std::vector<int> next(coords_.size());
  for (int s = 0; s < product_->size(); ++s) {
    for (size_t j = 0; j < coords_.size(); ++j) next[j] = rules_[j][s];
    tab[s] = codec.encode(next);
  }
  return LatMap(product_, std::move(tab));
}

LatMap Network::as_powerset_map(const Config& cfg) const {
  for (const auto& c : coords_)
    if (c->size() != 2)
      fail(Err::BadDescriptor,
           "as_powerset_map is defined for Boolean networks only");
  int n = coordinate_count();
  LatticePtr ps = Lattice::powerset(n, cfg);
  ProductCodec codec = ProductCodec::for_product(*product_);
  std::vector<ElemId> tab(ps->size());
  for (int mask = 0; mask < ps->size(); ++mask) {
    std::vector<int> coords(n);
    for (int i = 0; i < n; ++i) coords[i] = (mask >> i) & 1;
    ElemId s = codec.encode(coords);
    int out = 0;
    for (int j = 0; j < n; ++j)
      if (rules_[j][s]) out |= 1 << j;
    tab[mask] = out;
  }
  return LatMap(ps, std::move(tab));
}

Digraph interaction_graph(const Network& net) {
  const int n = net.coordinate_count();
  const int states = net.state_count();
  ProductCodec codec = ProductCodec::for_product(*net.product_lattice());
  std::vector<char> arc(static_cast<size_t>(n) * n, 0);

#ifdef _OPENMP
#pragma omp parallel
  {
    std::vector<char> local(static_cast<size_t>(n) * n, 0);
#pragma omp for schedule(static) nowait
    for (int s = 0; s < states; ++s) {
      std::vector<int> coords = codec.decode(s);
      for (int i = 0; i < n; ++i) {
        std::vector<int> alt = coords;
        for (int v = 0; v < net.coordinates()[i]->size(); ++v) {
          if (v == coords[i]) continue;
          alt[i] = v;
          ElemId s2 = codec.encode(alt);
          for (int j = 0; j < n; ++j)
            if (net.local_value(j, s) != net.local_value(j, s2))
              local[static_cast<size_t>(i) * n + j] = 1;
        }
      }
    }
#pragma omp critical
    {
      for (size_t k = 0; k < arc.size(); ++k) arc[k] |= local[k];
    }
  }
#else
  for (int s = 0; s < states; ++s) {
    std::vector<int> coords = codec.decode(s);
    for (int i = 0; i < n; ++i) {
      std::vector<int> alt = coords;
      for (int v = 0; v < net.coordinates()[i]->size(); ++v) {
        if (v == coords[i]) continue;
        alt[i] = v;
        ElemId s2 = codec.encode(alt);
        for (int j = 0; j < n; ++j)
          if (net.local_value(j, s) != net.local_value(j, s2))
            arc[static_cast<size_t>(i) * n + j] = 1;
      }
    }
  }
#endif

  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (arc[static_cast<size_t>(i) * n + j]) arcs.push_back({i, j});
  return Digraph(n, arcs);
}

bool depends_on_digraph(const Network& net, const Digraph& d) {
  if (d.n != net.coordinate_count())
    fail(Err::BadDescriptor, "digraph vertex count must match the network");
  Digraph ig = interaction_graph(net);
  for (auto a : ig.arcs)
    if (!d.arcs.count(a)) return false;
  return true;
}

bool depends_on_digraph_definitional(const Network& net, const Digraph& d) {
  if (d.n != net.coordinate_count())
    fail(Err::BadDescriptor, "digraph vertex count must match the network");
  const int n = net.coordinate_count();
  const int states = net.state_count();
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> sel;
    for (int v = 0; v < n; ++v)
      if (mask & (1 << v)) sel.push_back(v);
    std::vector<int> dn = d.image(sel);
    ProductCodec codec = ProductCodec::for_product(*net.product_lattice());
    for (int x = 0; x < states; ++x) {
      std::vector<int> cx = codec.decode(x);
      for (int y = 0; y < states; ++y) {
        std::vector<int> cy = codec.decode(y);
        bool agree = true;
        for (int v : dn)
          if (cx[v] != cy[v]) {
            agree = false;
            break;
          }
        if (!agree) continue;
        for (int v : sel)
          if (net.local_value(v, x) != net.local_value(v, y)) return false;
      }
    }
  }
  return true;
}

Certificate robert_original(const Network& net, const Config& cfg) {
  Digraph ig = interaction_graph(net);
  if (auto cyc = ig.find_cycle()) {
    std::vector<long long> ids(cyc->begin(), cyc->end());
    fail(Err::NotAcyclic, "interaction graph has a cycle of length " +
                              std::to_string(cyc->size()),
         ids);
  }
  std::vector<int> order = *ig.topological_vertex_order();
  const int n = net.coordinate_count();
  ProductCodec codec = ProductCodec::for_product(*net.product_lattice());

  // prefix sets of the topological order, embedded as lattice elements
  // with top on the determined coordinates and bottom elsewhere
  std::vector<ElemId> steps;
  std::vector<int> coords(n);
  for (int i = 0; i <= n; ++i) {
    for (int v = 0; v < n; ++v) coords[v] = net.coordinates()[v]->bottom();
    for (int k = 0; k < i; ++k)
      coords[order[k]] = net.coordinates()[order[k]]->top();
    steps.push_back(codec.encode(coords));
  }
  return sequence_certificate(net.as_latmap(), steps, cfg);
}

bool fvs_check(const Digraph& d, const std::vector<int>& fvs) {
  std::vector<char> in_set(d.n, 0);
  for (int v : fvs) {
    if (v < 0 || v >= d.n)
      fail(Err::BadDescriptor, "feedback set references an invalid vertex");
    in_set[v] = 1;
  }
  std::vector<std::vector<int>> ins(d.n);
  for (auto [u, v] : d.arcs) ins[v].push_back(u);
  for (int round = 0; round < d.n; ++round) {
    for (int v = 0; v < d.n; ++v) {
      if (in_set[v]) continue;
      bool all_in = true;
      for (int u : ins[v])
        if (!in_set[u]) {
          all_in = false;
          break;
        }
      if (all_in) in_set[v] = 1;
    }
  }
  for (int v = 0; v < d.n; ++v)
    if (!in_set[v]) return false;
  return true;
}

FeedbackReport feedback_original(const Network& net, const std::vector<int>& fvs,
                                 const Config& cfg) {
  Digraph ig = interaction_graph(net);
  if (!fvs_check(ig, fvs))
    fail(Err::NotAnFVS,
         "the given set is not a feedback vertex set of the interaction graph");
  FeedbackReport rep;
  rep.bound = 1;
  for (int v : fvs) rep.bound *= net.coordinates()[v]->size();

  LatMap phi = net.as_latmap();
  auto fix = fixed_points(phi).to_vector();
  rep.fix_count = static_cast<int>(fix.size());
  ProductCodec codec = ProductCodec::for_product(*net.product_lattice());
  const int n = net.coordinate_count();
  std::vector<int> coords(n);
  for (int v = 0; v < n; ++v) coords[v] = net.coordinates()[v]->bottom();
  for (int v : fvs) coords[v] = net.coordinates()[v]->top();
  rep.seed = codec.encode(coords);

  if (rep.fix_count > rep.bound)
    fail(Err::FormulaMismatch, "fixed point count exceeds the feedback bound",
         {rep.fix_count, rep.bound});
  for (size_t i = 0; i < fix.size(); ++i) {
    std::vector<int> ci = codec.decode(fix[i]);
    for (size_t j = i + 1; j < fix.size(); ++j) {
      std::vector<int> cj = codec.decode(fix[j]);
      bool same = true;
      for (int v : fvs)
        if (ci[v] != cj[v]) {
          same = false;
          break;
        }
      if (same)
        fail(Err::FormulaMismatch,
             "fvs projection is not injective on the fixed points",
             {fix[i], fix[j]});
    }
  }
  (void)cfg;
  return rep;
}

LatMap lift_digraph(const Digraph& d, LatticePtr product) {
  const Lattice& L = *product;
  std::vector<ElemId> tab(L.size());
  if (!L.factors().empty()) {
    if (static_cast<int>(L.factors().size()) != d.n)
      fail(Err::BadDescriptor,
           "lift_digraph: one product factor per vertex required");
    ProductCodec codec = ProductCodec::for_product(L);
    for (int s = 0; s < L.size(); ++s) {
      std::vector<int> coords = codec.decode(s);
      std::vector<int> supp;
      for (int v = 0; v < d.n; ++v)
        if (coords[v] != L.factors()[v]->bottom()) supp.push_back(v);
      std::vector<int> img = d.image(supp);
      std::vector<int> out(d.n);
      for (int v = 0; v < d.n; ++v) out[v] = L.factors()[v]->bottom();
      for (int v : img) out[v] = L.factors()[v]->top();
      tab[s] = codec.encode(out);
    }
  } else if (L.ids_are_bitmasks() && L.size() == (1 << d.n)) {
    for (int s = 0; s < L.size(); ++s) {
      std::vector<int> supp;
      for (int v = 0; v < d.n; ++v)
        if (s & (1 << v)) supp.push_back(v);
      int out = 0;
      for (int v : d.image(supp)) out |= 1 << v;
      tab[s] = out;
    }
  } else {
    fail(Err::BadDescriptor,
         "lift_digraph: lattice must be a product or power set with one "
         "coordinate per vertex");
  }
  return LatMap(std::move(product), std::move(tab));
}

ConverseResult converse_construction(const std::vector<int>& table,
                                     const Config& cfg) {
  const int n = static_cast<int>(table.size());
  if (n == 0) fail(Err::BadDescriptor, "empty map table");
  for (int v : table)
    if (v < 0 || v >= n)
      fail(Err::BadDescriptor, "map table entry out of range");

  // nilpotent <=> the only cycle is a single fixed point reached by all
  int e = -1;
  for (int x = 0; x < n; ++x) {
    // walk n steps; a nilpotent map must have landed on its fixed point
    int cur = x;
    for (int k = 0; k < n; ++k) cur = table[cur];
    if (table[cur] != cur || (e >= 0 && cur != e)) {
      // report the cycle this trajectory ends in
      std::vector<long long> cyc;
      int a = cur;
      do {
        cyc.push_back(a);
        a = table[a];
      } while (a != cur);
      fail(Err::NotNilpotent,
           "map is not nilpotent: no iterate is constant", cyc);
    }
    e = cur;
  }

  std::vector<int> depth(n, -1);
  depth[e] = 0;
  int K = 0;
  for (int x = 0; x < n; ++x) {
    int cur = x, steps = 0;
    while (cur != e) {
      cur = table[cur];
      ++steps;
    }
    depth[x] = steps;
    K = std::max(K, steps);
  }

  // levels ordered shallow to deep; each level sorted so that the map is
  // monotone onto the previous level (image position major, id minor)
  std::vector<std::vector<int>> levels(K + 1);
  for (int x = 0; x < n; ++x) levels[depth[x]].push_back(x);
  std::vector<int> pos(n, -1);
  pos[e] = 0;
  for (int i = 1; i <= K; ++i) {
    std::sort(levels[i].begin(), levels[i].end(), [&](int a, int b) {
      if (pos[table[a]] != pos[table[b]]) return pos[table[a]] < pos[table[b]];
      return a < b;
    });
    for (size_t k = 0; k < levels[i].size(); ++k) pos[levels[i][k]] = static_cast<int>(k);
  }

  // ascending chain: deepest level first, top block is {e}
  LinearOrder order;
  for (int i = K; i >= 0; --i)
    for (int x : levels[i]) order.ascending.push_back(x);

  std::vector<int> rank(n, -1);
  for (int p = 0; p < n; ++p) rank[order.ascending[p]] = p;

  LatticePtr chain = Lattice::chain(n, cfg);
  std::vector<ElemId> chain_tab(n);
  for (int p = 0; p < n; ++p) chain_tab[p] = rank[table[order.ascending[p]]];
  LatMap phi_on_chain(chain, std::move(chain_tab));

  if (!is_monotone(phi_on_chain) || phi_on_chain(chain->top()) != chain->top())
    fail(Err::Internal,
         "converse construction produced a non-monotone or non-top-fixing map");
  LatMap f = residuated_map(phi_on_chain);
  require_graph(f, "converse_construction");
  if (f.iterate(K)(chain->top()) != chain->bottom())
    fail(Err::Internal, "converse construction: f is not K-meet-nilpotent");
  if (!depends(DepKind::PreMeet, phi_on_chain, f, cfg))
    fail(Err::Internal,
         "converse construction: pre-meet dependency on f does not hold");
  return ConverseResult{std::move(order), std::move(chain),
                        std::move(phi_on_chain), std::move(f), K, e};
}

namespace {

Network make_liar(bool negate_second, const Config& cfg) {
  // two Boolean coordinates; state id = 2*x0 + x1
  std::vector<std::vector<int>> rules(2, std::vector<int>(4));
  for (int s = 0; s < 4; ++s) {
    int x0 = s >> 1, x1 = s & 1;
    rules[0][s] = x1;
    rules[1][s] = negate_second ? 1 - x0 : x0;
  }
  return Network(std::vector<int>{2, 2}, rules, cfg);
}

Network make_plus_network(int q, const Config& cfg) {
  if (q < 1) fail(Err::BadDescriptor, "plus_network needs q >= 1");
  int states = q * q;
  std::vector<std::vector<int>> rules(2, std::vector<int>(states));
  for (int s = 0; s < states; ++s) {
    int x0 = s / q, x1 = s % q;
    rules[0][s] = std::min(q - 1, x0 + 1);
    rules[1][s] = std::min(q - 1, x1 + 1);
  }
  return Network(std::vector<int>{q, q}, rules, cfg);
}

Digraph make_ray(int n, bool backwards) {
  if (n < 0) fail(Err::BadDescriptor, "ray needs n >= 0");
  std::vector<std::pair<int, int>> arcs;
  for (int i = 1; i <= n; ++i) {
    if (backwards)
      arcs.push_back({i, i - 1});
    else
      arcs.push_back({i - 1, i});
  }
  return Digraph(n + 1, arcs);
}

// vertex 0 is the hub; v_i^j is 1 + i(i+1)/2 + j for 0 <= j <= i <= depth
Digraph make_stairway(int depth, bool to_heaven) {
  if (depth < 0) fail(Err::BadDescriptor, "stairway needs depth >= 0");
  auto id = [](int i, int j) { return 1 + i * (i + 1) / 2 + j; };
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i <= depth; ++i) {
    if (to_heaven)
      arcs.push_back({id(i, 0), 0});
    else
      arcs.push_back({0, id(i, 0)});
    for (int j = 1; j <= i; ++j) {
      if (to_heaven)
        arcs.push_back({id(i, j), id(i, j - 1)});
      else
        arcs.push_back({id(i, j - 1), id(i, j)});
    }
  }
  int vertices = 1 + (depth + 1) * (depth + 2) / 2;
  return Digraph(vertices, arcs);
}

}  // namespace

GalleryObject gallery(const std::string& name, int param, const Config& cfg) {
  if (name == "liar") return make_liar(true, cfg);
  if (name == "hypodox") return make_liar(false, cfg);
  if (name == "plus_network") return make_plus_network(param < 0 ? 4 : param, cfg);
  if (name == "ray") return make_ray(param < 0 ? 4 : param, false);
  if (name == "backwards_ray") return make_ray(param < 0 ? 4 : param, true);
  if (name == "stairway_heaven") return make_stairway(param < 0 ? 3 : param, true);
  if (name == "stairway_hell") return make_stairway(param < 0 ? 3 : param, false);
  if (name == "m3")
    return Lattice::from_covers(
        5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}, cfg);
  if (name == "n5")
    return Lattice::from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}, cfg);
  fail(Err::UnknownName, "unknown gallery name: " + name);
}

}  // namespace latfix
