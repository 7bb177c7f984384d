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

#include "latfix/lattice.hpp"

#include <algorithm>
#include <string>


namespace latfix {

namespace {

void check_cap(long long n, const Config& cfg, const char* what) {
  if (n > cfg.max_lattice_size)
    fail(Err::SizeCapExceeded,
         std::string(what) + ": " + std::to_string(n) +
             " elements exceeds max_lattice_size=" +
             std::to_string(cfg.max_lattice_size));
}

}  // namespace

void Lattice::finish_from_order() {
  // partial-order sanity: reflexive by construction; antisymmetry
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (leq(a, b) && leq(b, a))
        fail(Err::NotAPoset,
             "cover relation has a cycle through elements " +
                 std::to_string(a) + " and " + std::to_string(b),
             {a, b});

  join_.assign(static_cast<size_t>(n_) * n_, -1);
  meet_.assign(static_cast<size_t>(n_) * n_, -1);

  // strictly-below sets (for the meet computation)
  std::vector<ElementSet> below(n_, ElementSet(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (leq(b, a)) below[a].insert(b);

  for (int a = 0; a < n_; ++a) {
    for (int b = a; b < n_; ++b) {
      ElementSet ub = order_[a] & order_[b];
      ElemId lub = -1;
      for (ElemId u : ub.to_vector()) {
        if (ub.is_subset_of(order_[u])) {  // u below every upper bound
          lub = u;
          break;
        }
      }
      if (lub < 0)
        fail(Err::NotALattice,
             "pair (" + std::to_string(a) + "," + std::to_string(b) +
                 ") has no least upper bound",
             {a, b});
      ElementSet lb = below[a] & below[b];
      ElemId glb = -1;
      for (int u = n_ - 1; u >= 0; --u) {
        if (lb.contains(u) && lb.is_subset_of(below[u])) {
          glb = u;
          break;
        }
      }
      if (glb < 0)
        fail(Err::NotALattice,
             "pair (" + std::to_string(a) + "," + std::to_string(b) +
                 ") has no greatest lower bound",
             {a, b});
      join_[idx(a, b)] = join_[idx(b, a)] = lub;
      meet_[idx(a, b)] = meet_[idx(b, a)] = glb;
    }
  }

  bottom_ = 0;
  top_ = 0;
  for (int a = 0; a < n_; ++a) {
    bottom_ = meet(bottom_, a);
    top_ = join(top_, a);
  }
}

void Lattice::classify_exhaustive() {
  flags_.trivial = n_ <= 2;

  flags_.chain = true;
  for (int a = 0; a < n_ && flags_.chain; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (!leq(a, b) && !leq(b, a)) {
        flags_.chain = false;
        break;
      }

  bool dist = true;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(&& : dist) if (n_ > 64)
#endif
  for (int x = 0; x < n_; ++x) {
    bool ok = true;
    for (int y = 0; y < n_ && ok; ++y)
      for (int z = y; z < n_; ++z)
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) {
          ok = false;
          break;
        }
    dist = dist && ok;
  }
  flags_.distributive = dist;
  flags_.frame = dist;

  fill_complement_table();
  flags_.complemented = !complement_.empty();
  flags_.boolean_algebra = flags_.distributive && flags_.complemented;
}

void Lattice::fill_complement_table() {
  complement_.assign(n_, -1);
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y)
      if (join(x, y) == top_ && meet(x, y) == bottom_) {
        complement_[x] = y;
        break;
      }
    if (complement_[x] < 0) {
      complement_.clear();
      return;
    }
  }
}

LatticePtr Lattice::from_covers(int n,
                                const std::vector<std::pair<int, int>>& covers,
                                const Config& cfg) {
  if (n < 1) fail(Err::BadDescriptor, "lattice needs at least one element");
  check_cap(n, cfg, "explicit lattice");
  for (auto [u, v] : covers)
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(Err::BadDescriptor, "cover pair (" + std::to_string(u) + "," +
                                   std::to_string(v) +
                                   ") references an id outside 0.." +
                                   std::to_string(n - 1));

  auto lat = std::shared_ptr<Lattice>(new Lattice());
  lat->n_ = n;
  lat->kind_ = Kind::Explicit;
  lat->order_.assign(n, ElementSet(n));
  for (int a = 0; a < n; ++a) lat->order_[a].insert(a);
  // transitive closure of the covers, by repeated propagation
  std::vector<std::vector<int>> succ(n);
  for (auto [u, v] : covers) succ[u].push_back(v);
  for (int a = 0; a < n; ++a) {
    // DFS from a
    std::vector<int> stack = {a};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : succ[u])
        if (!lat->order_[a].contains(v)) {
          lat->order_[a].insert(v);
          stack.push_back(v);
        }
    }
  }
  lat->finish_from_order();
  lat->classify_exhaustive();
  return lat;
}

LatticePtr Lattice::powerset(int ground, const Config& cfg) {
  if (ground < 0) fail(Err::BadDescriptor, "power set ground must be >= 0");
  if (ground > 62 || (1LL << ground) > cfg.max_lattice_size)
    fail(Err::SizeCapExceeded,
         "power set of " + std::to_string(ground) +
             " exceeds max_lattice_size=" + std::to_string(cfg.max_lattice_size));
  int n = 1 << ground;
  auto lat = std::shared_ptr<Lattice>(new Lattice());
  lat->n_ = n;
  lat->kind_ = Kind::PowerSet;
  lat->ground_ = ground;
  lat->order_.assign(n, ElementSet(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((a & b) == a) lat->order_[a].insert(b);
  lat->join_.resize(static_cast<size_t>(n) * n);
  lat->meet_.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      lat->join_[lat->idx(a, b)] = a | b;
      lat->meet_[lat->idx(a, b)] = a & b;
    }
  lat->bottom_ = 0;
  lat->top_ = n - 1;
  lat->complement_.resize(n);
  for (int a = 0; a < n; ++a) lat->complement_[a] = (n - 1) & ~a;
  lat->flags_.distributive = lat->flags_.frame = true;
  lat->flags_.complemented = true;
  lat->flags_.boolean_algebra = true;
  lat->flags_.chain = n <= 2;
  lat->flags_.trivial = n <= 2;
  return lat;
}

LatticePtr Lattice::chain(int k, const Config& cfg) {
  if (k < 1) fail(Err::BadDescriptor, "chain needs at least one element");
  check_cap(k, cfg, "chain");
  auto lat = std::shared_ptr<Lattice>(new Lattice());
  lat->n_ = k;
  lat->kind_ = Kind::Chain;
  lat->order_.assign(k, ElementSet(k));
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) lat->order_[a].insert(b);
  lat->join_.resize(static_cast<size_t>(k) * k);
  lat->meet_.resize(static_cast<size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      lat->join_[lat->idx(a, b)] = std::max(a, b);
      lat->meet_[lat->idx(a, b)] = std::min(a, b);
    }
  lat->bottom_ = 0;
  lat->top_ = k - 1;
  lat->flags_.distributive = lat->flags_.frame = true;
  lat->flags_.chain = true;
  lat->flags_.trivial = k <= 2;
  lat->flags_.complemented = k <= 2;
  lat->flags_.boolean_algebra = k <= 2;
  if (k <= 2) {
    lat->complement_.resize(k);
    for (int a = 0; a < k; ++a) lat->complement_[a] = (k - 1) - a;
  }
  return lat;
}

LatticePtr Lattice::product(const std::vector<LatticePtr>& factors,
                            const Config& cfg) {
  if (factors.empty()) fail(Err::BadDescriptor, "product needs >= 1 factor");
  long long n = 1;
  for (const auto& f : factors) {
    n *= f->size();
    check_cap(n, cfg, "product lattice");
  }
  auto lat = std::shared_ptr<Lattice>(new Lattice());
  lat->n_ = static_cast<int>(n);
  lat->kind_ = Kind::Product;
  lat->factors_ = factors;

  std::vector<int> radices;
  for (const auto& f : factors) radices.push_back(f->size());
  ProductCodec codec(radices);

  int m = lat->n_;
  std::vector<std::vector<int>> coords(m);
  for (int a = 0; a < m; ++a) coords[a] = codec.decode(a);

  lat->order_.assign(m, ElementSet(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      bool le = true;
      for (size_t i = 0; i < factors.size(); ++i)
        if (!factors[i]->leq(coords[a][i], coords[b][i])) {
          le = false;
          break;
        }
      if (le) lat->order_[a].insert(b);
    }
  lat->join_.resize(static_cast<size_t>(m) * m);
  lat->meet_.resize(static_cast<size_t>(m) * m);
  std::vector<int> cj(factors.size()), cm(factors.size());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      for (size_t i = 0; i < factors.size(); ++i) {
        cj[i] = factors[i]->join(coords[a][i], coords[b][i]);
        cm[i] = factors[i]->meet(coords[a][i], coords[b][i]);
      }
      lat->join_[lat->idx(a, b)] = codec.encode(cj);
      lat->meet_[lat->idx(a, b)] = codec.encode(cm);
    }
  std::vector<int> cb(factors.size()), ct(factors.size());
  for (size_t i = 0; i < factors.size(); ++i) {
    cb[i] = factors[i]->bottom();
    ct[i] = factors[i]->top();
  }
  lat->bottom_ = codec.encode(cb);
  lat->top_ = codec.encode(ct);

  // flags compose componentwise
  bool dist = true, compl_flag = true;
  for (const auto& f : factors) {
    dist = dist && f->flags().distributive;
    compl_flag = compl_flag && f->flags().complemented;
  }
  lat->flags_.distributive = lat->flags_.frame = dist;
  lat->flags_.complemented = compl_flag;
  lat->flags_.boolean_algebra = dist && compl_flag;
  lat->flags_.trivial = m <= 2;
  lat->flags_.chain = true;
  for (int a = 0; a < m && lat->flags_.chain; ++a)
    for (int b = a + 1; b < m; ++b)
      if (!lat->leq(a, b) && !lat->leq(b, a)) {
        lat->flags_.chain = false;
        break;
      }
  if (compl_flag) {
    lat->complement_.resize(m);
    std::vector<int> cc(factors.size());
    for (int a = 0; a < m; ++a) {
      for (size_t i = 0; i < factors.size(); ++i)
        cc[i] = factors[i]->complement(coords[a][i]);
      lat->complement_[a] = codec.encode(cc);
    }
  }
  return lat;
}

ElemId Lattice::join_set(const ElementSet& s) const {
  ElemId r = bottom_;
  for (int i = 0; i < n_; ++i)
    if (s.contains(i)) r = join(r, i);
  return r;
}

ElemId Lattice::meet_set(const ElementSet& s) const {
  ElemId r = top_;
  for (int i = 0; i < n_; ++i)
    if (s.contains(i)) r = meet(r, i);
  return r;
}

ElementSet Lattice::upset(const ElementSet& s) const {
  ElementSet r(n_);
  for (int x = 0; x < n_; ++x)
    if (s.contains(x)) r = r | order_[x];
  return r;
}

ElementSet Lattice::downset(const ElementSet& s) const {
  ElementSet r(n_);
  for (int y = 0; y < n_; ++y) {
    for (int x = 0; x < n_; ++x)
      if (s.contains(x) && leq(y, x)) {
        r.insert(y);
        break;
      }
  }
  return r;
}

ElementSet Lattice::upset(ElemId x) const { return order_[x]; }

ElementSet Lattice::downset(ElemId x) const {
  ElementSet r(n_);
  for (int y = 0; y < n_; ++y)
    if (leq(y, x)) r.insert(y);
  return r;
}

LatticePtr Lattice::opposite() const {
  auto lat = std::shared_ptr<Lattice>(new Lattice());
  lat->n_ = n_;
  lat->kind_ = Kind::Explicit;
  lat->order_.assign(n_, ElementSet(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (leq(b, a)) lat->order_[a].insert(b);
  lat->join_ = meet_;
  lat->meet_ = join_;
  lat->bottom_ = top_;
  lat->top_ = bottom_;
  lat->complement_ = complement_;  // complementation is self-dual
  lat->flags_ = flags_;            // all recorded classes are self-dual here
  return lat;
}

std::vector<ElemId> Lattice::join_irreducibles() const {
  std::vector<ElemId> ji;
  for (int x = 0; x < n_; ++x) {
    if (x == bottom_) continue;
    ElemId below_join = bottom_;
    for (int y = 0; y < n_; ++y)
      if (y != x && leq(y, x)) below_join = join(below_join, y);
    if (below_join != x) ji.push_back(x);
  }
  return ji;
}

bool Lattice::ids_are_bitmasks() const {
  if (n_ <= 0 || (n_ & (n_ - 1)) != 0) return false;
  if (bottom_ != 0 || top_ != n_ - 1) return false;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (join(a, b) != (a | b) || meet(a, b) != (a & b)) return false;
  return true;
}

bool Lattice::same_structure(const Lattice& o) const {
  return n_ == o.n_ && join_ == o.join_ && meet_ == o.meet_ &&
         bottom_ == o.bottom_ && top_ == o.top_;
}

ProductCodec ProductCodec::for_product(const Lattice& prod) {
  std::vector<int> r;
  for (const auto& f : prod.factors()) r.push_back(f->size());
  return ProductCodec(r);
}

ElemId ProductCodec::encode(const std::vector<int>& coords) const {
  ElemId id = 0;
  for (size_t i = 0; i < radices.size(); ++i) id = id * radices[i] + coords[i];
  return id;
}

std::vector<int> ProductCodec::decode(ElemId id) const {
  std::vector<int> c(radices.size());
  for (size_t i = radices.size(); i-- > 0;) {
    c[i] = id % radices[i];
    id /= radices[i];
  }
  return c;
}

}  // namespace latfix
