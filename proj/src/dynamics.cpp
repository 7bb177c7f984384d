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

#include "latfix/dynamics.hpp"

#include <algorithm>
#include <string>

namespace latfix {

ESeq::ESeq(LatticePtr lat, std::vector<ElemId> pre)
    : lattice(std::move(lat)), prefix(std::move(pre)) {
  if (prefix.empty()) fail(Err::BadDescriptor, "sequence prefix must be nonempty");
  for (ElemId v : prefix)
    if (v < 0 || v >= lattice->size())
      fail(Err::BadDescriptor, "sequence entry " + std::to_string(v) +
                                   " is not an element id");
  stable_from = static_cast<int>(prefix.size()) - 1;
}

ESeq ESeq::constant(LatticePtr lat, ElemId v) { return ESeq(std::move(lat), {v}); }

bool ESeq::same_sequence(const ESeq& o) const {
  int h = std::max(stable_from, o.stable_from);
  for (int i = 0; i <= h; ++i)
    if (at(i) != o.at(i)) return false;
  return true;
}

Orbit iterate_orbit(const LatMap& phi, ElemId x) {
  std::vector<int> seen_at(phi.size(), -1);
  std::vector<ElemId> path;
  ElemId cur = x;
  while (seen_at[cur] < 0) {
    seen_at[cur] = static_cast<int>(path.size());
    path.push_back(cur);
    cur = phi(cur);
  }
  int start = seen_at[cur];
  Orbit o;
  o.transient.assign(path.begin(), path.begin() + start);
  o.cycle.assign(path.begin() + start, path.end());
  return o;
}

ElementSet fix_set(const LatMap& phi) { return fixed_points(phi); }

namespace {

// elements lying on a cycle of the functional graph
ElementSet periodic_points(const LatMap& phi) {
  int n = phi.size();
  ElementSet per(n);
  std::vector<int> color(n, 0);  // 0 new, 1 in progress, 2 resolved
  for (int s = 0; s < n; ++s) {
    if (color[s]) continue;
    std::vector<ElemId> path;
    ElemId cur = s;
    while (color[cur] == 0) {
      color[cur] = 1;
      path.push_back(cur);
      cur = phi(cur);
    }
    if (color[cur] == 1) {
      // found a new cycle: mark from cur onwards along the path
      bool in_cycle = false;
      for (ElemId v : path) {
        if (v == cur) in_cycle = true;
        if (in_cycle) per.insert(v);
      }
    }
    for (ElemId v : path) color[v] = 2;
  }
  return per;
}

}  // namespace

ElementSet par_set(const LatMap& phi) {
  // forward closure of the periodic points (a no-op on cycles, kept for
  // fidelity to the definition)
  ElementSet p = periodic_points(phi);
  ElementSet r = p;
  for (int round = 0; round < phi.size(); ++round) {
    ElementSet next = r;
    for (int x = 0; x < phi.size(); ++x)
      if (r.contains(x)) next.insert(phi(x));
    if (next == r) break;
    r = next;
  }
  return r;
}

ElementSet pyr_set(const LatMap& phi) {
  ElementSet img = ElementSet::full(phi.size());
  for (int round = 0; round <= phi.size(); ++round) {
    ElementSet next(phi.size());
    for (int x = 0; x < phi.size(); ++x)
      if (img.contains(x)) next.insert(phi(x));
    if (next == img) break;
    img = next;
  }
  return img;
}

std::optional<ElemId> converges(const LatMap& phi) {
  ElementSet per = periodic_points(phi);
  if (per.count() != 1) return std::nullopt;
  ElemId e = per.min();
  return phi(e) == e ? std::optional<ElemId>(e) : std::nullopt;
}

std::optional<ElemId> strongly_converges(const LatMap& phi) {
  auto e = converges(phi);
  if (!e) return std::nullopt;
  ElementSet pyr = pyr_set(phi);
  if (pyr.count() != 1 || !pyr.contains(*e)) return std::nullopt;
  return e;
}

namespace {

ESeq orbit_eseq(const LatMap& psi, ElemId start, const char* who) {
  Orbit o = iterate_orbit(psi, start);
  if (o.cycle.size() != 1) {
    std::vector<long long> cyc(o.cycle.begin(), o.cycle.end());
    fail(Err::PeriodicTail,
         std::string(who) + ": orbit enters a cycle of length " +
             std::to_string(o.cycle.size()),
         cyc);
  }
  std::vector<ElemId> pre = o.transient;
  pre.push_back(o.cycle[0]);
  return ESeq(psi.lattice_ptr(), std::move(pre));
}

}  // namespace

ESeq M_seq(const LatMap& psi) {
  return orbit_eseq(psi, psi.lattice().bottom(), "M_seq");
}

ESeq J_seq(const LatMap& psi) {
  return orbit_eseq(psi, psi.lattice().top(), "J_seq");
}

namespace {

ElemId blend(const Lattice& L, Side side, ElemId x, ElemId a) {
  return side == Side::Meet ? L.meet(x, a) : L.join(x, a);
}
ElemId side_unit(const Lattice& L, Side side) {
  // identity of the accumulating fold: join over terms for the meet side
  return side == Side::Meet ? L.bottom() : L.top();
}
ElemId side_fold(const Lattice& L, Side side, ElemId acc, ElemId v) {
  return side == Side::Meet ? L.join(acc, v) : L.meet(acc, v);
}
ElemId side_top(const Lattice& L, Side side) {
  return side == Side::Meet ? L.top() : L.bottom();
}

}  // namespace

DeltaResult delta_A(const ESeq& a, ElemId s, ElemId t, Side side) {
  const Lattice& L = *a.lattice;
  DeltaResult r;
  r.stable_from = a.stable_from;
  for (int i = 0; i < a.stable_from; ++i)
    if (blend(L, side, s, a.at(i)) != blend(L, side, t, a.at(i)))
      r.indices.push_back(i);
  r.tail = blend(L, side, s, a.tail_value()) != blend(L, side, t, a.tail_value());
  return r;
}

Dyadic d_A(const ESeq& a, ElemId s, ElemId t, Side side) {
  DeltaResult d = delta_A(a, s, t, side);
  Dyadic sum;
  for (int i : d.indices) sum = sum + Dyadic::pow2(-i);
  if (d.tail) sum = sum + Dyadic::pow2(-(d.stable_from - 1));
  return sum;
}

SeqFlags classify_seq(const ESeq& a, Side side) {
  const Lattice& L = *a.lattice;
  SeqFlags f;
  ElemId big = side_unit(L, side);
  for (int i = 0; i <= a.stable_from; ++i) big = side_fold(L, side, big, a.at(i));
  f.covering = big == side_top(L, side);

  f.metric = true;
  for (int x = 0; x < L.size() && f.metric; ++x) {
    ElemId acc = side_unit(L, side);
    for (int i = 0; i <= a.stable_from; ++i)
      acc = side_fold(L, side, acc, blend(L, side, x, a.at(i)));
    if (acc != x) f.metric = false;
  }
  // A bounded metric on a finite lattice makes every Cauchy sequence
  // eventually constant, so the space is complete.
  f.complete = f.metric;
  return f;
}

CauchyReport strongly_cauchy_oracle(const ESeq& a, const ESeq& z, Side side) {
  const Lattice& L = *a.lattice;
  CauchyReport rep;
  int h = std::max(a.stable_from, z.stable_from) + 1;
  for (int j = 0; j <= h; ++j)
    for (int i = j; i <= h; ++i)
      if (blend(L, side, z.at(i), a.at(j)) != blend(L, side, z.at(j), a.at(j))) {
        rep.violation = std::make_pair(i, j);
        return rep;
      }
  rep.strongly_cauchy = true;

  std::vector<ElemId> az;
  for (int i = 0; i <= h; ++i) az.push_back(blend(L, side, z.at(i), a.at(i)));
  ESeq a_z(a.lattice, az);
  ElemId lim = side_unit(L, side);
  for (int i = 0; i <= h; ++i) lim = side_fold(L, side, lim, a_z.at(i));
  std::vector<ElemId> al;
  for (int i = 0; i <= h; ++i) al.push_back(blend(L, side, lim, a.at(i)));
  rep.limit_identity = a_z.same_sequence(ESeq(a.lattice, al));
  return rep;
}

std::optional<int> nilpotency_index(const LatMap& psi, Side side) {
  const Lattice& L = psi.lattice();
  ElemId start = side == Side::Meet ? L.top() : L.bottom();
  ElemId target = side == Side::Meet ? L.bottom() : L.top();
  ElemId cur = start;
  std::vector<char> seen(L.size(), 0);
  int k = 0;
  while (!seen[cur]) {
    if (cur == target) return k;
    seen[cur] = 1;
    cur = psi(cur);
    ++k;
  }
  return cur == target ? std::optional<int>(k) : std::nullopt;
}

bool is_asymptotically_nilpotent(const LatMap& psi, Side side) {
  const Lattice& L = psi.lattice();
  ElemId start = side == Side::Meet ? L.top() : L.bottom();
  Orbit o = iterate_orbit(psi, start);
  ElemId acc = side == Side::Meet ? L.top() : L.bottom();
  for (ElemId v : o.transient)
    acc = side == Side::Meet ? L.meet(acc, v) : L.join(acc, v);
  for (ElemId v : o.cycle)
    acc = side == Side::Meet ? L.meet(acc, v) : L.join(acc, v);
  return acc == (side == Side::Meet ? L.bottom() : L.top());
}

ElementSet B_set(const LatMap& phi) {
  const Lattice& L = phi.lattice();
  ElementSet img = ElementSet::full(L.size());
  ElementSet acc = L.downset(img);
  for (int round = 0; round <= L.size(); ++round) {
    ElementSet next(L.size());
    for (int x = 0; x < L.size(); ++x)
      if (img.contains(x)) next.insert(phi(x));
    if (next == img) break;
    img = next;
    acc = acc & L.downset(img);
  }
  return acc;
}

ElementSet C_set(const LatMap& phi) {
  const Lattice& L = phi.lattice();
  Orbit o = iterate_orbit(phi, L.top());
  ElemId m = L.top();
  for (ElemId v : o.transient) m = L.meet(m, v);
  for (ElemId v : o.cycle) m = L.meet(m, v);
  return L.downset(m);
}

const char* dep_kind_name(DepKind k) {
  switch (k) {
    case DepKind::PreMeet: return "pre-meet";
    case DepKind::PreJoin: return "pre-join";
    case DepKind::PostMeet: return "post-meet";
    case DepKind::PostJoin: return "post-join";
  }
  return "?";
}

Side dep_side(DepKind k) {
  return (k == DepKind::PreMeet || k == DepKind::PostMeet) ? Side::Meet
                                                           : Side::Join;
}

namespace {

// chaining inequality at step i (i >= 1)
bool chain_ok(DepKind kind, const Lattice& L, const LatMap& m, const ESeq& a,
              int i) {
  switch (kind) {
    case DepKind::PreMeet:
      return L.leq(m(a.at(i)), a.at(i - 1));
    case DepKind::PreJoin:
      return L.leq(a.at(i - 1), m(a.at(i)));
    case DepKind::PostMeet:
      return L.leq(a.at(i), m(a.at(i - 1)));
    case DepKind::PostJoin:
      return L.leq(m(a.at(i - 1)), a.at(i));
  }
  return false;
}

SeqFlags check_witness_impl(DepKind kind, const LatMap& map, const ESeq& a,
                            bool fixed_start) {
  const Lattice& L = *a.lattice;
  if (fixed_start) {
    ElemId want = dep_side(kind) == Side::Meet ? L.bottom() : L.top();
    if (a.at(0) != want)
      fail(Err::BoundaryViolation,
           std::string("witness sequence must start at ") +
               (dep_side(kind) == Side::Meet ? "bottom" : "top") +
               " for a " + dep_kind_name(kind) + " witness",
           {a.at(0)});
  }
  // one step past the stable index covers the whole constant tail
  for (int i = 1; i <= a.stable_from + 1; ++i)
    if (!chain_ok(kind, L, map, a, i))
      fail(Err::ChainViolation,
           "chaining inequality fails at index " + std::to_string(i),
           {i, a.at(i - 1), a.at(i)});
  return classify_seq(a, dep_side(kind));
}

}  // namespace

SeqFlags check_witness(DepKind kind, const LatMap& map, const ESeq& a) {
  return check_witness_impl(kind, map, a, true);
}

SeqFlags check_witness_free_start(DepKind kind, const LatMap& map,
                                  const ESeq& a) {
  return check_witness_impl(kind, map, a, false);
}

ESeq canonical_witness(DepKind kind, const LatMap& map) {
  switch (kind) {
    case DepKind::PreMeet:
      require_graph(map, "canonical_witness(pre-meet)");
      return M_seq(residual(map));
    case DepKind::PreJoin:
      require_cograph(map, "canonical_witness(pre-join)");
      return J_seq(residuated_map(map));
    case DepKind::PostMeet:
      return M_seq(map);
    case DepKind::PostJoin:
      return J_seq(map);
  }
  fail(Err::Internal, "unknown dependency kind");
}

}  // namespace latfix
