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

#include "latfix/boolalg.hpp"

#include <string>

namespace latfix {

void require_boolean(const Lattice& lat, const char* who) {
  if (!lat.flags().boolean_algebra)
    fail(Err::NotBoolean, std::string(who) + ": lattice is not a Boolean algebra");
}

LatMap dual_map(const LatMap& psi) {
  const Lattice& L = psi.lattice();
  require_boolean(L, "dual_map");
  std::vector<ElemId> t(L.size());
  for (int x = 0; x < L.size(); ++x) t[x] = L.complement(psi(L.complement(x)));
  return LatMap(psi.lattice_ptr(), std::move(t));
}

LatMap transpose(const LatMap& f) {
  require_boolean(f.lattice(), "transpose");
  require_graph(f, "transpose");
  return dual_map(residual(f));
}

LatMap cotranspose(const LatMap& psi) {
  require_boolean(psi.lattice(), "cotranspose");
  return dual_map(residuated_map(psi));
}

bool is_symmetric(const LatMap& f) { return f == transpose(f); }

LatMap sigma(const LatMap& f) { return f.compose(transpose(f)); }

ElemId difference_floor(const Lattice& lat, ElemId x, ElemId y) {
  require_boolean(lat, "difference_floor");
  ElemId a = lat.top();
  for (int s = 0; s < lat.size(); ++s)
    if (lat.join(x, s) == lat.join(y, s)) a = lat.meet(a, s);
  // the equalizer set must be exactly the principal filter of a
  for (int s = 0; s < lat.size(); ++s) {
    bool eq = lat.join(x, s) == lat.join(y, s);
    if (eq != lat.leq(a, s))
      fail(Err::Internal,
           "difference_floor: equalizer of " + std::to_string(x) + "," +
               std::to_string(y) + " is not the filter of " + std::to_string(a),
           {x, y, a, s});
  }
  return a;
}

bool is_fpf_set(const LatMap& f, ElemId t, const Config& cfg) {
  const Lattice& L = f.lattice();
  require_boolean(L, "is_fpf_set");
  require_graph(f, "is_fpf_set");
  LatMap ft = transpose(f);

  SublatticeMap ind = induced_subgraph(ft, t, cfg);
  bool via_subgraph = is_fixed_point_free(ind.map);

  bool via_condition = true;
  for (int u = 0; u < L.size(); ++u)
    if (L.leq(u, t) && u != L.bottom() && L.leq(u, ft(u))) {
      via_condition = false;
      break;
    }
  if (via_subgraph != via_condition)
    fail(Err::Internal, "is_fpf_set: the two characterisations disagree",
         {t});
  return via_subgraph;
}

FourWayReport four_way_equivalence(const LatMap& f, const LatMap& phi,
                                   const Config& cfg) {
  require_boolean(f.lattice(), "four_way_equivalence");
  require_graph(f, "four_way_equivalence");
  FourWayReport r;
  r.pre_meet_on_f = depends(DepKind::PreMeet, phi, f, cfg);
  r.pre_join_on_dual = depends(DepKind::PreJoin, phi, dual_map(f), cfg);
  r.post_meet_on_residual = depends(DepKind::PostMeet, phi, residual(f), cfg);
  r.post_join_on_transpose = depends(DepKind::PostJoin, phi, transpose(f), cfg);
  bool v = r.pre_meet_on_f;
  if (r.pre_join_on_dual != v || r.post_meet_on_residual != v ||
      r.post_join_on_transpose != v)
    fail(Err::EquivalenceViolated,
         "four-way dependency verdicts disagree: pre-meet=" +
             std::to_string(r.pre_meet_on_f) +
             " pre-join=" + std::to_string(r.pre_join_on_dual) +
             " post-meet=" + std::to_string(r.post_meet_on_residual) +
             " post-join=" + std::to_string(r.post_join_on_transpose));
  return r;
}

PrecariousReport precarious_analysis(const LatMap& f, const Config& cfg) {
  const Lattice& L = f.lattice();
  require_boolean(L, "precarious_analysis");
  require_graph(f, "precarious_analysis");
  PrecariousReport rep;
  LatMap ft = transpose(f);
  rep.fpf = is_fixed_point_free(ft);
  if (!rep.fpf) {
    // transpose(f) itself is a hypodox witness: it pre-meet-depends on f
    // and fixes bottom plus at least one other element
    if (!depends(DepKind::PreMeet, ft, f, cfg))
      fail(Err::EquivalenceViolated,
           "precarious_analysis: transpose does not pre-meet-depend on f");
    if (fixed_points(ft).count() < 2)
      fail(Err::EquivalenceViolated,
           "precarious_analysis: expected >= 2 fixed points on the hypodox");
    rep.hypodox = ft;
  }
  return rep;
}

}  // namespace latfix
