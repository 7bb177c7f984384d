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

#include "latfix/dependency.hpp"

#include <string>

namespace latfix {

namespace {

void check_same_lattice(const LatMap& phi, const LatMap& rho) {
  if (phi.lattice_ptr() != rho.lattice_ptr() &&
      !phi.lattice().same_structure(rho.lattice()))
    fail(Err::BadDescriptor, "maps live on different lattices");
}

void check_triple_cap(const Lattice& L, const Config& cfg) {
  long long n = L.size();
  // x < y pairs, all s
  __int128 checks = static_cast<__int128>(n) * (n - 1) / 2 * n;
  if (checks > cfg.max_triple_checks)
    fail(Err::SweepCapExceeded,
         "dependency sweep needs " + std::to_string(static_cast<long long>(
                                         checks)) +
             " triple checks, cap is " + std::to_string(cfg.max_triple_checks));
}

bool dep_violated(DepKind kind, const Lattice& L, const LatMap& phi,
                  const LatMap& rho, ElemId x, ElemId y, ElemId s) {
  switch (kind) {
    case DepKind::PreMeet:
      return L.meet(x, rho(s)) == L.meet(y, rho(s)) &&
             L.meet(phi(x), s) != L.meet(phi(y), s);
    case DepKind::PreJoin:
      return L.join(x, rho(s)) == L.join(y, rho(s)) &&
             L.join(phi(x), s) != L.join(phi(y), s);
    case DepKind::PostMeet:
      return L.meet(x, s) == L.meet(y, s) &&
             L.meet(phi(x), rho(s)) != L.meet(phi(y), rho(s));
    case DepKind::PostJoin:
      return L.join(x, s) == L.join(y, s) &&
             L.join(phi(x), rho(s)) != L.join(phi(y), rho(s));
  }
  return false;
}

}  // namespace

bool depends(DepKind kind, const LatMap& phi, const LatMap& rho,
             const Config& cfg) {
  return !violation_witness(kind, phi, rho, cfg).has_value();
}

std::optional<sweep::Triple> violation_witness(DepKind kind, const LatMap& phi,
                                               const LatMap& rho,
                                               const Config& cfg) {
  check_same_lattice(phi, rho);
  check_triple_cap(phi.lattice(), cfg);
  return sweep::dep_violation(kind, phi, rho);
}

bool depends_sampled(DepKind kind, const LatMap& phi, const LatMap& rho,
                     long long samples, std::uint64_t seed) {
  check_same_lattice(phi, rho);
  const Lattice& L = phi.lattice();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, L.size() - 1);
  for (long long i = 0; i < samples; ++i) {
    ElemId x = pick(rng), y = pick(rng), s = pick(rng);
    if (dep_violated(kind, L, phi, rho, x, y, s)) return false;
  }
  return true;
}

LatMap canonical_gamma(const LatMap& gamma) {
  const Lattice& L = gamma.lattice();
  if (!L.flags().frame)
    fail(Err::NotAFrame, "canonical_gamma requires a frame lattice");
  std::vector<ElemId> t(L.size());
  for (int a = 0; a < L.size(); ++a) {
    ElemId acc = L.bottom();
    for (int b = 0; b < L.size(); ++b)
      if (L.leq(b, a)) acc = L.join(acc, gamma(b));
    t[a] = acc;
  }
  return LatMap(gamma.lattice_ptr(), std::move(t));
}

std::uint64_t dependency_sweep_digest(DepKind kind, const LatMap& phi,
                                      const LatMap& rho, bool verdict) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(static_cast<std::uint64_t>(kind));
  mix(static_cast<std::uint64_t>(phi.size()));
  for (ElemId v : phi.table()) mix(static_cast<std::uint64_t>(v));
  for (ElemId v : rho.table()) mix(static_cast<std::uint64_t>(v));
  mix(verdict ? 1 : 0);
  return h;
}

}  // namespace latfix
