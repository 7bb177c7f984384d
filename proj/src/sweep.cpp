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

#include "latfix/sweep.hpp"

#include <atomic>


namespace latfix::sweep {

namespace {

// Dependency implication at (x,y,s); returns true on violation.
// pre-meet : x^r(s) = y^r(s)  but  p(x)^s    != p(y)^s
// pre-join : xvr(s) = yvr(s)  but  p(x)vs    != p(y)vs
// post-meet: x^s    = y^s     but  p(x)^r(s) != p(y)^r(s)
// post-join: xvs    = yvs     but  p(x)vr(s) != p(y)vr(s)
struct DepCheck {
  const Lattice* L;
  const ElemId* p;  // phi table
  const ElemId* r;  // rho table
  DepKind kind;

  bool violated(ElemId x, ElemId y, ElemId s) const {
    switch (kind) {
      case DepKind::PreMeet:
        return L->meet(x, r[s]) == L->meet(y, r[s]) &&
               L->meet(p[x], s) != L->meet(p[y], s);
      case DepKind::PreJoin:
        return L->join(x, r[s]) == L->join(y, r[s]) &&
               L->join(p[x], s) != L->join(p[y], s);
      case DepKind::PostMeet:
        return L->meet(x, s) == L->meet(y, s) &&
               L->meet(p[x], r[s]) != L->meet(p[y], r[s]);
      case DepKind::PostJoin:
        return L->join(x, s) == L->join(y, s) &&
               L->join(p[x], r[s]) != L->join(p[y], r[s]);
    }
    return false;
  }
};

// The implication is symmetric in (x,y), so only x < y is swept; the
// lexicographically least witness always has x < y.
std::optional<Triple> first_for_x(const DepCheck& c, int n, ElemId x) {
  for (ElemId y = x + 1; y < n; ++y)
    for (ElemId s = 0; s < n; ++s)
      if (c.violated(x, y, s)) return Triple{x, y, s};
  return std::nullopt;
}

}  // namespace

std::optional<Triple> dep_violation_serial(DepKind kind, const LatMap& phi,
                                           const LatMap& rho) {
  const Lattice& L = phi.lattice();
  DepCheck c{&L, phi.table().data(), rho.table().data(), kind};
  for (ElemId x = 0; x < L.size(); ++x)
    if (auto w = first_for_x(c, L.size(), x)) return w;
  return std::nullopt;
}

std::optional<Triple> dep_violation(DepKind kind, const LatMap& phi,
                                    const LatMap& rho) {
  const Lattice& L = phi.lattice();
  const int n = L.size();
  DepCheck c{&L, phi.table().data(), rho.table().data(), kind};

  std::atomic<int> best_x{n};
  Triple best{n, n, n};
#ifdef _OPENMP
#pragma omp parallel
  {
    Triple local{n, n, n};
#pragma omp for schedule(dynamic, 4) nowait
    for (ElemId x = 0; x < n; ++x) {
      if (x >= best_x.load(std::memory_order_relaxed)) continue;
      if (auto w = first_for_x(c, n, x)) {
        if (*w < local) local = *w;
        int cur = best_x.load(std::memory_order_relaxed);
        while (x < cur &&
               !best_x.compare_exchange_weak(cur, x, std::memory_order_relaxed)) {
        }
      }
    }
#pragma omp critical
    {
      if (local < best) best = local;
    }
  }
#else
  for (ElemId x = 0; x < n; ++x)
    if (auto w = first_for_x(c, n, x)) {
      best = *w;
      break;
    }
#endif
  if (best[0] >= n) return std::nullopt;
  return best;
}

namespace {

std::optional<Triple> dist_first_for_x(const Lattice& L, ElemId x) {
  const int n = L.size();
  for (ElemId y = 0; y < n; ++y)
    for (ElemId z = y; z < n; ++z)
      if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z)))
        return Triple{x, y, z};
  return std::nullopt;
}

}  // namespace

std::optional<Triple> distributive_violation_serial(const Lattice& lat) {
  for (ElemId x = 0; x < lat.size(); ++x)
    if (auto w = dist_first_for_x(lat, x)) return w;
  return std::nullopt;
}

std::optional<Triple> distributive_violation(const Lattice& lat) {
  const int n = lat.size();
  std::atomic<int> best_x{n};
  Triple best{n, n, n};
#ifdef _OPENMP
#pragma omp parallel
  {
    Triple local{n, n, n};
#pragma omp for schedule(dynamic, 4) nowait
    for (ElemId x = 0; x < n; ++x) {
      if (x >= best_x.load(std::memory_order_relaxed)) continue;
      if (auto w = dist_first_for_x(lat, x)) {
        if (*w < local) local = *w;
        int cur = best_x.load(std::memory_order_relaxed);
        while (x < cur &&
               !best_x.compare_exchange_weak(cur, x, std::memory_order_relaxed)) {
        }
      }
    }
#pragma omp critical
    {
      if (local < best) best = local;
    }
  }
#else
  return distributive_violation_serial(lat);
#endif
  if (best[0] >= n) return std::nullopt;
  return best;
}

namespace {

bool contraction_violated(const LatMap& phi, const ESeq& a, Side side,
                          ElemId x, ElemId y) {
  Dyadic lhs = d_A(a, phi(x), phi(y), side);
  Dyadic rhs = d_A(a, x, y, side);
  // lhs <= rhs/2  <=>  2*lhs <= rhs
  return Dyadic::cmp(lhs.scaled_pow2(1), rhs) > 0;
}

}  // namespace

std::optional<std::pair<ElemId, ElemId>> contraction_violation_serial(
    const LatMap& phi, const ESeq& a, Side side) {
  const int n = phi.size();
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = x + 1; y < n; ++y)
      if (contraction_violated(phi, a, side, x, y)) return std::make_pair(x, y);
  return std::nullopt;
}

std::optional<std::pair<ElemId, ElemId>> contraction_violation(
    const LatMap& phi, const ESeq& a, Side side) {
  const int n = phi.size();
  std::atomic<int> best_x{n};
  std::pair<ElemId, ElemId> best{n, n};
#ifdef _OPENMP
#pragma omp parallel
  {
    std::pair<ElemId, ElemId> local{n, n};
#pragma omp for schedule(dynamic, 4) nowait
    for (ElemId x = 0; x < n; ++x) {
      if (x >= best_x.load(std::memory_order_relaxed)) continue;
      for (ElemId y = x + 1; y < n; ++y)
        if (contraction_violated(phi, a, side, x, y)) {
          if (std::make_pair(x, y) < local) local = {x, y};
          int cur = best_x.load(std::memory_order_relaxed);
          while (x < cur && !best_x.compare_exchange_weak(
                                cur, x, std::memory_order_relaxed)) {
          }
          break;
        }
    }
#pragma omp critical
    {
      if (local < best) best = local;
    }
  }
#else
  return contraction_violation_serial(phi, a, side);
#endif
  if (best.first >= n) return std::nullopt;
  return best;
}

std::optional<std::pair<ElemId, ElemId>> step_violation(const LatMap& phi,
                                                        ElemId lo, ElemId hi) {
  const Lattice& L = phi.lattice();
  const int n = L.size();
  std::atomic<int> best_x{n};
  std::pair<ElemId, ElemId> best{n, n};
#ifdef _OPENMP
#pragma omp parallel
  {
    std::pair<ElemId, ElemId> local{n, n};
#pragma omp for schedule(dynamic, 4) nowait
    for (ElemId x = 0; x < n; ++x) {
      if (x >= best_x.load(std::memory_order_relaxed)) continue;
      for (ElemId y = x + 1; y < n; ++y)
        if (L.meet(x, lo) == L.meet(y, lo) &&
            L.meet(phi(x), hi) != L.meet(phi(y), hi)) {
          if (std::make_pair(x, y) < local) local = {x, y};
          int cur = best_x.load(std::memory_order_relaxed);
          while (x < cur && !best_x.compare_exchange_weak(
                                cur, x, std::memory_order_relaxed)) {
          }
          break;
        }
    }
#pragma omp critical
    {
      if (local < best) best = local;
    }
  }
#else
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = x + 1; y < n; ++y)
      if (L.meet(x, lo) == L.meet(y, lo) &&
          L.meet(phi(x), hi) != L.meet(phi(y), hi))
        return std::make_pair(x, y);
#endif
  if (best.first >= n) return std::nullopt;
  return best;
}

}  // namespace latfix::sweep
