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

// Times the OpenMP sweep kernels against their serial references on
// instances large enough to matter, and confirms that both return the
// same witness. Usage: latfix_bench [--quick]

#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>

#include "latfix/gen.hpp"
#include "latfix/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace latfix;

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double timed(F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  body();
  return seconds(t0, std::chrono::steady_clock::now());
}

void row(const char* kernel, int n, double serial, double parallel, bool same) {
  std::printf("%-28s n=%5d  serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n",
              kernel, n, serial, parallel, serial / parallel,
              same ? "results match" : "RESULTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; both columns run the serial path\n");
#endif

  Config cfg;
  cfg.max_triple_checks = 1LL << 62;
  std::mt19937_64 rng(42);

  // dependency sweep on a product of chains
  {
    int side = quick ? 6 : 8;
    auto L = Lattice::product(
        {Lattice::chain(side), Lattice::chain(side), Lattice::chain(side)}, cfg);
    LatMap phi = gen::random_graph_on(L, rng);
    LatMap rho = gen::random_graph_on(L, rng);
    std::optional<sweep::Triple> got, want;
    double tp = timed([&] { got = sweep::dep_violation(DepKind::PreMeet, phi, rho); });
    double ts = timed(
        [&] { want = sweep::dep_violation_serial(DepKind::PreMeet, phi, rho); });
    row("dependency sweep (early hit)", L->size(), ts, tp, got == want);
  }

  // dependency sweep that holds (no early exit anywhere)
  {
    int ground = quick ? 8 : 9;
    auto L = Lattice::powerset(ground, cfg);
    Digraph d = gen::random_dag(ground, 0.5, rng);
    Network net =
        gen::random_network_on_digraph(d, std::vector<int>(ground, 2), rng, cfg);
    LatMap phi = net.as_powerset_map(cfg);
    LatMap alpha = digraph_to_graph(d, L);
    std::optional<sweep::Triple> got, want;
    double tp = timed(
        [&] { got = sweep::dep_violation(DepKind::PreMeet, phi, alpha); });
    double ts = timed([&] {
      want = sweep::dep_violation_serial(DepKind::PreMeet, phi, alpha);
    });
    row("dependency sweep (holds)", L->size(), ts, tp, got == want);
  }

  // distributivity sweep
  {
    auto L = Lattice::powerset(quick ? 8 : 9, cfg);
    std::optional<sweep::Triple> got, want;
    double tp = timed([&] { got = sweep::distributive_violation(*L); });
    double ts = timed([&] { want = sweep::distributive_violation_serial(*L); });
    row("distributivity sweep", L->size(), ts, tp, got == want);
  }

  // contraction pair sweep with exact dyadics
  {
    auto L = Lattice::powerset(quick ? 8 : 9, cfg);
    Digraph d = gen::random_dag(quick ? 8 : 9, 0.5, rng);
    Network net = gen::random_network_on_digraph(
        d, std::vector<int>(quick ? 8 : 9, 2), rng, cfg);
    LatMap phi = net.as_powerset_map(cfg);
    ESeq wit = canonical_witness(DepKind::PreMeet, digraph_to_graph(d, L));
    std::optional<std::pair<ElemId, ElemId>> got, want;
    double tp = timed(
        [&] { got = sweep::contraction_violation(phi, wit, Side::Meet); });
    double ts = timed([&] {
      want = sweep::contraction_violation_serial(phi, wit, Side::Meet);
    });
    row("contraction pair sweep", L->size(), ts, tp, got == want);
  }
  return 0;
}
