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

#ifndef LATFIX_ROBERT_HPP_
#define LATFIX_ROBERT_HPP_

#include <cstdint>
#include <optional>

#include "latfix/boolalg.hpp"
#include "latfix/dependency.hpp"
#include "latfix/dynamics.hpp"

// Convergence and fixed-point certificates. Every infinite join/meet in a
// certificate formula is evaluated exactly: trajectories on a finite
// lattice are eventually periodic and witness sequences are eventually
// constant, so a horizon of transient + period + stable index covers all
// distinct terms. Nothing is approximated.

namespace latfix {

enum class CertLevel { Metric, Complete, Nilpotent };
const char* cert_level_name(CertLevel l);

struct Certificate {
  DepKind kind = DepKind::PreMeet;
  CertLevel level = CertLevel::Metric;
  std::optional<int> K;  // set iff level == Nilpotent
  ElemId e = 0;
  int starts_checked = 0;
  bool exhaustive = true;  // false above the start-verification cap
  std::optional<ESeq> witness;
  std::uint64_t dependency_digest = 0;
};

/// e-formula evaluated exactly from start x:
///   meet side: join over i of phi^i(x) ^ a_i
///   join side: meet over i of phi^i(x) v a_i
ElemId eval_e_formula(const LatMap& phi, const ESeq& a, Side side, ElemId x);

/// Certify that phi has the unique fixed point given by the kind's
/// formula, given a dependency map rho and a witness sequence for it.
/// Level is the strongest the inputs support: nilpotent(K) when rho is
/// K-nilpotent on the kind's nilpotency side, else complete when the
/// witness classifies complete, else metric.
Certificate robert_certify(const LatMap& phi, DepKind kind, const LatMap& rho,
                           const ESeq& a, const Config& cfg = {});

/// Boolean-algebra form: pre-meet dependency on a graph f whose transpose
/// is asymptotically meet-nilpotent. e = meet over i of
/// phi^i(x) v transpose(f)^i(top).
Certificate robert_cba(const LatMap& phi, const LatMap& f,
                       const Config& cfg = {});

/// d_A(phi x, phi y) <= (1/2) d_A(x, y) for all pairs, exact dyadics.
bool contraction_check(const LatMap& phi, const ESeq& a,
                       Side side = Side::Meet, const Config& cfg = {});
std::optional<std::pair<ElemId, ElemId>> contraction_witness(
    const LatMap& phi, const ESeq& a, Side side = Side::Meet,
    const Config& cfg = {});

struct FeedbackReport {
  long long bound = 0;
  int fix_count = 0;
  ElemId seed = 0;  // a_0 (lattice form) or t (Boolean form)
};
/// |Fix(phi)| bounded by the size of the principal ideal (meet kinds) or
/// filter (join kinds) of a_0, for a metric witness with free start.
/// Injectivity of x -> x ^ a_0 (resp. x v a_0) on Fix is verified
/// element-by-element.
FeedbackReport feedback_bound(const LatMap& phi, DepKind kind,
                              const LatMap& rho, const ESeq& a,
                              const Config& cfg = {});
/// Boolean form: |Fix(phi)| <= |t^up| for a fixed point-free set t of f.
FeedbackReport feedback_bound_cba(const LatMap& phi, const LatMap& f, ElemId t,
                                  const Config& cfg = {});

/// Stepwise certificate from a finite chain bottom = a_0, ..., a_K = top:
/// agreement below a_i must force agreement of images below a_{i+1}.
/// Yields nilpotent(K) with e = phi^K of any start.
Certificate sequence_certificate(const LatMap& phi,
                                 const std::vector<ElemId>& steps,
                                 const Config& cfg = {});

}  // namespace latfix

#endif  // LATFIX_ROBERT_HPP_
