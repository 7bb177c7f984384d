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

#ifndef LATFIX_ERROR_HPP_
#define LATFIX_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace latfix {

enum class Err {
  // bad input objects
  Parse,
  NotAPoset,
  NotALattice,
  NotAGraph,
  NotACograph,
  NotAPowerSet,
  NotAFrame,
  NotBoolean,
  BadDescriptor,
  // resource limits
  SizeCapExceeded,
  SweepCapExceeded,
  // negative verdicts (the property asked about is false; witness attached)
  NotFixedPointFree,
  NotABitopology,
  PeriodicTail,
  BoundaryViolation,
  ChainViolation,
  StepViolation,
  WitnessRejected,
  DependencyFails,
  TransposeNotNilpotent,
  NotNilpotent,
  NotAcyclic,
  NotAnFVS,
  NotFpfSet,
  UnknownName,
  // would contradict a theorem: always an implementation bug
  FormulaMismatch,
  EquivalenceViolated,
  Internal,
};

const char* err_name(Err e);

/// Process exit class for the CLI: 1 = property false, 2 = input error,
/// 3 = cap exceeded, 4 = internal consistency failure.
int err_exit_class(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, std::string msg, std::vector<long long> ids = {})
      : std::runtime_error(std::move(msg)), code_(code), ids_(std::move(ids)) {}

  Err code() const { return code_; }
  /// Witness element/vertex ids, when the failure has one.
  const std::vector<long long>& ids() const { return ids_; }

 private:
  Err code_;
  std::vector<long long> ids_;
};

[[noreturn]] inline void fail(Err code, std::string msg,
                              std::vector<long long> ids = {}) {
  throw Error(code, std::move(msg), std::move(ids));
}

}  // namespace latfix

#endif  // LATFIX_ERROR_HPP_
