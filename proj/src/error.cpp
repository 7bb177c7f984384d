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

#include "latfix/error.hpp"

namespace latfix {

const char* err_name(Err e) {
  switch (e) {
    case Err::Parse: return "Parse";
    case Err::NotAPoset: return "NotAPoset";
    case Err::NotALattice: return "NotALattice";
    case Err::NotAGraph: return "NotAGraph";
    case Err::NotACograph: return "NotACograph";
    case Err::NotAPowerSet: return "NotAPowerSet";
    case Err::NotAFrame: return "NotAFrame";
    case Err::NotBoolean: return "NotBoolean";
    case Err::BadDescriptor: return "BadDescriptor";
    case Err::SizeCapExceeded: return "SizeCapExceeded";
    case Err::SweepCapExceeded: return "SweepCapExceeded";
    case Err::NotFixedPointFree: return "NotFixedPointFree";
    case Err::NotABitopology: return "NotABitopology";
    case Err::PeriodicTail: return "PeriodicTail";
    case Err::BoundaryViolation: return "BoundaryViolation";
    case Err::ChainViolation: return "ChainViolation";
    case Err::StepViolation: return "StepViolation";
    case Err::WitnessRejected: return "WitnessRejected";
    case Err::DependencyFails: return "DependencyFails";
    case Err::TransposeNotNilpotent: return "TransposeNotNilpotent";
    case Err::NotNilpotent: return "NotNilpotent";
    case Err::NotAcyclic: return "NotAcyclic";
    case Err::NotAnFVS: return "NotAnFVS";
    case Err::NotFpfSet: return "NotFpfSet";
    case Err::UnknownName: return "UnknownName";
    case Err::FormulaMismatch: return "FormulaMismatch";
    case Err::EquivalenceViolated: return "EquivalenceViolated";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

int err_exit_class(Err e) {
  switch (e) {
    case Err::Parse:
    case Err::NotAPoset:
    case Err::NotALattice:
    case Err::NotAGraph:
    case Err::NotACograph:
    case Err::NotAPowerSet:
    case Err::NotAFrame:
    case Err::NotBoolean:
    case Err::BadDescriptor:
    case Err::UnknownName:
      return 2;
    case Err::SizeCapExceeded:
    case Err::SweepCapExceeded:
      return 3;
    case Err::FormulaMismatch:
    case Err::EquivalenceViolated:
    case Err::Internal:
      return 4;
    default:
      return 1;  // the property asked about is false; witness in output
  }
}

}  // namespace latfix
