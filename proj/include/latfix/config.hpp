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

#ifndef LATFIX_CONFIG_HPP_
#define LATFIX_CONFIG_HPP_

#include <cstdint>
#include <string>

namespace latfix {

/// Global limits and reproducibility knobs. Caps must stay positive.
struct Config {
  long long max_lattice_size = 4096;
  long long max_triple_checks = 100000000;  // 1e8
  std::uint64_t rng_seed = 0;
  std::string output_path;           // empty = stdout
  std::string format_version = "1";  // stamped into every emitted document

  bool valid() const { return max_lattice_size > 0 && max_triple_checks > 0; }
};

}  // namespace latfix

#endif  // LATFIX_CONFIG_HPP_
