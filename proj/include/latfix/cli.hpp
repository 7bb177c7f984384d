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

#ifndef LATFIX_CLI_HPP_
#define LATFIX_CLI_HPP_

#include <iostream>
#include <string>
#include <vector>

namespace latfix::cli {

/// Runs one CLI invocation. Reports go to `out` as a single JSON document;
/// timing goes to `err`. Exit codes: 0 success or property true, 1 property
/// false (witness in the report), 2 input error, 3 cap exceeded,
/// 4 internal consistency failure.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace latfix::cli

#endif  // LATFIX_CLI_HPP_
