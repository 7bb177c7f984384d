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

#ifndef LATFIX_DYADIC_HPP_
#define LATFIX_DYADIC_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace latfix {

/// Exact nonnegative dyadic rational m * 2^e with arbitrary-precision m.
/// Canonical form: m odd (or zero, in which case e = 0).
class Dyadic {
 public:
  Dyadic() = default;  // zero

  static Dyadic zero() { return Dyadic(); }
  /// 2^e, e may be negative.
  static Dyadic pow2(long long e);
  static Dyadic from_uint(std::uint64_t v);

  bool is_zero() const { return mag_.empty(); }

  Dyadic operator+(const Dyadic& o) const;
  /// Value times 2^shift; exact, just moves the exponent.
  Dyadic scaled_pow2(long long shift) const;

  /// -1, 0, +1 comparison.
  static int cmp(const Dyadic& a, const Dyadic& b);
  bool operator==(const Dyadic& o) const { return cmp(*this, o) == 0; }
  bool operator<(const Dyadic& o) const { return cmp(*this, o) < 0; }
  bool operator<=(const Dyadic& o) const { return cmp(*this, o) <= 0; }

  double to_double() const;
  /// Lowercase hex of the odd numerator, no 0x prefix; "0" for zero.
  std::string numerator_hex() const;
  /// Exponent of the canonical form (0 for zero).
  long long exponent() const { return is_zero() ? 0 : exp_; }
  /// Human-readable "m/2^k" or "m*2^k" form.
  std::string to_string() const;

 private:
  void normalize();

  std::vector<std::uint64_t> mag_;  // little-endian limbs, no trailing zero limb
  long long exp_ = 0;
};

}  // namespace latfix

#endif  // LATFIX_DYADIC_HPP_
