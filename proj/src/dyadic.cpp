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

#include "latfix/dyadic.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>

namespace latfix {

namespace {

// a <<= k, k in [0,63]
void shl_small(std::vector<std::uint64_t>& a, unsigned k) {
  if (k == 0 || a.empty()) return;
  std::uint64_t carry = 0;
  for (auto& w : a) {
    std::uint64_t nw = (w << k) | carry;
    carry = w >> (64 - k);
    w = nw;
  }
  if (carry) a.push_back(carry);
}

void add_mag(std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  unsigned __int128 carry = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    unsigned __int128 s = carry + a[i] + (i < b.size() ? b[i] : 0);
    a[i] = static_cast<std::uint64_t>(s);
    carry = s >> 64;
  }
  if (carry) a.push_back(static_cast<std::uint64_t>(carry));
}

int cmp_mag(const std::vector<std::uint64_t>& a,
            const std::vector<std::uint64_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

long long bit_length(const std::vector<std::uint64_t>& a) {
  if (a.empty()) return 0;
  return 64 * static_cast<long long>(a.size() - 1) +
         (64 - std::countl_zero(a.back()));
}

}  // namespace

void Dyadic::normalize() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) {
    exp_ = 0;
    return;
  }
  // strip trailing zero bits so the numerator is odd
  size_t zero_limbs = 0;
  while (mag_[zero_limbs] == 0) ++zero_limbs;
  if (zero_limbs) {
    mag_.erase(mag_.begin(), mag_.begin() + zero_limbs);
    exp_ += 64 * static_cast<long long>(zero_limbs);
  }
  unsigned tz = std::countr_zero(mag_[0]);
  if (tz) {
    for (size_t i = 0; i + 1 < mag_.size(); ++i)
      mag_[i] = (mag_[i] >> tz) | (mag_[i + 1] << (64 - tz));
    mag_.back() >>= tz;
    exp_ += tz;
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  }
}

Dyadic Dyadic::pow2(long long e) {
  Dyadic d;
  d.mag_ = {1};
  d.exp_ = e;
  return d;
}

Dyadic Dyadic::from_uint(std::uint64_t v) {
  Dyadic d;
  if (v) {
    d.mag_ = {v};
    d.exp_ = 0;
    d.normalize();
  }
  return d;
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  // align to the smaller exponent
  long long e = std::min(exp_, o.exp_);
  Dyadic r;
  r.mag_ = mag_;
  long long d1 = exp_ - e;
  assert(d1 >= 0);
  if (d1 >= 64) {
    r.mag_.insert(r.mag_.begin(), static_cast<size_t>(d1 / 64), 0);
    d1 %= 64;
  }
  shl_small(r.mag_, static_cast<unsigned>(d1));

  std::vector<std::uint64_t> b = o.mag_;
  long long d2 = o.exp_ - e;
  assert(d2 >= 0);
  if (d2 >= 64) {
    b.insert(b.begin(), static_cast<size_t>(d2 / 64), 0);
    d2 %= 64;
  }
  shl_small(b, static_cast<unsigned>(d2));

  add_mag(r.mag_, b);
  r.exp_ = e;
  r.normalize();
  return r;
}

Dyadic Dyadic::scaled_pow2(long long shift) const {
  Dyadic r = *this;
  if (!r.is_zero()) r.exp_ += shift;
  return r;
}

int Dyadic::cmp(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero() && b.is_zero()) return 0;
  if (a.is_zero()) return -1;
  if (b.is_zero()) return 1;
  // compare overall bit positions first (numerators are odd)
  long long atop = a.exp_ + bit_length(a.mag_);
  long long btop = b.exp_ + bit_length(b.mag_);
  if (atop != btop) return atop < btop ? -1 : 1;
  // same leading bit position: align and compare magnitudes
  long long e = std::min(a.exp_, b.exp_);
  std::vector<std::uint64_t> am = a.mag_, bm = b.mag_;
  long long da = a.exp_ - e, db = b.exp_ - e;
  if (da >= 64) {
    am.insert(am.begin(), static_cast<size_t>(da / 64), 0);
    da %= 64;
  }
  shl_small(am, static_cast<unsigned>(da));
  if (db >= 64) {
    bm.insert(bm.begin(), static_cast<size_t>(db / 64), 0);
    db %= 64;
  }
  shl_small(bm, static_cast<unsigned>(db));
  return cmp_mag(am, bm);
}

double Dyadic::to_double() const {
  if (is_zero()) return 0.0;
  double v = 0.0;
  // use the top two limbs only; enough for a display approximation
  size_t k = mag_.size();
  v = static_cast<double>(mag_[k - 1]);
  long long e = exp_ + 64 * static_cast<long long>(k - 1);
  if (k >= 2) v += static_cast<double>(mag_[k - 2]) * std::ldexp(1.0, -64);
  return std::ldexp(v, static_cast<int>(e));
}

std::string Dyadic::numerator_hex() const {
  if (is_zero()) return "0";
  static const char* digits = "0123456789abcdef";
  std::string s;
  for (size_t i = mag_.size(); i-- > 0;) {
    for (int nib = 15; nib >= 0; --nib) {
      unsigned d = (mag_[i] >> (4 * nib)) & 0xF;
      if (s.empty() && d == 0) continue;
      s.push_back(digits[d]);
    }
  }
  return s;
}

std::string Dyadic::to_string() const {
  if (is_zero()) return "0";
  std::string m = "0x" + numerator_hex();
  if (exp_ == 0) return m;
  if (exp_ < 0) return m + "/2^" + std::to_string(-exp_);
  return m + "*2^" + std::to_string(exp_);
}

}  // namespace latfix
