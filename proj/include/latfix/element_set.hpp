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

#ifndef LATFIX_ELEMENT_SET_HPP_
#define LATFIX_ELEMENT_SET_HPP_

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace latfix {

using ElemId = int;

/// Subset of a fixed element universe {0,...,n-1}, stored as a bitset.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe)
      : n_(universe), bits_((universe + 63) / 64, 0) {}

  static ElementSet full(int universe) {
    ElementSet s(universe);
    for (int i = 0; i < universe; ++i) s.insert(i);
    return s;
  }
  static ElementSet of(int universe, std::initializer_list<ElemId> xs) {
    ElementSet s(universe);
    for (ElemId x : xs) s.insert(x);
    return s;
  }

  int universe() const { return n_; }

  bool contains(ElemId x) const {
    assert(x >= 0 && x < n_);
    return (bits_[x >> 6] >> (x & 63)) & 1;
  }
  void insert(ElemId x) {
    assert(x >= 0 && x < n_);
    bits_[x >> 6] |= std::uint64_t{1} << (x & 63);
  }
  void erase(ElemId x) {
    assert(x >= 0 && x < n_);
    bits_[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
  }

  int count() const {
    int c = 0;
    for (auto w : bits_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : bits_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & ~o.bits_[i]) return false;
    return true;
  }

  ElementSet operator&(const ElementSet& o) const {
    ElementSet r(n_);
    for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & o.bits_[i];
    return r;
  }
  ElementSet operator|(const ElementSet& o) const {
    ElementSet r(n_);
    for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] | o.bits_[i];
    return r;
  }
  ElementSet complement_in_universe() const {
    ElementSet r(n_);
    for (int i = 0; i < n_; ++i)
      if (!contains(i)) r.insert(i);
    return r;
  }

  bool operator==(const ElementSet& o) const {
    return n_ == o.n_ && bits_ == o.bits_;
  }

  std::vector<ElemId> to_vector() const {
    std::vector<ElemId> v;
    for (int i = 0; i < n_; ++i)
      if (contains(i)) v.push_back(i);
    return v;
  }

  /// Least member, or -1 when empty.
  ElemId min() const {
    for (int i = 0; i < n_; ++i)
      if (contains(i)) return i;
    return -1;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace latfix

#endif  // LATFIX_ELEMENT_SET_HPP_
