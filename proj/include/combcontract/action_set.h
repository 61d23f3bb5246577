// Copyright 2026 The Combcontract Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COMBCONTRACT_ACTION_SET_H_
#define COMBCONTRACT_ACTION_SET_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace combcontract {

// Hard cap on the ground set; explicit tables hold 2^n entries.
inline constexpr int kMaxActions = 24;

// A subset of the actions {0, ..., n-1}, stored as a bitmask. Actions are
// 0-based in code and printed 1-based.
class ActionSet {
 public:
  constexpr ActionSet() = default;
  constexpr explicit ActionSet(uint32_t mask) : mask_(mask) {}
  ActionSet(std::initializer_list<int> actions) {
    for (int a : actions) mask_ |= uint32_t{1} << a;
  }

  static constexpr ActionSet Full(int n) {
    return ActionSet(n >= 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1);
  }

  constexpr uint32_t mask() const { return mask_; }
  constexpr bool Empty() const { return mask_ == 0; }
  constexpr bool Contains(int a) const { return (mask_ >> a) & 1u; }
  constexpr int Size() const { return std::popcount(mask_); }
  constexpr ActionSet With(int a) const {
    return ActionSet(mask_ | (uint32_t{1} << a));
  }
  constexpr ActionSet Without(int a) const {
    return ActionSet(mask_ & ~(uint32_t{1} << a));
  }
  constexpr bool IsSubsetOf(ActionSet other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  // True when every member lies in {0, ..., n-1}.
  constexpr bool WithinGround(int n) const {
    return IsSubsetOf(Full(n));
  }

  std::vector<int> Actions() const {
    std::vector<int> out;
    for (uint32_t m = mask_; m != 0; m &= m - 1) {
      out.push_back(std::countr_zero(m));
    }
    return out;
  }

  // "{1,3}" with 1-based action labels; "{}" for the empty set.
  std::string ToString() const {
    std::string s = "{";
    bool first = true;
    for (int a : Actions()) {
      if (!first) s += ",";
      s += std::to_string(a + 1);
      first = false;
    }
    return s + "}";
  }

  friend constexpr bool operator==(ActionSet, ActionSet) = default;

 private:
  uint32_t mask_ = 0;
};

// Lexicographic order on the sorted action lists, so {1} < {1,2} < {2}.
inline bool CanonicalLess(ActionSet a, ActionSet b) {
  const std::vector<int> x = a.Actions();
  const std::vector<int> y = b.Actions();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

}  // namespace combcontract

#endif  // COMBCONTRACT_ACTION_SET_H_
