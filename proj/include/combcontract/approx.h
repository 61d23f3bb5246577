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

// Query-bounded routines for k-bit instances, where every critical value is
// a/b with 1 <= a, b <= 2^k.

#ifndef COMBCONTRACT_APPROX_H_
#define COMBCONTRACT_APPROX_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "combcontract/contract.h"
#include "combcontract/demand.h"
#include "combcontract/instance.h"
#include "combcontract/rational.h"

namespace combcontract {

// The geometric grid {1 - (1 - eps)^i : 1 <= i <= m}, m least with
// (1 - eps)^m <= 2^-k.
class GridSpec {
 public:
  // Throws kDomain unless 0 < eps < 1.
  static GridSpec Make(const Rational& epsilon, BitPrecision k);

  const Rational& epsilon() const { return epsilon_; }
  BitPrecision k() const { return k_; }
  int size() const { return static_cast<int>(points_.size()); }
  // Ascending.
  const std::vector<Rational>& points() const { return points_; }

 private:
  GridSpec(Rational epsilon, BitPrecision k, std::vector<Rational> points)
      : epsilon_(std::move(epsilon)), k_(k), points_(std::move(points)) {}

  Rational epsilon_;
  BitPrecision k_;
  std::vector<Rational> points_;
};

// Best grid point by (1 - alpha) * V(alpha), alpha = 0 included at no query
// cost; exactly GridSpec::size() V queries. Smallest alpha on ties. Throws
// kPrecondition when the instance declares no k.
ContractSolution Fptas(const Instance& inst, const Rational& epsilon,
                       ValueOracle& oracle);
ContractSolution Fptas(const Instance& inst, const Rational& epsilon);

// The simplest rational (least denominator, then least numerator) in the
// interval from lo to hi; each end open or closed. Requires 0 <= lo and a
// non-empty interval (kPrecondition otherwise).
Rational SimplestRationalIn(const Rational& lo, bool lo_open,
                            const Rational& hi, bool hi_open);

// The unique a/b in (lo, hi] with 1 <= a, b <= 2^k. Throws kPrecondition
// when hi - lo > 2^-2k or lo >= hi, kNotFound when no such fraction lies
// inside.
Rational UniqueRationalIn(const Rational& lo, const Rational& hi,
                          BitPrecision k);

struct SearchState {
  Rational lo;
  Rational hi;
  int64_t queries = 0;
};

// Next critical value after alpha by bisection: one query at 1, then halve
// (lo, hi] keeping V(hi) > V(lo) until the width is at most 2^-2k, then
// reconstruct the bounded fraction. At most 2k + 1 queries when V(alpha) is
// supplied or alpha = 0 (V(0) = 0 since costs are positive); one more
// otherwise. Throws kPrecondition when the instance declares no k.
std::optional<Rational> SuccessorSearch(
    const Instance& inst, const Rational& alpha, ValueOracle& oracle,
    const std::optional<Rational>& value_at_alpha = std::nullopt,
    std::vector<SearchState>* trace = nullptr);

}  // namespace combcontract

#endif  // COMBCONTRACT_APPROX_H_
