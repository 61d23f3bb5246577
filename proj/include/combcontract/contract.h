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

// Critical values and the optimal linear contract.
//
// V is a non-decreasing, right-continuous step function of alpha; its jumps
// in (0, 1] form the critical set, and the principal's utility
// (1 - alpha) * V(alpha) is maximized on the critical set together with 0.

#ifndef COMBCONTRACT_CONTRACT_H_
#define COMBCONTRACT_CONTRACT_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "combcontract/action_set.h"
#include "combcontract/demand.h"
#include "combcontract/instance.h"
#include "combcontract/rational.h"

namespace combcontract {

struct CriticalPoint {
  Rational alpha;
  Rational value;
  // The set the agent takes at `alpha` (canonical member of D*).
  ActionSet demand;

  friend bool operator==(const CriticalPoint&, const CriticalPoint&) = default;
};

// Sorted by alpha; V strictly increasing along the list.
struct CriticalProfile {
  std::vector<CriticalPoint> points;

  int size() const { return static_cast<int>(points.size()); }
  std::vector<Rational> Alphas() const;

  friend bool operator==(const CriticalProfile&,
                         const CriticalProfile&) = default;
};

struct ContractSolution {
  Rational alpha;
  Rational utility;
  Rational value;
  ActionSet incentivized;
  // Present when the solver walked the whole critical set.
  std::optional<CriticalProfile> profile;
  int64_t queries = 0;
};

// Principal utility (1 - alpha) * value.
Rational PrincipalUtility(const Rational& alpha, const Rational& value);

// Next critical value after alpha via the greedy order of S_alpha: only the
// finitely many ratios at which some action can swap into or join S_alpha
// are candidates, and V is queried on them in ascending order. Pass V(alpha)
// when already known to save one query. Throws kUnsupportedClass unless f is
// gross substitutes.
std::optional<Rational> SuccessorGs(
    const Instance& inst, const Rational& alpha, ValueOracle& oracle,
    const std::optional<Rational>& value_at_alpha = std::nullopt);

// The candidate ratios SuccessorGs inspects, filtered to (alpha, 1], sorted
// and deduplicated.
std::vector<Rational> GsCandidates(const Instance& inst, const Rational& alpha);

// Next jump of V after alpha by exhaustive enumeration.
std::optional<Rational> SuccessorBruteForce(const SubsetTable& table,
                                            const Rational& alpha);

// Exact upper-envelope sweep: from D*(alpha), the next jump is the earliest
// crossing by a set of larger f. O(|C| * 2^n).
CriticalProfile BruteForceCriticalSet(
    const Instance& inst, int limit = kDefaultBruteForceLimit);
CriticalProfile BruteForceCriticalSet(const SubsetTable& table);

// Independent route: every pairwise line intersection in (0, 1] is a
// candidate, and a candidate is kept iff V there differs from V at the
// midpoint to the previous candidate. O(4^n); throws kResource above
// `limit` actions.
CriticalProfile PairwiseCriticalSet(const Instance& inst, int limit = 8);

// succ(alpha, V(alpha)) -> next critical value, or nullopt.
using SuccessorFn = std::function<std::optional<Rational>(
    const Rational& alpha, const Rational& value_at_alpha)>;

// Walks alpha = 0, succ(0), succ(succ(0)), ... and keeps the best
// (1 - alpha) * V(alpha); ties keep the smaller alpha. V queries (including
// those made by `succ` through the same oracle) are reported in `queries`.
ContractSolution OptimalContract(const Instance& inst, const SuccessorFn& succ,
                                 ValueOracle& oracle);

// Max of (1 - alpha) * V(alpha) over the profile and alpha = 0, smallest
// alpha on ties. V(0) = 0 because every cost is positive.
ContractSolution BestOnProfile(const CriticalProfile& profile);

}  // namespace combcontract

#endif  // COMBCONTRACT_CONTRACT_H_
