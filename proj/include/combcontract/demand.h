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

// The agent's best response to a linear contract alpha.
//
// Under alpha the agent maximizes alpha * f(S) - c(S); among maximizers it
// breaks ties towards the principal, i.e. towards larger f(S). V(alpha) is the
// success probability of that principal-favoured best response.
//
// Two independent routes are provided: the greedy demand oracle (exact for
// gross-substitutes classes) and exhaustive enumeration over all subsets.

#ifndef COMBCONTRACT_DEMAND_H_
#define COMBCONTRACT_DEMAND_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "combcontract/action_set.h"
#include "combcontract/instance.h"
#include "combcontract/rational.h"

namespace combcontract {

inline constexpr int kDefaultBruteForceLimit = 12;

// Brute-force ground-set limit, overridable through the
// COMBCONTRACT_BRUTE_FORCE_LIMIT environment variable (capped at
// kMaxActions).
int BruteForceLimitFromEnv();

// Greedy output in pick order together with each step's marginal utility
// alpha * f(a | prefix) - c(a).
struct OrderedDemand {
  std::vector<int> order;
  ActionSet set;
  std::vector<Rational> step_utilities;
};

// Greedy demand with principal-favouring tie-breaking: repeatedly add the
// action of largest marginal utility while that utility is >= 0 (zero
// included); ties go to the larger cost, then to the smaller index.
// Throws kUnsupportedClass unless f is gross substitutes and kDomain unless
// 0 <= alpha <= 1.
OrderedDemand GreedyDemand(const Instance& inst, const Rational& alpha);

struct DemandProfile {
  Rational alpha;
  // All agent-optimal sets, in canonical order.
  std::vector<ActionSet> demand;
  // The f-maximizers within `demand`, in canonical order.
  std::vector<ActionSet> demand_star;
  Rational agent_utility;
  Rational value;
};

// Every subset of the ground set tabulated over a common denominator, so
// comparisons of alpha * f(S) - c(S) reduce to integer arithmetic.
class SubsetTable {
 public:
  // Throws kResource when n exceeds `limit`.
  SubsetTable(const Instance& inst, int limit);

  int n() const { return n_; }
  uint32_t size() const { return static_cast<uint32_t>(f_.size()); }

  const Rational& f(uint32_t mask) const { return f_[mask]; }
  const Rational& c(uint32_t mask) const { return c_[mask]; }

  // Exhaustive demand at alpha in [0, 1].
  DemandProfile Demand(const Rational& alpha) const;

  // Index of one member of D*(alpha) (the canonical one).
  uint32_t PrincipalFavoured(const Rational& alpha) const;

  // Smallest beta > alpha at which V jumps, or nullopt if none in (alpha, 1].
  // Also reports the f-maximal set that enters the demand at beta.
  std::optional<Rational> NextBreakpoint(const Rational& alpha,
                                         uint32_t* entering = nullptr) const;

 private:
  // alpha = p / q; returns q * denom * (alpha * f - c) as an integer.
  BigInt ScaledUtility(uint32_t mask, const BigInt& p, const BigInt& q) const;

  int n_;
  BigInt denom_;
  std::vector<BigInt> f_scaled_;
  std::vector<BigInt> c_scaled_;
  std::vector<Rational> f_;
  std::vector<Rational> c_;
};

// Exhaustive D(alpha), D*(alpha) and V(alpha). Throws kResource when n is
// above `limit`.
DemandProfile BruteForceDemand(const Instance& inst, const Rational& alpha,
                               int limit = kDefaultBruteForceLimit);

// Lexicographically smallest member of D*.
ActionSet CanonicalBestResponse(const DemandProfile& profile);

// The V(alpha) oracle with a query counter. Gross-substitutes instances go
// through greedy; the rest through brute force (tabulated once, lazily).
// Counting is part of the contract: approximation and search routines are
// specified by how many V queries they spend.
class ValueOracle {
 public:
  explicit ValueOracle(const Instance& inst,
                       int brute_force_limit = kDefaultBruteForceLimit);
  ~ValueOracle();
  ValueOracle(const ValueOracle&) = delete;
  ValueOracle& operator=(const ValueOracle&) = delete;

  Rational operator()(const Rational& alpha);

  int64_t queries() const { return queries_; }
  void ResetCount() { queries_ = 0; }
  const Instance& instance() const { return inst_; }
  int limit() const { return limit_; }

 private:
  const Instance& inst_;
  int limit_;
  int64_t queries_ = 0;
  std::unique_ptr<SubsetTable> table_;
};

// The set the agent picks under alpha: greedy for gross-substitutes
// instances, the canonical brute-force best response otherwise.
ActionSet IncentivizedSet(const Instance& inst, const Rational& alpha,
                          int brute_force_limit = kDefaultBruteForceLimit);

}  // namespace combcontract

#endif  // COMBCONTRACT_DEMAND_H_
