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

// Success-probability functions f: 2^A -> [0, 1] behind a value oracle.
//
// Six classes are supported. Additive, unit-demand and weighted matroid rank
// (uniform and partition matroids) are gross substitutes, so the greedy demand
// oracle is exact for them. Budget-additive, coverage and explicit tables are
// only submodular (or arbitrary, for tables) and route to brute force.

#ifndef COMBCONTRACT_SUCCESS_FUNCTION_H_
#define COMBCONTRACT_SUCCESS_FUNCTION_H_

#include <string_view>
#include <variant>
#include <vector>

#include "combcontract/action_set.h"
#include "combcontract/rational.h"

namespace combcontract {

enum class FunctionClass {
  kAdditive,
  kUnitDemand,
  kMatroidRank,
  kBudgetAdditive,
  kCoverage,
  kExplicitTable,
};

std::string_view FunctionClassName(FunctionClass cls);
// Inverse of FunctionClassName; throws kParse for unknown names.
FunctionClass ParseFunctionClass(std::string_view name);

// f(S) = sum of f({i}) over S.
struct Additive {
  std::vector<Rational> values;
  friend bool operator==(const Additive&, const Additive&) = default;
};

// f(S) = max of f({i}) over S.
struct UnitDemand {
  std::vector<Rational> values;
  friend bool operator==(const UnitDemand&, const UnitDemand&) = default;
};

struct UniformMatroid {
  int rank = 0;
  friend bool operator==(const UniformMatroid&,
                         const UniformMatroid&) = default;
};

// block_of[a] names the block of action a; capacity[b] bounds how many
// actions of block b an independent set may hold.
struct PartitionMatroid {
  std::vector<int> block_of;
  std::vector<int> capacity;
  friend bool operator==(const PartitionMatroid&,
                         const PartitionMatroid&) = default;
};

// f(S) = max weight of an independent subset of S.
struct WeightedMatroidRank {
  std::variant<UniformMatroid, PartitionMatroid> matroid;
  std::vector<Rational> weights;
  friend bool operator==(const WeightedMatroidRank&,
                         const WeightedMatroidRank&) = default;
};

// f(S) = min(budget, sum of f({i}) over S).
struct BudgetAdditive {
  std::vector<Rational> values;
  Rational budget;
  friend bool operator==(const BudgetAdditive&,
                         const BudgetAdditive&) = default;
};

// f(S) = total weight of the union of covers[i] over i in S. Elements index
// into `weights`.
struct Coverage {
  std::vector<Rational> weights;
  std::vector<std::vector<int>> covers;
  friend bool operator==(const Coverage&, const Coverage&) = default;
};

// values[mask] = f(S) with bit a of mask set iff action a is in S.
struct ExplicitTable {
  std::vector<Rational> values;
  friend bool operator==(const ExplicitTable&,
                         const ExplicitTable&) = default;
};

class SuccessFunction {
 public:
  using Repr = std::variant<Additive, UnitDemand, WeightedMatroidRank,
                            BudgetAdditive, Coverage, ExplicitTable>;

  // Throws kDomain on inconsistent shapes (mismatched sizes, table length not
  // a power of two, cover indices out of range, n above kMaxActions).
  explicit SuccessFunction(Repr repr);

  int n() const { return n_; }
  FunctionClass cls() const;
  const Repr& repr() const { return repr_; }

  // True exactly for the gross-substitutes classes.
  bool GsCertified() const;

  // f(S). Throws kDomain when S leaves the ground set.
  Rational Value(ActionSet s) const;

  // f(a | S) = f(S + a) - f(S). Throws kDomain when a is in S.
  Rational Marginal(int a, ActionSet s) const;

  // Every class exported to its table form; n must not exceed kMaxActions.
  ExplicitTable ToTable() const;

  // Same class with every value multiplied by factor (> 0).
  SuccessFunction Scaled(const Rational& factor) const;

  friend bool operator==(const SuccessFunction&,
                         const SuccessFunction&) = default;

 private:
  Repr repr_;
  int n_ = 0;
};

}  // namespace combcontract

#endif  // COMBCONTRACT_SUCCESS_FUNCTION_H_
