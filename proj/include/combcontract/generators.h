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

// Instance constructions: the subset-sum reduction, the coverage tower with
// 2^n - 1 critical values, cost perturbations and seeded random sampling.

#ifndef COMBCONTRACT_GENERATORS_H_
#define COMBCONTRACT_GENERATORS_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "combcontract/contract.h"
#include "combcontract/instance.h"
#include "combcontract/rational.h"
#include "combcontract/success_function.h"

namespace combcontract {

struct SubsetSumSpec {
  std::vector<int64_t> values;
  int64_t target = 0;
};

// Throws kPrecondition unless every x_i is in [1, Z) and sum x_i >= Z. A
// total below Z is a NO instance that the threshold test would misread.
void CheckSubsetSumSpec(const SubsetSumSpec& spec);

// How the raw construction f(S) = min(Z, sum x), c(i) = x_i / Z^2 is brought
// into [0, 1].
enum class SubsetSumScaling {
  // f and c both divided by Z; critical values unchanged, YES iff the
  // optimum is 1/Z^2.
  kJoint,
  // Only f divided by Z; critical values grow by Z but the principal's
  // trade-off changes, and NO instances with a subset summing to Z - 1 also
  // reach the optimum 1/Z. Kept to document that failure.
  kMixed,
};

struct SubsetSumReduction {
  Instance instance;
  // 1/Z^2 in the raw construction.
  Rational epsilon;
  // The optimal contract on YES instances, in the instance's own scale.
  Rational threshold;
  // The raw construction: f({i}) = x_i, budget Z.
  std::vector<Rational> raw_values;
  Rational raw_budget;
};

SubsetSumReduction GenSubsetSum(
    const SubsetSumSpec& spec,
    SubsetSumScaling scaling = SubsetSumScaling::kJoint);

// A coverage function in group form: every non-empty group T of actions
// carries weight w_T, and f(S) sums w_T over groups meeting S.
struct GroupWeight {
  uint32_t group = 0;
  Rational weight;

  friend bool operator==(const GroupWeight&, const GroupWeight&) = default;
};

// Coverage function whose universe elements are the groups.
SuccessFunction CoverageFromGroups(int n, const std::vector<GroupWeight>& w);

// Weights of g over n + 1 actions, where g(S) = beta1 * f(S) for S within
// the first n actions and g(S) = beta2 * f(A) + f(S minus the new action)
// otherwise. Zero weights are dropped. Throws kPrecondition unless
// beta2 >= beta1 >= 1.
std::vector<GroupWeight> CoverageLiftWeights(
    int n, const std::vector<GroupWeight>& w, const Rational& beta1,
    const Rational& beta2);

struct TowerLevel {
  // Unnormalized level instance over `n` actions.
  Instance instance;
  std::vector<GroupWeight> weights;
  // Parameters that produced this level from the previous one; unset on
  // the base level.
  Rational beta1;
  Rational beta2;
  CriticalProfile critical;
};

struct CoverageTower {
  // levels[i] has i + 1 actions.
  std::vector<TowerLevel> levels;
  const Instance& top() const { return levels.back().instance; }
};

// Throws kPrecondition unless 1 <= n <= 5.
CoverageTower GenExponentialCoverage(int n);

// Divides f and every cost by f(A). Identity when f(A) = 1. Throws
// kDegenerateInstance when f(A) = 0.
Instance Normalize(const Instance& inst);

// Adds eps * u / 2^resolution_bits to each cost with u drawn uniformly from
// {0, ..., 2^resolution_bits}. Deterministic in `seed`; identity for
// eps = 0. Throws kDomain for eps < 0.
Instance PerturbCosts(const Instance& inst, const Rational& epsilon,
                      uint64_t seed, int resolution_bits = 16);

// A validated random k-valid instance of the given class: values and costs
// are integer multiples of 2^-k and f(A) <= 1. Throws kPrecondition when
// 2^k is too small for the class at this n.
Instance SampleInstance(FunctionClass cls, int n, BitPrecision k,
                        uint64_t seed);

}  // namespace combcontract

#endif  // COMBCONTRACT_GENERATORS_H_
