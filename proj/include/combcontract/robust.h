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

// Multi-outcome contracting. Each action set S induces a distribution over
// rewards with mean R(S); a contract pays t(x) >= 0 on the observed reward x.
// With only the means known, linear contracts t(x) = alpha * x dominate
// every contract against the adversarial two-point family supported on
// {0, R(A)}.

#ifndef COMBCONTRACT_ROBUST_H_
#define COMBCONTRACT_ROBUST_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "combcontract/contract.h"
#include "combcontract/instance.h"
#include "combcontract/rational.h"
#include "combcontract/success_function.h"

namespace combcontract {

struct GeneralInstance {
  std::vector<Rational> costs;
  // r(1..m), non-negative.
  std::vector<Rational> rewards;
  // distributions[j].values[S] = probability of rewards[j] under S.
  std::optional<std::vector<ExplicitTable>> distributions;
  // R(S) directly, when no distributions are given.
  std::optional<SuccessFunction> reward_function;

  int n() const { return static_cast<int>(costs.size()); }
  int m() const { return static_cast<int>(rewards.size()); }

  friend bool operator==(const GeneralInstance&,
                         const GeneralInstance&) = default;
};

// R(S).
Rational ExpectedReward(const GeneralInstance& inst, ActionSet s);
// R over all 2^n subsets, indexed by mask.
std::vector<Rational> RewardTable(const GeneralInstance& inst);

// Checks positive costs, non-negative rewards, exactly one of distributions
// and reward_function, table shapes, sum_j f_j(S) = 1, f_j >= 0, R(empty)
// = 0 and monotone R.
ValidationReport ValidateGeneral(const GeneralInstance& inst);
void ValidateGeneralOrThrow(const GeneralInstance& inst);

// {0, R(A)} together with every reward level, ascending, deduplicated.
std::vector<Rational> ObservableLevels(const GeneralInstance& inst);

// Payments on observable reward levels, or a slope for linear contracts.
class GeneralContract {
 public:
  // Throws kDomain on negative payments or repeated levels.
  static GeneralContract Table(std::vector<std::pair<Rational, Rational>> pay);
  // Throws kDomain on a negative slope.
  static GeneralContract Linear(const Rational& alpha);

  bool linear() const { return slope_.has_value(); }
  const std::optional<Rational>& slope() const { return slope_; }
  const std::vector<std::pair<Rational, Rational>>& payments() const {
    return payments_;
  }

  // t(x); kDomain when a table contract does not define x.
  Rational Pay(const Rational& x) const;

  // Throws kDomain when a table contract defines a level that is not
  // observable or omits 0 or R(A).
  void CheckAgainst(const GeneralInstance& inst) const;

 private:
  std::vector<std::pair<Rational, Rational>> payments_;
  std::optional<Rational> slope_;
};

// For (t0, t1) in a binary instance (success reward 1): the slope keeping
// the expected payment at the agent's choice S under (t0, t1), i.e.
// T(S) / f(S), clamped to [0, 1]. t1 when t0 = 0 (before clamping); 0 when
// f(S) = 0. Throws kDomain on negative payments.
Rational ReduceBinaryContract(const Rational& t0, const Rational& t1,
                              const Instance& inst);

// Principal utility of (t0, t1) in a binary instance: f(S) - T(S) at the
// agent's choice, ties resolved for the principal.
Rational BinaryContractUtility(const Rational& t0, const Rational& t1,
                               const Instance& inst);

// (t(R(A)) - t(0)) / R(A) when t(R(A)) >= t(0), else 0; not clamped.
// Throws kDegenerateInstance when R(A) = 0.
Rational Linearize(const GeneralContract& t, const GeneralInstance& inst);

// One distribution per action set: (support point, probability) pairs.
using DistributionFamily = std::vector<std::vector<std::pair<Rational, Rational>>>;

// Support {0, R(A)}, Pr[R(A)] = R(S) / R(A).
DistributionFamily TwoPointFamily(const GeneralInstance& inst);
// Half the two-point distribution and half a point mass at R(S).
DistributionFamily ThreePointFamily(const GeneralInstance& inst);
// The instance's own distributions; kPrecondition without them.
DistributionFamily InstanceFamily(const GeneralInstance& inst);

// Principal's expected reward minus payment at the agent's best response
// under `family`, ties resolved in the principal's favour.
Rational FamilyUtility(const GeneralContract& t, const GeneralInstance& inst,
                       const DistributionFamily& family);

// FamilyUtility against TwoPointFamily. Throws kDegenerateInstance when
// R(A) = 0 and kInvariantViolation when some R(S) > R(A).
Rational WorstCaseUtilityTwoPoint(const GeneralContract& t,
                                  const GeneralInstance& inst);

// The binary instance (R / R(A), c / R(A)). kDegenerateInstance when
// R(A) = 0.
Instance NormalizedBinary(const GeneralInstance& inst);

// Optimal linear contract: solved on NormalizedBinary, utility and value
// scaled back by R(A).
ContractSolution OptimalLinearGeneral(
    const GeneralInstance& inst,
    int brute_force_limit = kDefaultBruteForceLimit);

// Outcomes {0, 1} with probabilities (1 - f(S), f(S)).
GeneralInstance BinaryEmbedding(const Instance& inst);

// Random instance over n actions and m >= 2 outcomes with r(1) = 0: S
// yields p(S) * H + (1 - p(S)) * (point mass at 0) for a random monotone
// normalized p and a random reward distribution H.
GeneralInstance SampleGeneralInstance(int n, int m, uint64_t seed);

// Random non-negative table contract on the observable levels.
GeneralContract SampleContract(const GeneralInstance& inst, uint64_t seed);

}  // namespace combcontract

#endif  // COMBCONTRACT_ROBUST_H_
