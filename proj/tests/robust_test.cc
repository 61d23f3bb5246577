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

#include <gtest/gtest.h>

#include <random>

#include "combcontract/error.h"
#include "combcontract/generators.h"
#include "combcontract/robust.h"
#include "combcontract/solver.h"
#include "oracles.h"

namespace combcontract {
namespace {

using testing::Q;

ErrorKind KindOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::kInvariantViolation;
}

// One action; rewards {0, 1, 2}; the action moves mass from 0 to 1 and 2.
GeneralInstance SmallGeneral() {
  GeneralInstance g;
  g.costs = {Q(1, 10)};
  g.rewards = {0, 1, 2};
  g.distributions = std::vector<ExplicitTable>{
      ExplicitTable{{1, Q(1, 2)}}, ExplicitTable{{0, Q(1, 4)}},
      ExplicitTable{{0, Q(1, 4)}}};
  return g;
}

GeneralInstance FromRewardFunction(SuccessFunction r,
                                   std::vector<Rational> costs) {
  GeneralInstance g;
  g.costs = std::move(costs);
  g.rewards = {0, 1};
  g.reward_function = std::move(r);
  return g;
}

TEST(GeneralInstanceTest, RewardsAndLevels) {
  const GeneralInstance g = SmallGeneral();
  EXPECT_TRUE(ValidateGeneral(g).ok());
  EXPECT_EQ(ExpectedReward(g, ActionSet{0}), Q(3, 4));
  EXPECT_EQ(RewardTable(g), (std::vector<Rational>{0, Q(3, 4)}));
  EXPECT_EQ(ObservableLevels(g), (std::vector<Rational>{0, Q(3, 4), 1, 2}));
}

TEST(GeneralInstanceTest, ValidationFindsBrokenDistributions) {
  GeneralInstance g = SmallGeneral();
  (*g.distributions)[0].values[1] = Q(1, 4);
  EXPECT_FALSE(ValidateGeneral(g).ok());
  EXPECT_EQ(KindOf([&] { ValidateGeneralOrThrow(g); }), ErrorKind::kValidation);

  GeneralInstance both = SmallGeneral();
  both.reward_function = SuccessFunction(Additive{{Q(1, 2)}});
  EXPECT_FALSE(ValidateGeneral(both).ok());
}

TEST(GeneralContractTest, TableAndLinear) {
  const GeneralContract t =
      GeneralContract::Table({{0, Q(1, 10)}, {Q(3, 4), Q(1, 2)}, {1, 0}, {2, 1}});
  EXPECT_FALSE(t.linear());
  EXPECT_EQ(t.Pay(Q(3, 4)), Q(1, 2));
  EXPECT_EQ(KindOf([&] { t.Pay(Q(1, 3)); }), ErrorKind::kDomain);
  t.CheckAgainst(SmallGeneral());

  const GeneralContract lin = GeneralContract::Linear(Q(1, 3));
  EXPECT_TRUE(lin.linear());
  EXPECT_EQ(lin.Pay(Q(3, 4)), Q(1, 4));

  EXPECT_EQ(KindOf([] { GeneralContract::Table({{0, Q(-1, 2)}}); }),
            ErrorKind::kDomain);
  EXPECT_EQ(KindOf([] { GeneralContract::Table({{0, 0}, {0, 1}}); }),
            ErrorKind::kDomain);
  EXPECT_EQ(KindOf([] { GeneralContract::Linear(Q(-1, 2)); }),
            ErrorKind::kDomain);
  const GeneralContract stray = GeneralContract::Table({{0, 0}, {Q(1, 3), 0}});
  EXPECT_EQ(KindOf([&] { stray.CheckAgainst(SmallGeneral()); }),
            ErrorKind::kDomain);
}

TEST(ReduceBinaryContractTest, Examples) {
  const Instance half(SuccessFunction(Additive{{Q(1, 2)}}), {Q(1, 20)});
  EXPECT_EQ(ReduceBinaryContract(0, Q(2, 5), half), Q(2, 5));
  EXPECT_EQ(ReduceBinaryContract(Q(1, 10), Q(1, 2), half), Q(3, 5));
  EXPECT_EQ(ReduceBinaryContract(0, 0, half), Rational(0));
  EXPECT_EQ(ReduceBinaryContract(Q(1, 2), Q(7, 10), half), Rational(1));
  EXPECT_EQ(KindOf([&] { ReduceBinaryContract(Q(-1, 2), 0, half); }),
            ErrorKind::kDomain);
}

// The linear contract never does worse for the principal.
TEST(ReduceBinaryContractPropertyTest, NeverWorse) {
  std::mt19937_64 rng(23);
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    const FunctionClass cls =
        seed % 2 ? FunctionClass::kCoverage : FunctionClass::kBudgetAdditive;
    const Instance inst = SampleInstance(cls, 4, BitPrecision(6), seed);
    for (int trial = 0; trial < 10; ++trial) {
      const Rational t0 = Q(static_cast<int64_t>(rng() % 9), 16);
      const Rational t1 = Q(static_cast<int64_t>(rng() % 17), 16);
      const Rational alpha = ReduceBinaryContract(t0, t1, inst);
      ASSERT_GE(alpha.Sign(), 0);
      ASSERT_LE(alpha, 1);
      ASSERT_GE(BinaryContractUtility(0, alpha, inst),
                BinaryContractUtility(t0, t1, inst));
    }
  }
}

TEST(LinearizeTest, Examples) {
  const GeneralInstance g =
      FromRewardFunction(SuccessFunction(Additive{{1}}), {Q(1, 10)});
  EXPECT_EQ(Linearize(GeneralContract::Table({{0, Q(1, 10)}, {1, Q(1, 2)}}), g),
            Q(2, 5));
  EXPECT_EQ(Linearize(GeneralContract::Table({{0, 0}, {1, 0}}), g),
            Rational(0));
  EXPECT_EQ(Linearize(GeneralContract::Table({{0, Q(1, 2)}, {1, Q(1, 10)}}), g),
            Rational(0));
  // Not clamped: a steep contract keeps its slope.
  EXPECT_EQ(Linearize(GeneralContract::Table({{0, 0}, {1, 3}}), g),
            Rational(3));
  EXPECT_EQ(Linearize(GeneralContract::Linear(Q(1, 3)), g), Q(1, 3));

  const GeneralInstance zero =
      FromRewardFunction(SuccessFunction(Additive{{0}}), {Q(1, 10)});
  EXPECT_EQ(KindOf([&] { Linearize(GeneralContract::Linear(0), zero); }),
            ErrorKind::kDegenerateInstance);
}

TEST(WorstCaseTest, ZeroContractGetsNothing) {
  const GeneralInstance g = SmallGeneral();
  EXPECT_EQ(WorstCaseUtilityTwoPoint(GeneralContract::Linear(0), g),
            Rational(0));
}

TEST(WorstCaseTest, LinearEqualsBinaryModelUtility) {
  const Instance ex = testing::ThreeActionTable();
  const GeneralInstance g = BinaryEmbedding(ex);
  for (const Rational& alpha : {Q(1, 3), Q(1, 2), Q(2, 3), Rational(1)}) {
    const Rational want =
        (Rational(1) - alpha) * BruteForceDemand(ex, alpha).value;
    EXPECT_EQ(WorstCaseUtilityTwoPoint(GeneralContract::Linear(alpha), g),
              want);
    EXPECT_EQ(BinaryContractUtility(0, alpha, ex), want);
  }
}

TEST(WorstCaseTest, RewardAboveTopIsInvariantViolation) {
  // Non-monotone table: R({1}) exceeds R(A).
  const GeneralInstance g = FromRewardFunction(
      SuccessFunction(ExplicitTable{{0, Q(3, 4), Q(1, 4), Q(1, 2)}}),
      {Q(1, 10), Q(1, 10)});
  EXPECT_EQ(KindOf([&] {
              WorstCaseUtilityTwoPoint(GeneralContract::Linear(Q(1, 2)), g);
            }),
            ErrorKind::kInvariantViolation);
}

TEST(FamilyTest, ThreePointNeedsLinearContracts) {
  const GeneralInstance g = SmallGeneral();
  const DistributionFamily three = ThreePointFamily(g);
  ASSERT_EQ(three.size(), 2u);
  Rational mean;
  for (const auto& [x, p] : three[1]) mean += x * p;
  EXPECT_EQ(mean, Q(3, 4));
  EXPECT_EQ(KindOf([&] {
              InstanceFamily(FromRewardFunction(
                  SuccessFunction(Additive{{Q(1, 2)}}), {Q(1, 10)}));
            }),
            ErrorKind::kPrecondition);
}

TEST(OptimalLinearGeneralTest, Examples) {
  const ContractSolution s =
      OptimalLinearGeneral(BinaryEmbedding(testing::ThreeActionTable()));
  EXPECT_EQ(s.alpha, Q(1, 2));
  EXPECT_EQ(s.utility, Q(1, 4));

  // R is twice the additive example; costs doubled too.
  const Instance add = testing::AdditiveExample();
  std::vector<Rational> costs;
  for (const Rational& c : add.costs) costs.push_back(2 * c);
  const ContractSolution t =
      OptimalLinearGeneral(FromRewardFunction(add.f.Scaled(2), costs));
  EXPECT_EQ(t.alpha, Q(1, 2));
  EXPECT_EQ(t.utility, Q(9, 10));

  const GeneralInstance zero =
      FromRewardFunction(SuccessFunction(Additive{{0, 0}}), {Q(1, 10), Q(1, 10)});
  EXPECT_EQ(KindOf([&] { OptimalLinearGeneral(zero); }),
            ErrorKind::kDegenerateInstance);
}

// Linearized contracts dominate the originals against the two-point
// adversary, and linear utility does not depend on the family.
TEST(RobustPropertyTest, DominanceAndFamilyIndependence) {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    const int n = 1 + static_cast<int>(seed % 4);
    const int m = 2 + static_cast<int>(seed % 3);
    const GeneralInstance g = SampleGeneralInstance(n, m, seed);
    ASSERT_TRUE(ValidateGeneral(g).ok());
    for (uint64_t c = 0; c < 5; ++c) {
      const GeneralContract t = SampleContract(g, seed * 100 + c);
      t.CheckAgainst(g);
      const GeneralContract lin = GeneralContract::Linear(Linearize(t, g));
      ASSERT_GE(WorstCaseUtilityTwoPoint(lin, g), WorstCaseUtilityTwoPoint(t, g));
      const Rational two = FamilyUtility(lin, g, TwoPointFamily(g));
      ASSERT_EQ(two, FamilyUtility(lin, g, ThreePointFamily(g)));
      ASSERT_EQ(two, FamilyUtility(lin, g, InstanceFamily(g)));
    }
  }
}

TEST(RobustPropertyTest, BinaryEmbeddingsAgreeWithBinaryModel) {
  for (FunctionClass cls : {FunctionClass::kAdditive, FunctionClass::kMatroidRank,
                            FunctionClass::kCoverage}) {
    for (uint64_t seed = 1; seed <= 5; ++seed) {
      const Instance inst = SampleInstance(cls, 4, BitPrecision(6), seed);
      const GeneralInstance g = BinaryEmbedding(inst);
      ASSERT_TRUE(ValidateGeneral(g).ok());
      const ContractSolution want = Solve(inst, DefaultMethod(inst));
      const Rational top = inst.f.Value(ActionSet::Full(inst.n()));
      if (top.IsZero()) continue;
      const ContractSolution got = OptimalLinearGeneral(g);
      ASSERT_EQ(got.alpha, want.alpha);
      ASSERT_EQ(got.utility, want.utility);
      ASSERT_EQ(WorstCaseUtilityTwoPoint(GeneralContract::Linear(want.alpha), g),
                want.utility);
    }
  }
}

}  // namespace
}  // namespace combcontract
