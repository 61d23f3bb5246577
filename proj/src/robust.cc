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

#include "combcontract/robust.h"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

#include "combcontract/error.h"
#include "combcontract/generators.h"
#include "combcontract/solver.h"

namespace combcontract {
namespace {

int64_t Between(std::mt19937_64& rng, int64_t lo, int64_t hi) {
  return lo + static_cast<int64_t>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

// Cost of every subset, indexed by mask.
std::vector<Rational> CostTable(const std::vector<Rational>& costs) {
  std::vector<Rational> out(size_t{1} << costs.size());
  for (uint32_t mask = 1; mask < out.size(); ++mask) {
    out[mask] = out[mask & (mask - 1)] + costs[std::countr_zero(mask)];
  }
  return out;
}

void CheckGround(int n) {
  if (n < 0 || n > kDefaultBruteForceLimit + 4) {
    Fail(ErrorKind::kResource, "general instances are evaluated exhaustively; "
                               "n = " + std::to_string(n) + " is too large");
  }
}

Rational TopReward(const GeneralInstance& inst) {
  const Rational top = ExpectedReward(inst, ActionSet::Full(inst.n()));
  if (top.Sign() <= 0) {
    Fail(ErrorKind::kDegenerateInstance, "R(A) = 0");
  }
  return top;
}

}  // namespace

Rational ExpectedReward(const GeneralInstance& inst, ActionSet s) {
  if (inst.reward_function) return inst.reward_function->Value(s);
  if (!inst.distributions) {
    Fail(ErrorKind::kDomain, "general instance has no reward model");
  }
  if (!s.WithinGround(inst.n())) {
    Fail(ErrorKind::kDomain, "set outside ground set");
  }
  Rational total;
  for (int j = 0; j < inst.m(); ++j) {
    total += (*inst.distributions)[j].values[s.mask()] * inst.rewards[j];
  }
  return total;
}

std::vector<Rational> RewardTable(const GeneralInstance& inst) {
  CheckGround(inst.n());
  std::vector<Rational> out;
  const uint32_t count = uint32_t{1} << inst.n();
  out.reserve(count);
  for (uint32_t mask = 0; mask < count; ++mask) {
    out.push_back(ExpectedReward(inst, ActionSet(mask)));
  }
  return out;
}

ValidationReport ValidateGeneral(const GeneralInstance& inst) {
  ValidationReport report;
  auto add = [&](std::string v) { report.violations.push_back(std::move(v)); };
  for (int a = 0; a < inst.n(); ++a) {
    if (inst.costs[a].Sign() <= 0) {
      add("non-positive cost c(" + std::to_string(a + 1) +
          ") = " + inst.costs[a].ToString());
    }
  }
  for (int j = 0; j < inst.m(); ++j) {
    if (inst.rewards[j].Sign() < 0) {
      add("negative reward r(" + std::to_string(j + 1) + ")");
    }
  }
  if (inst.distributions.has_value() == inst.reward_function.has_value()) {
    add("exactly one of distributions and reward function is required");
    return report;
  }
  if (inst.n() > kMaxActions) {
    add("too many actions");
    return report;
  }
  const size_t count = size_t{1} << inst.n();
  if (inst.distributions) {
    const auto& dist = *inst.distributions;
    if (static_cast<int>(dist.size()) != inst.m()) {
      add("need one distribution table per reward level");
      return report;
    }
    for (int j = 0; j < inst.m(); ++j) {
      if (dist[j].values.size() != count) {
        add("distribution table " + std::to_string(j + 1) + " has " +
            std::to_string(dist[j].values.size()) + " entries, expected " +
            std::to_string(count));
        return report;
      }
    }
    for (size_t mask = 0; mask < count; ++mask) {
      Rational total;
      for (int j = 0; j < inst.m(); ++j) {
        const Rational& p = dist[j].values[mask];
        if (p.Sign() < 0) {
          add("negative probability for outcome " + std::to_string(j + 1) +
              " under " + ActionSet(static_cast<uint32_t>(mask)).ToString());
        }
        total += p;
      }
      if (total != 1) {
        add("probabilities under " +
            ActionSet(static_cast<uint32_t>(mask)).ToString() + " sum to " +
            total.ToString());
      }
    }
  } else if (inst.reward_function->n() != inst.n()) {
    add("reward function and costs disagree on n");
    return report;
  }
  if (!report.ok()) return report;

  const std::vector<Rational> r = RewardTable(inst);
  if (!r[0].IsZero()) add("R(∅) ≠ 0: R(∅) = " + r[0].ToString());
  int reports = 0;
  for (uint32_t mask = 0; mask < count && reports < 8; ++mask) {
    for (int a = 0; a < inst.n(); ++a) {
      const uint32_t bigger = mask | (uint32_t{1} << a);
      if (bigger != mask && r[bigger] < r[mask]) {
        add("non-monotone: R" + ActionSet(bigger).ToString() + " < R" +
            ActionSet(mask).ToString());
        ++reports;
      }
    }
  }
  return report;
}

void ValidateGeneralOrThrow(const GeneralInstance& inst) {
  const ValidationReport report = ValidateGeneral(inst);
  if (!report.ok()) Fail(ErrorKind::kValidation, report.Summary());
}

std::vector<Rational> ObservableLevels(const GeneralInstance& inst) {
  std::vector<Rational> out = inst.rewards;
  out.push_back(0);
  out.push_back(ExpectedReward(inst, ActionSet::Full(inst.n())));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GeneralContract GeneralContract::Table(
    std::vector<std::pair<Rational, Rational>> pay) {
  std::sort(pay.begin(), pay.end());
  for (size_t i = 0; i < pay.size(); ++i) {
    if (pay[i].second.Sign() < 0) {
      Fail(ErrorKind::kDomain, "negative payment at reward level " +
                                   pay[i].first.ToString());
    }
    if (i > 0 && pay[i].first == pay[i - 1].first) {
      Fail(ErrorKind::kDomain,
           "reward level " + pay[i].first.ToString() + " paid twice");
    }
  }
  GeneralContract t;
  t.payments_ = std::move(pay);
  return t;
}

GeneralContract GeneralContract::Linear(const Rational& alpha) {
  if (alpha.Sign() < 0) Fail(ErrorKind::kDomain, "negative linear slope");
  GeneralContract t;
  t.slope_ = alpha;
  return t;
}

Rational GeneralContract::Pay(const Rational& x) const {
  if (slope_) return *slope_ * x;
  const auto it = std::lower_bound(
      payments_.begin(), payments_.end(), x,
      [](const auto& entry, const Rational& level) { return entry.first < level; });
  if (it == payments_.end() || it->first != x) {
    Fail(ErrorKind::kDomain,
         "contract defines no payment at reward " + x.ToString());
  }
  return it->second;
}

void GeneralContract::CheckAgainst(const GeneralInstance& inst) const {
  if (slope_) return;
  const std::vector<Rational> levels = ObservableLevels(inst);
  for (const auto& [level, payment] : payments_) {
    if (!std::binary_search(levels.begin(), levels.end(), level)) {
      Fail(ErrorKind::kDomain,
           "payment at unobservable reward level " + level.ToString());
    }
  }
  Pay(0);
  Pay(ExpectedReward(inst, ActionSet::Full(inst.n())));
}

Rational BinaryContractUtility(const Rational& t0, const Rational& t1,
                               const Instance& inst) {
  const SubsetTable table(inst, kDefaultBruteForceLimit + 4);
  bool have = false;
  Rational best_agent;
  Rational best_principal;
  for (uint32_t mask = 0; mask < table.size(); ++mask) {
    const Rational& f = table.f(mask);
    const Rational payment = t0 + f * (t1 - t0);
    const Rational agent = payment - table.c(mask);
    const Rational principal = f - payment;
    if (!have || agent > best_agent ||
        (agent == best_agent && principal > best_principal)) {
      have = true;
      best_agent = agent;
      best_principal = principal;
    }
  }
  return best_principal;
}

Rational ReduceBinaryContract(const Rational& t0, const Rational& t1,
                              const Instance& inst) {
  if (t0.Sign() < 0 || t1.Sign() < 0) {
    Fail(ErrorKind::kDomain, "payments must be non-negative");
  }
  auto clamp = [](const Rational& a) { return Min(Rational(1), Max(Rational(0), a)); };
  if (t0.IsZero()) return clamp(t1);

  // The agent's choice under (t0, t1), ties to the principal.
  const SubsetTable table(inst, kDefaultBruteForceLimit + 4);
  bool have = false;
  uint32_t chosen = 0;
  Rational best_agent;
  Rational best_principal;
  for (uint32_t mask = 0; mask < table.size(); ++mask) {
    const Rational& f = table.f(mask);
    const Rational payment = t0 + f * (t1 - t0);
    const Rational agent = payment - table.c(mask);
    const Rational principal = f - payment;
    if (!have || agent > best_agent ||
        (agent == best_agent && principal > best_principal)) {
      have = true;
      chosen = mask;
      best_agent = agent;
      best_principal = principal;
    }
  }
  const Rational& f = table.f(chosen);
  if (f.IsZero()) return 0;
  return clamp((t0 + f * (t1 - t0)) / f);
}

Rational Linearize(const GeneralContract& t, const GeneralInstance& inst) {
  const Rational top = TopReward(inst);
  const Rational l1 = t.Pay(top);
  const Rational l0 = t.Pay(0);
  if (l1 < l0) return 0;
  return (l1 - l0) / top;
}

DistributionFamily TwoPointFamily(const GeneralInstance& inst) {
  const Rational top = TopReward(inst);
  const std::vector<Rational> r = RewardTable(inst);
  DistributionFamily family;
  family.reserve(r.size());
  for (const Rational& value : r) {
    if (value > top || value.Sign() < 0) {
      Fail(ErrorKind::kInvariantViolation,
           "R(S) = " + value.ToString() + " outside [0, R(A)]");
    }
    const Rational p = value / top;
    family.push_back({{Rational(0), Rational(1) - p}, {top, p}});
  }
  return family;
}

DistributionFamily ThreePointFamily(const GeneralInstance& inst) {
  DistributionFamily family = TwoPointFamily(inst);
  const std::vector<Rational> r = RewardTable(inst);
  const Rational half = Rational::Reduce(1, 2);
  for (size_t s = 0; s < family.size(); ++s) {
    for (auto& [x, p] : family[s]) p *= half;
    family[s].push_back({r[s], half});
  }
  return family;
}

DistributionFamily InstanceFamily(const GeneralInstance& inst) {
  if (!inst.distributions) {
    Fail(ErrorKind::kPrecondition, "instance carries no distributions");
  }
  CheckGround(inst.n());
  DistributionFamily family(size_t{1} << inst.n());
  for (size_t s = 0; s < family.size(); ++s) {
    for (int j = 0; j < inst.m(); ++j) {
      family[s].push_back({inst.rewards[j], (*inst.distributions)[j].values[s]});
    }
  }
  return family;
}

Rational FamilyUtility(const GeneralContract& t, const GeneralInstance& inst,
                       const DistributionFamily& family) {
  CheckGround(inst.n());
  const std::vector<Rational> cost = CostTable(inst.costs);
  if (family.size() != cost.size()) {
    Fail(ErrorKind::kDomain, "distribution family has the wrong size");
  }
  bool have = false;
  Rational best_agent;
  Rational best_principal;
  for (size_t s = 0; s < family.size(); ++s) {
    Rational payment;
    Rational reward;
    for (const auto& [x, p] : family[s]) {
      if (p.IsZero()) continue;
      payment += p * t.Pay(x);
      reward += p * x;
    }
    const Rational agent = payment - cost[s];
    const Rational principal = reward - payment;
    if (!have || agent > best_agent ||
        (agent == best_agent && principal > best_principal)) {
      have = true;
      best_agent = agent;
      best_principal = principal;
    }
  }
  return best_principal;
}

Rational WorstCaseUtilityTwoPoint(const GeneralContract& t,
                                  const GeneralInstance& inst) {
  return FamilyUtility(t, inst, TwoPointFamily(inst));
}

Instance NormalizedBinary(const GeneralInstance& inst) {
  const Rational top = TopReward(inst);
  const Rational factor = top.Inverse();
  std::vector<Rational> costs;
  for (const Rational& c : inst.costs) costs.push_back(c * factor);
  if (inst.reward_function) {
    return Instance(inst.reward_function->Scaled(factor), std::move(costs));
  }
  ExplicitTable table{RewardTable(inst)};
  for (Rational& v : table.values) v *= factor;
  return Instance(SuccessFunction(std::move(table)), std::move(costs));
}

ContractSolution OptimalLinearGeneral(const GeneralInstance& inst,
                                      int brute_force_limit) {
  const Rational top = TopReward(inst);
  const Instance binary = NormalizedBinary(inst);
  const SuccessorMethod method = binary.f.GsCertified()
                                     ? SuccessorMethod::kGs
                                     : SuccessorMethod::kBruteForce;
  ContractSolution solution = Solve(binary, method, brute_force_limit);
  solution.utility *= top;
  solution.value *= top;
  if (solution.profile) {
    for (CriticalPoint& p : solution.profile->points) p.value *= top;
  }
  return solution;
}

GeneralInstance BinaryEmbedding(const Instance& inst) {
  const ExplicitTable f = inst.f.ToTable();
  ExplicitTable fail;
  fail.values.reserve(f.values.size());
  for (const Rational& p : f.values) fail.values.push_back(Rational(1) - p);
  GeneralInstance out;
  out.costs = inst.costs;
  out.rewards = {Rational(0), Rational(1)};
  out.distributions = std::vector<ExplicitTable>{std::move(fail), f};
  return out;
}

GeneralInstance SampleGeneralInstance(int n, int m, uint64_t seed) {
  if (m < 2) Fail(ErrorKind::kPrecondition, "need at least two outcomes");
  if (n < 1 || n > kDefaultBruteForceLimit) {
    Fail(ErrorKind::kPrecondition, "sample size out of range");
  }
  std::mt19937_64 rng(seed);

  // p: a random coverage function scaled to p(A) = 1.
  std::vector<Rational> p;
  for (uint64_t attempt = 0; p.empty(); ++attempt) {
    const Instance cover = SampleInstance(FunctionClass::kCoverage, n,
                                          BitPrecision(6), rng() + attempt);
    std::vector<Rational> table = cover.f.ToTable().values;
    if (table.back().Sign() > 0) {
      const Rational scale = table.back().Inverse();
      for (Rational& v : table) v *= scale;
      p = std::move(table);
    }
  }

  GeneralInstance inst;
  inst.rewards.push_back(0);
  std::vector<Rational> h;
  Rational h_total;
  for (int j = 1; j < m; ++j) {
    inst.rewards.push_back(Rational::Reduce(Between(rng, 1, 16), 4));
    h.emplace_back(Between(rng, 1, 8));
    h_total += h.back();
  }
  for (Rational& w : h) w /= h_total;

  std::vector<ExplicitTable> dist(m);
  for (const Rational& ps : p) {
    dist[0].values.push_back(Rational(1) - ps);
    for (int j = 1; j < m; ++j) dist[j].values.push_back(ps * h[j - 1]);
  }
  inst.distributions = std::move(dist);

  Rational mean;
  for (int j = 1; j < m; ++j) mean += h[j - 1] * inst.rewards[j];
  for (int a = 0; a < n; ++a) {
    inst.costs.push_back(Rational::Reduce(Between(rng, 1, 16), 64) * mean);
  }
  ValidateGeneralOrThrow(inst);
  return inst;
}

GeneralContract SampleContract(const GeneralInstance& inst, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<Rational> levels = ObservableLevels(inst);
  const Rational top = levels.back();
  std::vector<std::pair<Rational, Rational>> pay;
  for (const Rational& level : levels) {
    pay.push_back({level, Rational::Reduce(Between(rng, 0, 16), 16) * top});
  }
  return GeneralContract::Table(std::move(pay));
}

}  // namespace combcontract
