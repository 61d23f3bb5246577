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

#include "combcontract/contract.h"

#include <algorithm>
#include <string>

#include "combcontract/error.h"

namespace combcontract {
namespace {

void SortUnique(std::vector<Rational>& values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
}

}  // namespace

std::vector<Rational> CriticalProfile::Alphas() const {
  std::vector<Rational> out;
  out.reserve(points.size());
  for (const CriticalPoint& p : points) out.push_back(p.alpha);
  return out;
}

Rational PrincipalUtility(const Rational& alpha, const Rational& value) {
  return (Rational(1) - alpha) * value;
}

std::vector<Rational> GsCandidates(const Instance& inst,
                                   const Rational& alpha) {
  const OrderedDemand demand = GreedyDemand(inst, alpha);
  const SuccessFunction& f = inst.f;
  const int n = inst.n();

  std::vector<Rational> out;
  auto keep = [&](const Rational& beta) {
    if (beta > alpha && beta <= 1) out.push_back(beta);
  };

  ActionSet prefix;
  for (int picked : demand.order) {
    const Rational picked_gain = f.Marginal(picked, prefix);
    for (int a = 0; a < n; ++a) {
      if (prefix.Contains(a) || a == picked) continue;
      const Rational den = f.Marginal(a, prefix) - picked_gain;
      if (den.Sign() <= 0) continue;
      keep((inst.costs[a] - inst.costs[picked]) / den);
    }
    prefix = prefix.With(picked);
  }
  for (int a = 0; a < n; ++a) {
    if (demand.set.Contains(a)) continue;
    const Rational gain = f.Marginal(a, demand.set);
    if (gain.Sign() > 0) keep(inst.costs[a] / gain);
  }
  SortUnique(out);
  return out;
}

std::optional<Rational> SuccessorGs(
    const Instance& inst, const Rational& alpha, ValueOracle& oracle,
    const std::optional<Rational>& value_at_alpha) {
  if (!inst.f.GsCertified()) {
    Fail(ErrorKind::kUnsupportedClass,
         std::string("greedy successor needs a gross-substitutes class, got ") +
             std::string(FunctionClassName(inst.f.cls())));
  }
  const std::vector<Rational> candidates = GsCandidates(inst, alpha);
  if (candidates.empty()) return std::nullopt;
  const Rational base = value_at_alpha ? *value_at_alpha : oracle(alpha);
  for (const Rational& beta : candidates) {
    if (oracle(beta) > base) return beta;
  }
  return std::nullopt;
}

std::optional<Rational> SuccessorBruteForce(const SubsetTable& table,
                                            const Rational& alpha) {
  return table.NextBreakpoint(alpha);
}

CriticalProfile BruteForceCriticalSet(const Instance& inst, int limit) {
  return BruteForceCriticalSet(SubsetTable(inst, limit));
}

CriticalProfile BruteForceCriticalSet(const SubsetTable& table) {
  CriticalProfile profile;
  Rational alpha;
  uint32_t entering = 0;
  while (std::optional<Rational> next = table.NextBreakpoint(alpha, &entering)) {
    alpha = *next;
    const DemandProfile demand = table.Demand(alpha);
    if (demand.value != table.f(entering)) {
      Fail(ErrorKind::kInvariantViolation,
           "envelope sweep disagrees with demand at " + alpha.ToString());
    }
    profile.points.push_back(
        {alpha, demand.value, CanonicalBestResponse(demand)});
  }
  return profile;
}

CriticalProfile PairwiseCriticalSet(const Instance& inst, int limit) {
  const SubsetTable table(inst, limit);
  std::vector<Rational> candidates;
  for (uint32_t s = 0; s < table.size(); ++s) {
    for (uint32_t t = 0; t < s; ++t) {
      const Rational df = table.f(s) - table.f(t);
      if (df.IsZero()) continue;
      const Rational beta = (table.c(s) - table.c(t)) / df;
      if (beta.Sign() > 0 && beta <= 1) candidates.push_back(beta);
    }
  }
  SortUnique(candidates);

  CriticalProfile profile;
  Rational previous;
  for (const Rational& beta : candidates) {
    const Rational left = table.Demand((previous + beta) / 2).value;
    const DemandProfile at = table.Demand(beta);
    if (at.value != left) {
      profile.points.push_back({beta, at.value, CanonicalBestResponse(at)});
    }
    previous = beta;
  }
  return profile;
}

ContractSolution OptimalContract(const Instance& inst, const SuccessorFn& succ,
                                 ValueOracle& oracle) {
  const int64_t start = oracle.queries();
  ContractSolution best;
  best.alpha = 0;
  best.value = oracle(best.alpha);
  best.utility = best.value;

  CriticalProfile profile;
  Rational alpha = best.alpha;
  Rational value = best.value;
  while (std::optional<Rational> next = succ(alpha, value)) {
    if (*next <= alpha) {
      Fail(ErrorKind::kInvariantViolation,
           "successor " + next->ToString() + " not above " + alpha.ToString());
    }
    const Rational next_value = oracle(*next);
    if (next_value <= value) {
      Fail(ErrorKind::kInvariantViolation,
           "V does not increase at successor " + next->ToString());
    }
    alpha = *next;
    value = next_value;
    profile.points.push_back({alpha, value, ActionSet()});
    const Rational utility = PrincipalUtility(alpha, value);
    if (utility > best.utility) {
      best.alpha = alpha;
      best.value = value;
      best.utility = utility;
    }
  }
  best.queries = oracle.queries() - start;

  // Demand sets are reported outside the query budget.
  for (CriticalPoint& p : profile.points) {
    p.demand = IncentivizedSet(inst, p.alpha, oracle.limit());
  }
  best.incentivized = IncentivizedSet(inst, best.alpha, oracle.limit());
  best.profile = std::move(profile);
  return best;
}

ContractSolution BestOnProfile(const CriticalProfile& profile) {
  ContractSolution best;
  best.alpha = 0;
  best.value = 0;
  best.utility = 0;
  for (const CriticalPoint& p : profile.points) {
    const Rational utility = PrincipalUtility(p.alpha, p.value);
    if (utility > best.utility) {
      best.alpha = p.alpha;
      best.value = p.value;
      best.utility = utility;
      best.incentivized = p.demand;
    }
  }
  best.profile = profile;
  return best;
}

}  // namespace combcontract
