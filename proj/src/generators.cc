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

#include "combcontract/generators.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "combcontract/error.h"

namespace combcontract {
namespace {

// Uniform integer in [lo, hi] by plain modulo, so sequences are identical
// across standard libraries.
class Draw {
 public:
  explicit Draw(uint64_t seed) : rng_(seed) {}

  int64_t Between(int64_t lo, int64_t hi) {
    if (hi <= lo) return lo;
    const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int64_t>(rng_() % span);
  }

  bool Coin() { return (rng_() & 1u) != 0; }

 private:
  std::mt19937_64 rng_;
};

Rational Units(int64_t count, int64_t scale) {
  return Rational::Reduce(count, scale);
}

}  // namespace

void CheckSubsetSumSpec(const SubsetSumSpec& spec) {
  if (spec.values.empty()) {
    Fail(ErrorKind::kPrecondition, "subset-sum needs at least one value");
  }
  if (static_cast<int>(spec.values.size()) > kMaxActions) {
    Fail(ErrorKind::kPrecondition, "too many subset-sum values");
  }
  int64_t total = 0;
  for (int64_t x : spec.values) {
    if (x < 1 || x >= spec.target) {
      Fail(ErrorKind::kPrecondition,
           "subset-sum values must lie in [1, Z), got " + std::to_string(x) +
               " with Z = " + std::to_string(spec.target));
    }
    total += x;
  }
  if (total < spec.target) {
    Fail(ErrorKind::kPrecondition,
         "subset-sum values must sum to at least Z = " +
             std::to_string(spec.target));
  }
}

SubsetSumReduction GenSubsetSum(const SubsetSumSpec& spec,
                                SubsetSumScaling scaling) {
  CheckSubsetSumSpec(spec);
  const Rational z(spec.target);
  const Rational epsilon = (z * z).Inverse();
  const Rational cost_scale =
      scaling == SubsetSumScaling::kJoint ? epsilon / z : epsilon;

  std::vector<Rational> raw;
  std::vector<Rational> values;
  std::vector<Rational> costs;
  for (int64_t x : spec.values) {
    raw.emplace_back(x);
    values.push_back(Rational(x) / z);
    costs.push_back(Rational(x) * cost_scale);
  }
  Instance inst(SuccessFunction(BudgetAdditive{std::move(values), 1}),
                std::move(costs));
  const Rational threshold =
      scaling == SubsetSumScaling::kJoint ? epsilon : epsilon * z;
  return {std::move(inst), epsilon, threshold, std::move(raw), z};
}

SuccessFunction CoverageFromGroups(int n, const std::vector<GroupWeight>& w) {
  Coverage cov;
  cov.covers.resize(n);
  for (size_t j = 0; j < w.size(); ++j) {
    if (w[j].group == 0 || !ActionSet(w[j].group).WithinGround(n)) {
      Fail(ErrorKind::kDomain, "group outside the ground set");
    }
    cov.weights.push_back(w[j].weight);
    for (int a : ActionSet(w[j].group).Actions()) {
      cov.covers[a].push_back(static_cast<int>(j));
    }
  }
  return SuccessFunction(std::move(cov));
}

std::vector<GroupWeight> CoverageLiftWeights(
    int n, const std::vector<GroupWeight>& w, const Rational& beta1,
    const Rational& beta2) {
  if (beta1 < 1 || beta2 < beta1) {
    Fail(ErrorKind::kPrecondition,
         "lift needs beta2 >= beta1 >= 1, got beta1 = " + beta1.ToString() +
             ", beta2 = " + beta2.ToString());
  }
  if (n < 0 || n >= kMaxActions) {
    Fail(ErrorKind::kPrecondition, "lift ground set out of range");
  }
  const uint32_t added = uint32_t{1} << n;
  Rational total;
  std::vector<GroupWeight> out;
  for (const GroupWeight& g : w) {
    if (g.weight.Sign() < 0) {
      Fail(ErrorKind::kPrecondition, "negative group weight");
    }
    total += g.weight;
    if (!g.weight.IsZero()) out.push_back(g);
  }
  for (const GroupWeight& g : w) {
    const Rational lifted = (beta1 - 1) * g.weight;
    if (!lifted.IsZero()) out.push_back({g.group | added, lifted});
  }
  // Every group meets A, so f(A) is the total weight.
  const Rational single = (beta2 - beta1 + 1) * total;
  if (!single.IsZero()) out.push_back({added, single});
  return out;
}

CoverageTower GenExponentialCoverage(int n) {
  if (n < 1 || n > 5) {
    Fail(ErrorKind::kPrecondition,
         "coverage tower supports 1 <= n <= 5, got " + std::to_string(n));
  }
  CoverageTower tower;
  {
    std::vector<GroupWeight> w = {{1u, Rational(2)}};
    Instance inst(CoverageFromGroups(1, w), {Rational(1)}, std::nullopt,
                  /*normalized=*/false);
    CriticalProfile critical = BruteForceCriticalSet(inst);
    tower.levels.push_back(
        {std::move(inst), std::move(w), 0, 0, std::move(critical)});
  }
  for (int level = 1; level < n; ++level) {
    const TowerLevel& prev = tower.levels.back();
    const Rational& alpha_min = prev.critical.points.front().alpha;
    const Rational& alpha_max = prev.critical.points.back().alpha;
    const Rational beta1 = Rational(10) * alpha_max / alpha_min;
    const Rational beta2 = Rational(10) * beta1;
    const Rational f_all = prev.instance.f.Value(ActionSet::Full(level));

    std::vector<GroupWeight> w =
        CoverageLiftWeights(level, prev.weights, beta1, beta2);
    std::vector<Rational> costs = prev.instance.costs;
    costs.push_back(Rational(20) * alpha_max * f_all);
    Instance inst(CoverageFromGroups(level + 1, w), std::move(costs),
                  std::nullopt, /*normalized=*/false);
    CriticalProfile critical = BruteForceCriticalSet(inst);
    tower.levels.push_back(
        {std::move(inst), std::move(w), beta1, beta2, std::move(critical)});
  }
  return tower;
}

Instance Normalize(const Instance& inst) {
  const Rational top = inst.f.Value(ActionSet::Full(inst.n()));
  if (top.Sign() <= 0) {
    Fail(ErrorKind::kDegenerateInstance, "cannot normalize: f(A) = 0");
  }
  if (top == 1) {
    Instance out = inst;
    out.normalized = true;
    return out;
  }
  const Rational factor = top.Inverse();
  std::vector<Rational> costs;
  costs.reserve(inst.costs.size());
  for (const Rational& c : inst.costs) costs.push_back(c * factor);
  return Instance(inst.f.Scaled(factor), std::move(costs), std::nullopt,
                  /*normalized=*/true);
}

Instance PerturbCosts(const Instance& inst, const Rational& epsilon,
                      uint64_t seed, int resolution_bits) {
  if (epsilon.Sign() < 0) {
    Fail(ErrorKind::kDomain, "perturbation size must be non-negative");
  }
  if (resolution_bits < 1 || resolution_bits > 62) {
    Fail(ErrorKind::kDomain, "perturbation resolution out of range");
  }
  if (epsilon.IsZero()) return inst;
  const int64_t steps = int64_t{1} << resolution_bits;
  const Rational step = epsilon / Rational(steps);
  Draw draw(seed);
  std::vector<Rational> costs;
  costs.reserve(inst.costs.size());
  for (const Rational& c : inst.costs) {
    costs.push_back(c + step * Rational(draw.Between(0, steps)));
  }
  return Instance(inst.f, std::move(costs), std::nullopt, inst.normalized);
}

Instance SampleInstance(FunctionClass cls, int n, BitPrecision k,
                        uint64_t seed) {
  if (n < 1 || n > kMaxActions) {
    Fail(ErrorKind::kPrecondition, "sample size out of range");
  }
  if (k.bits() > 30) {
    Fail(ErrorKind::kPrecondition, "sampling supports k <= 30");
  }
  if (cls == FunctionClass::kExplicitTable && n > 16) {
    Fail(ErrorKind::kPrecondition, "explicit tables are sampled for n <= 16");
  }
  const int64_t unit = int64_t{1} << k.bits();
  auto require = [&](int64_t needed) {
    if (unit < needed) {
      Fail(ErrorKind::kPrecondition,
           "2^k = " + std::to_string(unit) + " is too coarse for " +
               std::string(FunctionClassName(cls)) + " with n = " +
               std::to_string(n));
    }
  };
  Draw draw(seed);
  auto units = [&](int64_t lo, int64_t hi) {
    return Units(draw.Between(lo, hi), unit);
  };

  std::optional<SuccessFunction> f;
  switch (cls) {
    case FunctionClass::kAdditive: {
      require(n);
      std::vector<Rational> values;
      for (int a = 0; a < n; ++a) values.push_back(units(1, unit / n));
      f.emplace(Additive{std::move(values)});
      break;
    }
    case FunctionClass::kUnitDemand: {
      std::vector<Rational> values;
      for (int a = 0; a < n; ++a) values.push_back(units(1, unit));
      f.emplace(UnitDemand{std::move(values)});
      break;
    }
    case FunctionClass::kMatroidRank: {
      WeightedMatroidRank m;
      int64_t rank = 0;
      if (draw.Coin()) {
        const int r = static_cast<int>(draw.Between(1, std::min<int64_t>(n, unit)));
        m.matroid = UniformMatroid{r};
        rank = r;
      } else {
        const int blocks = static_cast<int>(draw.Between(1, n));
        PartitionMatroid p;
        std::vector<int> sizes(blocks, 0);
        for (int a = 0; a < n; ++a) {
          // The first `blocks` actions seed one block each.
          const int b = a < blocks ? a : static_cast<int>(draw.Between(0, blocks - 1));
          p.block_of.push_back(b);
          ++sizes[b];
        }
        for (int b = 0; b < blocks; ++b) {
          p.capacity.push_back(static_cast<int>(draw.Between(1, sizes[b])));
          rank += p.capacity.back();
        }
        if (rank > unit) {
          // Keep f(A) <= 1 expressible: fall back to a uniform matroid.
          rank = std::min<int64_t>(n, unit);
          m.matroid = UniformMatroid{static_cast<int>(rank)};
        } else {
          m.matroid = std::move(p);
        }
      }
      for (int a = 0; a < n; ++a) m.weights.push_back(units(1, unit / rank));
      f.emplace(std::move(m));
      break;
    }
    case FunctionClass::kBudgetAdditive: {
      std::vector<Rational> values;
      for (int a = 0; a < n; ++a) values.push_back(units(1, unit));
      const Rational budget = units(1, unit);
      f.emplace(BudgetAdditive{std::move(values), budget});
      break;
    }
    case FunctionClass::kCoverage:
    case FunctionClass::kExplicitTable: {
      const int elements = n + 2;
      Coverage cov;
      for (int j = 0; j < elements; ++j) {
        cov.weights.push_back(units(0, unit / elements));
      }
      cov.covers.resize(n);
      for (int a = 0; a < n; ++a) {
        for (int j = 0; j < elements; ++j) {
          if (draw.Coin()) cov.covers[a].push_back(j);
        }
        if (cov.covers[a].empty()) {
          cov.covers[a].push_back(static_cast<int>(draw.Between(0, elements - 1)));
        }
      }
      SuccessFunction coverage(std::move(cov));
      if (cls == FunctionClass::kCoverage) {
        f.emplace(std::move(coverage));
      } else {
        f.emplace(coverage.ToTable());
      }
      break;
    }
  }

  std::vector<Rational> costs;
  const int64_t cost_cap = std::max<int64_t>(1, unit / n);
  for (int a = 0; a < n; ++a) costs.push_back(units(1, cost_cap));
  Instance inst(std::move(*f), std::move(costs), k);
  ValidateOrThrow(inst);
  return inst;
}

}  // namespace combcontract
