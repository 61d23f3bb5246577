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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits non-zero when any criterion fails. Every comparison is exact.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "combcontract/approx.h"
#include "combcontract/contract.h"
#include "combcontract/demand.h"
#include "combcontract/error.h"
#include "combcontract/generators.h"
#include "combcontract/robust.h"
#include "combcontract/solver.h"
#include "oracles.h"

namespace combcontract {
namespace {

using testing::Q;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void Expect(bool ok, const std::string& what) {
    if (!ok && pass) first_failure = what;
    pass = pass && ok;
  }
};

struct CorpusEntry {
  std::string label;
  Instance inst;
  SubsetTable table;
  CriticalProfile crit;
};

// Gross-substitutes instances with declared k: 70 seeds for each of three
// classes, n from 2 to 10, k from 4 to 8.
std::vector<CorpusEntry> BuildCorpus() {
  std::vector<CorpusEntry> corpus;
  for (FunctionClass cls : {FunctionClass::kAdditive, FunctionClass::kUnitDemand,
                            FunctionClass::kMatroidRank}) {
    for (uint64_t seed = 1; seed <= 70; ++seed) {
      const int n = 2 + static_cast<int>(seed % 9);
      const int k = 4 + static_cast<int>((seed / 9) % 5);
      Instance inst = SampleInstance(cls, n, BitPrecision(k), 1000 + seed);
      SubsetTable table(inst, 10);
      CriticalProfile crit = BruteForceCriticalSet(table);
      std::ostringstream label;
      label << FunctionClassName(cls) << " seed " << 1000 + seed << " n " << n
            << " k " << k;
      corpus.push_back(
          {label.str(), std::move(inst), std::move(table), std::move(crit)});
    }
  }
  return corpus;
}

// 0, 1, every critical value and every midpoint between neighbours.
std::vector<Rational> Probes(const CriticalProfile& crit) {
  std::vector<Rational> out = {Rational(0)};
  Rational prev = 0;
  for (const CriticalPoint& p : crit.points) {
    out.push_back((prev + p.alpha) / 2);
    out.push_back(p.alpha);
    prev = p.alpha;
  }
  if (prev < 1) out.push_back((prev + 1) / 2);
  out.push_back(1);
  return out;
}

// Brute-force max of (1 - alpha) V(alpha) over the critical values and 0,
// smallest alpha on ties.
std::pair<Rational, Rational> ProfileOptimum(const CriticalProfile& crit) {
  Rational best_alpha = 0;
  Rational best = 0;
  for (const CriticalPoint& p : crit.points) {
    const Rational u = (Rational(1) - p.alpha) * p.value;
    if (u > best) {
      best = u;
      best_alpha = p.alpha;
    }
  }
  return {best_alpha, best};
}

Outcome DemandEquivalence(const std::vector<CorpusEntry>& corpus) {
  Outcome o;
  int64_t probes = 0;
  int oracle_checked = 0;
  for (const CorpusEntry& e : corpus) {
    for (const Rational& a : Probes(e.crit)) {
      const OrderedDemand g = GreedyDemand(e.inst, a);
      const DemandProfile p = e.table.Demand(a);
      const bool member = std::find(p.demand_star.begin(), p.demand_star.end(),
                                    g.set) != p.demand_star.end();
      o.Expect(member, e.label + ": greedy set outside D* at " + a.ToString());
      o.Expect(e.inst.f.Value(g.set) == p.value,
               e.label + ": greedy value differs at " + a.ToString());
      ++probes;
    }
    // Plain-loop oracle for the smaller instances.
    if (e.inst.n() <= 7) {
      const testing::Lines lines = testing::Tabulate(e.inst);
      o.Expect(testing::OracleCriticalSet(lines) == e.crit.Alphas(),
               e.label + ": sweep disagrees with the definition oracle");
      for (const Rational& a : Probes(e.crit)) {
        o.Expect(testing::OracleV(lines, a) == e.table.Demand(a).value,
                 e.label + ": V disagrees with the definition oracle");
      }
      ++oracle_checked;
    }
  }
  o.detail = std::to_string(corpus.size()) + " instances, " +
             std::to_string(probes) + " contracts; " +
             std::to_string(oracle_checked) +
             " also matched the definition oracle";
  return o;
}

Outcome SuccessorEquivalence(const std::vector<CorpusEntry>& corpus) {
  Outcome o;
  int64_t calls = 0;
  int64_t worst_ratio_num = 0;
  int64_t worst_ratio_den = 1;
  for (const CorpusEntry& e : corpus) {
    const int k = e.inst.k->bits();
    ValueOracle v(e.inst, 10);
    std::vector<Rational> from = {Rational(0)};
    std::vector<Rational> values = {Rational(0)};
    for (const CriticalPoint& p : e.crit.points) {
      from.push_back(p.alpha);
      values.push_back(p.value);
    }
    for (size_t i = 0; i < from.size(); ++i) {
      const std::optional<Rational> want = SuccessorBruteForce(e.table, from[i]);
      const std::optional<Rational> expected =
          i < e.crit.points.size() ? std::optional<Rational>(e.crit.points[i].alpha)
                                   : std::nullopt;
      o.Expect(want == expected, e.label + ": brute successor off the sweep");
      o.Expect(SuccessorGs(e.inst, from[i], v) == want,
               e.label + ": succ_gs differs at " + from[i].ToString());
      v.ResetCount();
      o.Expect(SuccessorSearch(e.inst, from[i], v, values[i]) == want,
               e.label + ": succ_search differs at " + from[i].ToString());
      o.Expect(v.queries() <= 2 * k + 1,
               e.label + ": succ_search used " + std::to_string(v.queries()) +
                   " queries");
      if (v.queries() * worst_ratio_den > worst_ratio_num * (2 * k + 1)) {
        worst_ratio_num = v.queries();
        worst_ratio_den = 2 * k + 1;
      }
      v.ResetCount();
      calls += 2;
    }
  }
  o.detail = std::to_string(calls) + " successor calls; most queries used " +
             std::to_string(worst_ratio_num) + " of a " +
             std::to_string(worst_ratio_den) + "-query budget";
  return o;
}

Outcome OptimalContract(const std::vector<CorpusEntry>& corpus) {
  Outcome o;
  int solved = 0;
  for (const CorpusEntry& e : corpus) {
    const auto [alpha, utility] = ProfileOptimum(e.crit);
    for (SuccessorMethod m : {SuccessorMethod::kGs, SuccessorMethod::kSearch,
                              SuccessorMethod::kBruteForce}) {
      const ContractSolution s = Solve(e.inst, m, 10);
      o.Expect(s.alpha == alpha && s.utility == utility,
               e.label + ": " + std::string(SuccessorMethodName(m)) +
                   " returned " + s.alpha.ToString());
      ++solved;
    }
  }
  // The three-action table is not gross substitutes and has no k, so only
  // the exhaustive backend applies.
  const ContractSolution t =
      Solve(testing::ThreeActionTable(), SuccessorMethod::kBruteForce);
  o.Expect(t.alpha == Q(1, 2) && t.utility == Q(1, 4),
           "three-action table: got " + t.alpha.ToString());
  for (SuccessorMethod m : {SuccessorMethod::kGs, SuccessorMethod::kBruteForce}) {
    const ContractSolution a = Solve(testing::AdditiveExample(), m);
    o.Expect(a.alpha == Q(1, 2) && a.utility == Q(9, 20),
             "additive example: got " + a.alpha.ToString());
  }
  o.detail = std::to_string(solved) +
             " corpus solves; three-action table 1/2 -> 1/4; additive "
             "example 1/2 -> 9/20";
  return o;
}

Outcome GsBound(const std::vector<CorpusEntry>& corpus) {
  Outcome o;
  Rational worst = 0;
  std::string worst_label;
  for (const CorpusEntry& e : corpus) {
    const int n = e.inst.n();
    const int bound = n * (n + 1) / 2;
    o.Expect(e.crit.size() <= bound,
             e.label + ": " + std::to_string(e.crit.size()) + " critical values");
    const Rational ratio = Rational(e.crit.size()) / bound;
    if (ratio > worst) {
      worst = ratio;
      worst_label = e.label;
    }
  }
  o.detail = "max |C| / (n(n+1)/2) = " + worst.ToString() + " (" +
             worst.ToDecimal(3) + ", " + worst_label + ")";
  return o;
}

Outcome BoundedFractions(const std::vector<CorpusEntry>& corpus) {
  Outcome o;
  int64_t checked = 0;
  for (const CorpusEntry& e : corpus) {
    const Rational cap = Rational(BitPrecision(e.inst.k->bits()).Scale());
    for (const CriticalPoint& p : e.crit.points) {
      o.Expect(Rational(p.alpha.numerator()) <= cap &&
                   Rational(p.alpha.denominator()) <= cap,
               e.label + ": critical value " + p.alpha.ToString());
      ++checked;
    }
  }
  o.detail = std::to_string(checked) + " critical values checked";
  return o;
}

// Least m with (1 - eps)^m <= 2^-k.
int GridSize(const Rational& eps, int k) {
  const Rational r = Rational(1) - eps;
  const Rational tiny = Rational::PowerOfHalf(k);
  int m = 0;
  Rational power = 1;
  while (power > tiny) {
    power *= r;
    ++m;
  }
  return m;
}

Outcome FptasGuarantee(const std::vector<CorpusEntry>& corpus) {
  Outcome o;
  std::vector<const Instance*> instances;
  for (const CorpusEntry& e : corpus) instances.push_back(&e.inst);
  // Submodular classes too: the guarantee does not need gross substitutes.
  std::vector<Instance> extra;
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    const FunctionClass cls =
        seed % 2 ? FunctionClass::kCoverage : FunctionClass::kBudgetAdditive;
    extra.push_back(SampleInstance(cls, 3 + static_cast<int>(seed % 6),
                                   BitPrecision(4 + static_cast<int>(seed % 5)),
                                   2000 + seed));
  }
  for (const Instance& e : extra) instances.push_back(&e);

  Rational worst = 1;
  int64_t runs = 0;
  for (const Instance* inst : instances) {
    const auto [alpha, opt] = ProfileOptimum(BruteForceCriticalSet(*inst, 10));
    const int k = inst->k->bits();
    for (const Rational& eps : {Q(1, 2), Q(1, 4), Q(1, 8)}) {
      const ContractSolution s = Fptas(*inst, eps);
      o.Expect(s.utility >= (Rational(1) - eps) * opt,
               "fptas below (1 - eps) OPT at eps " + eps.ToString());
      o.Expect(s.queries == GridSize(eps, k),
               "fptas used " + std::to_string(s.queries) + " queries, want " +
                   std::to_string(GridSize(eps, k)));
      if (opt.Sign() > 0) worst = Min(worst, s.utility / opt);
      ++runs;
    }
  }
  o.detail = std::to_string(runs) + " runs on " +
             std::to_string(instances.size()) +
             " instances; worst utility / OPT = " + worst.ToDecimal(4);
  return o;
}

Outcome ExponentialConstruction() {
  Outcome o;
  const CoverageTower tower = GenExponentialCoverage(4);
  std::string sizes;
  for (int n = 1; n <= 4; ++n) {
    const Instance& inst = tower.levels[n - 1].instance;
    const int size = BruteForceCriticalSet(inst).size();
    o.Expect(size == (1 << n) - 1, "level " + std::to_string(n) + " has " +
                                       std::to_string(size) + " critical values");
    sizes += (n > 1 ? ", " : "") + std::to_string(size);
  }
  o.Expect(BruteForceCriticalSet(tower.levels[1].instance).Alphas() ==
               std::vector<Rational>{Q(1, 20), Q(19, 180), Q(1, 2)},
           "two-action critical set");

  // Each lift against g summed directly from the previous level's weights.
  int64_t subsets = 0;
  for (size_t i = 1; i < tower.levels.size(); ++i) {
    const TowerLevel& prev = tower.levels[i - 1];
    const TowerLevel& next = tower.levels[i];
    const int n = prev.instance.n();
    const uint32_t full = (uint32_t{1} << n) - 1;
    auto sum = [](const std::vector<GroupWeight>& w, uint32_t s) {
      Rational total;
      for (const GroupWeight& g : w) {
        if (g.group & s) total += g.weight;
      }
      return total;
    };
    for (const GroupWeight& w : next.weights) {
      o.Expect(w.weight.Sign() >= 0, "negative lifted weight");
    }
    const Rational f_all = sum(prev.weights, full);
    for (uint32_t s = 0; s <= full; ++s) {
      const uint32_t with = s | (uint32_t{1} << n);
      o.Expect(sum(next.weights, s) == next.beta1 * sum(prev.weights, s),
               "lift misses g on a set without the new action");
      o.Expect(sum(next.weights, with) ==
                   next.beta2 * f_all + sum(prev.weights, s),
               "lift misses g on a set with the new action");
      o.Expect(next.instance.f.Value(ActionSet(s)) == sum(next.weights, s) &&
                   next.instance.f.Value(ActionSet(with)) ==
                       sum(next.weights, with),
               "coverage function disagrees with its weights");
      subsets += 2;
    }
  }
  o.detail = "critical counts " + sizes + "; two-action set {1/20, 19/180, 1/2}; " +
             std::to_string(subsets) + " lifted subsets reproduced";
  return o;
}

std::vector<SubsetSumSpec> SubsetSumSpecs() {
  std::mt19937_64 rng(8);
  std::vector<SubsetSumSpec> specs;
  while (specs.size() < 50) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const int64_t z = 4 + static_cast<int64_t>(rng() % 57);
    SubsetSumSpec spec{{}, z};
    int64_t total = 0;
    for (int i = 0; i < n; ++i) {
      spec.values.push_back(1 + static_cast<int64_t>(rng() % (z - 1)));
      total += spec.values.back();
    }
    if (total >= z) specs.push_back(std::move(spec));
  }
  return specs;
}

Outcome HardnessReduction(std::string* mixed_note) {
  Outcome o;
  int yes = 0;
  int mixed_wrong = 0;
  for (const SubsetSumSpec& spec : SubsetSumSpecs()) {
    const bool want = testing::SubsetSumYes(spec.values, spec.target);
    yes += want;
    const SubsetSumReduction r = GenSubsetSum(spec);
    const auto [alpha, utility] =
        ProfileOptimum(BruteForceCriticalSet(r.instance, 10));
    o.Expect((alpha == r.threshold) == want,
             "Z = " + std::to_string(spec.target) + ": optimum " +
                 alpha.ToString());
    const SubsetSumReduction m = GenSubsetSum(spec, SubsetSumScaling::kMixed);
    const auto [mixed_alpha, mixed_utility] =
        ProfileOptimum(BruteForceCriticalSet(m.instance, 10));
    mixed_wrong += (mixed_alpha == m.threshold) != want;
  }
  o.detail = "50 specs (" + std::to_string(yes) + " YES, " +
             std::to_string(50 - yes) +
             " NO); predicate: optimal contract equals 1/Z^2 with f and c "
             "both divided by Z";
  *mixed_note = "dividing only f by Z and testing for 1/Z misclassifies " +
                std::to_string(mixed_wrong) + " of 50 specs";
  return o;
}

// Demand containment and critical-count growth once eps is small enough.
// Costs only move up, so a jump at exactly alpha = 1 leaves (0, 1] under
// every perturbation; such instances are reported separately.
Outcome Perturbation() {
  Outcome o;
  std::vector<Instance> instances = {testing::ThreeActionTable(),
                                     testing::AdditiveExample()};
  const FunctionClass classes[] = {
      FunctionClass::kAdditive,       FunctionClass::kUnitDemand,
      FunctionClass::kMatroidRank,    FunctionClass::kBudgetAdditive,
      FunctionClass::kCoverage,       FunctionClass::kExplicitTable};
  for (uint64_t seed = 1; instances.size() < 50; ++seed) {
    instances.push_back(SampleInstance(classes[seed % 6],
                                       2 + static_cast<int>(seed % 5),
                                       BitPrecision(5), 3000 + seed));
  }
  int max_halvings = 0;
  int grew = 0;
  int ends_at_one = 0;
  int count_failures = 0;
  int boundary_failures = 0;
  int uncontained = 0;
  for (size_t i = 0; i < instances.size(); ++i) {
    const Instance& inst = instances[i];
    const CriticalProfile crit = BruteForceCriticalSet(inst);
    const bool at_one = !crit.points.empty() && crit.points.back().alpha == 1;
    ends_at_one += at_one;
    std::vector<DemandProfile> original;
    for (const CriticalPoint& p : crit.points) {
      original.push_back(BruteForceDemand(inst, p.alpha));
    }
    struct Check {
      bool contained = true;
      int count = 0;
    };
    auto check = [&](const Instance& pert) {
      Check c;
      c.count = BruteForceCriticalSet(pert).size();
      for (size_t j = 0; j < crit.points.size(); ++j) {
        for (ActionSet s : BruteForceDemand(pert, crit.points[j].alpha).demand) {
          c.contained = c.contained &&
                        std::find(original[j].demand.begin(),
                                  original[j].demand.end(),
                                  s) != original[j].demand.end();
        }
      }
      return c;
    };
    // Halve eps from 1/16 with a fresh seed each time until two consecutive
    // sizes agree on both checks.
    Rational eps = Q(1, 16);
    int streak = 0;
    int halvings = 0;
    Check last;
    Check prev;
    for (; halvings < 48 && streak < 2; ++halvings, eps /= 2) {
      prev = last;
      last = check(PerturbCosts(inst, eps, 4000 + 64 * i + halvings, 20));
      const bool same = halvings > 0 && last.contained == prev.contained &&
                        last.count == prev.count;
      streak = last.contained && (streak == 0 || same) ? streak + 1 : 0;
    }
    uncontained += !last.contained;
    o.Expect(streak == 2, "instance " + std::to_string(i) +
                              ": demand containment never stabilized");
    if (last.count < crit.size()) {
      ++count_failures;
      // The only jump lost is the one at alpha = 1.
      boundary_failures += at_one && last.count == crit.size() - 1;
      o.Expect(false, "instance " + std::to_string(i) + ": critical count " +
                          std::to_string(crit.size()) + " -> " +
                          std::to_string(last.count) +
                          (at_one ? " (original jump at alpha = 1)" : ""));
    }
    grew += last.count > crit.size();
    max_halvings = std::max(max_halvings, halvings);
  }
  o.detail = "50 instances stabilized within " + std::to_string(max_halvings) +
             " halvings of eps = 1/16; demand containment failed on " +
             std::to_string(uncontained) + "; " +
             std::to_string(grew) + " gained critical values; " +
             std::to_string(count_failures) + " lost some (" +
             std::to_string(boundary_failures) + " of them lost only a jump at " +
             "alpha = 1; " + std::to_string(ends_at_one) +
             " instances have such a jump)";
  return o;
}

Outcome RobustDominance(const std::vector<CorpusEntry>& corpus) {
  Outcome o;
  int contracts = 0;
  int strict = 0;
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    const int n = 1 + static_cast<int>(seed % 6);
    const int m = 2 + static_cast<int>(seed % 3);
    const GeneralInstance g = SampleGeneralInstance(n, m, 5000 + seed);
    for (uint64_t c = 0; c < 10; ++c) {
      const GeneralContract t = SampleContract(g, seed * 100 + c);
      const Rational before = WorstCaseUtilityTwoPoint(t, g);
      const Rational after =
          WorstCaseUtilityTwoPoint(GeneralContract::Linear(Linearize(t, g)), g);
      o.Expect(after >= before, "general instance " + std::to_string(seed) +
                                    " contract " + std::to_string(c));
      strict += after > before;
      ++contracts;
    }
  }
  int embedded = 0;
  for (const CorpusEntry& e : corpus) {
    if (e.inst.f.Value(ActionSet::Full(e.inst.n())).IsZero()) continue;
    const ContractSolution want = Solve(e.inst, SuccessorMethod::kGs, 10);
    const ContractSolution got = OptimalLinearGeneral(BinaryEmbedding(e.inst), 10);
    o.Expect(got.alpha == want.alpha && got.utility == want.utility,
             e.label + ": embedding optimum " + got.alpha.ToString());
    ++embedded;
  }
  o.detail = std::to_string(contracts) + " contracts (" + std::to_string(strict) +
             " strictly improved); " + std::to_string(embedded) +
             " binary embeddings agree";
  return o;
}

int RunAll() {
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  auto report = [&](int id, const std::string& name,
                    const std::function<Outcome()>& fn) {
    Outcome o;
    try {
      o = fn();
    } catch (const Error& e) {
      o.pass = false;
      o.first_failure = std::string("error: ") + e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " ("
              << name << "): " << o.detail;
    if (!o.pass) std::cout << " [first failure: " << o.first_failure << "]";
    std::cout << std::endl;
  };

  const std::vector<CorpusEntry> corpus = BuildCorpus();
  report(1, "greedy demand vs exhaustive demand",
         [&] { return DemandEquivalence(corpus); });
  report(2, "successor backends vs exhaustive successor",
         [&] { return SuccessorEquivalence(corpus); });
  report(3, "optimal contract", [&] { return OptimalContract(corpus); });
  report(4, "gross-substitutes critical-set bound",
         [&] { return GsBound(corpus); });
  report(5, "critical values are bounded fractions",
         [&] { return BoundedFractions(corpus); });
  report(6, "grid approximation guarantee",
         [&] { return FptasGuarantee(corpus); });
  report(7, "exponential coverage construction", ExponentialConstruction);
  std::string mixed_note;
  report(8, "subset-sum reduction",
         [&] { return HardnessReduction(&mixed_note); });
  std::cout << "INFO criterion 8: " << mixed_note << std::endl;
  report(9, "cost perturbations", Perturbation);
  report(10, "robustness of linear contracts",
         [&] { return RobustDominance(corpus); });

  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  std::printf("%d of 10 criteria passed in %.1f s\n", 10 - failed, secs);
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace combcontract

int main() { return combcontract::RunAll(); }
