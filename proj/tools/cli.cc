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

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "combcontract/approx.h"
#include "combcontract/contract.h"
#include "combcontract/demand.h"
#include "combcontract/generators.h"
#include "combcontract/instance_io.h"
#include "combcontract/robust.h"
#include "combcontract/solver.h"

namespace combcontract::cli {

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kResource:
      return kExitResource;
    case ErrorKind::kInvariantViolation:
      return kExitInvariant;
    default:
      return kExitInput;
  }
}

uint64_t Fnv1a(std::string_view bytes, uint64_t seed) {
  uint64_t h = seed;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

void Render(const Report& report, Format format, std::optional<int> decimal,
            std::ostream& out) {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows(report.rows.size());
  for (size_t c = 0; c < report.columns.size(); ++c) {
    columns.push_back(report.columns[c]);
    bool numeric = false;
    for (size_t r = 0; r < report.rows.size(); ++r) {
      rows[r].push_back(report.rows[r][c].text);
      numeric = numeric || report.rows[r][c].value.has_value();
    }
    if (decimal && numeric) {
      columns.push_back(report.columns[c] + "~");
      for (size_t r = 0; r < report.rows.size(); ++r) {
        const Cell& cell = report.rows[r][c];
        rows[r].push_back(cell.value ? cell.value->ToDecimal(*decimal) : "");
      }
    }
  }

  std::vector<std::pair<std::string, std::string>> meta = {
      {"command", report.command}, {"input", report.digest}};
  meta.insert(meta.end(), report.meta.begin(), report.meta.end());

  if (format == Format::kCsv) {
    out << "# combcontract-csv v1\n";
    for (const auto& [k, v] : meta) out << "# " << k << "=" << v << "\n";
    for (size_t c = 0; c < columns.size(); ++c) {
      out << (c ? "," : "") << CsvField(columns[c]);
    }
    out << "\n";
    for (const auto& row : rows) {
      for (size_t c = 0; c < row.size(); ++c) {
        out << (c ? "," : "") << CsvField(row[c]);
      }
      out << "\n";
    }
    return;
  }

  for (const auto& [k, v] : meta) out << k << ": " << v << "\n";
  if (columns.empty()) return;
  out << "\n";
  std::vector<size_t> width(columns.size());
  for (size_t c = 0; c < columns.size(); ++c) {
    width[c] = columns[c].size();
    for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (size_t c = 0; c < cells.size(); ++c) {
      s += cells[c];
      if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
    }
    out << s << "\n";
  };
  line(columns);
  for (const auto& row : rows) line(row);
}

namespace {

struct Globals {
  std::string format = "table";
  std::optional<int> decimal;
  bool timing = false;
};

struct Loaded {
  InstanceDocument doc;
  std::string bytes;
};

Loaded Load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorKind::kParse, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  Loaded l;
  l.bytes = buf.str();
  l.doc = ParseInstance(l.bytes);
  return l;
}

const Instance& Binary(const Loaded& l) {
  if (!l.doc.binary) {
    Fail(ErrorKind::kParse, "this command needs a binary-model instance");
  }
  return *l.doc.binary;
}

GeneralInstance General(const Loaded& l) {
  if (l.doc.general) return *l.doc.general;
  return BinaryEmbedding(*l.doc.binary);
}

std::string YesNo(bool b) { return b ? "yes" : "no"; }

Cell OptionalCell(const std::optional<Rational>& r) {
  if (r) return Cell(*r);
  return Cell("none");
}

Rational ParseAlpha(const std::string& text, const Instance& inst) {
  const Rational a = ParseRational(text, inst.k);
  if (a.Sign() < 0 || a > 1) {
    Fail(ErrorKind::kDomain, "alpha must lie in [0, 1], got " + a.ToString());
  }
  return a;
}

std::vector<int64_t> ParseIntList(const std::string& text) {
  std::vector<int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      Fail(ErrorKind::kParse, "not an integer: '" + item + "'");
    }
  }
  return out;
}

// "x:t,x:t,..." payment table.
GeneralContract ParseContract(const std::string& text) {
  std::vector<std::pair<Rational, Rational>> pay;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const size_t colon = item.find(':');
    if (colon == std::string::npos) {
      Fail(ErrorKind::kParse, "contract entries are level:payment, got '" +
                                  item + "'");
    }
    pay.emplace_back(ParseRational(item.substr(0, colon)),
                     ParseRational(item.substr(colon + 1)));
  }
  return GeneralContract::Table(std::move(pay));
}

struct Check {
  std::string name;
  std::string status;
  std::string detail;
};

std::string NotApplicable(const std::string& why) {
  return "not applicable (" + why + ")";
}

// Cross-checks every applicable backend against the exhaustive envelope.
std::vector<Check> VerifyChecks(const Instance& inst, int limit,
                                const std::vector<Rational>& epsilons) {
  std::vector<Check> checks;
  const SubsetTable table(inst, limit);
  const CriticalProfile crit = BruteForceCriticalSet(table);
  const ContractSolution best = BestOnProfile(crit);
  const int n = inst.n();
  const bool gs = inst.f.GsCertified();
  auto status = [](bool ok) { return std::string(ok ? "pass" : "fail"); };

  checks.push_back({"validate", "pass", "instance is validate-clean"});
  checks.push_back({"critical-count", "pass",
                    std::to_string(crit.size()) + " critical values"});

  std::vector<Rational> from = {Rational(0)};
  std::vector<Rational> probes = {Rational(0), Rational(1)};
  for (const CriticalPoint& p : crit.points) {
    probes.push_back((from.back() + p.alpha) / 2);
    probes.push_back(p.alpha);
    from.push_back(p.alpha);
  }
  auto expected_succ = [&](size_t i) -> std::optional<Rational> {
    if (i < crit.points.size()) return crit.points[i].alpha;
    return std::nullopt;
  };

  if (gs) {
    bool ok = true;
    for (const Rational& a : probes) {
      const OrderedDemand g = GreedyDemand(inst, a);
      const DemandProfile p = table.Demand(a);
      ok = ok && std::find(p.demand_star.begin(), p.demand_star.end(), g.set) !=
                     p.demand_star.end();
    }
    checks.push_back({"greedy-demand", status(ok),
                      std::to_string(probes.size()) + " contracts probed"});
    ValueOracle oracle(inst, limit);
    bool succ_ok = true;
    for (size_t i = 0; i < from.size(); ++i) {
      succ_ok = succ_ok && SuccessorGs(inst, from[i], oracle) == expected_succ(i);
    }
    checks.push_back({"succ-gs", status(succ_ok),
                      std::to_string(from.size()) + " successor calls"});
    const int bound = n * (n + 1) / 2;
    checks.push_back({"gs-bound", status(crit.size() <= bound),
                      std::to_string(crit.size()) + " <= " +
                          std::to_string(bound)});
  } else {
    const std::string why = NotApplicable("not gs_certified");
    checks.push_back({"greedy-demand", "n/a", why});
    checks.push_back({"succ-gs", "n/a", why});
    checks.push_back({"gs-bound", "n/a", why});
  }

  if (inst.k) {
    const int k = inst.k->bits();
    ValueOracle oracle(inst, limit);
    bool ok = true;
    int64_t worst = 0;
    Rational value = 0;
    for (size_t i = 0; i < from.size(); ++i) {
      oracle.ResetCount();
      ok = ok && SuccessorSearch(inst, from[i], oracle, value) == expected_succ(i);
      worst = std::max(worst, oracle.queries());
      if (i < crit.points.size()) value = crit.points[i].value;
    }
    ok = ok && worst <= 2 * k + 1;
    checks.push_back({"succ-search", status(ok),
                      "max " + std::to_string(worst) + " queries, bound " +
                          std::to_string(2 * k + 1)});
    const Rational cap = Rational(BitPrecision(k).Scale());
    bool bounded = true;
    for (const CriticalPoint& p : crit.points) {
      bounded = bounded && Rational(p.alpha.numerator()) <= cap &&
                Rational(p.alpha.denominator()) <= cap;
    }
    checks.push_back({"bounded-fractions", status(bounded),
                      "numerators and denominators <= 2^" + std::to_string(k)});
    for (const Rational& eps : epsilons) {
      const ContractSolution s = Fptas(inst, eps);
      const bool fine =
          s.utility >= (Rational(1) - eps) * best.utility &&
          s.queries == GridSpec::Make(eps, BitPrecision(k)).size();
      checks.push_back({"fptas eps=" + eps.ToString(), status(fine),
                        "utility " + s.utility.ToString() + " vs optimum " +
                            best.utility.ToString()});
    }
  } else {
    const std::string why = NotApplicable("no k declared");
    checks.push_back({"succ-search", "n/a", why});
    checks.push_back({"bounded-fractions", "n/a", why});
    checks.push_back({"fptas", "n/a", why});
  }

  bool brute_ok = true;
  for (size_t i = 0; i < from.size(); ++i) {
    brute_ok = brute_ok && SuccessorBruteForce(table, from[i]) == expected_succ(i);
  }
  if (n <= 8) brute_ok = brute_ok && PairwiseCriticalSet(inst, 8) == crit;
  checks.push_back({"succ-brute", status(brute_ok),
                    n <= 8 ? "sweep and pairwise agree" : "sweep only"});

  std::vector<SuccessorMethod> methods = {SuccessorMethod::kBruteForce};
  if (gs) methods.push_back(SuccessorMethod::kGs);
  if (inst.k) methods.push_back(SuccessorMethod::kSearch);
  bool opt_ok = true;
  for (SuccessorMethod m : methods) {
    const ContractSolution s = Solve(inst, m, limit);
    opt_ok = opt_ok && s.alpha == best.alpha && s.utility == best.utility;
  }
  checks.push_back({"optimal-contract", status(opt_ok),
                    "alpha " + best.alpha.ToString() + ", utility " +
                        best.utility.ToString()});
  return checks;
}

std::string DigestText(const std::vector<std::string>& args,
                       const std::string& bytes) {
  uint64_t h = Fnv1a(bytes);
  for (const std::string& a : args) {
    h = Fnv1a(a, h);
    h = Fnv1a(std::string_view("\0", 1), h);
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Optimal linear contracts for combinatorial actions", "combcontract"};
  app.require_subcommand(1);
  // Global flags may follow the subcommand.
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "table or csv")
      ->check(CLI::IsMember({"table", "csv"}));
  app.add_option("--decimal", g.decimal, "add rounded columns with d digits")
      ->check(CLI::Range(0, 60));
  app.add_flag("--timing", g.timing, "report wall time");

  std::string file;
  std::string method_name;
  std::string alpha_text;
  std::string eps_text;
  std::string output;

  // Set when a command runs; produces the report or writes instance output.
  std::function<void()> action;
  Report report;
  std::string input_bytes;
  std::optional<std::string> raw_output;

  auto load = [&]() {
    Loaded l = Load(file);
    input_bytes = l.bytes;
    return l;
  };

  auto* solve = app.add_subcommand("solve", "optimal linear contract");
  solve->add_option("file", file, "instance file")->required();
  solve->add_option("--method", method_name, "gs, search or brute");
  solve->callback([&] {
    action = [&] {
      const Loaded l = load();
      const Instance& inst = Binary(l);
      const int limit = BruteForceLimitFromEnv();
      const SuccessorMethod m = method_name.empty()
                                    ? DefaultMethod(inst)
                                    : ParseSuccessorMethod(method_name);
      const ContractSolution s = Solve(inst, m, limit);
      report.command = "solve";
      report.meta = {{"method", std::string(SuccessorMethodName(m))},
                     {"queries", std::to_string(s.queries)},
                     {"critical_values", std::to_string(s.profile->size())}};
      report.columns = {"alpha", "utility", "value", "incentivized"};
      report.rows.push_back(
          {s.alpha, s.utility, s.value, s.incentivized.ToString()});
    };
  });

  auto* crit = app.add_subcommand("critical-set", "all critical values");
  crit->add_option("file", file, "instance file")->required();
  crit->add_option("--method", method_name, "gs, search or brute");
  crit->callback([&] {
    action = [&] {
      const Loaded l = load();
      const Instance& inst = Binary(l);
      const int limit = BruteForceLimitFromEnv();
      const SuccessorMethod m = method_name.empty()
                                    ? DefaultMethod(inst)
                                    : ParseSuccessorMethod(method_name);
      const ContractSolution s = Solve(inst, m, limit);
      report.command = "critical-set";
      report.meta = {{"method", std::string(SuccessorMethodName(m))},
                     {"count", std::to_string(s.profile->size())},
                     {"queries", std::to_string(s.queries)}};
      report.columns = {"alpha", "value", "principal_utility", "demand"};
      for (const CriticalPoint& p : s.profile->points) {
        report.rows.push_back({p.alpha, p.value,
                               PrincipalUtility(p.alpha, p.value),
                               p.demand.ToString()});
      }
    };
  });

  auto* demand = app.add_subcommand("demand", "agent demand at a contract");
  demand->add_option("file", file, "instance file")->required();
  demand->add_option("--alpha", alpha_text, "contract")->required();
  demand->callback([&] {
    action = [&] {
      const Loaded l = load();
      const Instance& inst = Binary(l);
      const int limit = BruteForceLimitFromEnv();
      const Rational alpha = ParseAlpha(alpha_text, inst);
      report.command = "demand";
      report.meta = {{"alpha", alpha.ToString()}};
      report.columns = {"set", "f", "cost", "agent_utility", "favoured"};
      if (inst.f.GsCertified()) {
        const OrderedDemand d = GreedyDemand(inst, alpha);
        report.meta.emplace_back("greedy", d.set.ToString());
      }
      if (inst.n() <= limit) {
        const DemandProfile p = BruteForceDemand(inst, alpha, limit);
        report.meta.emplace_back("value", p.value.ToString());
        report.meta.emplace_back("agent_utility", p.agent_utility.ToString());
        report.meta.emplace_back("canonical",
                                 CanonicalBestResponse(p).ToString());
        for (ActionSet s : p.demand) {
          const bool fav = std::find(p.demand_star.begin(), p.demand_star.end(),
                                     s) != p.demand_star.end();
          report.rows.push_back({s.ToString(), inst.f.Value(s), Cost(inst, s),
                                 p.agent_utility, YesNo(fav)});
        }
      } else if (inst.f.GsCertified()) {
        const OrderedDemand d = GreedyDemand(inst, alpha);
        const Rational f = inst.f.Value(d.set);
        const Rational c = Cost(inst, d.set);
        report.meta.emplace_back("value", f.ToString());
        report.rows.push_back(
            {d.set.ToString(), f, c, alpha * f - c, YesNo(true)});
      } else {
        Fail(ErrorKind::kResource,
             "n = " + std::to_string(inst.n()) +
                 " exceeds the brute-force limit " + std::to_string(limit));
      }
    };
  });

  auto* succ = app.add_subcommand("succ", "next critical value after alpha");
  succ->add_option("file", file, "instance file")->required();
  succ->add_option("--alpha", alpha_text, "contract")->required();
  succ->add_option("--method", method_name, "gs, search or brute");
  succ->callback([&] {
    action = [&] {
      const Loaded l = load();
      const Instance& inst = Binary(l);
      const int limit = BruteForceLimitFromEnv();
      const Rational alpha = ParseAlpha(alpha_text, inst);
      const SuccessorMethod m = method_name.empty()
                                    ? DefaultMethod(inst)
                                    : ParseSuccessorMethod(method_name);
      ValueOracle oracle(inst, limit);
      std::unique_ptr<SubsetTable> storage;
      const SuccessorFn fn = MakeSuccessor(m, inst, oracle, storage, limit);
      // V(0) = 0 needs no query.
      const Rational value = alpha.IsZero() ? Rational(0) : oracle(alpha);
      const int64_t value_queries = oracle.queries();
      oracle.ResetCount();
      const std::optional<Rational> next = fn(alpha, value);
      report.command = "succ";
      report.meta = {{"method", std::string(SuccessorMethodName(m))},
                     {"queries", std::to_string(oracle.queries())},
                     {"value_queries", std::to_string(value_queries)}};
      if (m == SuccessorMethod::kSearch) {
        report.meta.emplace_back("query_bound",
                                 std::to_string(2 * inst.k->bits() + 1));
      }
      report.columns = {"alpha", "successor"};
      report.rows.push_back({alpha, OptionalCell(next)});
    };
  });

  auto* fptas = app.add_subcommand("fptas", "grid approximation");
  fptas->add_option("file", file, "instance file")->required();
  fptas->add_option("--epsilon", eps_text, "accuracy in (0, 1)")->required();
  fptas->callback([&] {
    action = [&] {
      const Loaded l = load();
      const Instance& inst = Binary(l);
      const Rational eps = ParseRational(eps_text);
      ValueOracle oracle(inst, BruteForceLimitFromEnv());
      const ContractSolution s = Fptas(inst, eps, oracle);
      report.command = "fptas";
      report.meta = {{"epsilon", eps.ToString()},
                     {"queries", std::to_string(s.queries)}};
      report.columns = {"alpha", "utility", "value", "incentivized"};
      report.rows.push_back(
          {s.alpha, s.utility, s.value, s.incentivized.ToString()});
    };
  });

  std::vector<std::string> eps_list;
  auto* verify = app.add_subcommand("verify", "cross-check all backends");
  verify->add_option("file", file, "instance file")->required();
  verify->add_option("--epsilon", eps_list, "FPTAS accuracies")
      ->default_str("1/2 1/4 1/8");
  verify->callback([&] {
    action = [&] {
      const Loaded l = load();
      const Instance& inst = Binary(l);
      std::vector<Rational> epsilons;
      if (eps_list.empty()) eps_list = {"1/2", "1/4", "1/8"};
      for (const std::string& e : eps_list) epsilons.push_back(ParseRational(e));
      const std::vector<Check> checks =
          VerifyChecks(inst, BruteForceLimitFromEnv(), epsilons);
      report.command = "verify";
      int failed = 0;
      report.columns = {"check", "status", "detail"};
      for (const Check& c : checks) {
        failed += c.status == "fail";
        report.rows.push_back({c.name, c.status, c.detail});
      }
      report.meta = {{"failed", std::to_string(failed)}};
    };
  });

  // gen
  auto* gen = app.add_subcommand("gen", "write a generated instance");
  gen->require_subcommand(1);
  gen->add_option("--output", output, "write to this file instead of stdout");
  std::string values_text;
  int64_t target = 0;
  std::string scaling = "joint";
  int gen_n = 0;
  bool normalize = false;
  std::string cls_name;
  int gen_k = 8;
  int gen_m = 3;
  uint64_t seed = 1;

  auto* gen_ss = gen->add_subcommand("subset-sum", "hardness reduction");
  gen_ss->add_option("--values", values_text, "comma-separated x_i")->required();
  gen_ss->add_option("--target", target, "Z")->required();
  gen_ss->add_option("--scaling", scaling, "joint or mixed")
      ->check(CLI::IsMember({"joint", "mixed"}));
  gen_ss->callback([&] {
    action = [&] {
      SubsetSumSpec spec{ParseIntList(values_text), target};
      const SubsetSumReduction r = GenSubsetSum(
          spec, scaling == "joint" ? SubsetSumScaling::kJoint
                                   : SubsetSumScaling::kMixed);
      Json raw_values = Json::array();
      for (const Rational& x : r.raw_values) raw_values.push_back(x.ToString());
      const Json meta = {{"kind", "subset-sum"},
                         {"values", spec.values},
                         {"target", spec.target},
                         {"scaling", scaling},
                         {"epsilon", r.epsilon.ToString()},
                         {"threshold", r.threshold.ToString()},
                         {"raw", {{"values", raw_values},
                                  {"budget", r.raw_budget.ToString()}}}};
      raw_output = DumpJson(InstanceToJson(r.instance, meta));
    };
  });

  auto* gen_tower = gen->add_subcommand("coverage-tower",
                                        "coverage instance with 2^n - 1 "
                                        "critical values");
  gen_tower->add_option("--n", gen_n, "actions, 1..5")->required();
  gen_tower->add_flag("--normalize", normalize, "scale f(A) to 1");
  gen_tower->callback([&] {
    action = [&] {
      const CoverageTower tower = GenExponentialCoverage(gen_n);
      Json levels = Json::array();
      for (size_t i = 1; i < tower.levels.size(); ++i) {
        levels.push_back({{"beta1", tower.levels[i].beta1.ToString()},
                          {"beta2", tower.levels[i].beta2.ToString()}});
      }
      const Json meta = {{"kind", "coverage-tower"},
                         {"n", gen_n},
                         {"normalized", normalize},
                         {"lifts", levels}};
      const Instance inst = normalize ? Normalize(tower.top()) : tower.top();
      raw_output = DumpJson(InstanceToJson(inst, meta));
    };
  });

  auto* gen_random = gen->add_subcommand("random", "seeded k-valid instance");
  gen_random->add_option("--class", cls_name, "function class")->required();
  gen_random->add_option("--n", gen_n, "actions")->required();
  gen_random->add_option("--k", gen_k, "bit precision");
  gen_random->add_option("--seed", seed, "seed");
  gen_random->callback([&] {
    action = [&] {
      const FunctionClass cls = ParseFunctionClass(cls_name);
      const Instance inst = SampleInstance(cls, gen_n, BitPrecision(gen_k), seed);
      const Json meta = {{"kind", "random"},
                         {"class", cls_name},
                         {"n", gen_n},
                         {"k", gen_k},
                         {"seed", seed}};
      raw_output = DumpJson(InstanceToJson(inst, meta));
    };
  });

  auto* gen_general = gen->add_subcommand("general",
                                          "seeded multi-outcome instance");
  gen_general->add_option("--n", gen_n, "actions")->required();
  gen_general->add_option("--m", gen_m, "outcomes, at least 2");
  gen_general->add_option("--seed", seed, "seed");
  gen_general->callback([&] {
    action = [&] {
      const GeneralInstance inst = SampleGeneralInstance(gen_n, gen_m, seed);
      const Json meta = {
          {"kind", "general"}, {"n", gen_n}, {"m", gen_m}, {"seed", seed}};
      raw_output = DumpJson(GeneralInstanceToJson(inst, meta));
    };
  });

  // robust
  auto* robust = app.add_subcommand("robust", "multi-outcome contracts");
  robust->require_subcommand(1);
  std::string contract_text;
  std::string slope_text;
  auto* lin = robust->add_subcommand("linearize",
                                     "linear contract dominating a table");
  lin->add_option("file", file, "instance file")->required();
  auto* contract_opt =
      lin->add_option("--contract", contract_text, "level:payment,...");
  auto* slope_opt = lin->add_option("--slope", slope_text, "linear contract");
  contract_opt->excludes(slope_opt);
  lin->callback([&] {
    action = [&] {
      const Loaded l = load();
      const GeneralInstance inst = General(l);
      if (contract_text.empty() && slope_text.empty()) {
        Fail(ErrorKind::kParse, "give --contract or --slope");
      }
      const GeneralContract t = contract_text.empty()
                                    ? GeneralContract::Linear(ParseRational(slope_text))
                                    : ParseContract(contract_text);
      t.CheckAgainst(inst);
      const Rational alpha = Linearize(t, inst);
      const Rational before = WorstCaseUtilityTwoPoint(t, inst);
      const Rational after =
          WorstCaseUtilityTwoPoint(GeneralContract::Linear(alpha), inst);
      report.command = "robust linearize";
      report.columns = {"alpha", "worst_case_original", "worst_case_linear",
                        "dominates"};
      report.rows.push_back({alpha, before, after, YesNo(after >= before)});
    };
  });

  auto* solve_lin = robust->add_subcommand("solve-linear",
                                           "optimal linear contract");
  solve_lin->add_option("file", file, "instance file")->required();
  solve_lin->callback([&] {
    action = [&] {
      const Loaded l = load();
      const GeneralInstance inst = General(l);
      const ContractSolution s =
          OptimalLinearGeneral(inst, BruteForceLimitFromEnv());
      report.command = "robust solve-linear";
      report.meta = {{"queries", std::to_string(s.queries)}};
      report.columns = {"alpha", "utility", "value"};
      report.rows.push_back({s.alpha, s.utility, s.value});
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (!action) return kExitInput;
    action();
  } catch (const Error& e) {
    err << "error (" << ErrorKindName(e.kind()) << "): " << e.what() << "\n";
    return ExitCodeFor(e.kind());
  }

  if (raw_output) {
    if (output.empty()) {
      out << *raw_output;
    } else {
      std::ofstream f(output, std::ios::binary);
      if (!f) {
        err << "error (parse): cannot write '" << output << "'\n";
        return kExitInput;
      }
      f << *raw_output;
    }
    return kExitOk;
  }

  report.digest = DigestText(args, input_bytes);
  if (g.timing) {
    const auto ms = std::chrono::duration_cast<std::chrono::microseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    report.meta.emplace_back("wall_ms", (Rational(ms) / 1000).ToDecimal(3));
  }
  Render(report, g.format == "csv" ? Format::kCsv : Format::kTable, g.decimal,
         out);
  if (report.command == "verify" && report.meta.front().second != "0") {
    return kExitInvariant;
  }
  return kExitOk;
}

}  // namespace combcontract::cli
