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

#include "combcontract/instance.h"

#include <string>

#include "combcontract/error.h"

namespace combcontract {
namespace {

std::string Label(int a) { return std::to_string(a + 1); }

class Checker {
 public:
  Checker(const Instance& inst, ValidationReport& report)
      : inst_(inst), report_(report) {}

  void NonNegative(const std::vector<Rational>& values, const char* what) {
    for (size_t i = 0; i < values.size(); ++i) {
      if (values[i].Sign() < 0) {
        Add(std::string("negative ") + what + " at index " +
            std::to_string(i + 1) + ": " + values[i].ToString());
      }
    }
  }

  void KValid(const std::vector<Rational>& values, const char* what) {
    if (!inst_.k.has_value()) return;
    for (size_t i = 0; i < values.size(); ++i) {
      if (!IsKValid(values[i], *inst_.k)) {
        Add(std::string(what) + " " + std::to_string(i + 1) + " = " +
            values[i].ToString() + " is not a multiple of 2^-" +
            std::to_string(inst_.k->bits()));
      }
    }
  }

  void KValid(const Rational& value, const char* what) {
    if (inst_.k.has_value() && !IsKValid(value, *inst_.k)) {
      Add(std::string(what) + " = " + value.ToString() +
          " is not a multiple of 2^-" + std::to_string(inst_.k->bits()));
    }
  }

  // Walks every (S, a) pair; only for small ground sets.
  void Exhaustive() {
    const SuccessFunction& f = inst_.f;
    const int n = inst_.n();
    const ExplicitTable table = f.ToTable();
    if (table.values[0] != 0) {
      Add("f(∅) ≠ 0: f(∅) = " + table.values[0].ToString());
    }
    int monotone_reports = 0;
    for (uint32_t mask = 0; mask < table.values.size(); ++mask) {
      const Rational& v = table.values[mask];
      if (v.Sign() < 0 || (inst_.normalized && v > 1)) {
        Add("f" + ActionSet(mask).ToString() + " = " + v.ToString() +
            " outside [0, 1]");
      }
      for (int a = 0; a < n && monotone_reports < 8; ++a) {
        if (ActionSet(mask).Contains(a)) continue;
        const uint32_t bigger = mask | (uint32_t{1} << a);
        if (table.values[bigger] < v) {
          Add("non-monotone: f" + ActionSet(bigger).ToString() + " < f" +
              ActionSet(mask).ToString());
          ++monotone_reports;
        }
      }
    }
  }

  void TopBounded() {
    if (!inst_.normalized) return;
    const Rational top = inst_.f.Value(ActionSet::Full(inst_.n()));
    if (top > 1) Add("f(A) = " + top.ToString() + " exceeds 1");
  }

  void Add(std::string message) { report_.violations.push_back(message); }

 private:
  const Instance& inst_;
  ValidationReport& report_;
};

}  // namespace

Instance::Instance(SuccessFunction f_in, std::vector<Rational> costs_in,
                   std::optional<BitPrecision> k_in, bool normalized_in)
    : f(std::move(f_in)),
      costs(std::move(costs_in)),
      k(k_in),
      normalized(normalized_in) {
  if (static_cast<int>(costs.size()) != f.n()) {
    Fail(ErrorKind::kDomain, "instance has " + std::to_string(f.n()) +
                                 " actions but " +
                                 std::to_string(costs.size()) + " costs");
  }
}

Rational Cost(const Instance& inst, ActionSet s) {
  Rational total;
  for (int a : s.Actions()) {
    if (a >= inst.n()) Fail(ErrorKind::kDomain, "action outside ground set");
    total += inst.costs[a];
  }
  return total;
}

std::string ValidationReport::Summary() const {
  if (ok()) return "valid";
  std::string out;
  for (const std::string& v : violations) {
    if (!out.empty()) out += "; ";
    out += v;
  }
  return out;
}

ValidationReport Validate(const Instance& inst, int exhaustive_limit) {
  ValidationReport report;
  Checker check(inst, report);

  for (int a = 0; a < inst.n(); ++a) {
    if (inst.costs[a].Sign() <= 0) {
      check.Add("non-positive cost c(" + Label(a) +
                ") = " + inst.costs[a].ToString());
    }
  }
  check.KValid(inst.costs, "cost");

  const SuccessFunction::Repr& repr = inst.f.repr();
  bool exhaustive = false;
  if (const auto* f = std::get_if<Additive>(&repr)) {
    check.NonNegative(f->values, "value");
    check.KValid(f->values, "value");
  } else if (const auto* f = std::get_if<UnitDemand>(&repr)) {
    check.NonNegative(f->values, "value");
    check.KValid(f->values, "value");
  } else if (const auto* f = std::get_if<WeightedMatroidRank>(&repr)) {
    check.NonNegative(f->weights, "weight");
    check.KValid(f->weights, "weight");
  } else if (const auto* f = std::get_if<BudgetAdditive>(&repr)) {
    check.NonNegative(f->values, "value");
    check.KValid(f->values, "value");
    if (f->budget.Sign() < 0) check.Add("negative budget");
    check.KValid(f->budget, "budget");
  } else if (const auto* f = std::get_if<Coverage>(&repr)) {
    check.NonNegative(f->weights, "element weight");
    check.KValid(f->weights, "element weight");
    exhaustive = inst.n() <= exhaustive_limit;
  } else if (const auto* f = std::get_if<ExplicitTable>(&repr)) {
    check.KValid(f->values, "table entry");
    exhaustive = true;
  }

  if (exhaustive) {
    check.Exhaustive();
  } else {
    check.TopBounded();
  }
  return report;
}

void ValidateOrThrow(const Instance& inst) {
  const ValidationReport report = Validate(inst);
  if (!report.ok()) Fail(ErrorKind::kValidation, report.Summary());
}

}  // namespace combcontract
