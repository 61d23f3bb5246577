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

#include "combcontract/success_function.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

#include "combcontract/error.h"

namespace combcontract {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

int CheckedSize(size_t size, const char* what) {
  if (size > static_cast<size_t>(kMaxActions)) {
    Fail(ErrorKind::kDomain, std::string(what) + " has " +
                                 std::to_string(size) + " actions; limit is " +
                                 std::to_string(kMaxActions));
  }
  return static_cast<int>(size);
}

int GroundSize(const SuccessFunction::Repr& repr) {
  return std::visit(
      Overloaded{
          [](const Additive& f) {
            return CheckedSize(f.values.size(), "additive function");
          },
          [](const UnitDemand& f) {
            return CheckedSize(f.values.size(), "unit-demand function");
          },
          [](const WeightedMatroidRank& f) {
            const int n = CheckedSize(f.weights.size(), "matroid rank");
            if (const auto* u = std::get_if<UniformMatroid>(&f.matroid)) {
              if (u->rank < 0) Fail(ErrorKind::kDomain, "negative rank");
            } else {
              const auto& p = std::get<PartitionMatroid>(f.matroid);
              if (p.block_of.size() != f.weights.size()) {
                Fail(ErrorKind::kDomain,
                     "partition matroid needs one block per action");
              }
              for (int b : p.block_of) {
                if (b < 0 || b >= static_cast<int>(p.capacity.size())) {
                  Fail(ErrorKind::kDomain, "partition block out of range");
                }
              }
              for (int cap : p.capacity) {
                if (cap < 0) Fail(ErrorKind::kDomain, "negative capacity");
              }
            }
            return n;
          },
          [](const BudgetAdditive& f) {
            return CheckedSize(f.values.size(), "budget-additive function");
          },
          [](const Coverage& f) {
            const int n = CheckedSize(f.covers.size(), "coverage function");
            for (const auto& cover : f.covers) {
              for (int j : cover) {
                if (j < 0 || j >= static_cast<int>(f.weights.size())) {
                  Fail(ErrorKind::kDomain, "cover element out of range");
                }
              }
            }
            return n;
          },
          [](const ExplicitTable& f) {
            const size_t size = f.values.size();
            if (size == 0 || !std::has_single_bit(size)) {
              Fail(ErrorKind::kDomain,
                   "table length must be a power of two, got " +
                       std::to_string(size));
            }
            return CheckedSize(
                static_cast<size_t>(std::countr_zero(size)), "explicit table");
          },
      },
      repr);
}

Rational SumOver(const std::vector<Rational>& values, ActionSet s) {
  Rational total;
  for (int a : s.Actions()) total += values[a];
  return total;
}

Rational TopWeights(std::vector<Rational> weights, int count) {
  std::sort(weights.begin(), weights.end(), std::greater<>());
  Rational total;
  for (int i = 0; i < count && i < static_cast<int>(weights.size()); ++i) {
    if (weights[i].Sign() <= 0) break;
    total += weights[i];
  }
  return total;
}

Rational MatroidValue(const WeightedMatroidRank& f, ActionSet s) {
  if (const auto* u = std::get_if<UniformMatroid>(&f.matroid)) {
    std::vector<Rational> chosen;
    for (int a : s.Actions()) chosen.push_back(f.weights[a]);
    return TopWeights(std::move(chosen), u->rank);
  }
  const auto& p = std::get<PartitionMatroid>(f.matroid);
  std::vector<std::vector<Rational>> per_block(p.capacity.size());
  for (int a : s.Actions()) per_block[p.block_of[a]].push_back(f.weights[a]);
  Rational total;
  for (size_t b = 0; b < per_block.size(); ++b) {
    total += TopWeights(std::move(per_block[b]), p.capacity[b]);
  }
  return total;
}

Rational CoverageValue(const Coverage& f, ActionSet s) {
  std::vector<char> covered(f.weights.size(), 0);
  Rational total;
  for (int a : s.Actions()) {
    for (int j : f.covers[a]) {
      if (!covered[j]) {
        covered[j] = 1;
        total += f.weights[j];
      }
    }
  }
  return total;
}

std::vector<Rational> ScaleAll(const std::vector<Rational>& values,
                               const Rational& factor) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (const Rational& v : values) out.push_back(v * factor);
  return out;
}

}  // namespace

std::string_view FunctionClassName(FunctionClass cls) {
  switch (cls) {
    case FunctionClass::kAdditive:
      return "additive";
    case FunctionClass::kUnitDemand:
      return "unit-demand";
    case FunctionClass::kMatroidRank:
      return "matroid-rank";
    case FunctionClass::kBudgetAdditive:
      return "budget-additive";
    case FunctionClass::kCoverage:
      return "coverage";
    case FunctionClass::kExplicitTable:
      return "explicit-table";
  }
  return "unknown";
}

FunctionClass ParseFunctionClass(std::string_view name) {
  for (FunctionClass cls :
       {FunctionClass::kAdditive, FunctionClass::kUnitDemand,
        FunctionClass::kMatroidRank, FunctionClass::kBudgetAdditive,
        FunctionClass::kCoverage, FunctionClass::kExplicitTable}) {
    if (FunctionClassName(cls) == name) return cls;
  }
  Fail(ErrorKind::kParse, "unknown function class '" + std::string(name) + "'");
}

SuccessFunction::SuccessFunction(Repr repr)
    : repr_(std::move(repr)), n_(GroundSize(repr_)) {}

FunctionClass SuccessFunction::cls() const {
  return static_cast<FunctionClass>(repr_.index());
}

bool SuccessFunction::GsCertified() const {
  const FunctionClass c = cls();
  return c == FunctionClass::kAdditive || c == FunctionClass::kUnitDemand ||
         c == FunctionClass::kMatroidRank;
}

Rational SuccessFunction::Value(ActionSet s) const {
  if (!s.WithinGround(n_)) {
    Fail(ErrorKind::kDomain, "set " + s.ToString() + " outside ground set of " +
                                 std::to_string(n_) + " actions");
  }
  return std::visit(
      Overloaded{
          [&](const Additive& f) { return SumOver(f.values, s); },
          [&](const UnitDemand& f) {
            Rational best;
            for (int a : s.Actions()) best = Max(best, f.values[a]);
            return best;
          },
          [&](const WeightedMatroidRank& f) { return MatroidValue(f, s); },
          [&](const BudgetAdditive& f) {
            return Min(f.budget, SumOver(f.values, s));
          },
          [&](const Coverage& f) { return CoverageValue(f, s); },
          [&](const ExplicitTable& f) { return f.values[s.mask()]; },
      },
      repr_);
}

Rational SuccessFunction::Marginal(int a, ActionSet s) const {
  if (a < 0 || a >= n_) {
    Fail(ErrorKind::kDomain, "action " + std::to_string(a + 1) +
                                 " outside ground set");
  }
  if (s.Contains(a)) {
    Fail(ErrorKind::kDomain, "marginal of action " + std::to_string(a + 1) +
                                 " already in " + s.ToString());
  }
  return Value(s.With(a)) - Value(s);
}

ExplicitTable SuccessFunction::ToTable() const {
  if (const auto* table = std::get_if<ExplicitTable>(&repr_)) return *table;
  ExplicitTable table;
  const uint32_t count = uint32_t{1} << n_;
  table.values.reserve(count);
  for (uint32_t mask = 0; mask < count; ++mask) {
    table.values.push_back(Value(ActionSet(mask)));
  }
  return table;
}

SuccessFunction SuccessFunction::Scaled(const Rational& factor) const {
  if (factor.Sign() <= 0) {
    Fail(ErrorKind::kDomain, "scale factor must be positive");
  }
  return SuccessFunction(std::visit(
      Overloaded{
          [&](const Additive& f) -> Repr {
            return Additive{ScaleAll(f.values, factor)};
          },
          [&](const UnitDemand& f) -> Repr {
            return UnitDemand{ScaleAll(f.values, factor)};
          },
          [&](const WeightedMatroidRank& f) -> Repr {
            return WeightedMatroidRank{f.matroid, ScaleAll(f.weights, factor)};
          },
          [&](const BudgetAdditive& f) -> Repr {
            return BudgetAdditive{ScaleAll(f.values, factor),
                                  f.budget * factor};
          },
          [&](const Coverage& f) -> Repr {
            return Coverage{ScaleAll(f.weights, factor), f.covers};
          },
          [&](const ExplicitTable& f) -> Repr {
            return ExplicitTable{ScaleAll(f.values, factor)};
          },
      },
      repr_));
}

}  // namespace combcontract
