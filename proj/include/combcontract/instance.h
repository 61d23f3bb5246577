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

#ifndef COMBCONTRACT_INSTANCE_H_
#define COMBCONTRACT_INSTANCE_H_

#include <optional>
#include <string>
#include <vector>

#include "combcontract/action_set.h"
#include "combcontract/rational.h"
#include "combcontract/success_function.h"

namespace combcontract {

// A binary-outcome contracting instance: actions with additive positive
// costs and a success-probability function over action subsets.
//
// `normalized` is false only for generator outputs that deliberately live
// outside [0, 1] (the exponential coverage tower before scaling).
struct Instance {
  Instance(SuccessFunction f, std::vector<Rational> costs,
           std::optional<BitPrecision> k = std::nullopt,
           bool normalized = true);

  int n() const { return f.n(); }

  SuccessFunction f;
  std::vector<Rational> costs;
  std::optional<BitPrecision> k;
  bool normalized = true;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// c(S) = sum of c(a) over S.
Rational Cost(const Instance& inst, ActionSet s);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string Summary() const;
};

// Checks f(empty) = 0, monotonicity and the [0, 1] range (exhaustively for
// tables and coverage functions up to `exhaustive_limit` actions, from the
// parameters otherwise), strictly positive costs, and k-validity of every
// parameter when k is declared. Violations are collected, never thrown.
ValidationReport Validate(const Instance& inst, int exhaustive_limit = 16);

// Throws kValidation carrying the report summary when Validate fails.
void ValidateOrThrow(const Instance& inst);

}  // namespace combcontract

#endif  // COMBCONTRACT_INSTANCE_H_
