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

#include "combcontract/solver.h"

#include <string>

#include "combcontract/approx.h"
#include "combcontract/error.h"

namespace combcontract {

std::string_view SuccessorMethodName(SuccessorMethod method) {
  switch (method) {
    case SuccessorMethod::kGs:
      return "gs";
    case SuccessorMethod::kSearch:
      return "search";
    case SuccessorMethod::kBruteForce:
      return "brute";
  }
  return "unknown";
}

SuccessorMethod ParseSuccessorMethod(std::string_view name) {
  for (SuccessorMethod m : {SuccessorMethod::kGs, SuccessorMethod::kSearch,
                            SuccessorMethod::kBruteForce}) {
    if (SuccessorMethodName(m) == name) return m;
  }
  Fail(ErrorKind::kParse, "unknown successor method '" + std::string(name) +
                              "' (expected gs, search or brute)");
}

SuccessorMethod DefaultMethod(const Instance& inst) {
  if (inst.f.GsCertified()) return SuccessorMethod::kGs;
  if (inst.k.has_value()) return SuccessorMethod::kSearch;
  return SuccessorMethod::kBruteForce;
}

SuccessorFn MakeSuccessor(SuccessorMethod method, const Instance& inst,
                          ValueOracle& oracle,
                          std::unique_ptr<SubsetTable>& table_storage,
                          int brute_force_limit) {
  switch (method) {
    case SuccessorMethod::kGs:
      return [&inst, &oracle](const Rational& alpha, const Rational& value) {
        return SuccessorGs(inst, alpha, oracle, value);
      };
    case SuccessorMethod::kSearch:
      return [&inst, &oracle](const Rational& alpha, const Rational& value) {
        return SuccessorSearch(inst, alpha, oracle, value);
      };
    case SuccessorMethod::kBruteForce:
      table_storage = std::make_unique<SubsetTable>(inst, brute_force_limit);
      return [table = table_storage.get()](const Rational& alpha,
                                           const Rational&) {
        return SuccessorBruteForce(*table, alpha);
      };
  }
  Fail(ErrorKind::kDomain, "unknown successor method");
}

ContractSolution Solve(const Instance& inst, SuccessorMethod method,
                       int brute_force_limit) {
  ValueOracle oracle(inst, brute_force_limit);
  std::unique_ptr<SubsetTable> table;
  const SuccessorFn succ =
      MakeSuccessor(method, inst, oracle, table, brute_force_limit);
  return OptimalContract(inst, succ, oracle);
}

}  // namespace combcontract
