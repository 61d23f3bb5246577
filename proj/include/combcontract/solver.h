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

#ifndef COMBCONTRACT_SOLVER_H_
#define COMBCONTRACT_SOLVER_H_

#include <memory>
#include <string_view>

#include "combcontract/contract.h"
#include "combcontract/demand.h"
#include "combcontract/instance.h"

namespace combcontract {

enum class SuccessorMethod { kGs, kSearch, kBruteForce };

std::string_view SuccessorMethodName(SuccessorMethod method);
// "gs", "search" or "brute"; kParse otherwise.
SuccessorMethod ParseSuccessorMethod(std::string_view name);

// gs for gross-substitutes instances, search when k is declared, brute force
// otherwise.
SuccessorMethod DefaultMethod(const Instance& inst);

// Binds a successor backend to `oracle`. The brute-force backend tabulates
// the instance into `table_storage`, which must outlive the returned function.
SuccessorFn MakeSuccessor(SuccessorMethod method, const Instance& inst,
                          ValueOracle& oracle,
                          std::unique_ptr<SubsetTable>& table_storage,
                          int brute_force_limit = kDefaultBruteForceLimit);

// Walks the critical values in increasing order with the chosen backend and
// keeps the best one for the principal.
ContractSolution Solve(const Instance& inst, SuccessorMethod method,
                       int brute_force_limit = kDefaultBruteForceLimit);

}  // namespace combcontract

#endif  // COMBCONTRACT_SOLVER_H_
