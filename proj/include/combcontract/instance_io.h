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

// Versioned JSON instance files. Rationals are strings ("3/8", "2", or a
// decimal when k is declared and the decimal is k-valid); actions and
// coverage elements are numbered from 1. Unknown fields are errors.

#ifndef COMBCONTRACT_INSTANCE_IO_H_
#define COMBCONTRACT_INSTANCE_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include "combcontract/instance.h"
#include "combcontract/robust.h"
#include "json.hpp"

namespace combcontract {

inline constexpr int kInstanceFormatVersion = 1;

using Json = nlohmann::ordered_json;

// Exactly one of `binary` and `general` is set. `generator` is the
// free-form provenance object, null when absent.
struct InstanceDocument {
  std::optional<Instance> binary;
  std::optional<GeneralInstance> general;
  Json generator;
};

Json SuccessFunctionToJson(const SuccessFunction& f);
SuccessFunction SuccessFunctionFromJson(FunctionClass cls, const Json& params,
                                        int n,
                                        std::optional<BitPrecision> k);

Json InstanceToJson(const Instance& inst, const Json& generator = nullptr);
Json GeneralInstanceToJson(const GeneralInstance& inst,
                           const Json& generator = nullptr);

// Structural errors throw kParse. With `validate`, the parsed instance must
// also pass Validate / ValidateGeneral or kValidation is thrown.
InstanceDocument InstanceFromJson(const Json& doc, bool validate = true);
InstanceDocument ParseInstance(std::string_view text, bool validate = true);
// kParse when the file cannot be read.
InstanceDocument ReadInstanceFile(const std::string& path,
                                  bool validate = true);

// Two-space indented JSON with a trailing newline.
std::string DumpJson(const Json& doc);

}  // namespace combcontract

#endif  // COMBCONTRACT_INSTANCE_IO_H_
