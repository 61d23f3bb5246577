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

#ifndef COMBCONTRACT_TOOLS_CLI_H_
#define COMBCONTRACT_TOOLS_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "combcontract/error.h"
#include "combcontract/rational.h"

namespace combcontract::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitResource = 2;
inline constexpr int kExitInvariant = 3;

// kResource -> 2, kInvariantViolation -> 3, everything else -> 1.
int ExitCodeFor(ErrorKind kind);

// 64-bit FNV-1a.
uint64_t Fnv1a(std::string_view bytes, uint64_t seed = 14695981039346656037ull);

// A cell keeps its exact value when it has one, so --decimal can add a
// rounded companion column.
struct Cell {
  std::string text;
  std::optional<Rational> value;

  Cell(std::string t) : text(std::move(t)) {}  // NOLINT
  Cell(const char* t) : text(t) {}             // NOLINT
  Cell(const Rational& r) : text(r.ToString()), value(r) {}  // NOLINT
};

struct Report {
  std::string command;
  std::string digest;
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { kTable, kCsv };

// Table: "key: value" lines, a blank line, then space-aligned columns. CSV:
// "# " metadata lines, then a header row and data rows.
void Render(const Report& report, Format format, std::optional<int> decimal,
            std::ostream& out);

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`; the return value is the process exit code.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace combcontract::cli

#endif  // COMBCONTRACT_TOOLS_CLI_H_
