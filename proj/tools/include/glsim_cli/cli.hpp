// Copyright 2026 The glsim Authors
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


#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "glsim/serialize.hpp"

namespace glsim::cli {

/// Malformed config: bad JSON, unknown keys, wrong types, missing fields.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int { kExitOk = 0, kExitSchema = 1, kExitPrecondition = 2, kExitFailure = 3 };

inline const std::vector<std::string> kScenarios = {"estimate", "sample", "oscillator", "energy",
                                                    "pde",      "embed",  "verify"};

/// Checks a raw scenario config against the schema and writes every default
/// into it, so the result describes the whole run. Throws ConfigError.
Json resolve_config(Json raw);

/// A CSV table. Cells are JSON scalars so integers print without a decimal
/// point and doubles round-trip.
struct Series {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
};

void write_series_csv(std::ostream& out, const Series& s);

struct RunOptions {
  /// Worker cap; 0 means one per hardware thread. Outputs do not depend on it.
  unsigned threads = 0;
};

struct RunResult {
  int exit_code = kExitOk;
  Json report;
  std::vector<Series> series;
};

/// Resolves and runs one scenario. Never throws: errors are mapped to exit
/// codes and described under "error" in the report.
RunResult run_scenario(const Json& config, const RunOptions& options = {});

/// Command-line front end. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace glsim::cli
