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

#include <cstdint>
#include <vector>

#include "glsim_cli/cli.hpp"

namespace glsim::cli {

/// Dense-equivalence self checks. Sets `exit_code` to kExitFailure when any
/// check fails.
void run_verify(const Json& config, std::uint64_t seed, unsigned threads, Json& outputs, int& exit_code);

}  // namespace glsim::cli
