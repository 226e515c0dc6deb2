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

#include <optional>

#include "glsim/access.hpp"
#include "glsim/lattice.hpp"
#include "glsim/oscillators.hpp"
#include "glsim/serialize.hpp"

namespace glsim::cli {

LocalMatrixOracle build_generator(const Json& spec);

/// Sampling-and-query access to a configured vector of the given dimension.
/// Gaussian fields need `graph` for coordinates; they are normalized.
VectorOracle build_vector(const Json& spec, Site dimension, const SiteGraph* graph);

OscillatorSystem build_oscillator(const Json& spec);
OscillatorState build_state(const Json& spec, Site sites);

std::vector<Site> mass_set(const Json& spec, const OscillatorSystem& sys);
std::vector<std::pair<Site, Site>> spring_set(const Json& spec, const OscillatorSystem& sys);

/// Times from "times" when present, else the single "time".
std::vector<double> scenario_times(const Json& config);

/// The dense cap applies: nullopt when `dimension` exceeds it or dense
/// checks are disabled.
bool dense_allowed(const Json& config, Site dimension);

std::string read_text_file(const std::string& path);

}  // namespace glsim::cli
