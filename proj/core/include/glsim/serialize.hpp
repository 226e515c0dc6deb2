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
#include <string>

#include "glsim/common.hpp"
#include "glsim/estimate.hpp"
#include "glsim/lattice.hpp"
#include "glsim/polyapprox.hpp"
#include "json.hpp"

namespace glsim {

using Json = nlohmann::ordered_json;

/// Complex numbers are [re, im] pairs; plain numbers are read as real.
Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

/// {"basis": "chebyshev", "interval": [lo, hi], "coeffs": [[re, im], ...]}
/// or {"basis": "monomial", "coeffs": ...}. "alpha" may replace "interval".
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json report_to_json(const EstimateReport& r);

/// {"kind": "chain", "n_sites": n, "boundary": "open"},
/// {"kind": "grid", "sides": [..], "boundary": ..} or
/// {"kind": "general", "n_sites": n, "bonds": [[i, j], ...]}.
SiteGraph graph_from_json(const Json& j);
Json graph_to_json(const SiteGraph& g);

/// CSV with header "index,re,im". Reading accepts rows in any order and
/// leaves unlisted entries zero.
void write_vector_csv(std::ostream& out, const DenseVector& v);
DenseVector read_vector_csv(std::istream& in, Site dimension = -1);

/// Throws PreconditionError naming the first key of j outside allowed.
void require_known_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& where);

}  // namespace glsim
