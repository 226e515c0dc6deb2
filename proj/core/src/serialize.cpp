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


#include "glsim/serialize.hpp"

#include <algorithm>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>

namespace glsim {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) {
    return {j.get<double>(), 0.0};
  }
  require(j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(),
          "complex values are numbers or [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json polynomial_to_json(const Polynomial& p) {
  Json j;
  j["basis"] = p.basis() == Basis::chebyshev ? "chebyshev" : "monomial";
  if (p.basis() == Basis::chebyshev) {
    j["interval"] = Json::array({p.lower(), p.upper()});
  }
  Json coeffs = Json::array();
  for (const Complex& c : p.coefficients()) {
    coeffs.push_back(complex_to_json(c));
  }
  j["coeffs"] = std::move(coeffs);
  if (p.sup_bound()) {
    j["sup_bound"] = *p.sup_bound();
  }
  return j;
}

Polynomial polynomial_from_json(const Json& j) {
  require(j.is_object(), "a polynomial must be a JSON object");
  require_known_keys(j, {"basis", "alpha", "interval", "coeffs", "sup_bound"}, "polynomial");
  require(j.contains("coeffs") && j["coeffs"].is_array(), "polynomial needs a coeffs array");
  std::vector<Complex> coeffs;
  for (const Json& c : j["coeffs"]) {
    coeffs.push_back(complex_from_json(c));
  }
  const std::string basis = j.value("basis", "chebyshev");
  Polynomial p = Polynomial::monomial({});
  if (basis == "monomial") {
    require(!j.contains("alpha") && !j.contains("interval"), "monomial polynomials take no interval");
    p = Polynomial::monomial(std::move(coeffs));
  } else if (basis == "chebyshev") {
    if (j.contains("interval")) {
      const Json& iv = j["interval"];
      require(iv.is_array() && iv.size() == 2, "interval must be [lo, hi]");
      p = Polynomial::chebyshev(std::move(coeffs), iv[0].get<double>(), iv[1].get<double>());
    } else {
      p = Polynomial::chebyshev(std::move(coeffs), j.value("alpha", 1.0));
    }
  } else {
    throw PreconditionError("unknown polynomial basis '" + basis + "'");
  }
  if (j.contains("sup_bound")) {
    p = p.with_sup_bound(j["sup_bound"].get<double>());
  }
  return p;
}

Json report_to_json(const EstimateReport& r) {
  Json j;
  j["value"] = complex_to_json(r.value);
  j["eps"] = r.eps;
  j["delta"] = r.delta;
  j["samples_used"] = r.samples_used;
  j["repetitions"] = r.repetitions;
  j["batch_size"] = r.batch_size;
  j["seed"] = r.seed;
  return j;
}

namespace {

Boundary boundary_from(const Json& j) {
  const std::string b = j.value("boundary", "open");
  if (b == "open") {
    return Boundary::open;
  }
  if (b == "periodic") {
    return Boundary::periodic;
  }
  throw PreconditionError("boundary must be 'open' or 'periodic'");
}

}  // namespace

SiteGraph graph_from_json(const Json& j) {
  require(j.is_object() && j.contains("kind"), "graph needs a kind");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "chain") {
    require_known_keys(j, {"kind", "n_sites", "boundary"}, "graph");
    require(j.contains("n_sites"), "chain graph needs n_sites");
    return SiteGraph::chain(j["n_sites"].get<Site>(), boundary_from(j));
  }
  if (kind == "grid") {
    require_known_keys(j, {"kind", "sides", "dims", "boundary"}, "graph");
    require(j.contains("sides"), "grid graph needs sides");
    auto sides = j["sides"].get<std::vector<Site>>();
    if (j.contains("dims")) {
      require(j["dims"].get<std::size_t>() == sides.size(), "dims does not match the number of sides");
    }
    return SiteGraph::grid(std::move(sides), boundary_from(j));
  }
  if (kind == "general") {
    require_known_keys(j, {"kind", "n_sites", "bonds"}, "graph");
    require(j.contains("n_sites"), "general graph needs n_sites");
    std::vector<std::pair<Site, Site>> bonds;
    for (const Json& b : j.value("bonds", Json::array())) {
      require(b.is_array() && b.size() == 2, "bonds are [i, j] pairs");
      bonds.emplace_back(b[0].get<Site>(), b[1].get<Site>());
    }
    return SiteGraph::general(j["n_sites"].get<Site>(), bonds);
  }
  throw PreconditionError("unknown graph kind '" + kind + "'");
}

Json graph_to_json(const SiteGraph& g) {
  Json j;
  const char* boundary = g.boundary() == Boundary::periodic ? "periodic" : "open";
  switch (g.kind()) {
    case SiteGraph::Kind::chain:
      j["kind"] = "chain";
      j["n_sites"] = g.sites();
      j["boundary"] = boundary;
      break;
    case SiteGraph::Kind::grid:
      j["kind"] = "grid";
      j["sides"] = g.sides();
      j["boundary"] = boundary;
      break;
    case SiteGraph::Kind::general:
      j["kind"] = "general";
      j["n_sites"] = g.sites();
      break;
    case SiteGraph::Kind::embedded:
      j["kind"] = "embedded";
      j["n_sites"] = g.sites();
      break;
  }
  return j;
}

void write_vector_csv(std::ostream& out, const DenseVector& v) {
  const auto precision = out.precision(17);
  out << "index,re,im\n";
  for (std::size_t i = 0; i < v.size(); ++i) {
    out << i << ',' << v[i].real() << ',' << v[i].imag() << '\n';
  }
  out.precision(precision);
}

DenseVector read_vector_csv(std::istream& in, Site dimension) {
  std::vector<std::pair<Site, Complex>> rows;
  std::string line;
  std::size_t number = 0;
  Site largest = -1;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty() || line[0] == '#' || (number == 1 && line.rfind("index", 0) == 0)) {
      continue;
    }
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    Site i = 0;
    double re = 0.0;
    double im = 0.0;
    if (!(fields >> i >> re)) {
      throw PreconditionError("vector csv line " + std::to_string(number) + " is malformed");
    }
    fields >> im;
    require(i >= 0, "vector csv indices must be nonnegative");
    largest = std::max(largest, i);
    rows.emplace_back(i, Complex{re, im});
  }
  const Site n = dimension >= 0 ? dimension : largest + 1;
  require(largest < n, "vector csv index exceeds the dimension");
  DenseVector v(static_cast<std::size_t>(n));
  for (const auto& [i, z] : rows) {
    v[static_cast<std::size_t>(i)] = z;
  }
  return v;
}

void require_known_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) {
    throw PreconditionError(where + " must be a JSON object");
  }
  for (const auto& item : j.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* key) { return item.key() == key; });
    if (!known) {
      throw PreconditionError("unknown key '" + item.key() + "' in " + where);
    }
  }
}

}  // namespace glsim
