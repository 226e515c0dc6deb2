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


#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "glsim/random.hpp"
#include "glsim_cli/cli.hpp"
#include "schema.hpp"

namespace glsim::cli {

Schema::Schema(Json& j, std::string where) : j_(j), where_(std::move(where)) {
  if (j_.is_null()) {
    j_ = Json::object();
  }
  if (!j_.is_object()) {
    throw ConfigError(where_ + " must be a JSON object");
  }
}

Json& Schema::slot(const char* key, const Json& fallback) {
  seen_.emplace_back(key);
  if (!j_.contains(key)) {
    if (fallback.is_null()) {
      fail(key, "is required");
    }
    j_[key] = fallback;
  }
  return j_[key];
}

Json* Schema::optional(const char* key) {
  seen_.emplace_back(key);
  return j_.contains(key) ? &j_[key] : nullptr;
}

double Schema::number(const char* key, std::optional<double> fallback) {
  const Json& v = slot(key, fallback ? Json(*fallback) : Json());
  if (!v.is_number()) {
    fail(key, "must be a number");
  }
  return v.get<double>();
}

std::int64_t Schema::integer(const char* key, std::optional<std::int64_t> fallback) {
  const Json& v = slot(key, fallback ? Json(*fallback) : Json());
  if (!v.is_number_integer()) {
    fail(key, "must be an integer");
  }
  return v.get<std::int64_t>();
}

std::uint64_t Schema::unsigned_integer(const char* key, std::uint64_t fallback) {
  const Json& v = slot(key, Json(fallback));
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    fail(key, "must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

bool Schema::boolean(const char* key, bool fallback) {
  const Json& v = slot(key, Json(fallback));
  if (!v.is_boolean()) {
    fail(key, "must be true or false");
  }
  return v.get<bool>();
}

std::string Schema::choice(const char* key, const std::vector<std::string>& options,
                           std::optional<std::string> fallback) {
  const Json& v = slot(key, fallback ? Json(*fallback) : Json());
  if (!v.is_string() || std::find(options.begin(), options.end(), v.get<std::string>()) == options.end()) {
    std::string list;
    for (const std::string& o : options) {
      list += (list.empty() ? "" : ", ") + o;
    }
    fail(key, "must be one of: " + list);
  }
  return v.get<std::string>();
}

std::string Schema::string(const char* key) {
  const Json& v = slot(key, Json());
  if (!v.is_string()) {
    fail(key, "must be a string");
  }
  return v.get<std::string>();
}

void Schema::number_array(const char* key, const Json& fallback) {
  const Json& v = slot(key, fallback);
  if (!v.is_array() || !std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_number(); })) {
    fail(key, "must be an array of numbers");
  }
}

void Schema::finish() const {
  for (const auto& item : j_.items()) {
    if (std::find(seen_.begin(), seen_.end(), item.key()) == seen_.end()) {
      throw ConfigError("unknown key '" + item.key() + "' in " + where_);
    }
  }
}

void Schema::fail(const std::string& key, const std::string& what) const {
  throw ConfigError(where_ + "." + key + " " + what);
}

std::string Schema::child(const char* key) const { return where_ + "." + key; }

namespace {

bool is_complex(const Json& x) {
  return x.is_number() || (x.is_array() && x.size() == 2 && x[0].is_number() && x[1].is_number());
}

void check_graph(Json& j, const std::string& where, const Json& fallback) {
  if (j.is_null()) {
    j = fallback;
  }
  Schema s(j, where);
  const std::string kind = s.choice("kind", {"chain", "grid", "general"}, std::nullopt);
  if (kind == "chain") {
    s.integer("n_sites", std::nullopt);
    s.choice("boundary", {"open", "periodic"}, "open");
  } else if (kind == "grid") {
    const Json& sides = s.slot("sides", Json());
    if (!sides.is_array() || sides.empty() ||
        !std::all_of(sides.begin(), sides.end(), [](const Json& x) { return x.is_number_integer(); })) {
      s.fail("sides", "must be a nonempty array of integers");
    }
    if (s.optional("dims") != nullptr) {
      s.integer("dims", std::nullopt);
    }
    s.choice("boundary", {"open", "periodic"}, "open");
  } else {
    s.integer("n_sites", std::nullopt);
    const Json& bonds = s.slot("bonds", Json::array());
    const bool ok = bonds.is_array() && std::all_of(bonds.begin(), bonds.end(), [](const Json& b) {
                      return b.is_array() && b.size() == 2 && b[0].is_number_integer() && b[1].is_number_integer();
                    });
    if (!ok) {
      s.fail("bonds", "must be an array of [i, j] integer pairs");
    }
  }
  s.finish();
}

Json default_chain(std::int64_t n, const char* boundary) {
  return Json{{"kind", "chain"}, {"n_sites", n}, {"boundary", boundary}};
}

}  // namespace

void check_vector(Json& j, const std::string& where, const Json& fallback) {
  if (j.is_null()) {
    j = fallback;
  }
  Schema s(j, where);
  static const std::vector<const char*> kinds = {"basis", "uniform", "values", "csv", "gaussian"};
  int present = 0;
  for (const char* k : kinds) {
    present += j.contains(k) ? 1 : 0;
  }
  if (present != 1) {
    throw ConfigError(where + " needs exactly one of basis, uniform, values, csv, gaussian");
  }
  if (j.contains("basis")) {
    s.integer("basis", std::nullopt);
  } else if (j.contains("uniform")) {
    s.boolean("uniform", true);
  } else if (j.contains("values")) {
    const Json& v = s.slot("values", Json());
    if (!v.is_array() || !std::all_of(v.begin(), v.end(), is_complex)) {
      s.fail("values", "must be an array of numbers or [re, im] pairs");
    }
  } else if (j.contains("csv")) {
    s.string("csv");
  } else {
    Json& g = s.slot("gaussian", Json());
    Schema gs(g, s.child("gaussian"));
    const Json& c = gs.slot("center", Json());
    if (!c.is_number() && !(c.is_array() && std::all_of(c.begin(), c.end(), [](const Json& x) { return x.is_number(); }))) {
      gs.fail("center", "must be a number or an array of numbers");
    }
    gs.number("width", std::nullopt);
    gs.number("momentum", 0.0);
    gs.finish();
  }
  s.finish();
}

namespace {

void check_generator(Json& j, const std::string& where, const Json& fallback) {
  if (j.is_null()) {
    j = fallback;
  }
  Schema s(j, where);
  const std::string model = s.choice("model", {"hopping", "laplacian", "entries"}, "hopping");
  check_graph(s.slot("graph", default_chain(64, "periodic")), s.child("graph"), Json());
  s.boolean("anti_hermitian", false);
  if (model == "entries") {
    s.number("r0", 1.0);
    s.choice("symmetry", {"general", "hermitian", "anti_hermitian"}, "general");
    const Json& e = s.slot("entries", Json());
    const bool ok = e.is_array() && std::all_of(e.begin(), e.end(), [](const Json& x) {
                      return x.is_array() && (x.size() == 3 || x.size() == 4) && x[0].is_number_integer() &&
                             x[1].is_number_integer() && x[2].is_number() && (x.size() == 3 || x[3].is_number());
                    });
    if (!ok) {
      s.fail("entries", "must be an array of [i, j, re] or [i, j, re, im]");
    }
    if (s.optional("norm_bound") != nullptr) {
      s.number("norm_bound", std::nullopt);
    }
  } else {
    s.number("scale", 1.0);
    s.number("onsite", 0.0);
  }
  s.finish();
}

void check_times(Schema& s, double fallback) {
  s.number("time", fallback);
  if (s.optional("times") != nullptr) {
    s.number_array("times", Json());
  }
}

void check_oscillator(Json& j, const std::string& where) {
  Schema s(j, where);
  check_graph(s.slot("graph", default_chain(16, "open")), s.child("graph"), Json());
  const Json& m = s.slot("masses", 1.0);
  if (!m.is_number() && !(m.is_array() && std::all_of(m.begin(), m.end(), [](const Json& x) { return x.is_number(); }))) {
    s.fail("masses", "must be a number or an array of numbers");
  }
  Json& springs = s.slot("springs", Json{{"nearest", 1.0}, {"wall", 1.0}});
  if (springs.is_object()) {
    Schema ss(springs, s.child("springs"));
    ss.number("nearest", 1.0);
    ss.number("wall", 0.0);
    ss.finish();
  } else {
    const bool ok = springs.is_array() && std::all_of(springs.begin(), springs.end(), [](const Json& x) {
                      return x.is_array() && x.size() == 3 && x[0].is_number_integer() && x[1].is_number_integer() &&
                             x[2].is_number();
                    });
    if (!ok) {
      s.fail("springs", "must be {nearest, wall} or an array of [i, j, kappa]");
    }
  }
  s.number("r0", 1.0);
  s.finish();
}

void check_field(Json& j, const std::string& where) {
  if (j.is_number()) {
    return;
  }
  if (j.is_array()) {
    if (!std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_number(); })) {
      throw ConfigError(where + " must contain numbers only");
    }
    return;
  }
  Schema s(j, where);
  s.integer("site", std::nullopt);
  s.number("value", 1.0);
  s.finish();
}

Json default_state() { return Json{{"x", Json{{"site", 0}, {"value", 1.0}}}, {"xdot", 0.0}}; }

void check_state(Json& j, const std::string& where) {
  Schema s(j, where);
  check_field(s.slot("x", 0.0), s.child("x"));
  check_field(s.slot("xdot", 0.0), s.child("xdot"));
  s.finish();
}

void check_index_set(Json& j, const std::string& where, bool pairs) {
  if (j.is_string()) {
    if (j.get<std::string>() != "all") {
      throw ConfigError(where + " must be \"all\" or an array");
    }
    return;
  }
  const bool ok = j.is_array() && std::all_of(j.begin(), j.end(), [pairs](const Json& x) {
                    return pairs ? x.is_array() && x.size() == 2 && x[0].is_number_integer() && x[1].is_number_integer()
                                 : x.is_number_integer();
                  });
  if (!ok) {
    throw ConfigError(where + (pairs ? " must be \"all\" or an array of [i, j] pairs" : " must be \"all\" or an array of sites"));
  }
}

void resolve_estimate(Schema& s) {
  check_generator(s.slot("generator", Json::object()), s.child("generator"), Json());
  if (Json* p = s.optional("polynomial")) {
    try {
      polynomial_from_json(*p);
    } catch (const PreconditionError& e) {
      throw ConfigError(s.child("polynomial") + ": " + e.what());
    }
  } else {
    check_times(s, 1.0);
  }
  check_vector(s.slot("u", Json{{"basis", 0}}), s.child("u"), Json());
  check_vector(s.slot("v", Json{{"uniform", true}}), s.child("v"), Json());
  s.number("eps", 0.1);
  s.number("delta", 0.05);
  s.number("zeta", 0.0);
}

void resolve_sample(Schema& s) {
  Json fallback = Json::object();
  fallback["anti_hermitian"] = true;
  check_generator(s.slot("generator", fallback), s.child("generator"), Json());
  check_vector(s.slot("psi", Json{{"basis", 0}}), s.child("psi"), Json());
  s.number("time", 2.0);
  s.number("eps", 0.01);
  s.number("delta", 0.01);
  s.number("alpha_min", 1.0);
  s.number("zeta", 0.0);
  s.integer("count", 1000);
}

void resolve_oscillator(Schema& s) {
  check_oscillator(s.slot("system", Json::object()), s.child("system"));
  check_state(s.slot("state", default_state()), s.child("state"));
  check_vector(s.slot("observable", Json{{"basis", 0}}), s.child("observable"), Json());
  check_times(s, 1.0);
  s.number("eps", 0.05);
  s.number("delta", 0.05);
}

void resolve_energy(Schema& s) {
  check_oscillator(s.slot("system", Json::object()), s.child("system"));
  check_state(s.slot("state", default_state()), s.child("state"));
  check_index_set(s.slot("mass_set", "all"), s.child("mass_set"), false);
  check_index_set(s.slot("spring_set", "all"), s.child("spring_set"), true);
  check_times(s, 1.0);
  s.number("eps", 0.1);
  s.number("delta", 0.05);
}

void resolve_pde(Schema& s) {
  const std::string eq = s.choice("equation", {"wave", "advection", "schrodinger"}, "advection");
  const std::int64_t dims = s.integer("dims", 1);
  s.integer("n_per_axis", 32);
  s.number("spacing", 1.0);
  s.choice("boundary", {"open", "periodic"}, "periodic");
  if (eq == "advection") {
    s.number_array("velocity", Json::array({1.0}));
  } else if (eq == "wave") {
    s.number("c", 1.0);
  } else {
    if (s.optional("potential_file") != nullptr) {
      s.string("potential_file");
    } else {
      s.number("potential", 0.0);
    }
  }
  Json center = dims == 1 ? Json(16.0) : Json::array();
  for (std::int64_t k = 0; dims > 1 && k < dims; ++k) {
    center.push_back(16.0);
  }
  check_vector(s.slot("initial", Json{{"gaussian", {{"center", center}, {"width", 3.0}}}}), s.child("initial"), Json());
  if (s.optional("observable") != nullptr) {
    check_vector(s.slot("observable", Json()), s.child("observable"), Json());
  }
  check_times(s, 1.0);
  s.number("eps", 0.1);
  s.number("delta", 0.05);
}

void resolve_embed(Schema& s) {
  s.choice("mode", {"short", "long"}, "short");
  const bool has_file = s.optional("circuit") != nullptr;
  const bool has_text = s.optional("circuit_text") != nullptr;
  if (has_file == has_text) {
    throw ConfigError("embed needs exactly one of circuit (a file path) or circuit_text");
  }
  s.string(has_file ? "circuit" : "circuit_text");
  s.boolean("scan_readout", false);
  if (s.optional("t_max") != nullptr) {
    s.number("t_max", std::nullopt);
  }
  s.integer("grid_points", 10000);
  s.integer("input", 0);
  if (s.optional("time") != nullptr) {
    s.number("time", std::nullopt);
  }
}

void resolve_verify(Schema& s) {
  s.choice("suite", {"lightcone", "oracle", "all"}, "lightcone");
  s.integer("instances", 20);
  s.integer("max_degree", 12);
}

}  // namespace

Json resolve_config(Json raw) {
  Schema s(raw, "config");
  const std::string scenario = s.choice("scenario", kScenarios, std::nullopt);
  s.unsigned_integer("seed", kDefaultSeed);
  s.boolean("dense_check", true);
  if (scenario == "estimate") {
    resolve_estimate(s);
  } else if (scenario == "sample") {
    resolve_sample(s);
  } else if (scenario == "oscillator") {
    resolve_oscillator(s);
  } else if (scenario == "energy") {
    resolve_energy(s);
  } else if (scenario == "pde") {
    resolve_pde(s);
  } else if (scenario == "embed") {
    resolve_embed(s);
  } else {
    resolve_verify(s);
  }
  s.finish();
  return raw;
}

}  // namespace glsim::cli
