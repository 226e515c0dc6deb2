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


#include "builders.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "glsim/dense.hpp"
#include "glsim/pde.hpp"

namespace glsim::cli {

namespace {

Site checked_index(const Json& j, Site dimension, const char* what) {
  const Site i = j.get<Site>();
  require(i >= 0 && i < dimension, std::string(what) + " index " + std::to_string(i) + " is out of range");
  return i;
}

VectorOracle basis_vector(Site dimension, Site k) {
  return VectorOracle(dimension, [k](Site i) { return i == k ? Complex{1.0} : Complex{}; })
      .with_sampler([k](Rng&) { return k; }, 0.0)
      .with_norm(1.0);
}

VectorOracle uniform_vector(Site dimension) {
  const double amp = 1.0 / std::sqrt(static_cast<double>(dimension));
  return VectorOracle(dimension, [amp](Site) { return Complex{amp}; })
      .with_sampler([dimension](Rng& rng) { return static_cast<Site>(rng.below(static_cast<std::uint64_t>(dimension))); }, 0.0)
      .with_norm(1.0);
}

DenseVector gaussian_field(const Json& g, Site dimension, const SiteGraph* graph) {
  require(graph != nullptr && graph->dimension() >= 1 && graph->sites() == dimension,
          "gaussian vectors need a chain or grid of matching size");
  const int dims = graph->dimension();
  std::vector<double> center;
  if (g["center"].is_number()) {
    center.assign(static_cast<std::size_t>(dims), g["center"].get<double>());
  } else {
    center = g["center"].get<std::vector<double>>();
  }
  require(static_cast<int>(center.size()) == dims, "gaussian center needs one coordinate per axis");
  const double width = g["width"].get<double>();
  require(width > 0.0, "gaussian width must be positive");
  const double k = g["momentum"].get<double>();
  const bool periodic = graph->boundary() == Boundary::periodic;
  std::vector<Site> sides = dims == 1 ? std::vector<Site>{dimension} : graph->sides();
  DenseVector u(static_cast<std::size_t>(dimension));
  double norm_sq = 0.0;
  for (Site i = 0; i < dimension; ++i) {
    const std::vector<Site> x = dims == 1 ? std::vector<Site>{i} : graph->coordinates(i);
    double r2 = 0.0;
    double phase = 0.0;
    for (int a = 0; a < dims; ++a) {
      double d = static_cast<double>(x[static_cast<std::size_t>(a)]) - center[static_cast<std::size_t>(a)];
      if (periodic) {
        const double side = static_cast<double>(sides[static_cast<std::size_t>(a)]);
        d -= side * std::round(d / side);
      }
      r2 += d * d;
      if (a == 0) {
        phase = k * d;
      }
    }
    u[static_cast<std::size_t>(i)] = std::polar(std::exp(-0.5 * r2 / (width * width)), phase);
    norm_sq += std::norm(u[static_cast<std::size_t>(i)]);
  }
  require(norm_sq > 0.0, "gaussian field vanishes on the lattice");
  for (Complex& z : u) {
    z /= std::sqrt(norm_sq);
  }
  return u;
}

std::vector<double> real_field(const Json& j, Site n, const char* what) {
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  if (j.is_number()) {
    std::fill(out.begin(), out.end(), j.get<double>());
  } else if (j.is_array()) {
    require(static_cast<Site>(j.size()) == n, std::string(what) + " needs one value per site");
    out = j.get<std::vector<double>>();
  } else {
    out[static_cast<std::size_t>(checked_index(j["site"], n, what))] = j["value"].get<double>();
  }
  return out;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

LocalMatrixOracle build_generator(const Json& spec) {
  const SiteGraph graph = graph_from_json(spec["graph"]);
  const std::string model = spec["model"].get<std::string>();
  std::optional<LocalMatrixOracle> a;
  if (model == "entries") {
    std::vector<std::vector<MatrixEntry>> rows(static_cast<std::size_t>(graph.sites()));
    for (const Json& e : spec["entries"]) {
      const Site i = checked_index(e[0], graph.sites(), "entry row");
      const Site j = checked_index(e[1], graph.sites(), "entry column");
      rows[static_cast<std::size_t>(i)].push_back({j, {e[2].get<double>(), e.size() == 4 ? e[3].get<double>() : 0.0}});
    }
    LocalMatrixOracle::Options options;
    const std::string sym = spec["symmetry"].get<std::string>();
    options.symmetry = sym == "hermitian"        ? LocalMatrixOracle::Symmetry::hermitian
                       : sym == "anti_hermitian" ? LocalMatrixOracle::Symmetry::anti_hermitian
                                                 : LocalMatrixOracle::Symmetry::none;
    options.check_locality = true;
    std::optional<double> bound;
    if (spec.contains("norm_bound")) {
      bound = spec["norm_bound"].get<double>();
    }
    a = matrix_from_rows(graph, spec["r0"].get<double>(), std::move(rows), bound, options);
  } else {
    require(graph.dimension() >= 1, "the " + model + " model needs a chain or grid");
    const LocalMatrixOracle lap = laplacian_oracle(graph);
    const double scale = spec["scale"].get<double>();
    const double onsite = spec["onsite"].get<double>();
    // Hopping: -scale * adjacency + onsite = scale * L + (onsite - 2 D scale).
    const double shift = model == "laplacian" ? onsite : onsite - 2.0 * graph.dimension() * scale;
    a = affine_transform(lap, scale, shift);
  }
  if (spec["anti_hermitian"].get<bool>()) {
    return affine_transform(*a, Complex{0.0, 1.0});
  }
  return *a;
}

VectorOracle build_vector(const Json& spec, Site dimension, const SiteGraph* graph) {
  if (spec.contains("basis")) {
    return basis_vector(dimension, checked_index(spec["basis"], dimension, "basis"));
  }
  if (spec.contains("uniform")) {
    require(spec["uniform"].get<bool>(), "uniform must be true");
    return uniform_vector(dimension);
  }
  DenseVector u;
  if (spec.contains("values")) {
    for (const Json& z : spec["values"]) {
      u.push_back(complex_from_json(z));
    }
    require(static_cast<Site>(u.size()) == dimension, "vector values need one entry per site");
  } else if (spec.contains("csv")) {
    std::istringstream in(read_text_file(spec["csv"].get<std::string>()));
    u = read_vector_csv(in, dimension);
  } else {
    u = gaussian_field(spec["gaussian"], dimension, graph);
  }
  return sq_access_from_dense(std::move(u));
}

OscillatorSystem build_oscillator(const Json& spec) {
  const SiteGraph graph = graph_from_json(spec["graph"]);
  const double r0 = spec["r0"].get<double>();
  const Site n = graph.sites();
  const Json& masses = spec["masses"];
  const Json& springs = spec["springs"];
  if (masses.is_number() && springs.is_object()) {
    // Uniform systems stay lazy so they scale past what a spring list can hold.
    const double m = masses.get<double>();
    const double k = springs["nearest"].get<double>();
    const double wall = springs["wall"].get<double>();
    require(m > 0.0, "masses must be positive");
    require(k >= 0.0 && wall >= 0.0, "spring constants must be nonnegative");
    auto partners = [graph, k, wall](Site i, std::vector<std::pair<Site, double>>& out) {
      for (Site j : graph.neighbours(i)) {
        if (j == i || k == 0.0) {
          continue;
        }
        out.emplace_back(j, k);
      }
      if (wall > 0.0) {
        out.emplace_back(i, wall);
      }
      std::sort(out.begin(), out.end());
    };
    OscillatorSystem::Bounds bounds;
    bounds.kappa_max = std::max(k, wall);
    bounds.mass_min = m;
    return OscillatorSystem(graph, [m](Site) { return m; }, partners, r0, bounds);
  }
  std::vector<double> mass_list = masses.is_number() ? std::vector<double>(static_cast<std::size_t>(n), masses.get<double>())
                                                     : masses.get<std::vector<double>>();
  std::vector<Spring> list;
  if (springs.is_object()) {
    const double k = springs["nearest"].get<double>();
    const double wall = springs["wall"].get<double>();
    for (Site i = 0; i < n; ++i) {
      if (wall > 0.0) {
        list.push_back({i, i, wall});
      }
      for (Site j : graph.neighbours(i)) {
        if (j > i && k > 0.0) {
          list.push_back({i, j, k});
        }
      }
    }
  } else {
    for (const Json& s : springs) {
      list.push_back({s[0].get<Site>(), s[1].get<Site>(), s[2].get<double>()});
    }
  }
  return OscillatorSystem::build(graph, std::move(mass_list), list, r0);
}

OscillatorState build_state(const Json& spec, Site sites) {
  OscillatorState s;
  s.x = real_field(spec["x"], sites, "state.x");
  s.xdot = real_field(spec["xdot"], sites, "state.xdot");
  return s;
}

std::vector<Site> mass_set(const Json& spec, const OscillatorSystem& sys) {
  std::vector<Site> out;
  if (spec.is_string()) {
    for (Site i = 0; i < sys.sites(); ++i) {
      out.push_back(i);
    }
    return out;
  }
  for (const Json& i : spec) {
    out.push_back(checked_index(i, sys.sites(), "mass_set"));
  }
  return out;
}

std::vector<std::pair<Site, Site>> spring_set(const Json& spec, const OscillatorSystem& sys) {
  std::vector<std::pair<Site, Site>> out;
  if (spec.is_string()) {
    std::vector<std::pair<Site, double>> partners;
    for (Site i = 0; i < sys.sites(); ++i) {
      partners.clear();
      sys.partners(i, partners);
      for (const auto& [j, kappa] : partners) {
        if (j >= i) {
          out.emplace_back(i, j);
        }
      }
    }
    return out;
  }
  for (const Json& p : spec) {
    out.emplace_back(checked_index(p[0], sys.sites(), "spring_set"), checked_index(p[1], sys.sites(), "spring_set"));
  }
  return out;
}

std::vector<double> scenario_times(const Json& config) {
  if (config.contains("times")) {
    auto times = config["times"].get<std::vector<double>>();
    require(!times.empty(), "times must not be empty");
    return times;
  }
  return {config["time"].get<double>()};
}

bool dense_allowed(const Json& config, Site dimension) {
  return config["dense_check"].get<bool>() && dimension <= dense_cap();
}

}  // namespace glsim::cli
