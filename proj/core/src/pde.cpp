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


#include "glsim/pde.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace glsim {

namespace {

// Appends value at j, merging with an existing entry for the same column.
void accumulate(std::vector<MatrixEntry>& row, Site j, Complex value) {
  for (MatrixEntry& e : row) {
    if (e.index == j) {
      e.value += value;
      return;
    }
  }
  row.push_back({j, value});
}

void sort_row(std::vector<MatrixEntry>& row) {
  std::sort(row.begin(), row.end(), [](const MatrixEntry& x, const MatrixEntry& y) { return x.index < y.index; });
}

std::vector<Site> axis_strides(const std::vector<Site>& sides) {
  std::vector<Site> strides(sides.size(), 1);
  for (std::size_t k = sides.size(); k-- > 1;) {
    strides[k - 1] = strides[k] * sides[k];
  }
  return strides;
}

// Calls f(neighbour, direction) for the +1 and -1 neighbours along every axis.
template <typename F>
void for_each_axis_neighbour(Site i, const std::vector<Site>& sides, const std::vector<Site>& strides,
                             Boundary boundary, F&& f) {
  for (std::size_t k = 0; k < sides.size(); ++k) {
    const Site coord = (i / strides[k]) % sides[k];
    for (int dir : {+1, -1}) {
      Site next = coord + dir;
      if (next < 0 || next >= sides[k]) {
        if (boundary == Boundary::open) {
          continue;
        }
        next = (next + sides[k]) % sides[k];
      }
      f(k, i + (next - coord) * strides[k], dir);
    }
  }
}

std::vector<Site> lattice_sides(const SiteGraph& graph) {
  if (graph.kind() == SiteGraph::Kind::chain) {
    return {graph.sites()};
  }
  require(graph.kind() == SiteGraph::Kind::grid, "PDE operators need a chain or grid");
  return graph.sides();
}

}  // namespace

DiscretizedField::DiscretizedField(SiteGraph g, double a, DenseVector v)
    : graph(std::move(g)), spacing(a), values(std::move(v)) {
  require(spacing > 0.0, "spacing must be positive");
  require(static_cast<Site>(values.size()) == graph.sites(), "field size does not match the lattice");
}

LocalMatrixOracle laplacian_oracle(const SiteGraph& graph) {
  const std::vector<Site> sides = lattice_sides(graph);
  const std::vector<Site> strides = axis_strides(sides);
  const Boundary boundary = graph.boundary();
  const double dims = static_cast<double>(sides.size());
  auto rows = [sides, strides, boundary, dims](Site i, std::vector<MatrixEntry>& out) {
    accumulate(out, i, 2.0 * dims);
    for_each_axis_neighbour(i, sides, strides, boundary,
                            [&](std::size_t, Site j, int) { accumulate(out, j, -1.0); });
    sort_row(out);
  };
  LocalMatrixOracle::Options options;
  options.symmetry = LocalMatrixOracle::Symmetry::hermitian;
  options.spectral_interval = std::pair{0.0, 4.0 * dims};
  return LocalMatrixOracle(graph, 1.0, rows, 4.0 * dims, options);
}

OscillatorSystem wave_to_oscillators(const LocalMatrixOracle& laplacian, double c, double a) {
  require(a > 0.0, "spacing must be positive");
  require(c > 0.0, "wave speed must be positive");
  require(laplacian.is_hermitian(), "the Laplacian must be Hermitian");
  const double s = c * c / (a * a);
  const double tol = 1e-12 * std::max(1.0, laplacian.norm_bound());
  auto partners = [laplacian, s, tol](Site i, std::vector<std::pair<Site, double>>& out) {
    std::vector<MatrixEntry> row;
    laplacian.row(i, row);
    double row_sum = 0.0;
    for (const MatrixEntry& e : row) {
      row_sum += e.value.real();
    }
    for (const MatrixEntry& e : row) {
      const double kappa = e.index == i ? s * row_sum : -s * e.value.real();
      if (kappa < -tol * s || std::abs(e.value.imag()) > tol) {
        throw PreconditionError("entry (" + std::to_string(i) + ", " + std::to_string(e.index) +
                                ") gives a negative spring; the input is not a Laplacian");
      }
      if (kappa > tol * s) {
        out.emplace_back(e.index, kappa);
      }
    }
  };
  OscillatorSystem::Bounds bounds;
  bounds.kappa_max = s * laplacian.norm_bound();
  bounds.mass_min = 1.0;
  bounds.a_norm_bound = s * laplacian.norm_bound();
  OscillatorSystem sys(laplacian.graph(), [](Site) { return 1.0; }, partners, laplacian.r0(), bounds);
  if (sys.sites() <= 4096) {
    std::vector<std::pair<Site, double>> scratch;
    for (Site i = 0; i < sys.sites(); ++i) {
      sys.partners(i, scratch);
    }
  }
  return sys;
}

LocalMatrixOracle advection_hamiltonian(const std::vector<double>& velocity, double a, Site n_per_axis,
                                        Boundary boundary) {
  require(!velocity.empty(), "at least one spatial dimension is required");
  require(a > 0.0, "spacing must be positive");
  require(n_per_axis >= 1, "each axis needs at least one site");
  const std::vector<Site> sides(velocity.size(), n_per_axis);
  const SiteGraph graph = velocity.size() == 1 ? SiteGraph::chain(n_per_axis, boundary) : SiteGraph::grid(sides, boundary);
  const std::vector<Site> strides = axis_strides(sides);
  double v_max = 0.0;
  for (double v : velocity) {
    require(std::isfinite(v), "velocities must be finite");
    v_max = std::max(v_max, std::abs(v));
  }
  auto rows = [sides, strides, boundary, velocity, a](Site i, std::vector<MatrixEntry>& out) {
    for_each_axis_neighbour(i, sides, strides, boundary, [&](std::size_t k, Site j, int dir) {
      // -i v_k (u_{j+1} - u_{j-1}) / (2a)
      accumulate(out, j, Complex{0.0, -dir * velocity[k] / (2.0 * a)});
    });
    std::erase_if(out, [](const MatrixEntry& e) { return e.value == Complex{}; });
    sort_row(out);
  };
  LocalMatrixOracle::Options options;
  options.symmetry = LocalMatrixOracle::Symmetry::hermitian;
  return LocalMatrixOracle(graph, 1.0, rows, static_cast<double>(velocity.size()) * v_max / a, options);
}

LocalMatrixOracle schrodinger_hamiltonian(const LocalMatrixOracle& laplacian, std::function<double(Site)> potential,
                                          double v_max, double a) {
  require(a > 0.0, "spacing must be positive");
  require(v_max >= 0.0 && std::isfinite(v_max), "V_max must be finite and nonnegative");
  require(laplacian.is_hermitian(), "the Laplacian must be Hermitian");
  const int dims = laplacian.graph().dimension();
  require(dims >= 1, "the Schrodinger front-end needs a chain or grid");
  const double inv_a2 = 1.0 / (a * a);
  auto rows = [laplacian, potential, inv_a2](Site i, std::vector<MatrixEntry>& out) {
    laplacian.row(i, out);
    for (MatrixEntry& e : out) {
      e.value *= inv_a2;
    }
    accumulate(out, i, potential(i));
    sort_row(out);
  };
  LocalMatrixOracle::Options options;
  options.symmetry = LocalMatrixOracle::Symmetry::hermitian;
  const double bound = (2.0 * dims + 1.0) * 2.0 * dims * inv_a2 + v_max;
  return LocalMatrixOracle(laplacian.graph(), laplacian.r0(), rows, bound, options);
}

LocalMatrixOracle schrodinger_hamiltonian(const LocalMatrixOracle& laplacian, const std::vector<double>& potential,
                                          double a) {
  require(static_cast<Site>(potential.size()) == laplacian.dimension(), "one potential value per site is required");
  double v_max = 0.0;
  for (double v : potential) {
    require(std::isfinite(v), "potential values must be finite");
    v_max = std::max(v_max, std::abs(v));
  }
  auto table = std::make_shared<const std::vector<double>>(potential);
  return schrodinger_hamiltonian(
      laplacian, [table](Site i) { return (*table)[static_cast<std::size_t>(i)]; }, v_max, a);
}

}  // namespace glsim
