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
#include <cmath>

#include "glsim/dense.hpp"
#include "glsim/lightcone.hpp"
#include "glsim/polyapprox.hpp"
#include "glsim/random.hpp"
#include "scenarios.hpp"

namespace glsim::cli {

namespace {

struct Tally {
  std::int64_t checks = 0;
  std::int64_t failures = 0;
  double max_error = 0.0;

  void record(bool ok, double error = 0.0) {
    ++checks;
    failures += ok ? 0 : 1;
    max_error = std::max(max_error, error);
  }
  Json to_json() const { return Json{{"checks", checks}, {"failures", failures}, {"max_error", max_error}}; }
};

/// Random entries inside every r0-ball, scaled so that row and column
/// absolute sums are at most one.
LocalMatrixOracle random_local(const SiteGraph& g, double r0, Rng& rng) {
  const Site n = g.sites();
  std::vector<std::vector<MatrixEntry>> rows(static_cast<std::size_t>(n));
  std::vector<double> col_sum(static_cast<std::size_t>(n), 0.0);
  double worst = 0.0;
  for (Site i = 0; i < n; ++i) {
    double row_sum = 0.0;
    for (Site j : g.ball(i, r0)) {
      if (rng.uniform() < 0.8) {
        const Complex z{rng.normal(), rng.normal()};
        rows[static_cast<std::size_t>(i)].push_back({j, z});
        row_sum += std::abs(z);
        col_sum[static_cast<std::size_t>(j)] += std::abs(z);
      }
    }
    worst = std::max(worst, row_sum);
  }
  worst = std::max(worst, *std::max_element(col_sum.begin(), col_sum.end()));
  for (auto& row : rows) {
    for (MatrixEntry& e : row) {
      e.value /= worst;
    }
  }
  LocalMatrixOracle::Options options;
  options.check_locality = true;
  return matrix_from_rows(g, r0, std::move(rows), 1.0, options);
}

Polynomial random_chebyshev(int degree, Rng& rng) {
  std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
  for (int k = 0; k <= degree; ++k) {
    c[static_cast<std::size_t>(k)] = Complex{rng.normal(), rng.normal()} / static_cast<double>(k + 1);
  }
  return Polynomial::chebyshev(std::move(c), 1.0);
}

void lightcone_suite(std::int64_t instances, int max_degree, Rng& rng, Json& out) {
  Tally support;
  Tally zeros;
  Tally entries;
  for (std::int64_t n = 0; n < instances; ++n) {
    const SiteGraph g = n % 2 == 0 ? SiteGraph::chain(64) : SiteGraph::grid({8, 8});
    const double r0 = 1.0 + static_cast<double>(n % 3 == 2);
    const LocalMatrixOracle a = random_local(g, r0, rng);
    const Eigen::MatrixXcd m = dense_from_oracle(a).matrix();
    const Site i = static_cast<Site>(rng.below(static_cast<std::uint64_t>(g.sites())));
    Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
    for (int k = 1; k <= max_degree; ++k) {
      power = power * m;
      const SparseAccumulator row = row_power(a, i, k);
      bool inside = true;
      for (const MatrixEntry& e : row.entries) {
        inside = inside && static_cast<double>(g.distance(i, e.index)) <= k * r0;
      }
      support.record(inside);
      double outside = 0.0;
      for (Site j = 0; j < g.sites(); ++j) {
        if (static_cast<double>(g.distance(i, j)) > k * r0) {
          outside = std::max(outside, std::abs(power(i, j)));
        }
      }
      zeros.record(outside == 0.0, outside);
    }
    const Polynomial p = random_chebyshev(static_cast<int>(1 + rng.below(static_cast<std::uint64_t>(max_degree))), rng);
    DenseVector u(static_cast<std::size_t>(g.sites()));
    for (Complex& z : u) {
      z = {rng.normal(), rng.normal()};
    }
    const DenseVector truth = dense_poly_apply(DenseMatrix(m), p, u);
    const double err = std::abs(entry_of_poly_apply(a, p, query_access(u), i) - truth[static_cast<std::size_t>(i)]);
    entries.record(err <= 1e-8, err);
  }
  out["row_power_support"] = support.to_json();
  out["light_cone_zeros"] = zeros.to_json();
  out["entry_vs_dense"] = entries.to_json();
}

void oracle_suite(std::int64_t instances, Rng& rng, Json& out) {
  Tally paths;
  Tally poly;
  for (std::int64_t n = 0; n < instances; ++n) {
    const Site dim = 16 + static_cast<Site>(rng.below(49));
    Eigen::MatrixXcd h(dim, dim);
    for (Site i = 0; i < dim; ++i) {
      for (Site j = 0; j < dim; ++j) {
        h(i, j) = Complex{rng.normal(), rng.normal()};
      }
    }
    h = 0.5 * (h + h.adjoint()) / std::sqrt(static_cast<double>(dim));
    DenseVector u(static_cast<std::size_t>(dim));
    for (Complex& z : u) {
      z = {rng.normal(), rng.normal()};
    }
    const DenseMatrix ih(Complex{0.0, 1.0} * h);
    const double t = 0.5 + 3.0 * rng.uniform();
    const DenseVector eig = dense_evolve(ih, t, u);
    const DenseVector series = dense_evolve_series(ih, t, u);
    const DenseMatrix hm(h);
    const DenseVector via_poly = dense_poly_apply(hm, exp_poly(spectral_norm(hm), t, 1e-10), u);
    double scale = 0.0;
    double e1 = 0.0;
    double e2 = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) {
      scale += std::norm(u[k]);
      e1 = std::max(e1, std::abs(eig[k] - series[k]));
      e2 = std::max(e2, std::abs(eig[k] - via_poly[k]));
    }
    scale = std::sqrt(scale);
    paths.record(e1 <= 1e-9 * scale, e1);
    poly.record(e2 <= 2e-10 * scale, e2);
  }
  out["evolve_paths_agree"] = paths.to_json();
  out["exp_poly_vs_evolve"] = poly.to_json();
}

}  // namespace

void run_verify(const Json& config, std::uint64_t seed, unsigned, Json& outputs, int& exit_code) {
  const std::string suite = config["suite"].get<std::string>();
  const std::int64_t instances = config["instances"].get<std::int64_t>();
  const std::int64_t max_degree = config["max_degree"].get<std::int64_t>();
  require(instances >= 1, "instances must be positive");
  require(max_degree >= 1 && max_degree <= 32, "max_degree must be between 1 and 32");
  Json checks = Json::object();
  if (suite == "lightcone" || suite == "all") {
    Rng rng(split_seed(seed, 0));
    lightcone_suite(instances, static_cast<int>(max_degree), rng, checks);
  }
  if (suite == "oracle" || suite == "all") {
    Rng rng(split_seed(seed, 1));
    oracle_suite(instances, rng, checks);
  }
  std::int64_t failures = 0;
  for (const auto& item : checks.items()) {
    failures += item.value()["failures"].get<std::int64_t>();
  }
  outputs["suite"] = suite;
  outputs["checks"] = checks;
  outputs["passed"] = failures == 0;
  if (failures > 0) {
    exit_code = kExitFailure;
  }
}

}  // namespace glsim::cli
