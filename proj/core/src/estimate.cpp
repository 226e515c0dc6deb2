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


#include "glsim/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "glsim/lightcone.hpp"

namespace glsim {

namespace {

double median(std::vector<double> x) {
  const std::size_t mid = x.size() / 2;
  std::nth_element(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(mid), x.end());
  const double upper = x[mid];
  if (x.size() % 2 == 1) {
    return upper;
  }
  const double lower = *std::max_element(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

}  // namespace

std::uint64_t estimator_batch_size(double eps) {
  require(eps > 0.0 && eps <= 1.0, "eps must lie in (0, 1]");
  return static_cast<std::uint64_t>(std::ceil(32.0 / (eps * eps)));
}

int estimator_batch_count(double delta) {
  require(delta > 0.0 && delta < 1.0, "delta must lie in (0, 1)");
  return static_cast<int>(std::ceil(8.0 * std::log(2.0 / delta)));
}

EstimateReport inner_product_estimate(const VectorOracle& w, const VectorOracle& v, double eps, double delta,
                                      std::uint64_t seed, const EstimateOptions& options) {
  require(w.dimension() == v.dimension(), "estimator vectors have different dimensions");
  require(v.has_sampler(), "v needs sampling access");
  require(v.has_norm(), "v needs norm access");
  require(v.zeta() <= eps / 9.0 * (1.0 + 1e-12), "sampling error zeta exceeds eps / 9");
  const double norm = *v.norm();
  require(norm <= 1.0 + 1e-9, "v must have norm at most 1");
  const double norm_sq = norm * norm;
  // Clipping at |X| > norm / sqrt(2 zeta) caps the bias an inexact sampler can
  // add by pushing mass onto sites with tiny |v_i|.
  const double clip = v.zeta() > 0.0 ? norm / std::sqrt(2.0 * v.zeta()) : std::numeric_limits<double>::infinity();

  const std::uint64_t batch = estimator_batch_size(eps);
  const int batches = estimator_batch_count(delta);
  std::vector<Complex> means(static_cast<std::size_t>(batches));
  parallel_for(means.size(), options.threads, [&](std::size_t b) {
    Rng rng(split_seed(seed, b));
    Complex sum{};
    for (std::uint64_t s = 0; s < batch; ++s) {
      const Site i = v.sample(rng);
      const Complex vi = v.query(i);
      const double mass = std::norm(vi);
      if (mass == 0.0) {
        throw PreconditionError("sampled index " + std::to_string(i) + " has v_i = 0");
      }
      const Complex x = std::conj(vi) * w.query(i) * (norm_sq / mass);
      if (std::abs(x) <= clip) {
        sum += x;
      }
    }
    means[b] = sum / static_cast<double>(batch);
  });

  std::vector<double> re(means.size());
  std::vector<double> im(means.size());
  for (std::size_t b = 0; b < means.size(); ++b) {
    re[b] = means[b].real();
    im[b] = means[b].imag();
  }
  EstimateReport report;
  report.value = {median(re), median(im)};
  report.eps = eps;
  report.delta = delta;
  report.batch_size = batch;
  report.repetitions = batches;
  report.samples_used = batch * static_cast<std::uint64_t>(batches);
  report.seed = seed;
  return report;
}

EstimateReport evt_gl_estimate(const LocalMatrixOracle& a, const Polynomial& p, const VectorOracle& u,
                               const VectorOracle& v, double eps, double delta, std::uint64_t seed,
                               const EstimateOptions& options) {
  if (p.sup_bound()) {
    require(*p.sup_bound() <= 1.0 + eps, "polynomial sup bound exceeds 1 + eps");
  }
  const VectorOracle w = poly_apply_query_oracle(a, p, u.query_only());
  return inner_product_estimate(w, v, eps, delta, seed, options);
}

}  // namespace glsim
