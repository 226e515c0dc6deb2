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


#include "glsim/sampling.hpp"

#include <cmath>

#include "glsim/estimate.hpp"
#include "glsim/lightcone.hpp"

namespace glsim {

double tv_error_bound(double eps, double sol_norm) {
  require(sol_norm > 0.0, "solution norm must be positive");
  require(eps >= 0.0, "eps must be nonnegative");
  return 2.0 * eps / sol_norm;
}

OversamplerHandle lightcone_oversampler(const LocalMatrixOracle& a, int degree, const VectorOracle& psi,
                                        double norm_bound_p) {
  require(degree >= 0, "degree must be nonnegative");
  require(psi.dimension() == a.dimension(), "state and matrix dimensions differ");
  require(psi.has_sampler(), "the state needs sampling access");
  require(psi.has_norm(), "the state needs norm access");
  const double psi_norm = *psi.norm();
  require(psi_norm > 0.0, "the state is zero");

  const double radius = degree * a.r0();
  auto graph = std::make_shared<const SiteGraph>(a.graph());
  auto raw_mass = [graph, psi, radius, norm_sq = psi_norm * psi_norm](Site i) {
    double total = 0.0;
    for (Site j : graph->ball(i, radius)) {
      total += std::norm(psi.query(j)) / static_cast<double>(graph->ball_size(j, radius));
    }
    return Complex{total / norm_sq, 0.0};
  };
  const VectorOracle mass_table = memoized(VectorOracle(a.dimension(), raw_mass));

  OversamplerHandle h;
  h.degree = degree;
  h.radius = radius;
  h.phi = norm_bound_p * norm_bound_p * psi_norm * psi_norm * static_cast<double>(graph->locality(radius));
  h.proposal.dimension = a.dimension();
  h.proposal.zeta = psi.zeta();
  h.proposal.draw = [graph, psi, radius](Rng& rng) {
    const Site j = psi.sample(rng);
    const std::vector<Site> ball = graph->ball(j, radius);
    return ball[static_cast<std::size_t>(rng.below(ball.size()))];
  };
  h.proposal.mass = [mass_table](Site i) { return mass_table.query(i).real(); };
  return h;
}

std::uint64_t rejection_budget(double phi, double alpha_min, double delta) {
  require(phi > 0.0, "phi must be positive");
  require(alpha_min > 0.0, "alpha_min must be positive");
  require(delta > 0.0 && delta < 1.0, "delta must lie in (0, 1)");
  return static_cast<std::uint64_t>(std::ceil(8.0 * phi / (alpha_min * alpha_min) * std::log(1.0 / delta)));
}

RejectionOutcome rejection_sample(const ProposalDistribution& p, const VectorOracle& u, double phi,
                                  double alpha_min, double delta, Rng& rng) {
  require(p.dimension == u.dimension(), "proposal and target dimensions differ");
  const std::uint64_t budget = rejection_budget(phi, alpha_min, delta);
  RejectionOutcome outcome;
  while (outcome.trials < budget) {
    ++outcome.trials;
    const Site i = p.draw(rng);
    const double pi = p.mass(i);
    if (!(pi > 0.0)) {
      throw PreconditionError("proposal drew index " + std::to_string(i) + " with zero mass");
    }
    const double tau = rng.uniform();
    if (tau <= std::norm(u.query(i)) / (phi * pi)) {
      outcome.site = i;
      return outcome;
    }
  }
  return outcome;
}

RejectionOutcome rejection_sample(const ProposalDistribution& p, const VectorOracle& u, double phi,
                                  double alpha_min, double delta, std::uint64_t seed) {
  Rng rng(seed);
  return rejection_sample(p, u, phi, alpha_min, delta, rng);
}

namespace {

double default_alpha_exp(const LocalMatrixOracle& a, const EvolvedSamplerParams& params) {
  if (params.alpha_exp) {
    require(*params.alpha_exp > 0.0, "alpha_exp must be positive");
    return *params.alpha_exp;
  }
  require(a.is_anti_hermitian(), "alpha_exp is required unless the generator is anti-Hermitian");
  return 1.0;
}

Polynomial anti_hermitian_propagator(const LocalMatrixOracle& a, double t, double eps) {
  require(a.is_anti_hermitian(), "sample_evolved builds e^{At} only for anti-Hermitian A");
  const double alpha = a.norm_bound() > 0.0 ? a.norm_bound() : 1.0;
  return exp_poly(alpha, t, eps);
}

LocalMatrixOracle hermitian_part(const LocalMatrixOracle& a) {
  // A = iK with K = -iA Hermitian.
  return affine_transform(a, Complex{0.0, -1.0});
}

}  // namespace

EvolvedSampler::EvolvedSampler(const LocalMatrixOracle& a, double t, const VectorOracle& psi,
                               const EvolvedSamplerParams& params)
    : EvolvedSampler(hermitian_part(a), anti_hermitian_propagator(a, t, params.eps), psi, params,
                     default_alpha_exp(a, params)) {}

EvolvedSampler::EvolvedSampler(const LocalMatrixOracle& generator, const Polynomial& p, const VectorOracle& psi,
                               const EvolvedSamplerParams& params)
    : EvolvedSampler(generator, p, psi, params, default_alpha_exp(generator, params)) {}

EvolvedSampler::EvolvedSampler(const LocalMatrixOracle& generator, Polynomial p, const VectorOracle& psi,
                               const EvolvedSamplerParams& params, double alpha_exp)
    : params_(params),
      alpha_exp_(alpha_exp),
      polynomial_(std::move(p)),
      evolved_(poly_apply_query_oracle(generator, polynomial_, psi.query_only(), params.memo_capacity)) {
  require(params.alpha_min > 0.0, "alpha_min must be positive");
  require(params.eps > 0.0 && params.eps <= params.alpha_min / 2.0, "eps must lie in (0, alpha_min / 2]");
  const int d = polynomial_.degree();
  locality_ = static_cast<double>(generator.graph().locality(d * generator.r0()));
  zeta_ = psi.zeta();
  const double zeta_limit = params.alpha_min * params.alpha_min / (64.0 * alpha_exp_ * alpha_exp_ * locality_);
  require(zeta_ <= zeta_limit * (1.0 + 1e-12), "state sampling error zeta is too large for the oversampler");
  oversampler_ = lightcone_oversampler(generator, d, psi, 2.0 * alpha_exp_);
  budget_ = rejection_budget(oversampler_.phi, params.alpha_min, params.delta);
}

RejectionOutcome EvolvedSampler::sample(Rng& rng) const {
  return rejection_sample(oversampler_.proposal, evolved_, oversampler_.phi, params_.alpha_min, params_.delta,
                          rng);
}

std::vector<RejectionOutcome> EvolvedSampler::sample_many(std::size_t count, std::uint64_t seed,
                                                          unsigned threads) const {
  std::vector<RejectionOutcome> out(count);
  parallel_for(count, threads, [&](std::size_t k) {
    Rng rng(split_seed(seed, k));
    out[k] = sample(rng);
  });
  return out;
}

double EvolvedSampler::tv_bound() const {
  const double a2 = params_.alpha_min * params_.alpha_min;
  return 64.0 * alpha_exp_ * alpha_exp_ * locality_ * zeta_ / a2 + tv_error_bound(params_.eps, params_.alpha_min);
}

RejectionOutcome sample_evolved(const LocalMatrixOracle& a, double t, const VectorOracle& psi,
                                const EvolvedSamplerParams& params, std::uint64_t seed) {
  const EvolvedSampler sampler(a, t, psi, params);
  Rng rng(seed);
  return sampler.sample(rng);
}

}  // namespace glsim
