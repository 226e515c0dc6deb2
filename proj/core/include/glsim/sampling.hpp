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
#include <functional>
#include <optional>
#include <vector>

#include "glsim/access.hpp"
#include "glsim/polyapprox.hpp"

namespace glsim {

/// Certified |p^app - p^exp|_tv <= 2 eps / |e^{At} psi|.
double tv_error_bound(double eps, double sol_norm);

/// A proposal distribution with (zeta-accurate) sampling and exact mass queries.
struct ProposalDistribution {
  Site dimension = 0;
  std::function<Site(Rng&)> draw;
  std::function<double(Site)> mass;
  double zeta = 0.0;
};

/// Light-cone oversampler: draw j ~ psi, then a uniform site of
/// ball(j, d r0). mass(i) = sum_{j in ball(i, d r0)} |psi_j|^2 / (|psi|^2 |ball(j, d r0)|).
struct OversamplerHandle {
  ProposalDistribution proposal;
  double phi = 1.0;
  int degree = 0;
  double radius = 0.0;
};

/// phi = norm_bound_p^2 |psi|^2 N(d r0). Mass queries are memoized.
OversamplerHandle lightcone_oversampler(const LocalMatrixOracle& a, int degree, const VectorOracle& psi,
                                        double norm_bound_p);

struct RejectionOutcome {
  std::optional<Site> site;
  std::uint64_t trials = 0;
};

/// Trial budget ceil((8 phi / alpha_min^2) ln(1 / delta)).
std::uint64_t rejection_budget(double phi, double alpha_min, double delta);

/// Draws i ~ p and accepts with probability |u_i|^2 / (phi p_i) until
/// success or the budget runs out; failure is reported, not thrown.
RejectionOutcome rejection_sample(const ProposalDistribution& p, const VectorOracle& u, double phi,
                                  double alpha_min, double delta, Rng& rng);
RejectionOutcome rejection_sample(const ProposalDistribution& p, const VectorOracle& u, double phi,
                                  double alpha_min, double delta, std::uint64_t seed);

struct EvolvedSamplerParams {
  double eps = 0.01;
  double alpha_min = 1.0;
  /// Bound on |e^{At}|; defaults to 1 for anti-Hermitian generators.
  std::optional<double> alpha_exp;
  double delta = 0.01;
  std::size_t memo_capacity = 0;
};

/// Sampler for the distribution induced by P(A) psi, built once so every
/// draw shares the memoized query oracle for P(A) psi.
class EvolvedSampler {
 public:
  /// P_exp = exp_poly(|A|, t, eps) applied to K = -iA, so P_exp(K) ~ e^{At}.
  /// A must be anti-Hermitian.
  EvolvedSampler(const LocalMatrixOracle& a, double t, const VectorOracle& psi, const EvolvedSamplerParams& params);

  /// Caller-supplied polynomial of `generator` (any local matrix).
  EvolvedSampler(const LocalMatrixOracle& generator, const Polynomial& p, const VectorOracle& psi,
                 const EvolvedSamplerParams& params);

  RejectionOutcome sample(Rng& rng) const;
  /// Sample k of a stream: uses split_seed(seed, k).
  std::vector<RejectionOutcome> sample_many(std::size_t count, std::uint64_t seed, unsigned threads = 0) const;

  const Polynomial& polynomial() const { return polynomial_; }
  const OversamplerHandle& oversampler() const { return oversampler_; }
  const VectorOracle& evolved() const { return evolved_; }
  double phi() const { return oversampler_.phi; }
  std::uint64_t budget() const { return budget_; }
  /// 64 alpha_exp^2 N(d r0) zeta / alpha_min^2 + 2 eps / alpha_min.
  double tv_bound() const;

 private:
  EvolvedSampler(const LocalMatrixOracle& generator, Polynomial p, const VectorOracle& psi,
                 const EvolvedSamplerParams& params, double alpha_exp);

  EvolvedSamplerParams params_;
  double alpha_exp_ = 1.0;
  Polynomial polynomial_;
  OversamplerHandle oversampler_;
  VectorOracle evolved_;
  std::uint64_t budget_ = 0;
  double locality_ = 1.0;
  double zeta_ = 0.0;
};

RejectionOutcome sample_evolved(const LocalMatrixOracle& a, double t, const VectorOracle& psi,
                                const EvolvedSamplerParams& params, std::uint64_t seed);

}  // namespace glsim
