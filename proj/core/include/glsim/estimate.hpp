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

#include "glsim/access.hpp"
#include "glsim/parallel.hpp"
#include "glsim/polyapprox.hpp"

namespace glsim {

/// Result of a median-of-means estimate.
struct EstimateReport {
  Complex value;
  double eps = 0.0;
  double delta = 0.0;
  std::uint64_t samples_used = 0;
  int repetitions = 0;
  std::uint64_t batch_size = 0;
  std::uint64_t seed = 0;
};

/// Worker count for estimator batches; 0 means one per hardware thread.
/// Results do not depend on it.
struct EstimateOptions {
  unsigned threads = 0;
};

/// Batch size ceil(32 / eps^2) of the median-of-means estimator.
std::uint64_t estimator_batch_size(double eps);
/// Number of batches ceil(8 ln(2 / delta)).
int estimator_batch_count(double delta);

/// Estimates v^dagger w from query access to w and sampling, query and norm
/// access to v. Each draw i ~ v contributes conj(v_i) w_i |v|^2 / |v_i|^2;
/// batch means are combined by a coordinate-wise median. Batch b runs on
/// the RNG stream split_seed(seed, b). When v.zeta() > 0, draws with
/// |X| > |v| / sqrt(2 zeta) are zeroed, which bounds the bias by
/// 2 sqrt(2 zeta) |v| |w|.
EstimateReport inner_product_estimate(const VectorOracle& w, const VectorOracle& v, double eps, double delta,
                                      std::uint64_t seed, const EstimateOptions& options = {});

/// Estimates v^dagger P(A) u through a memoized light-cone query oracle.
EstimateReport evt_gl_estimate(const LocalMatrixOracle& a, const Polynomial& p, const VectorOracle& u,
                               const VectorOracle& v, double eps, double delta, std::uint64_t seed,
                               const EstimateOptions& options = {});

}  // namespace glsim
