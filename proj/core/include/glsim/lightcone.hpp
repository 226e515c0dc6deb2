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

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "glsim/access.hpp"
#include "glsim/polyapprox.hpp"

namespace glsim {

/// A sparse row functional e_origin^T M, entries sorted by site.
///
/// Every stored site lies in ball(origin, radius_certificate) when M is a
/// polynomial of degree k in an r0-local matrix and radius_certificate = k r0.
struct SparseAccumulator {
  Site origin = 0;
  double radius_certificate = 0.0;
  std::vector<MatrixEntry> entries;

  std::size_t support() const { return entries.size(); }
  /// Stored value at a site, zero when absent.
  Complex at(Site j) const;
};

/// Entries below this magnitude are dropped as exact zeros.
inline constexpr double kHardZero = 1e-300;

/// One row of the support log: step, support size, ball-size bound.
struct SupportStep {
  int step;
  std::size_t support;
  Site ball_bound;
};

void write_support_csv(std::ostream& out, const std::vector<SupportStep>& trace);

/// e_i^T A^k with exact support tracking.
SparseAccumulator row_power(const LocalMatrixOracle& a, Site i, int k);

/// e_i^T P(A): Horner on rows for monomials, Clenshaw on rows of the
/// rescaled matrix (A - center) / half_width for Chebyshev expansions.
SparseAccumulator poly_row(const LocalMatrixOracle& a, const Polynomial& p, Site i,
                           std::vector<SupportStep>* trace = nullptr);

/// Throws PreconditionError unless p's Chebyshev interval encloses A's
/// spectrum (Hermitian A) or p is symmetric with alpha >= A.norm_bound.
void check_polynomial_domain(const LocalMatrixOracle& a, const Polynomial& p);

/// (P(A) u)_i. Queries u only on the support of e_i^T P(A).
Complex entry_of_poly_apply(const LocalMatrixOracle& a, const Polynomial& p, const VectorOracle& u,
                            Site i, std::vector<SupportStep>* trace = nullptr);

/// Query access to P(A) u with a per-oracle memo (capacity 0 = unbounded).
/// No sampler, no norm.
VectorOracle poly_apply_query_oracle(const LocalMatrixOracle& a, const Polynomial& p,
                                     const VectorOracle& u, std::size_t memo_capacity = 0);

}  // namespace glsim
