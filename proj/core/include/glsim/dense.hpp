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

#include <optional>

#include <Eigen/Dense>

#include "glsim/access.hpp"
#include "glsim/polyapprox.hpp"

namespace glsim {

/// Largest dimension the dense oracle accepts: 2^14 unless GLSIM_DENSE_CAP
/// or set_dense_cap says otherwise.
Site dense_cap();
void set_dense_cap(std::optional<Site> cap);
inline constexpr Site kDefaultDenseCap = Site{1} << 14;

struct DenseFlags {
  bool hermitian = false;
  bool anti_hermitian = false;
  bool real_symmetric = false;
};

/// A brute-force matrix with structure flags detected at construction
/// (entrywise tolerance 1e-12, relative to the largest entry when above 1).
class DenseMatrix {
 public:
  explicit DenseMatrix(Eigen::MatrixXcd m);

  Site dimension() const { return static_cast<Site>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  const DenseFlags& flags() const { return flags_; }

 private:
  Eigen::MatrixXcd m_;
  DenseFlags flags_;
};

Eigen::VectorXcd to_eigen(const DenseVector& u);
DenseVector from_eigen(const Eigen::VectorXcd& u);

/// Materializes every row through the oracle (locality checked en route).
DenseMatrix dense_from_oracle(const LocalMatrixOracle& a);

/// Reads every entry of a vector oracle.
DenseVector dense_from_vector(const VectorOracle& u);

/// e^{Mt} u: eigendecomposition for (anti-)Hermitian M, otherwise
/// scaling and squaring of a Taylor series truncated at relative 1e-13.
DenseVector dense_evolve(const DenseMatrix& m, double t, const DenseVector& u);
/// Always the scaling-and-squaring path (for cross-checks).
DenseVector dense_evolve_series(const DenseMatrix& m, double t, const DenseVector& u);
inline constexpr double kSeriesTolerance = 1e-13;

/// P(M) u by Clenshaw (Chebyshev) or Horner (monomial) on matrix-vector products.
DenseVector dense_poly_apply(const DenseMatrix& m, const Polynomial& p, const DenseVector& u);

double spectral_norm(const DenseMatrix& m);
/// Eigenvalues of a Hermitian matrix, ascending.
Eigen::VectorXd hermitian_eigenvalues(const DenseMatrix& m);

/// cos(sqrt(M) t) for Hermitian positive semidefinite M.
Eigen::MatrixXcd dense_cos_sqrt(const DenseMatrix& m, double t);

/// Row oracle over a dense matrix (entries of magnitude <= 1e-14 are
/// treated as structural zeros). The norm bound defaults to the spectral norm.
LocalMatrixOracle oracle_from_dense(const DenseMatrix& m, SiteGraph graph, double r0,
                                    std::optional<double> norm_bound = std::nullopt);

}  // namespace glsim
