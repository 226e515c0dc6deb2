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
#include <vector>

#include <Eigen/Dense>

#include "glsim/access.hpp"
#include "glsim/lattice.hpp"
#include "glsim/oscillators.hpp"
#include "glsim/polyapprox.hpp"
#include "glsim/random.hpp"

namespace glsim::testing {

enum class MatrixFlavor { general, hermitian, anti_hermitian };

/// Random matrix whose nonzeros sit within distance r0, each kept with
/// probability `density`. Rows are scaled so the absolute row and column sums
/// stay at most 1, hence norm_bound = 1.
LocalMatrixOracle random_local_matrix(const SiteGraph& g, double r0, Rng& rng,
                                      MatrixFlavor flavor = MatrixFlavor::general, double density = 0.8);

/// Real symmetric nearest-neighbour chain whose entries repeat with period 64.
/// Nothing is materialized, so N may be huge.
LocalMatrixOracle hash_chain(Site n_sites);

DenseVector random_vector(Site n, Rng& rng, bool normalize = true);

Eigen::MatrixXcd eigen_from_rows(const LocalMatrixOracle& a);

/// Reference P(A)u by summing A^k u with monomial coefficients, or by the
/// plain three-term T_k recurrence in the Chebyshev basis.
Eigen::VectorXcd reference_poly_apply(const Eigen::MatrixXcd& a, const Polynomial& p, const Eigen::VectorXcd& u);

Polynomial random_polynomial(int degree, Basis basis, double alpha, Rng& rng);

std::vector<double> empirical(const std::vector<Site>& draws, Site dimension);

double tv(const std::vector<double>& p, const std::vector<double>& q);

/// Random chain of unit-order masses with nearest-neighbour springs and a
/// wall spring at every site.
OscillatorSystem random_oscillator_chain(Site n, Rng& rng);
OscillatorState random_oscillator_state(const OscillatorSystem& sys, Rng& rng);

/// Dense B (sites x extended) and H = [[0, B], [B^dagger, 0]].
Eigen::MatrixXcd dense_b(const OscillatorSystem& sys);
Eigen::MatrixXcd dense_h(const OscillatorSystem& sys);

/// e^{iHt} psi(0) by eigendecomposition of the Hermitian H.
Eigen::VectorXcd evolve_hermitian(const Eigen::MatrixXcd& h, double t, const Eigen::VectorXcd& psi);

}  // namespace glsim::testing
