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

#include <functional>
#include <vector>

#include "glsim/access.hpp"
#include "glsim/lattice.hpp"
#include "glsim/oscillators.hpp"

namespace glsim {

/// Field samples u(x_j) on a lattice with spacing a.
struct DiscretizedField {
  SiteGraph graph;
  double spacing;
  DenseVector values;

  DiscretizedField(SiteGraph g, double a, DenseVector v);
};

/// L = sum over axes of (2 - S_k - S_k^dagger) on a chain or grid; open
/// boundaries keep the diagonal (Dirichlet walls). r0 = 1, spectrum in [0, 4D].
LocalMatrixOracle laplacian_oracle(const SiteGraph& graph);

/// Masses 1, k_ii = (c^2 / a^2) sum_j L_ij and k_ij = -(c^2 / a^2) L_ij, so
/// A = (c^2 / a^2) L. A negative spring means L was not a Laplacian.
OscillatorSystem wave_to_oscillators(const LocalMatrixOracle& laplacian, double c, double a);

/// H = -i sum_k v_k D_k with central differences (u_{j+1} - u_{j-1}) / (2a)
/// on a D-grid with n sites per axis. |H| <= D v_max / a.
LocalMatrixOracle advection_hamiltonian(const std::vector<double>& velocity, double a, Site n_per_axis,
                                        Boundary boundary = Boundary::periodic);

/// H = L / a^2 + V with |H| <= (2D + 1) 2D / a^2 + V_max.
LocalMatrixOracle schrodinger_hamiltonian(const LocalMatrixOracle& laplacian, std::function<double(Site)> potential,
                                          double v_max, double a);
LocalMatrixOracle schrodinger_hamiltonian(const LocalMatrixOracle& laplacian, const std::vector<double>& potential,
                                          double a);

}  // namespace glsim
