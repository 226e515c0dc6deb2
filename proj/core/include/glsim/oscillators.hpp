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
#include <optional>
#include <utility>
#include <vector>

#include "glsim/access.hpp"
#include "glsim/estimate.hpp"
#include "glsim/lattice.hpp"

namespace glsim {

/// A spring between sites i <= j; i == j is the wall spring of site i.
struct Spring {
  Site i;
  Site j;
  double kappa;
};

/// Positions and velocities of every mass; energy may be supplied by the caller.
struct OscillatorState {
  std::vector<double> x;
  std::vector<double> xdot;
  std::optional<double> energy;
};

/// Coupled harmonic oscillators m_i x_i'' = sum_{j != i} k_ij (x_j - x_i) - k_ii x_i.
///
/// With y = sqrt(M) x the dynamics is y'' = -A y for A = M^{-1/2} F M^{-1/2},
/// and A = B B^dagger for the rectangular B^dagger whose row (i, j) is
/// sqrt(k_ij / m_i) e_i - sqrt(k_ij / m_j) e_j (just sqrt(k_ii / m_i) e_i
/// when i == j).
///
/// Extended vectors have the velocity block at indices [0, N) followed by
/// the spring block: pair (i, j), j >= i, sits at N + i * stride + slot,
/// where slot ranks j among the partners of i that are >= i. Slots past a
/// site's partner count are permanently zero.
class OscillatorSystem {
 public:
  /// Appends (j, k_ij) for every j (including i for the wall spring) with
  /// k_ij > 0, sorted by j.
  using PartnerFn = std::function<void(Site, std::vector<std::pair<Site, double>>&)>;
  using MassFn = std::function<double(Site)>;

  struct Bounds {
    double kappa_max = 0.0;
    double mass_min = 1.0;
    /// Overrides the Gershgorin bound 2 N(r0) kappa_max / mass_min on |A|.
    std::optional<double> a_norm_bound;
  };

  /// Lazily defined system (for index spaces too large to tabulate). The
  /// extended stride is N(r0).
  OscillatorSystem(SiteGraph graph, MassFn masses, PartnerFn partners, double r0, Bounds bounds);

  /// Validated system from explicit masses and springs.
  static OscillatorSystem build(SiteGraph graph, std::vector<double> masses, const std::vector<Spring>& springs,
                                double r0);

  const SiteGraph& graph() const { return *graph_; }
  Site sites() const { return graph_->sites(); }
  Site stride() const { return stride_; }
  Site extended_dimension() const { return sites() + sites() * stride_; }
  double r0() const { return r0_; }

  double mass(Site i) const { return masses_(i); }
  void partners(Site i, std::vector<std::pair<Site, double>>& out) const;
  double kappa(Site i, Site j) const;

  /// A as a Hermitian oracle with spectrum in [0, |A|].
  const LocalMatrixOracle& a() const { return *a_; }
  /// sqrt(|A|) bounds |H| for H = [[0, B], [B^dagger, 0]].
  double h_norm_bound() const;

  /// Extended index of spring (i, j) (either order). Throws if absent.
  Site spring_index(Site i, Site j) const;
  /// The pair stored at an extended index, or nullopt for velocity
  /// slots and empty spring slots.
  std::optional<std::pair<Site, Site>> spring_pair(Site e) const;

  /// Row e of B^dagger (entries are columns in [0, N)). Empty for e < N.
  void b_dagger_row(Site e, std::vector<MatrixEntry>& out) const;
  /// Row i of B (entries are extended indices).
  void b_row(Site i, std::vector<MatrixEntry>& out) const;

  /// B^dagger x as an extended vector (zero velocity block).
  VectorOracle b_dagger(const VectorOracle& x) const;
  /// B g for an extended vector g (only its spring block is read).
  VectorOracle b(const VectorOracle& g) const;

 private:
  OscillatorSystem(std::shared_ptr<const SiteGraph> graph, MassFn masses, PartnerFn partners, double r0,
                   Site stride, double a_norm_bound);
  void upper_partners(Site i, std::vector<std::pair<Site, double>>& out) const;

  std::shared_ptr<const SiteGraph> graph_;
  MassFn masses_;
  PartnerFn partners_;
  double r0_;
  Site stride_;
  std::shared_ptr<const LocalMatrixOracle> a_;
};

/// 1/2 sum m_i xdot_i^2 + 1/2 sum k_ii x_i^2 + 1/2 sum_{j > i} k_ij (x_i - x_j)^2.
double total_energy(const OscillatorSystem& sys, const OscillatorState& state);

/// The unit extended vector (sqrt(M) xdot ; i B^dagger sqrt(M) x) / sqrt(2E)
/// with exact sampling access.
VectorOracle psi0(const OscillatorSystem& sys, const OscillatorState& state);
DenseVector psi0_dense(const OscillatorSystem& sys, const OscillatorState& state);

/// Degree of the exp polynomial used for time t: alpha = h_norm_bound().
int oscillator_degree(const OscillatorSystem& sys, double t, double eps);

/// Query oracle for P_exp(H) psi(0), evaluated through polynomials in A only.
VectorOracle evolved_state_oracle(const OscillatorSystem& sys, const OscillatorState& state, double t,
                                  double eps_poly);

/// Estimates v^dagger psi(t). The error budget is split evenly between the
/// polynomial approximation and the sampling estimate.
EstimateReport estimate_observable(const OscillatorSystem& sys, const OscillatorState& state,
                                   const VectorOracle& v, double t, double eps, double delta, std::uint64_t seed,
                                   const EstimateOptions& options = {});

/// Estimates psi(t)^dagger V psi(t) for V projecting onto the velocity slots
/// of `masses` and the spring slots of `springs` (normalized by E, so the
/// full sets give 1). The polynomial gets eps / 4, the estimator eps / 3.
EstimateReport estimate_energy(const OscillatorSystem& sys, const OscillatorState& state,
                               const std::vector<Site>& masses, const std::vector<std::pair<Site, Site>>& springs,
                               double t, double eps, double delta, std::uint64_t seed,
                               const EstimateOptions& options = {});

}  // namespace glsim
