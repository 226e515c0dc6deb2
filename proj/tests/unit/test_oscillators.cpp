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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "glsim/oscillators.hpp"
#include "support.hpp"

namespace glsim {
namespace {

using testing::dense_b;
using testing::dense_h;

OscillatorSystem single_oscillator() { return OscillatorSystem::build(SiteGraph::chain(1), {1.0}, {{0, 0, 1.0}}, 0.0); }

Eigen::VectorXcd as_eigen(const DenseVector& v) { return Eigen::Map<const Eigen::VectorXcd>(v.data(), static_cast<Eigen::Index>(v.size())); }

Eigen::MatrixXcd matrix_poly(const Eigen::MatrixXcd& m, const std::vector<double>& c) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m.rows(), m.cols());
  Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  for (double ck : c) {
    out += ck * power;
    power = power * m;
  }
  return out;
}

TEST(Build, SingleOscillator) {
  const OscillatorSystem sys = single_oscillator();
  EXPECT_EQ(testing::eigen_from_rows(sys.a())(0, 0), Complex(1.0));
  std::vector<MatrixEntry> row;
  sys.b_dagger_row(sys.spring_index(0, 0), row);
  ASSERT_EQ(row.size(), 1u);
  EXPECT_EQ(row[0].index, 0);
  EXPECT_EQ(row[0].value, Complex(1.0));
}

TEST(Build, TwoMasses) {
  const OscillatorSystem sys = OscillatorSystem::build(SiteGraph::chain(2), {1.0, 1.0}, {{0, 1, 1.0}}, 1.0);
  const Eigen::MatrixXcd a = testing::eigen_from_rows(sys.a());
  EXPECT_EQ(a(0, 0), Complex(1.0));
  EXPECT_EQ(a(0, 1), Complex(-1.0));
  EXPECT_EQ(a(1, 0), Complex(-1.0));
  EXPECT_EQ(a(1, 1), Complex(1.0));
}

TEST(Build, Rejections) {
  const SiteGraph g = SiteGraph::chain(3);
  EXPECT_THROW(OscillatorSystem::build(g, {1.0, 0.0, 1.0}, {}, 1.0), PreconditionError);
  EXPECT_THROW(OscillatorSystem::build(g, {1.0, 1.0, 1.0}, {{0, 1, -1.0}}, 1.0), PreconditionError);
  EXPECT_THROW(OscillatorSystem::build(g, {1.0, 1.0, 1.0}, {{0, 2, 1.0}}, 1.0), LocalityError);
  EXPECT_THROW(OscillatorSystem::build(g, {1.0, 1.0, 1.0}, {{0, 1, 1.0}, {1, 0, 1.0}}, 1.0), PreconditionError);
  EXPECT_THROW(OscillatorSystem::build(g, {1.0, 1.0}, {}, 1.0), PreconditionError);
}

TEST(Build, DilationIdentity) {
  Rng rng(61);
  const OscillatorSystem sys = testing::random_oscillator_chain(32, rng);
  const Eigen::MatrixXcd b = dense_b(sys);
  const Eigen::MatrixXcd a = testing::eigen_from_rows(sys.a());
  EXPECT_LE((b * b.adjoint() - a).cwiseAbs().maxCoeff(), 1e-10);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(a);
  EXPECT_GE(eig.eigenvalues().minCoeff(), -1e-12);
  EXPECT_LE(eig.eigenvalues().maxCoeff(), sys.a().norm_bound() + 1e-12);
}

TEST(Build, SpringIndexRoundTrip) {
  Rng rng(62);
  const OscillatorSystem sys = testing::random_oscillator_chain(10, rng);
  for (Site i = 0; i < 10; ++i) {
    for (Site j : {i, i + 1}) {
      if (j >= 10) {
        continue;
      }
      const Site e = sys.spring_index(i, j);
      EXPECT_GE(e, sys.sites());
      EXPECT_EQ(sys.spring_pair(e), std::make_pair(i, j));
      EXPECT_EQ(sys.spring_index(j, i), e);
    }
  }
  EXPECT_FALSE(sys.spring_pair(3).has_value());
  EXPECT_THROW(sys.spring_index(0, 5), PreconditionError);
}

TEST(Build, LexicographicSpringOrder) {
  Rng rng(63);
  const OscillatorSystem sys = testing::random_oscillator_chain(6, rng);
  Site previous = -1;
  for (Site i = 0; i < 6; ++i) {
    for (Site j = i; j < std::min<Site>(i + 2, 6); ++j) {
      const Site e = sys.spring_index(i, j);
      EXPECT_GT(e, previous);
      previous = e;
    }
  }
}

TEST(Build, LazySystemMatchesBuilt) {
  Rng rng(64);
  const OscillatorSystem built = testing::random_oscillator_chain(12, rng);
  const OscillatorSystem lazy(
      SiteGraph::chain(12), [&built](Site i) { return built.mass(i); },
      [&built](Site i, std::vector<std::pair<Site, double>>& out) {
        std::vector<std::pair<Site, double>> list;
        built.partners(i, list);
        out.insert(out.end(), list.begin(), list.end());
      },
      1.0, {1.0, 0.5, std::nullopt});
  EXPECT_LE((testing::eigen_from_rows(lazy.a()) - testing::eigen_from_rows(built.a())).norm(), 1e-15);
  EXPECT_DOUBLE_EQ(lazy.a().norm_bound(), 2.0 * 3.0 * 1.0 / 0.5);
  EXPECT_EQ(lazy.stride(), 3);
}

TEST(Energy, Examples) {
  const OscillatorSystem two = OscillatorSystem::build(SiteGraph::chain(2), {1.0, 1.0}, {{0, 1, 1.0}}, 1.0);
  EXPECT_DOUBLE_EQ(total_energy(two, {{1.0, -1.0}, {0.0, 0.0}, std::nullopt}), 2.0);
  EXPECT_DOUBLE_EQ(total_energy(single_oscillator(), {{1.0}, {0.0}, std::nullopt}), 0.5);
  EXPECT_THROW(total_energy(two, {{1.0}, {0.0}, std::nullopt}), PreconditionError);
}

TEST(Energy, MatchesDenseFormula) {
  Rng rng(65);
  const OscillatorSystem sys = testing::random_oscillator_chain(20, rng);
  const OscillatorState s = testing::random_oscillator_state(sys, rng);
  Eigen::VectorXd sx(20);
  Eigen::VectorXd sv(20);
  for (Site i = 0; i < 20; ++i) {
    sx[i] = std::sqrt(sys.mass(i)) * s.x[static_cast<std::size_t>(i)];
    sv[i] = std::sqrt(sys.mass(i)) * s.xdot[static_cast<std::size_t>(i)];
  }
  const Eigen::VectorXcd bx = dense_b(sys).adjoint() * sx.cast<Complex>();
  EXPECT_NEAR(total_energy(sys, s), 0.5 * sv.squaredNorm() + 0.5 * bx.squaredNorm(), 1e-12);
}

TEST(Psi0, SingleOscillator) {
  const OscillatorSystem sys = single_oscillator();
  const DenseVector psi = psi0_dense(sys, {{1.0}, {0.0}, std::nullopt});
  ASSERT_EQ(psi.size(), 2u);
  EXPECT_EQ(psi[0], Complex(0.0));
  EXPECT_NEAR(std::abs(psi[1] - Complex(0.0, 1.0)), 0.0, 1e-15);
}

TEST(Psi0, UnitNormAndDenseEntries) {
  Rng rng(66);
  const OscillatorSystem sys = testing::random_oscillator_chain(15, rng);
  const OscillatorState s = testing::random_oscillator_state(sys, rng);
  const VectorOracle psi = psi0(sys, s);
  EXPECT_NEAR(*psi.norm(), 1.0, 1e-12);
  const double scale = 1.0 / std::sqrt(2.0 * total_energy(sys, s));
  Eigen::VectorXcd sx(15);
  for (Site i = 0; i < 15; ++i) {
    sx[i] = std::sqrt(sys.mass(i)) * s.x[static_cast<std::size_t>(i)];
  }
  const Eigen::VectorXcd bottom = Complex{0.0, scale} * (dense_b(sys).adjoint() * sx);
  for (Site e = 0; e < sys.extended_dimension(); ++e) {
    const Complex expected =
        e < 15 ? Complex(std::sqrt(sys.mass(e)) * s.xdot[static_cast<std::size_t>(e)] * scale) : bottom[e];
    EXPECT_LE(std::abs(psi.query(e) - expected), 1e-12);
  }
}

TEST(Psi0, RestStateRejected) {
  EXPECT_THROW(psi0(single_oscillator(), {{0.0}, {0.0}, std::nullopt}), PreconditionError);
}

TEST(Identities, SinAndCosThroughB) {
  Rng rng(67);
  const OscillatorSystem sys = testing::random_oscillator_chain(16, rng);
  const Eigen::MatrixXcd b = dense_b(sys);
  const Eigen::MatrixXcd a = testing::eigen_from_rows(sys.a());
  const Eigen::MatrixXcd btb = b.adjoint() * b;
  const std::vector<double> c = {0.3, -1.1, 0.7, 0.25, -0.05};
  EXPECT_LE((b * matrix_poly(btb, c) * b.adjoint() - a * matrix_poly(a, c)).cwiseAbs().maxCoeff(), 1e-9);
  EXPECT_LE((matrix_poly(btb, c) * b.adjoint() - b.adjoint() * matrix_poly(a, c)).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(Identities, HSquaredBlocks) {
  Rng rng(68);
  const OscillatorSystem sys = testing::random_oscillator_chain(8, rng);
  const Eigen::MatrixXcd h = dense_h(sys);
  const Eigen::MatrixXcd h2 = h * h;
  EXPECT_LE((h2.topLeftCorner(8, 8) - testing::eigen_from_rows(sys.a())).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(NormBound, DerivedBoundHoldsStatedOneDoesNot) {
  // Uniform chain with wall springs: |H|^2 = lambda_max(A) approaches 5,
  // above N(r0) kappa_max / m_min = 3.
  std::vector<Spring> springs;
  for (Site i = 0; i < 32; ++i) {
    springs.push_back({i, i, 1.0});
    if (i + 1 < 32) {
      springs.push_back({i, i + 1, 1.0});
    }
  }
  const OscillatorSystem sys = OscillatorSystem::build(SiteGraph::chain(32), std::vector<double>(32, 1.0), springs, 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(dense_h(sys));
  const double h_norm = eig.eigenvalues().cwiseAbs().maxCoeff();
  EXPECT_LE(h_norm, sys.h_norm_bound() + 1e-12);
  EXPECT_GT(h_norm, std::sqrt(3.0));
}

TEST(NormBound, RandomSystems) {
  Rng rng(69);
  for (int trial = 0; trial < 5; ++trial) {
    const OscillatorSystem sys = testing::random_oscillator_chain(12, rng);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(dense_h(sys));
    EXPECT_LE(eig.eigenvalues().cwiseAbs().maxCoeff(), sys.h_norm_bound() + 1e-12);
  }
}

TEST(Degree, LinearInTimeAndLog) {
  const OscillatorSystem lazy(
      SiteGraph::chain(1 << 20), [](Site) { return 1.0; },
      [](Site i, std::vector<std::pair<Site, double>>& out) {
        if (i > 0) {
          out.emplace_back(i - 1, 1.0);
        }
        out.emplace_back(i, 1.0);
        if (i + 1 < (1 << 20)) {
          out.emplace_back(i + 1, 1.0);
        }
      },
      1.0, {1.0, 1.0, std::nullopt});
  const double scale = std::sqrt(3.0 * 1.0 / 1.0);
  for (double t : {1.0, 4.0, 16.0}) {
    for (double eps : {1e-2, 1e-6}) {
      const int d = oscillator_degree(lazy, t, eps);
      EXPECT_LE(d, std::exp(1.0) / std::sqrt(2.0) * t * scale + std::log2(1.0 / eps) + 6.0);
    }
  }
}

TEST(Evolution, NormConserved) {
  Rng rng(70);
  const OscillatorSystem sys = testing::random_oscillator_chain(10, rng);
  const DenseVector psi = psi0_dense(sys, testing::random_oscillator_state(sys, rng));
  for (double t : {0.5, 2.0, 7.0}) {
    EXPECT_NEAR(testing::evolve_hermitian(dense_h(sys), t, as_eigen(psi)).norm(), 1.0, 1e-12);
  }
}

TEST(Evolution, OracleMatchesDense) {
  Rng rng(71);
  const OscillatorSystem sys = testing::random_oscillator_chain(12, rng);
  const OscillatorState s = testing::random_oscillator_state(sys, rng);
  const Eigen::VectorXcd psi = as_eigen(psi0_dense(sys, s));
  for (double t : {0.0, 1.0, 3.5}) {
    const VectorOracle w = evolved_state_oracle(sys, s, t, 1e-9);
    const Eigen::VectorXcd exact = testing::evolve_hermitian(dense_h(sys), t, psi);
    for (Site e = 0; e < sys.extended_dimension(); ++e) {
      EXPECT_LE(std::abs(w.query(e) - exact[e]), 2e-9) << t << ' ' << e;
    }
  }
}

TEST(Evolution, SingleOscillatorClosedForm) {
  const OscillatorSystem sys = single_oscillator();
  const OscillatorState s{{1.0}, {0.0}, std::nullopt};
  for (double t : {0.3, 1.0, std::numbers::pi / 2, 4.0}) {
    const VectorOracle w = evolved_state_oracle(sys, s, t, 1e-10);
    EXPECT_NEAR(w.query(0).real(), -std::sin(t), 1e-9);
    EXPECT_NEAR(std::abs(w.query(1) - Complex(0.0, std::cos(t))), 0.0, 1e-9);
  }
}

TEST(Observable, SingleOscillatorAtQuarterPeriod) {
  const OscillatorSystem sys = single_oscillator();
  const auto r = estimate_observable(sys, {{1.0}, {0.0}, std::nullopt}, sq_access_from_dense({1.0, 0.0}),
                                     std::numbers::pi / 2, 0.05, 0.05, 3);
  EXPECT_LE(std::abs(r.value - Complex(-1.0)), 0.05);
}

TEST(Observable, ZeroTimeIsInnerProductWithPsi0) {
  Rng rng(72);
  const OscillatorSystem sys = testing::random_oscillator_chain(8, rng);
  const OscillatorState s = testing::random_oscillator_state(sys, rng);
  const DenseVector v = testing::random_vector(sys.extended_dimension(), rng);
  const Complex truth = as_eigen(v).dot(as_eigen(psi0_dense(sys, s)));
  const auto r = estimate_observable(sys, s, sq_access_from_dense(v), 0.0, 0.1, 0.05, 4);
  EXPECT_LE(std::abs(r.value - truth), 0.1);
}

TEST(Observable, ChainAgainstDense) {
  Rng rng(73);
  const OscillatorSystem sys = testing::random_oscillator_chain(16, rng);
  const OscillatorState s = testing::random_oscillator_state(sys, rng);
  const DenseVector v = testing::random_vector(sys.extended_dimension(), rng);
  const VectorOracle vo = sq_access_from_dense(v);
  const double t = 3.0;
  const Complex truth = as_eigen(v).dot(testing::evolve_hermitian(dense_h(sys), t, as_eigen(psi0_dense(sys, s))));
  int ok = 0;
  const int runs = 20;
  for (int run = 0; run < runs; ++run) {
    ok += std::abs(estimate_observable(sys, s, vo, t, 0.1, 0.1, split_seed(9, run)).value - truth) <= 0.1;
  }
  EXPECT_GE(ok, 17);
}

TEST(Observable, ZetaLimit) {
  const OscillatorSystem sys = single_oscillator();
  EXPECT_THROW(estimate_observable(sys, {{1.0}, {0.0}, std::nullopt}, perturbed_sq_access({0.6, 0.8}, 0.01), 1.0, 0.1,
                                   0.1, 1),
               PreconditionError);
}

TEST(EnergyEstimate, FullSetsConserveEnergy) {
  Rng rng(74);
  const OscillatorSystem sys = testing::random_oscillator_chain(10, rng);
  const OscillatorState s = testing::random_oscillator_state(sys, rng);
  std::vector<Site> all_masses;
  std::vector<std::pair<Site, Site>> all_springs;
  for (Site i = 0; i < 10; ++i) {
    all_masses.push_back(i);
    all_springs.emplace_back(i, i);
    if (i + 1 < 10) {
      all_springs.emplace_back(i, i + 1);
    }
  }
  for (double t : {0.0, 2.0}) {
    const auto r = estimate_energy(sys, s, all_masses, all_springs, t, 0.1, 0.1, 5);
    EXPECT_LE(std::abs(r.value - 1.0), 0.1) << t;
  }
}

TEST(EnergyEstimate, EmptySetsGiveZero) {
  Rng rng(75);
  const OscillatorSystem sys = testing::random_oscillator_chain(6, rng);
  const auto r = estimate_energy(sys, testing::random_oscillator_state(sys, rng), {}, {}, 1.0, 0.1, 0.1, 6);
  EXPECT_EQ(r.value, Complex(0.0));
}

TEST(EnergyEstimate, HalfChainKinetic) {
  Rng rng(76);
  const OscillatorSystem sys = testing::random_oscillator_chain(16, rng);
  const OscillatorState s = testing::random_oscillator_state(sys, rng);
  std::vector<Site> left = {0, 1, 2, 3, 4, 5, 6, 7};
  const Eigen::VectorXcd psi = as_eigen(psi0_dense(sys, s));
  for (double t : {0.0, 1.0, 2.0}) {
    const Eigen::VectorXcd evolved = testing::evolve_hermitian(dense_h(sys), t, psi);
    const double truth = evolved.head(8).squaredNorm();
    int ok = 0;
    for (int run = 0; run < 10; ++run) {
      ok += std::abs(estimate_energy(sys, s, left, {}, t, 0.1, 0.1, split_seed(10, run)).value - truth) <= 0.1;
    }
    EXPECT_GE(ok, 8) << t;
  }
}

}  // namespace
}  // namespace glsim
