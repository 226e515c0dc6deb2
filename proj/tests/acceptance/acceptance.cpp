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


// Acceptance run: one PASS/FAIL line per criterion. Pass criterion numbers
// as arguments to run a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include "glsim/dense.hpp"
#include "glsim/embeddings.hpp"
#include "glsim/estimate.hpp"
#include "glsim/lightcone.hpp"
#include "glsim/oscillators.hpp"
#include "glsim/pde.hpp"
#include "glsim/sampling.hpp"
#include "support.hpp"

namespace glsim {
namespace {

using testing::eigen_from_rows;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Collects failed sub-checks and a few headline numbers.
class Verdict {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) {
      failures_.push_back(what);
    }
    failed_ += ok ? 0 : 1;
  }
  void note(const std::string& key, double value) {
    std::ostringstream s;
    s << key << '=' << value;
    notes_.push_back(s.str());
  }
  bool passed() const { return failed_ == 0; }
  std::string summary() const {
    std::string out;
    for (const std::string& n : notes_) {
      out += (out.empty() ? "" : " ") + n;
    }
    for (const std::string& f : failures_) {
      out += (out.empty() ? "" : "; ") + std::string("failed: ") + f;
    }
    if (failed_ > static_cast<int>(failures_.size())) {
      out += "; +" + std::to_string(failed_ - static_cast<int>(failures_.size())) + " more";
    }
    return out;
  }

 private:
  int failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

Eigen::VectorXcd as_eigen(const DenseVector& u) {
  return Eigen::Map<const Eigen::VectorXcd>(u.data(), static_cast<Eigen::Index>(u.size()));
}

// 1. Light-cone exactness.
void light_cone_exactness(Verdict& v) {
  Rng rng(101);
  std::vector<SiteGraph> graphs;
  for (int k = 0; k < 50; ++k) {
    graphs.push_back(SiteGraph::chain(128));
  }
  for (int k = 0; k < 20; ++k) {
    graphs.push_back(SiteGraph::grid({12, 12}));
  }
  std::size_t checked_zeros = 0;
  for (std::size_t m = 0; m < graphs.size(); ++m) {
    const SiteGraph& g = graphs[m];
    const LocalMatrixOracle a = testing::random_local_matrix(g, 1.0, rng);
    const Eigen::MatrixXcd dense = eigen_from_rows(a);
    Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(dense.rows(), dense.cols());
    for (int k = 0; k <= 16; ++k) {
      bool exact = true;
      for (Eigen::Index i = 0; i < power.rows(); ++i) {
        for (Eigen::Index j = 0; j < power.cols(); ++j) {
          if (g.distance(i, j) > k) {
            exact = exact && power(i, j) == Complex(0.0);
            ++checked_zeros;
          }
        }
      }
      v.check(exact, "matrix " + std::to_string(m) + " power " + std::to_string(k) + " leaks outside the cone");
      for (int probe = 0; probe < 4; ++probe) {
        const Site i = static_cast<Site>(rng.below(static_cast<std::uint64_t>(g.sites())));
        const SparseAccumulator row = row_power(a, i, k);
        bool inside = true;
        for (const MatrixEntry& e : row.entries) {
          inside = inside && g.distance(i, e.index) <= k;
        }
        v.check(inside, "row_power support outside ball");
      }
      power = power * dense;
    }
  }
  v.note("matrices", static_cast<double>(graphs.size()));
  v.note("zero_entries_checked", static_cast<double>(checked_zeros));
}

struct EntryInstance {
  double error = 0.0;
  double a_queries = 0.0;
  double a_budget = 0.0;
  double u_queries = 0.0;
  double u_budget = 0.0;
};

std::vector<EntryInstance> entry_instances() {
  Rng rng(202);
  std::vector<EntryInstance> out;
  for (int n = 0; n < 200; ++n) {
    const bool grid = n % 3 == 2;
    const SiteGraph g = grid ? SiteGraph::grid({4 + static_cast<Site>(rng.below(13)), 4 + static_cast<Site>(rng.below(13))},
                                               n % 2 ? Boundary::periodic : Boundary::open)
                             : SiteGraph::chain(16 + static_cast<Site>(rng.below(241)), n % 2 ? Boundary::periodic : Boundary::open);
    const bool hermitian = n % 2 == 0;
    const LocalMatrixOracle a = testing::random_local_matrix(
        g, 1.0, rng, hermitian ? testing::MatrixFlavor::hermitian : testing::MatrixFlavor::general);
    const int d = static_cast<int>(rng.below(33));
    const Polynomial p = testing::random_polynomial(d, hermitian ? Basis::chebyshev : Basis::monomial, a.norm_bound(), rng);
    const DenseVector u = testing::random_vector(g.sites(), rng);
    const Site i = static_cast<Site>(rng.below(static_cast<std::uint64_t>(g.sites())));
    const VectorOracle uo = query_access(u);
    const auto before = a.cost().snapshot().queries;
    const Complex got = entry_of_poly_apply(a, p, uo, i);
    EntryInstance e;
    e.a_queries = static_cast<double>(a.cost().snapshot().queries - before);
    e.u_queries = static_cast<double>(uo.cost().snapshot().queries);
    const double cone = static_cast<double>(g.locality(d));
    e.a_budget = 4.0 * d * d * cone * static_cast<double>(g.locality(1));
    e.u_budget = 4.0 * d * cone;
    const DenseVector truth = dense_poly_apply(dense_from_oracle(a), p, u);
    e.error = std::abs(got - truth[static_cast<std::size_t>(i)]);
    out.push_back(e);
  }
  return out;
}

// 2. Entry correctness.
void entry_correctness(Verdict& v) {
  double worst = 0.0;
  for (const EntryInstance& e : entry_instances()) {
    worst = std::max(worst, e.error);
  }
  v.check(worst <= 1e-8, "max abs error above 1e-8");
  v.note("instances", 200);
  v.note("max_abs_error", worst);
}

// 3. Query budgets and N independence.
void query_budget(Verdict& v) {
  double a_ratio = 0.0;
  double u_ratio = 0.0;
  for (const EntryInstance& e : entry_instances()) {
    // Degree 0 needs no matrix queries and a single u query.
    v.check(e.a_queries <= e.a_budget, "A queries over budget");
    v.check(e.u_queries <= std::max(e.u_budget, 1.0), "u queries over budget");
    if (e.a_budget > 0) {
      a_ratio = std::max(a_ratio, e.a_queries / e.a_budget);
      u_ratio = std::max(u_ratio, e.u_queries / e.u_budget);
    }
  }
  const LocalMatrixOracle small = testing::hash_chain(Site{1} << 10);
  const LocalMatrixOracle large = testing::hash_chain(Site{1} << 20);
  const Polynomial p = exp_poly(small.norm_bound(), 6.0, 1e-10);
  auto pattern = [](Site j) { return Complex(std::cos(0.3 * static_cast<double>(j % 64)), std::sin(0.7 * static_cast<double>(j % 64))); };
  const VectorOracle us(Site{1} << 10, pattern);
  const VectorOracle ul(Site{1} << 20, pattern);
  for (Site i : {Site{448}, Site{512}, Site{575}}) {
    v.check(entry_of_poly_apply(small, p, us, i) == entry_of_poly_apply(large, p, ul, i + (Site{1} << 19)),
            "entries differ between N = 2^10 and N = 2^20");
  }
  v.check(small.cost().snapshot().queries == large.cost().snapshot().queries, "A query counts depend on N");
  v.check(us.cost().snapshot().queries == ul.cost().snapshot().queries, "u query counts depend on N");
  v.note("max_A_ratio", a_ratio);
  v.note("max_u_ratio", u_ratio);
  v.note("A_queries_N_independent", static_cast<double>(small.cost().snapshot().queries));
}

// 4. EVT-GL estimation.
void evt_gl(Verdict& v) {
  const double eps = 0.1;
  const double delta = 0.05;
  Rng rng(404);
  int worst_plain = 0;
  int worst_zeta = 0;
  for (int inst = 0; inst < 5; ++inst) {
    const SiteGraph g = inst % 2 ? SiteGraph::grid({8, 8}) : SiteGraph::chain(64);
    const LocalMatrixOracle a = testing::random_local_matrix(g, 1.0, rng, testing::MatrixFlavor::hermitian);
    Polynomial p = Polynomial::constant(1.0);
    if (inst < 2) {
      std::vector<Complex> c(static_cast<std::size_t>(6 + 2 * inst) + 1, 0.0);
      c.back() = 1.0;
      p = Polynomial::chebyshev(c, a.norm_bound()).with_sup_bound(1.0);
    } else {
      p = exp_poly(a.norm_bound(), 0.5 * inst, eps / 2);
    }
    const DenseVector u = testing::random_vector(g.sites(), rng);
    const DenseVector w = testing::random_vector(g.sites(), rng);
    const Complex truth = as_eigen(w).dot(testing::reference_poly_apply(eigen_from_rows(a), p, as_eigen(u)));
    const VectorOracle exact = sq_access_from_dense(w);
    const VectorOracle noisy = perturbed_sq_access(w, eps / 9.0);
    int plain = 0;
    int zeta = 0;
    for (std::uint64_t run = 0; run < 100; ++run) {
      const std::uint64_t seed = split_seed(4000 + static_cast<std::uint64_t>(inst), run);
      plain += std::abs(evt_gl_estimate(a, p, query_access(u), exact, eps, delta, seed).value - truth) > eps;
      zeta += std::abs(evt_gl_estimate(a, p, query_access(u), noisy, eps, delta, seed).value - truth) > eps;
    }
    v.check(plain <= 10, "instance " + std::to_string(inst) + " exact-v failures " + std::to_string(plain));
    v.check(zeta <= 20, "instance " + std::to_string(inst) + " perturbed-v failures " + std::to_string(zeta));
    worst_plain = std::max(worst_plain, plain);
    worst_zeta = std::max(worst_zeta, zeta);
  }
  v.note("max_failures", worst_plain);
  v.note("max_failures_zeta", worst_zeta);
}

OscillatorSystem single_oscillator() {
  return OscillatorSystem::build(SiteGraph::chain(1), {1.0}, {{0, 0, 1.0}}, 0.0);
}

// 5. Oscillator observable.
void oscillator_observable(Verdict& v) {
  const double eps = 0.05;
  const double delta = 0.1;
  Rng rng(505);
  const OscillatorSystem sys = testing::random_oscillator_chain(16, rng);
  const OscillatorState s = testing::random_oscillator_state(sys, rng);
  const DenseVector w = testing::random_vector(sys.extended_dimension(), rng);
  const VectorOracle wo = sq_access_from_dense(w);
  const Eigen::VectorXcd psi = as_eigen(psi0_dense(sys, s));
  const Eigen::MatrixXcd h = testing::dense_h(sys);
  int worst = 100;
  for (double t : {0.5, 1.0, 3.0}) {
    const Complex truth = as_eigen(w).dot(testing::evolve_hermitian(h, t, psi));
    int ok = 0;
    for (std::uint64_t run = 0; run < 100; ++run) {
      ok += std::abs(estimate_observable(sys, s, wo, t, eps, delta, split_seed(5000, run)).value - truth) <= eps;
    }
    v.check(ok >= 90, "t = " + std::to_string(t) + " passes " + std::to_string(ok) + "/100");
    worst = std::min(worst, ok);
  }
  // x(0) = 1, xdot(0) = 0, m = kappa = 1: E = 1/2, the spring slot holds i x(t).
  const double t = std::numbers::pi / 2;
  const OscillatorState rest{{1.0}, {0.0}, std::nullopt};
  const Complex x = estimate_observable(single_oscillator(), rest, sq_access_from_dense({0.0, 1.0}), t, eps, delta, 55).value;
  const Complex xdot = estimate_observable(single_oscillator(), rest, sq_access_from_dense({1.0, 0.0}), t, eps, delta, 56).value;
  v.check(std::abs(x - Complex(0.0, std::cos(t))) <= eps, "closed-form position");
  v.check(std::abs(xdot - Complex(-std::sin(t))) <= eps, "closed-form velocity");
  v.note("min_within_eps_of_100", worst);
  v.note("x_at_quarter_period", x.imag());
}

Eigen::MatrixXcd matrix_poly(const Eigen::MatrixXcd& m, const std::vector<double>& c) {
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(m.rows(), m.cols());
  for (auto k = c.size(); k-- > 0;) {
    acc = acc * m + c[k] * Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  }
  return acc;
}

// 6. Energy estimation.
void energy(Verdict& v) {
  const double eps = 0.1;
  const double delta = 0.1;
  Rng rng(606);
  const OscillatorSystem sys = testing::random_oscillator_chain(16, rng);
  const OscillatorState s = testing::random_oscillator_state(sys, rng);
  std::vector<Site> all_masses;
  std::vector<std::pair<Site, Site>> all_springs;
  for (Site i = 0; i < 16; ++i) {
    all_masses.push_back(i);
    all_springs.emplace_back(i, i);
    if (i + 1 < 16) {
      all_springs.emplace_back(i, i + 1);
    }
  }
  double worst_total = 0.0;
  for (double t : {0.0, 1.5, 4.0}) {
    const Complex total = estimate_energy(sys, s, all_masses, all_springs, t, eps, delta, 60).value;
    v.check(std::abs(total - 1.0) <= eps, "full set at t = " + std::to_string(t));
    worst_total = std::max(worst_total, std::abs(total - 1.0));
  }
  const std::vector<Site> left = {0, 1, 2, 3, 4, 5, 6, 7};
  const double t = 1.0;
  const double truth = testing::evolve_hermitian(testing::dense_h(sys), t, as_eigen(psi0_dense(sys, s))).head(8).squaredNorm();
  int ok = 0;
  for (std::uint64_t run = 0; run < 100; ++run) {
    ok += std::abs(estimate_energy(sys, s, left, {}, t, eps, delta, split_seed(6000, run)).value - truth) <= eps;
  }
  v.check(ok >= 90, "half-chain kinetic passes " + std::to_string(ok) + "/100");

  // Taylor coefficients of sin.
  std::vector<double> sin_c(12, 0.0);
  double fact = 1.0;
  for (std::size_t k = 1; k < sin_c.size(); ++k) {
    fact *= static_cast<double>(k);
    sin_c[k] = k % 2 ? ((k / 2) % 2 ? -1.0 : 1.0) / fact : 0.0;
  }
  double identity_error = 0.0;
  for (Site n : {Site{4}, Site{16}}) {
    const OscillatorSystem small = testing::random_oscillator_chain(n, rng);
    const Eigen::MatrixXcd b = testing::dense_b(small);
    const Eigen::MatrixXcd a = eigen_from_rows(small.a());
    identity_error = std::max(identity_error, (b * b.adjoint() - a).cwiseAbs().maxCoeff());
    identity_error = std::max(identity_error, (b * matrix_poly(b.adjoint() * b, sin_c) * b.adjoint() - a * matrix_poly(a, sin_c))
                                                  .cwiseAbs()
                                                  .maxCoeff());
  }
  v.check(identity_error <= 1e-9, "dense identities");
  v.note("max_full_set_error", worst_total);
  v.note("half_chain_within_eps_of_100", ok);
  v.note("identity_error", identity_error);
}

LocalMatrixOracle hopping_ring(Site n) {
  LocalMatrixOracle::Options options;
  options.symmetry = LocalMatrixOracle::Symmetry::anti_hermitian;
  return LocalMatrixOracle(SiteGraph::chain(n, Boundary::periodic), 1.0, [n](Site i, std::vector<MatrixEntry>& out) {
    const Site l = (i + n - 1) % n;
    const Site r = (i + 1) % n;
    out.push_back({std::min(l, r), Complex{0.0, 1.0}});
    out.push_back({std::max(l, r), Complex{0.0, 1.0}});
  }, 2.0, options);
}

// 7. Sampling.
void sampling(Verdict& v) {
  const Site n = 64;
  const double t = 2.0;
  const LocalMatrixOracle a = hopping_ring(n);
  DenseVector psi(static_cast<std::size_t>(n), 0.0);
  psi[0] = 1.0;
  EvolvedSamplerParams params;
  params.eps = 0.01;
  const EvolvedSampler s(a, t, sq_access_from_dense(psi), params);
  const std::size_t count = 100000;
  std::vector<Site> sites;
  std::uint64_t trials = 0;
  for (const RejectionOutcome& out : s.sample_many(count, 707)) {
    trials += out.trials;
    if (out.site) {
      sites.push_back(*out.site);
    }
  }
  const Eigen::MatrixXcd dense = eigen_from_rows(a);
  const Eigen::VectorXcd exact = testing::evolve_hermitian(Complex{0.0, -1.0} * dense, t, as_eigen(psi));
  std::vector<double> target(static_cast<std::size_t>(n));
  for (Site i = 0; i < n; ++i) {
    target[static_cast<std::size_t>(i)] = std::norm(exact[i]) / exact.squaredNorm();
  }
  const double tv = testing::tv(testing::empirical(sites, n), target);
  const double tv_limit = 2.0 * params.eps / 1.0 + 3.0 * std::sqrt(static_cast<double>(n) / static_cast<double>(count));
  v.check(sites.size() == count, "sampler failures");
  v.check(tv <= tv_limit, "empirical TV above limit");

  Eigen::VectorXcd approx(n);
  for (Site i = 0; i < n; ++i) {
    approx[i] = s.evolved().query(i);
  }
  const double expected = approx.squaredNorm() / s.phi();
  const double rate = static_cast<double>(sites.size()) / static_cast<double>(trials);
  v.check(std::abs(rate - expected) <= 2.0 * 0.0 + 0.01, "acceptance rate");
  for (Site i = 0; i < n; ++i) {
    v.check(std::norm(approx[i]) <= s.phi() * s.oversampler().proposal.mass(i) * (1.0 + 1e-12),
            "oversampling inequality at " + std::to_string(i));
  }
  v.note("tv", tv);
  v.note("tv_limit", tv_limit);
  v.note("acceptance", rate);
  v.note("expected_acceptance", expected);
}

ReversibleCircuit random_classical(int n, int length, Rng& rng) {
  std::vector<Gate> gates;
  for (int l = 0; l < length; ++l) {
    std::vector<int> q(static_cast<std::size_t>(n));
    std::iota(q.begin(), q.end(), 0);
    for (int k = n - 1; k > 0; --k) {
      std::swap(q[static_cast<std::size_t>(k)], q[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(k) + 1))]);
    }
    const int kind = static_cast<int>(rng.below(3));
    if (kind == 0) {
      gates.push_back({Gate::Kind::x, {q[0]}});
    } else if (kind == 1) {
      gates.push_back({Gate::Kind::cnot, {q[0], q[1]}});
    } else {
      gates.push_back({Gate::Kind::toffoli, {q[0], q[1], q[2]}});
    }
  }
  return ReversibleCircuit(n, gates);
}

Eigen::MatrixXd permutation_matrix(const std::vector<Site>& perm) {
  const auto n = static_cast<Eigen::Index>(perm.size());
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index z = 0; z < n; ++z) {
    p(perm[static_cast<std::size_t>(z)], z) = 1.0;
  }
  return p;
}

// 8. Short-time embedding.
void short_embedding(Verdict& v) {
  Rng rng(808);
  const int length = 6;
  const ReversibleCircuit c = random_classical(3, length, rng);
  const ClockHamiltonian h = fk_classical(c);
  const auto maps = cumulative_permutations(c);
  const Site basis = c.basis_size();
  const Site slots = h.clock_slots;
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(slots * basis, slots * basis);
  for (Site l = 0; l < slots; ++l) {
    w.block(l * basis, l * basis, basis, basis) = permutation_matrix(maps[static_cast<std::size_t>(l)]);
  }
  Eigen::MatrixXd j = 2.0 * Eigen::MatrixXd::Identity(slots, slots);
  for (Site l = 0; l + 1 < slots; ++l) {
    j(l, l + 1) = j(l + 1, l) = -1.0;
  }
  const Eigen::MatrixXd jw = Eigen::kroneckerProduct(j, Eigen::MatrixXd::Identity(basis, basis));
  const double factor_error = (w * jw * w.transpose() - eigen_from_rows(*h.generator).real()).cwiseAbs().maxCoeff();
  v.check(factor_error <= 1e-10, "W J W^T != A_FK");

  const double t_max = 8.0 * length * length * std::log(length + 2.0);
  const ReadoutScan scan = find_readout_time(length, t_max, 10000);
  v.check(scan.success && scan.overlap >= 1.0 / 32.0, "no readout time on the grid");
  double dist_error = 0.0;
  for (Site start = 0; start < basis; ++start) {
    DenseVector psi0(static_cast<std::size_t>(basis), 0.0);
    psi0[static_cast<std::size_t>(start)] = 1.0;
    const EmbeddedRun run = simulate_embedded_circuit(h, psi0, scan.t_star);
    const DenseVector out = simulate_circuit(c, psi0);
    for (Site z = 0; z < basis; ++z) {
      dist_error = std::max(dist_error, std::abs(run.last_distribution[static_cast<std::size_t>(z)] -
                                                 std::norm(out[static_cast<std::size_t>(z)])));
    }
  }
  v.check(dist_error <= 1e-9, "last-slice distribution differs from circuit output");
  v.note("factorization_error", factor_error);
  v.note("t_star", scan.t_star);
  v.note("overlap", scan.overlap);
  v.note("distribution_error", dist_error);
}

Eigen::MatrixXd transposition_product(const std::vector<Site>& ks, Site dim) {
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(dim, dim);
  for (Site k : ks) {
    Eigen::MatrixXd swap = Eigen::MatrixXd::Identity(dim, dim);
    swap(k, k) = swap(k + 1, k + 1) = 0.0;
    swap(k, k + 1) = swap(k + 1, k) = 1.0;
    p = swap * p;
  }
  return p;
}

// 9. Long-time embedding.
void long_embedding(Verdict& v) {
  const double s = 1.0 / std::sqrt(2.0);
  const auto hd = dilated_hadamard_matrix();
  double subspace_error = 0.0;
  for (int target = 0; target < 2; ++target) {
    const double sign = target == 0 ? 1.0 : -1.0;
    const std::vector<double> expected = {s * s, -s * s, sign * s * s, -sign * s * s};
    for (std::size_t r = 0; r < 4; ++r) {
      const double out = hd[r][static_cast<std::size_t>(2 * target)] * s - hd[r][static_cast<std::size_t>(2 * target + 1)] * s;
      subspace_error = std::max(subspace_error, std::abs(out - expected[r]));
    }
  }
  v.check(subspace_error <= 1e-12, "H_dil subspace identity");

  const ReversibleCircuit c = ReversibleCircuit::parse("QUBITS 2\nCNOT 0 1\nH 1\nX 0\nCNOT 1 0\nH 1\n");
  const ClockHamiltonian dil = fk_long_local(c);
  const Eigen::MatrixXcd a = eigen_from_rows(*dil.generator);
  double max_off = -1.0;
  double max_row = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    double row = 0.0;
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (i != k) {
        max_off = std::max(max_off, a(i, k).real());
        v.check(a(i, k).imag() == 0.0, "complex off-diagonal");
        row += std::abs(a(i, k));
      }
    }
    max_row = std::max(max_row, row);
  }
  v.check(max_off <= 0.0, "positive off-diagonal");
  v.check(max_row <= 1.0 + 2.0 / std::sqrt(2.0) + 1e-12, "off-diagonal row sum");

  const ClockHamiltonian plain = fk_long_undilated(c);
  Rng rng(909);
  const DenseVector psi0 = testing::random_vector(4, rng, true);
  double dyn_error = 0.0;
  for (double t : {0.5, 4.0, 17.0}) {
    const EmbeddedRun x = simulate_embedded_circuit(dil, psi0, t);
    const EmbeddedRun y = simulate_embedded_circuit(plain, psi0, t);
    for (Site m = 0; m < plain.clock_slots; ++m) {
      for (Site z = 0; z < 4; ++z) {
        const Complex minus = (x.state[static_cast<std::size_t>(dil.index(m, 2 * z))] -
                               x.state[static_cast<std::size_t>(dil.index(m, 2 * z + 1))]) * s;
        dyn_error = std::max(dyn_error, std::abs(minus - y.state[static_cast<std::size_t>(plain.index(m, z))]));
      }
    }
  }
  v.check(dyn_error <= 1e-9, "|->-subspace dynamics");

  const std::vector<std::pair<Gate, int>> gates = {{{Gate::Kind::x, {0}}, 2},          {{Gate::Kind::x, {1}}, 3},
                                                   {{Gate::Kind::cnot, {0, 1}}, 2},    {{Gate::Kind::cnot, {1, 0}}, 2},
                                                   {{Gate::Kind::cnot, {2, 0}}, 3},    {{Gate::Kind::toffoli, {0, 1, 2}}, 3},
                                                   {{Gate::Kind::toffoli, {2, 0, 1}}, 3}, {{Gate::Kind::toffoli, {1, 3, 0}}, 4}};
  for (const auto& [g, n] : gates) {
    const Site dim = Site{1} << n;
    v.check(transposition_product(adjacent_transposition_decomposition(g, n), dim) ==
                permutation_matrix(gate_permutation(g, n)),
            "transpositions of " + g.to_string());
  }
  v.note("subspace_error", subspace_error);
  v.note("max_offdiag", max_off);
  v.note("max_row_sum", max_row);
  v.note("dynamics_error", dyn_error);
}

// 10. PDE front-ends.
void pde(Verdict& v) {
  Rng rng(1010);
  double norm_drift = 0.0;
  double adv_ratio = 0.0;
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t dims = 1 + static_cast<std::size_t>(trial % 3);
    std::vector<double> vel(dims);
    for (double& x : vel) {
      x = 4.0 * rng.uniform() - 2.0;
    }
    const double a = 0.2 + rng.uniform();
    const Site n = dims == 3 ? 4 : 6;
    const LocalMatrixOracle op = advection_hamiltonian(vel, a, n, trial % 2 ? Boundary::open : Boundary::periodic);
    const DenseMatrix dense = dense_from_oracle(op);
    double v_max = 0.0;
    for (double x : vel) {
      v_max = std::max(v_max, std::abs(x));
    }
    const double bound = static_cast<double>(dims) * v_max / a;
    v.check(spectral_norm(dense) <= bound + 1e-12, "advection norm bound");
    adv_ratio = std::max(adv_ratio, spectral_norm(dense) / bound);
    const DenseVector u = testing::random_vector(op.dimension(), rng);
    const DenseMatrix gen(Complex{0.0, -1.0} * dense.matrix());
    norm_drift = std::max(norm_drift, std::abs(as_eigen(dense_evolve(gen, 1.3, u)).norm() - as_eigen(u).norm()));
  }
  v.check(norm_drift <= 1e-10, "advection norm drift");

  double se_ratio = 0.0;
  for (int dims = 1; dims <= 3; ++dims) {
    const Site side = dims == 3 ? 4 : 7;
    const SiteGraph g = dims == 1 ? SiteGraph::chain(side, Boundary::periodic)
                                  : SiteGraph::grid(std::vector<Site>(static_cast<std::size_t>(dims), side), Boundary::periodic);
    std::vector<double> pot(static_cast<std::size_t>(g.sites()));
    double v_max = 0.0;
    for (double& x : pot) {
      x = 6.0 * rng.uniform() - 3.0;
      v_max = std::max(v_max, std::abs(x));
    }
    const double a = 0.3;
    const LocalMatrixOracle op = schrodinger_hamiltonian(laplacian_oracle(g), pot, a);
    const double bound = (2.0 * dims + 1.0) * 2.0 * dims / (a * a) + v_max;
    const double norm = spectral_norm(dense_from_oracle(op));
    v.check(norm <= bound + 1e-9, "Schrodinger norm bound");
    se_ratio = std::max(se_ratio, norm / bound);
  }

  double wave_error = 0.0;
  for (Boundary b : {Boundary::open, Boundary::periodic}) {
    const LocalMatrixOracle lap = laplacian_oracle(SiteGraph::grid({4, 5}, b));
    const double c = 1.7;
    const double a = 0.4;
    const OscillatorSystem sys = wave_to_oscillators(lap, c, a);
    wave_error = std::max(wave_error, (eigen_from_rows(sys.a()) - (c * c / (a * a)) * eigen_from_rows(lap)).cwiseAbs().maxCoeff());
  }
  v.check(wave_error <= 1e-10, "wave A != (c^2/a^2) L");
  v.note("advection_norm_drift", norm_drift);
  v.note("advection_norm_over_bound", adv_ratio);
  v.note("schrodinger_norm_over_bound", se_ratio);
  v.note("wave_error", wave_error);
}

// 11. Scaling exponent.
void scaling(Verdict& v) {
  const Site n = Site{1} << 16;
  const OscillatorSystem sys(
      SiteGraph::chain(n), [](Site) { return 1.0; },
      [n](Site i, std::vector<std::pair<Site, double>>& out) {
        if (i > 0) {
          out.emplace_back(i - 1, 1.0);
        }
        out.emplace_back(i, 1.0);
        if (i + 1 < n) {
          out.emplace_back(i + 1, 1.0);
        }
      },
      1.0, {1.0, 1.0, std::nullopt});
  // One displaced mass in the bulk; the probe is uniform over the velocity
  // slots so that samples land on distinct entries.
  const Site mid = n / 2;
  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  x[static_cast<std::size_t>(mid)] = 1.0;
  const OscillatorState state{x, std::vector<double>(static_cast<std::size_t>(n), 0.0), std::nullopt};
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  const VectorOracle probe =
      VectorOracle(sys.extended_dimension(), [n, amp](Site j) { return Complex(j < n ? amp : 0.0); })
          .with_sampler([n](Rng& rng) { return static_cast<Site>(rng.below(static_cast<std::uint64_t>(n))); }, 0.0)
          .with_norm(1.0);
  std::vector<double> log_t;
  std::vector<double> log_s;
  double t16 = 0.0;
  for (double t : {2.0, 4.0, 8.0, 16.0}) {
    const auto start = Clock::now();
    estimate_observable(sys, state, probe, t, 0.1, 0.1, 1111, EstimateOptions{1});
    const double secs = seconds_since(start);
    log_t.push_back(std::log(t));
    log_s.push_back(std::log(secs));
    v.note("wall_t" + std::to_string(static_cast<int>(t)), secs);
    t16 = secs;
  }
  const double mt = std::accumulate(log_t.begin(), log_t.end(), 0.0) / 4.0;
  const double ms = std::accumulate(log_s.begin(), log_s.end(), 0.0) / 4.0;
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    num += (log_t[k] - mt) * (log_s[k] - ms);
    den += (log_t[k] - mt) * (log_t[k] - mt);
  }
  const double slope = num / den;
  v.check(slope <= 3.5, "fitted exponent above 3.5");
  v.check(t16 < 300.0, "t = 16 slower than 5 minutes");
  v.note("exponent", slope);
}

struct Criterion {
  int id;
  const char* name;
  double time_limit;
  std::function<void(Verdict&)> run;
};

}  // namespace
}  // namespace glsim

int main(int argc, char** argv) {
  using namespace glsim;
  const double none = 0.0;
  const std::vector<Criterion> all = {
      {1, "light-cone exactness", 30.0, light_cone_exactness},
      {2, "entry correctness", 60.0, entry_correctness},
      {3, "query budgets", none, query_budget},
      {4, "EVT-GL estimation", 300.0, evt_gl},
      {5, "oscillator observable", none, oscillator_observable},
      {6, "energy estimation", none, energy},
      {7, "sampling", none, sampling},
      {8, "short-time embedding", 60.0, short_embedding},
      {9, "long-time embedding", none, long_embedding},
      {10, "PDE front-ends", none, pde},
      {11, "scaling exponent", none, scaling},
  };
  std::vector<int> wanted;
  for (int k = 1; k < argc; ++k) {
    wanted.push_back(std::atoi(argv[k]));
  }
  int failed = 0;
  for (const Criterion& c : all) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) {
      continue;
    }
    Verdict v;
    const auto start = Clock::now();
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.check(false, std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(start);
    if (c.time_limit > 0.0) {
      v.check(secs < c.time_limit, "runtime limit " + std::to_string(c.time_limit) + " s");
    }
    failed += v.passed() ? 0 : 1;
    std::printf("criterion %2d %-22s %s  [%.2f s] %s\n", c.id, c.name, v.passed() ? "PASS" : "FAIL", secs,
                v.summary().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
