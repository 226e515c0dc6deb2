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


#include "support.hpp"

#include <cmath>
#include <map>

#include <Eigen/Eigenvalues>

namespace glsim::testing {

LocalMatrixOracle random_local_matrix(const SiteGraph& g, double r0, Rng& rng, MatrixFlavor flavor, double density) {
  const Site n = g.sites();
  std::map<std::pair<Site, Site>, Complex> entries;
  auto draw = [&] { return Complex{rng.normal(), rng.normal()}; };
  for (Site i = 0; i < n; ++i) {
    for (Site j : g.ball(i, r0)) {
      if (flavor != MatrixFlavor::general && j < i) {
        continue;
      }
      if (rng.uniform() >= density) {
        continue;
      }
      Complex v = draw();
      if (flavor == MatrixFlavor::hermitian) {
        if (i == j) {
          v = v.real();
        }
        entries[{i, j}] = v;
        entries[{j, i}] = std::conj(v);
      } else if (flavor == MatrixFlavor::anti_hermitian) {
        if (i == j) {
          v = Complex{0.0, v.imag()};
        }
        entries[{i, j}] = v;
        entries[{j, i}] = -std::conj(v);
      } else {
        entries[{i, j}] = v;
      }
    }
  }
  std::vector<double> row_sum(static_cast<std::size_t>(n), 0.0);
  std::vector<double> col_sum(static_cast<std::size_t>(n), 0.0);
  for (const auto& [ij, v] : entries) {
    row_sum[static_cast<std::size_t>(ij.first)] += std::abs(v);
    col_sum[static_cast<std::size_t>(ij.second)] += std::abs(v);
  }
  double scale = 0.0;
  for (Site i = 0; i < n; ++i) {
    scale = std::max({scale, row_sum[static_cast<std::size_t>(i)], col_sum[static_cast<std::size_t>(i)]});
  }
  scale = scale > 0.0 ? 1.0 / scale : 1.0;
  std::vector<std::vector<MatrixEntry>> rows(static_cast<std::size_t>(n));
  for (const auto& [ij, v] : entries) {
    rows[static_cast<std::size_t>(ij.first)].push_back({ij.second, v * scale});
  }
  LocalMatrixOracle::Options options;
  options.check_locality = true;
  if (flavor == MatrixFlavor::hermitian) {
    options.symmetry = LocalMatrixOracle::Symmetry::hermitian;
  } else if (flavor == MatrixFlavor::anti_hermitian) {
    options.symmetry = LocalMatrixOracle::Symmetry::anti_hermitian;
  }
  return matrix_from_rows(g, r0, std::move(rows), 1.0, options);
}

namespace {

double hashed(Site key, std::uint64_t salt) {
  const std::uint64_t h = split_seed(static_cast<std::uint64_t>(key), salt);
  return (static_cast<double>(h >> 11) * 0x1.0p-53 - 0.5) * (2.0 / 3.0);
}

}  // namespace

LocalMatrixOracle hash_chain(Site n_sites) {
  const SiteGraph g = SiteGraph::chain(n_sites, Boundary::periodic);
  auto rows = [n_sites](Site i, std::vector<MatrixEntry>& out) {
    const Site left = (i + n_sites - 1) % n_sites;
    const Site right = (i + 1) % n_sites;
    std::vector<MatrixEntry> row = {{left, hashed(left % 64, 2)}, {i, hashed(i % 64, 1)}, {right, hashed(i % 64, 2)}};
    std::sort(row.begin(), row.end(), [](const MatrixEntry& x, const MatrixEntry& y) { return x.index < y.index; });
    out.insert(out.end(), row.begin(), row.end());
  };
  LocalMatrixOracle::Options options;
  options.symmetry = LocalMatrixOracle::Symmetry::hermitian;
  return LocalMatrixOracle(g, 1.0, rows, 1.0, options);
}

DenseVector random_vector(Site n, Rng& rng, bool normalize) {
  DenseVector u(static_cast<std::size_t>(n));
  double norm2 = 0.0;
  for (Complex& z : u) {
    z = {rng.normal(), rng.normal()};
    norm2 += std::norm(z);
  }
  if (normalize) {
    for (Complex& z : u) {
      z /= std::sqrt(norm2);
    }
  }
  return u;
}

Eigen::MatrixXcd eigen_from_rows(const LocalMatrixOracle& a) {
  const Site n = a.dimension();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  std::vector<MatrixEntry> row;
  for (Site i = 0; i < n; ++i) {
    a.row(i, row);
    for (const MatrixEntry& e : row) {
      m(i, e.index) += e.value;
    }
  }
  return m;
}

Eigen::VectorXcd reference_poly_apply(const Eigen::MatrixXcd& a, const Polynomial& p, const Eigen::VectorXcd& u) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(u.size());
  const auto& c = p.coefficients();
  if (p.basis() == Basis::monomial) {
    Eigen::VectorXcd power = u;
    for (std::size_t k = 0; k < c.size(); ++k) {
      out += c[k] * power;
      power = a * power;
    }
    return out;
  }
  const Eigen::Index n = a.rows();
  const Eigen::MatrixXcd x =
      (a - p.center() * Eigen::MatrixXcd::Identity(n, n)) / p.half_width();
  Eigen::VectorXcd t_prev = u;
  Eigen::VectorXcd t_cur = x * u;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k == 0) {
      out += c[0] * t_prev;
    } else if (k == 1) {
      out += c[1] * t_cur;
    } else {
      Eigen::VectorXcd next = 2.0 * (x * t_cur) - t_prev;
      t_prev = t_cur;
      t_cur = next;
      out += c[k] * t_cur;
    }
  }
  return out;
}

Polynomial random_polynomial(int degree, Basis basis, double alpha, Rng& rng) {
  std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
  for (Complex& z : c) {
    z = {rng.normal(), rng.normal()};
  }
  c.back() += 1.0;
  if (basis == Basis::monomial) {
    // Keep sum |c_k| alpha^k moderate so entries stay O(1).
    double scale = 1.0;
    for (Complex& z : c) {
      z *= scale;
      scale /= std::max(alpha, 1.0) * 1.5;
    }
    return Polynomial::monomial(std::move(c));
  }
  for (Complex& z : c) {
    z /= std::sqrt(static_cast<double>(degree) + 1.0);
  }
  return Polynomial::chebyshev(std::move(c), alpha);
}

std::vector<double> empirical(const std::vector<Site>& draws, Site dimension) {
  std::vector<double> freq(static_cast<std::size_t>(dimension), 0.0);
  for (Site s : draws) {
    freq[static_cast<std::size_t>(s)] += 1.0;
  }
  for (double& f : freq) {
    f /= static_cast<double>(draws.size());
  }
  return freq;
}

double tv(const std::vector<double>& p, const std::vector<double>& q) {
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    total += std::abs(p[i] - q[i]);
  }
  return 0.5 * total;
}

OscillatorSystem random_oscillator_chain(Site n, Rng& rng) {
  std::vector<double> masses(static_cast<std::size_t>(n));
  std::vector<Spring> springs;
  for (Site i = 0; i < n; ++i) {
    masses[static_cast<std::size_t>(i)] = 0.5 + rng.uniform();
    springs.push_back({i, i, 0.2 + 0.8 * rng.uniform()});
    if (i + 1 < n) {
      springs.push_back({i, i + 1, 0.2 + 0.8 * rng.uniform()});
    }
  }
  return OscillatorSystem::build(SiteGraph::chain(n), std::move(masses), springs, 1.0);
}

OscillatorState random_oscillator_state(const OscillatorSystem& sys, Rng& rng) {
  OscillatorState s;
  for (Site i = 0; i < sys.sites(); ++i) {
    s.x.push_back(rng.normal());
    s.xdot.push_back(rng.normal());
  }
  return s;
}

Eigen::MatrixXcd dense_b(const OscillatorSystem& sys) {
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(sys.sites(), sys.extended_dimension());
  std::vector<MatrixEntry> row;
  for (Site i = 0; i < sys.sites(); ++i) {
    sys.b_row(i, row);
    for (const MatrixEntry& e : row) {
      b(i, e.index) += e.value;
    }
  }
  return b;
}

Eigen::MatrixXcd dense_h(const OscillatorSystem& sys) {
  const Eigen::MatrixXcd b = dense_b(sys);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(sys.extended_dimension(), sys.extended_dimension());
  h.topRows(sys.sites()) = b;
  h.leftCols(sys.sites()) = b.adjoint();
  return h;
}

Eigen::VectorXcd evolve_hermitian(const Eigen::MatrixXcd& h, double t, const Eigen::VectorXcd& psi) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h);
  Eigen::VectorXcd phase(eig.eigenvalues().size());
  for (Eigen::Index k = 0; k < phase.size(); ++k) {
    phase[k] = std::exp(Complex{0.0, eig.eigenvalues()[k] * t});
  }
  return eig.eigenvectors() * phase.asDiagonal() * eig.eigenvectors().adjoint() * psi;
}

}  // namespace glsim::testing
