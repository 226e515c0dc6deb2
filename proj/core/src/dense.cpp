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


#include "glsim/dense.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>

#include <Eigen/Eigenvalues>

namespace glsim {

namespace {

std::atomic<Site> configured_cap{0};

void check_cap(Site n) {
  if (n > dense_cap()) {
    throw CapacityError("dimension " + std::to_string(n) + " exceeds the dense cap " + std::to_string(dense_cap()));
  }
}

double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

bool close(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y, double scale) {
  return max_abs(x - y) <= 1e-12 * std::max(1.0, scale);
}

Eigen::MatrixXcd series_exponential(const Eigen::MatrixXcd& m) {
  const double norm1 = m.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
  }
  const Eigen::MatrixXcd scaled = m / std::ldexp(1.0, squarings);
  const auto n = m.rows();
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(n, n);
  for (int k = 1; k < 100; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
    if (max_abs(term) <= kSeriesTolerance * max_abs(sum)) {
      break;
    }
  }
  for (int s = 0; s < squarings; ++s) {
    sum = sum * sum;
  }
  return sum;
}

}  // namespace

Site dense_cap() {
  const Site configured = configured_cap.load();
  if (configured > 0) {
    return configured;
  }
  if (const char* env = std::getenv("GLSIM_DENSE_CAP")) {
    char* end = nullptr;
    const long long value = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) {
      return value;
    }
  }
  return kDefaultDenseCap;
}

void set_dense_cap(std::optional<Site> cap) {
  if (cap) {
    require(*cap > 0, "dense cap must be positive");
  }
  configured_cap.store(cap.value_or(0));
}

DenseMatrix::DenseMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
  require(m_.rows() == m_.cols(), "dense matrices must be square");
  check_cap(m_.rows());
  const double scale = max_abs(m_);
  const Eigen::MatrixXcd adjoint = m_.adjoint();
  flags_.hermitian = close(m_, adjoint, scale);
  flags_.anti_hermitian = close(m_, -adjoint, scale);
  flags_.real_symmetric = flags_.hermitian && m_.imag().cwiseAbs().maxCoeff() <= 1e-12 * std::max(1.0, scale);
}

Eigen::VectorXcd to_eigen(const DenseVector& u) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(u.size()));
  for (std::size_t i = 0; i < u.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = u[i];
  }
  return v;
}

DenseVector from_eigen(const Eigen::VectorXcd& u) { return DenseVector(u.data(), u.data() + u.size()); }

DenseMatrix dense_from_oracle(const LocalMatrixOracle& a) {
  const Site n = a.dimension();
  check_cap(n);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  std::vector<MatrixEntry> row;
  for (Site i = 0; i < n; ++i) {
    a.verify_row(i);
    a.row(i, row);
    for (const MatrixEntry& e : row) {
      m(i, e.index) += e.value;
    }
  }
  return DenseMatrix(std::move(m));
}

DenseVector dense_from_vector(const VectorOracle& u) {
  check_cap(u.dimension());
  DenseVector out(static_cast<std::size_t>(u.dimension()));
  for (Site i = 0; i < u.dimension(); ++i) {
    out[static_cast<std::size_t>(i)] = u.query(i);
  }
  return out;
}

DenseVector dense_evolve(const DenseMatrix& m, double t, const DenseVector& u) {
  require(static_cast<Site>(u.size()) == m.dimension(), "vector and matrix dimensions differ");
  const Eigen::VectorXcd x = to_eigen(u);
  if (m.flags().hermitian) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(m.matrix());
    const Eigen::VectorXcd phase = (eig.eigenvalues() * t).array().exp().cast<Complex>();
    return from_eigen(eig.eigenvectors() * (phase.asDiagonal() * (eig.eigenvectors().adjoint() * x)));
  }
  if (m.flags().anti_hermitian) {
    const Eigen::MatrixXcd k = Complex{0.0, -1.0} * m.matrix();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(k);
    Eigen::VectorXcd phase(eig.eigenvalues().size());
    for (Eigen::Index q = 0; q < phase.size(); ++q) {
      phase[q] = std::exp(Complex{0.0, eig.eigenvalues()[q] * t});
    }
    return from_eigen(eig.eigenvectors() * (phase.asDiagonal() * (eig.eigenvectors().adjoint() * x)));
  }
  return dense_evolve_series(m, t, u);
}

DenseVector dense_evolve_series(const DenseMatrix& m, double t, const DenseVector& u) {
  require(static_cast<Site>(u.size()) == m.dimension(), "vector and matrix dimensions differ");
  return from_eigen(series_exponential(m.matrix() * t) * to_eigen(u));
}

DenseVector dense_poly_apply(const DenseMatrix& m, const Polynomial& p, const DenseVector& u) {
  require(static_cast<Site>(u.size()) == m.dimension(), "vector and matrix dimensions differ");
  const Eigen::VectorXcd x = to_eigen(u);
  const auto& c = p.coefficients();
  const Eigen::MatrixXcd& a = m.matrix();
  if (p.basis() == Basis::monomial) {
    Eigen::VectorXcd acc = c.back() * x;
    for (int k = p.degree() - 1; k >= 0; --k) {
      acc = a * acc + c[static_cast<std::size_t>(k)] * x;
    }
    return from_eigen(acc);
  }
  const double center = p.center();
  const double half = p.half_width();
  const double slack = 1e-9 * std::max(1.0, half);
  if (m.flags().hermitian) {
    const Eigen::VectorXd ev = hermitian_eigenvalues(m);
    require(ev.size() == 0 || (ev.minCoeff() >= p.lower() - slack && ev.maxCoeff() <= p.upper() + slack),
            "the spectrum leaves the Chebyshev interval");
  } else {
    const double radius = a.size() == 0 ? 0.0 : Eigen::ComplexEigenSolver<Eigen::MatrixXcd>(a, false).eigenvalues().cwiseAbs().maxCoeff();
    require(radius <= std::max(std::abs(p.lower()), std::abs(p.upper())) + slack,
            "the spectral radius exceeds the Chebyshev scale");
  }
  auto hat = [&](const Eigen::VectorXcd& v) -> Eigen::VectorXcd { return (a * v - center * v) / half; };
  Eigen::VectorXcd b1 = Eigen::VectorXcd::Zero(x.size());
  Eigen::VectorXcd b2 = Eigen::VectorXcd::Zero(x.size());
  for (int k = p.degree(); k >= 1; --k) {
    Eigen::VectorXcd b0 = c[static_cast<std::size_t>(k)] * x + 2.0 * hat(b1) - b2;
    b2 = std::move(b1);
    b1 = std::move(b0);
  }
  return from_eigen(c[0] * x + hat(b1) - b2);
}

double spectral_norm(const DenseMatrix& m) {
  if (m.dimension() == 0) {
    return 0.0;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m.matrix());
  return svd.singularValues()[0];
}

Eigen::VectorXd hermitian_eigenvalues(const DenseMatrix& m) {
  require(m.flags().hermitian, "eigenvalues requested for a non-Hermitian matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(m.matrix(), Eigen::EigenvaluesOnly);
  return eig.eigenvalues();
}

Eigen::MatrixXcd dense_cos_sqrt(const DenseMatrix& m, double t) {
  require(m.flags().hermitian, "cos(sqrt(M) t) needs a Hermitian matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(m.matrix());
  Eigen::VectorXcd f(eig.eigenvalues().size());
  for (Eigen::Index q = 0; q < f.size(); ++q) {
    f[q] = std::cos(std::sqrt(std::max(0.0, eig.eigenvalues()[q])) * t);
  }
  return eig.eigenvectors() * f.asDiagonal() * eig.eigenvectors().adjoint();
}

LocalMatrixOracle oracle_from_dense(const DenseMatrix& m, SiteGraph graph, double r0,
                                    std::optional<double> norm_bound) {
  require(graph.sites() == m.dimension(), "graph and matrix dimensions differ");
  std::vector<std::vector<MatrixEntry>> rows(static_cast<std::size_t>(m.dimension()));
  for (Site i = 0; i < m.dimension(); ++i) {
    for (Site j = 0; j < m.dimension(); ++j) {
      const Complex v = m.matrix()(i, j);
      if (std::abs(v) > 1e-14) {
        rows[static_cast<std::size_t>(i)].push_back({j, v});
      }
    }
  }
  LocalMatrixOracle::Options options;
  if (m.flags().hermitian) {
    options.symmetry = LocalMatrixOracle::Symmetry::hermitian;
  } else if (m.flags().anti_hermitian) {
    options.symmetry = LocalMatrixOracle::Symmetry::anti_hermitian;
  }
  return matrix_from_rows(std::move(graph), r0, std::move(rows), norm_bound.value_or(spectral_norm(m)),
                          std::move(options));
}

}  // namespace glsim
