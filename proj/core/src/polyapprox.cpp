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


#include "glsim/polyapprox.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace glsim {

namespace {

void trim(std::vector<Complex>& c) {
  while (c.size() > 1 && c.back() == Complex{}) {
    c.pop_back();
  }
  if (c.empty()) {
    c.push_back(Complex{});
  }
}

// x * sum_k c_k T_k(u) with x = center + half * u.
std::vector<Complex> cheb_times_x(const std::vector<Complex>& c, double center, double half) {
  std::vector<Complex> r(c.size() + 1, Complex{});
  for (std::size_t k = 0; k < c.size(); ++k) {
    r[k] += center * c[k];
    if (k == 0) {
      r[1] += half * c[0];
    } else {
      r[k + 1] += 0.5 * half * c[k];
      r[k - 1] += 0.5 * half * c[k];
    }
  }
  return r;
}

std::vector<Complex> mono_times_x(const std::vector<Complex>& c) {
  std::vector<Complex> r(c.size() + 1, Complex{});
  std::copy(c.begin(), c.end(), r.begin() + 1);
  return r;
}

void add_into(std::vector<Complex>& acc, const std::vector<Complex>& x, Complex scale = 1.0) {
  if (acc.size() < x.size()) {
    acc.resize(x.size(), Complex{});
  }
  for (std::size_t k = 0; k < x.size(); ++k) {
    acc[k] += scale * x[k];
  }
}

Complex imaginary_power(int k) {
  switch (k % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// Tail terms 2 (|z|/2)^k / k!, computed in log space.
double tail_term(double half, int k) {
  if (half == 0.0) {
    return k == 0 ? 2.0 : 0.0;
  }
  return std::exp(std::log(2.0) + k * std::log(half) - std::lgamma(k + 1.0));
}

}  // namespace

Polynomial::Polynomial(Basis basis, std::vector<Complex> coefficients, double lo, double hi)
    : basis_(basis), coefficients_(std::move(coefficients)), lo_(lo), hi_(hi) {
  trim(coefficients_);
  for (const Complex& c : coefficients_) {
    require(std::isfinite(c.real()) && std::isfinite(c.imag()), "polynomial coefficients must be finite");
  }
}

Polynomial Polynomial::monomial(std::vector<Complex> coefficients) {
  const double inf = std::numeric_limits<double>::infinity();
  return Polynomial(Basis::monomial, std::move(coefficients), -inf, inf);
}

Polynomial Polynomial::chebyshev(std::vector<Complex> coefficients, double alpha) {
  require(alpha > 0.0 && std::isfinite(alpha), "Chebyshev scale must be positive");
  return Polynomial(Basis::chebyshev, std::move(coefficients), -alpha, alpha);
}

Polynomial Polynomial::chebyshev(std::vector<Complex> coefficients, double lo, double hi) {
  require(lo < hi && std::isfinite(lo) && std::isfinite(hi), "Chebyshev interval must be nonempty");
  return Polynomial(Basis::chebyshev, std::move(coefficients), lo, hi);
}

Complex Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) {
    return {};
  }
  return coefficients_[static_cast<std::size_t>(k)];
}

bool Polynomial::symmetric() const { return basis_ == Basis::chebyshev && lo_ == -hi_; }

double Polynomial::alpha() const {
  require(symmetric(), "polynomial interval is not symmetric");
  return hi_;
}

bool Polynomial::in_interval(double x, double slack) const {
  if (basis_ == Basis::monomial) {
    return true;
  }
  const double tol = slack * std::max(1.0, std::max(std::abs(lo_), std::abs(hi_)));
  return x >= lo_ - tol && x <= hi_ + tol;
}

Polynomial Polynomial::with_sup_bound(double bound) const {
  require(bound >= 0.0, "sup bound must be nonnegative");
  Polynomial out = *this;
  out.sup_bound_ = bound;
  return out;
}

Parity Polynomial::parity() const {
  if (basis_ == Basis::chebyshev && !symmetric()) {
    return is_zero() ? Parity::even : Parity::mixed;
  }
  bool even = true;
  bool odd = true;
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    if (coefficients_[k] != Complex{}) {
      (k % 2 == 0 ? odd : even) = false;
    }
  }
  if (even) {
    return Parity::even;
  }
  return odd ? Parity::odd : Parity::mixed;
}

bool Polynomial::is_zero() const { return coefficients_.size() == 1 && coefficients_[0] == Complex{}; }

Complex eval_scalar(const Polynomial& p, double x) {
  const auto& c = p.coefficients();
  if (p.basis() == Basis::monomial) {
    Complex acc = c.back();
    for (int k = p.degree() - 1; k >= 0; --k) {
      acc = acc * x + c[static_cast<std::size_t>(k)];
    }
    return acc;
  }
  if (!p.in_interval(x)) {
    std::ostringstream msg;
    msg << "evaluating a Chebyshev polynomial at " << x << " outside [" << p.lower() << ", "
        << p.upper() << "]";
    warn(msg.str());
  }
  const double u = (x - p.center()) / p.half_width();
  Complex b1{};
  Complex b2{};
  for (int k = p.degree(); k >= 1; --k) {
    const Complex b0 = c[static_cast<std::size_t>(k)] + 2.0 * u * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return c[0] + u * b1 - b2;
}

std::vector<double> bessel_j_sequence(int n, double z) {
  require(n >= 0, "Bessel order must be nonnegative");
  std::vector<double> out(static_cast<std::size_t>(n) + 1, 0.0);
  if (z == 0.0) {
    out[0] = 1.0;
    return out;
  }
  const double az = std::abs(z);
  const double top = std::max(static_cast<double>(n), std::ceil(az));
  int m = static_cast<int>(top + 30.0 + std::sqrt(160.0 * top));
  m += m % 2;
  std::vector<double> j(static_cast<std::size_t>(m) + 2, 0.0);
  j[static_cast<std::size_t>(m)] = 1e-30;
  for (int k = m; k >= 1; --k) {
    const auto uk = static_cast<std::size_t>(k);
    j[uk - 1] = (2.0 * k / az) * j[uk] - j[uk + 1];
    if (std::abs(j[uk - 1]) > 1e250) {
      for (std::size_t q = uk - 1; q <= static_cast<std::size_t>(m); ++q) {
        j[q] *= 1e-250;
      }
    }
  }
  double norm = j[0];
  for (std::size_t k = 2; k <= static_cast<std::size_t>(m); k += 2) {
    norm += 2.0 * j[k];
  }
  for (int k = 0; k <= n; ++k) {
    double v = j[static_cast<std::size_t>(k)] / norm;
    if (z < 0.0 && k % 2 == 1) {
      v = -v;
    }
    out[static_cast<std::size_t>(k)] = v;
  }
  return out;
}

int exp_poly_degree_cap(double alpha, double t, double eps) {
  return static_cast<int>(std::ceil(std::numbers::e * alpha * std::abs(t) / 2.0) +
                          std::ceil(std::log2(1.0 / eps))) +
         4;
}

Polynomial exp_poly(double alpha, double t, double eps) {
  require(eps > 0.0 && eps <= 1.0, "eps must lie in (0, 1]");
  require(alpha > 0.0 && std::isfinite(alpha), "alpha must be positive");
  require(std::isfinite(t), "t must be finite");
  const double z = alpha * t;
  if (z == 0.0) {
    return Polynomial::chebyshev({Complex{1.0, 0.0}}, alpha).with_sup_bound(1.0);
  }
  const double half = std::abs(z) / 2.0;

  // Tabulate tail terms far enough that the remainder is geometric.
  std::vector<double> terms;
  int k = 0;
  for (;; ++k) {
    terms.push_back(tail_term(half, k));
    if (k > 2.0 * half + 2.0 && terms.back() < 1e-3 * eps) {
      break;
    }
  }
  const double ratio = half / (k + 1.0);
  double remainder = terms.back() * ratio / (1.0 - ratio);
  std::vector<double> tails(terms.size(), 0.0);
  for (int q = k; q >= 0; --q) {
    tails[static_cast<std::size_t>(q)] = remainder;
    remainder += terms[static_cast<std::size_t>(q)];
  }
  int degree = 0;
  while (tails[static_cast<std::size_t>(degree)] > eps) {
    ++degree;
  }

  const std::vector<double> j = bessel_j_sequence(degree, z);
  std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
  c[0] = j[0];
  for (int q = 1; q <= degree; ++q) {
    c[static_cast<std::size_t>(q)] = 2.0 * imaginary_power(q) * j[static_cast<std::size_t>(q)];
  }
  return Polynomial::chebyshev(std::move(c), alpha).with_sup_bound(1.0 + tails[static_cast<std::size_t>(degree)]);
}

std::pair<Polynomial, Polynomial> parity_split(const Polynomial& p) {
  const auto& c = p.coefficients();
  const std::size_t n = c.size();
  std::vector<Complex> even((n + 1) / 2, Complex{});
  std::vector<Complex> odd(std::max<std::size_t>(n / 2, 1), Complex{});
  const Complex minus_i{0.0, -1.0};
  if (p.basis() == Basis::monomial) {
    for (std::size_t k = 0; k < n; ++k) {
      if (k % 2 == 0) {
        even[k / 2] = c[k];
      } else {
        odd[k / 2] = minus_i * c[k];
      }
    }
    return {Polynomial::monomial(std::move(even)), Polynomial::monomial(std::move(odd))};
  }
  require(p.symmetric(), "parity_split needs a symmetric Chebyshev interval");
  const double alpha = p.alpha();
  for (std::size_t k = 0; 2 * k < n; ++k) {
    even[k] = c[2 * k];
  }
  // T_{2k+1}(s) / s = sum_{j <= k} (-1)^{k-j} e_j T_j(2 s^2 - 1), e_0 = 1, e_j = 2.
  Complex suffix{};
  for (std::size_t j = n / 2; j-- > 0;) {
    suffix = c[2 * j + 1] - suffix;
    odd[j] = (j == 0 ? 1.0 : 2.0) * minus_i * suffix / alpha;
  }
  const double y_max = alpha * alpha;
  return {Polynomial::chebyshev(std::move(even), 0.0, y_max), Polynomial::chebyshev(std::move(odd), 0.0, y_max)};
}

Polynomial times_x(const Polynomial& p) {
  if (p.basis() == Basis::monomial) {
    return Polynomial::monomial(mono_times_x(p.coefficients()));
  }
  return Polynomial::chebyshev(cheb_times_x(p.coefficients(), p.center(), p.half_width()), p.lower(), p.upper());
}

Polynomial deflate_at_zero(const Polynomial& p) {
  const int n = p.degree();
  if (p.basis() == Basis::monomial) {
    std::vector<Complex> q(p.coefficients().begin() + 1, p.coefficients().end());
    return Polynomial::monomial(std::move(q));
  }
  if (n == 0) {
    return Polynomial::chebyshev({Complex{}}, p.lower(), p.upper());
  }
  std::vector<Complex> r = p.coefficients();
  r[0] -= eval_scalar(p, 0.0);
  const double c = p.center();
  const double h = p.half_width();
  // Solve (c + h u) Q(u) = R(u) from the top coefficient down.
  std::vector<Complex> q(static_cast<std::size_t>(n) + 2, Complex{});
  for (int m = n; m >= 2; --m) {
    const auto um = static_cast<std::size_t>(m);
    q[um - 1] = 2.0 * (r[um] - c * q[um]) / h - q[um + 1];
  }
  q[0] = (r[1] - c * q[1]) / h - 0.5 * q[2];
  q.resize(static_cast<std::size_t>(n));
  return Polynomial::chebyshev(std::move(q), p.lower(), p.upper());
}

Polynomial conjugate(const Polynomial& p) {
  std::vector<Complex> c = p.coefficients();
  for (Complex& x : c) {
    x = std::conj(x);
  }
  Polynomial out = p.basis() == Basis::monomial ? Polynomial::monomial(std::move(c))
                                                 : Polynomial::chebyshev(std::move(c), p.lower(), p.upper());
  return p.sup_bound() ? out.with_sup_bound(*p.sup_bound()) : out;
}

Polynomial scaled(const Polynomial& p, Complex factor) {
  std::vector<Complex> c = p.coefficients();
  for (Complex& x : c) {
    x *= factor;
  }
  Polynomial out = p.basis() == Basis::monomial ? Polynomial::monomial(std::move(c))
                                                 : Polynomial::chebyshev(std::move(c), p.lower(), p.upper());
  return p.sup_bound() ? out.with_sup_bound(*p.sup_bound() * std::abs(factor)) : out;
}

Polynomial basis_convert(const Polynomial& p, Basis target, double lo, double hi) {
  if (target == Basis::monomial && p.basis() == Basis::chebyshev && p.degree() > kMonomialConversionCap) {
    throw PreconditionError("Chebyshev to monomial conversion is limited to degree " +
                            std::to_string(kMonomialConversionCap));
  }
  if (target == Basis::chebyshev) {
    require(lo < hi, "Chebyshev interval must be nonempty");
  }
  const double tc = 0.5 * (lo + hi);
  const double th = 0.5 * (hi - lo);
  auto mul_x = [&](const std::vector<Complex>& v) {
    return target == Basis::monomial ? mono_times_x(v) : cheb_times_x(v, tc, th);
  };
  const auto& c = p.coefficients();
  std::vector<Complex> result;
  if (p.basis() == Basis::monomial) {
    result = {c.back()};
    for (int k = p.degree() - 1; k >= 0; --k) {
      result = mul_x(result);
      result[0] += c[static_cast<std::size_t>(k)];
    }
  } else {
    // Clenshaw in polynomial arithmetic, with u = (x - center) / half.
    const double sc = p.center();
    const double sh = p.half_width();
    auto mul_u = [&](const std::vector<Complex>& v) {
      std::vector<Complex> out = mul_x(v);
      add_into(out, v, -sc);
      for (Complex& x : out) {
        x /= sh;
      }
      return out;
    };
    std::vector<Complex> b1{Complex{}};
    std::vector<Complex> b2{Complex{}};
    for (int k = p.degree(); k >= 1; --k) {
      std::vector<Complex> b0 = mul_u(b1);
      for (Complex& x : b0) {
        x *= 2.0;
      }
      add_into(b0, b2, -1.0);
      b0[0] += c[static_cast<std::size_t>(k)];
      b2 = std::move(b1);
      b1 = std::move(b0);
    }
    result = mul_u(b1);
    add_into(result, b2, -1.0);
    result[0] += c[0];
  }
  if (target == Basis::monomial) {
    return Polynomial::monomial(std::move(result));
  }
  Polynomial out = Polynomial::chebyshev(std::move(result), lo, hi);
  if (p.sup_bound() && p.basis() == Basis::chebyshev && p.lower() == lo && p.upper() == hi) {
    out = out.with_sup_bound(*p.sup_bound());
  }
  return out;
}

std::vector<double> chebyshev_nodes(int n, double lo, double hi) {
  require(n > 0, "node count must be positive");
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    x[static_cast<std::size_t>(k)] =
        0.5 * (lo + hi) + 0.5 * (hi - lo) * std::cos(std::numbers::pi * (k + 0.5) / n);
  }
  return x;
}

}  // namespace glsim
