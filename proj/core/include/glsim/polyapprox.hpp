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
#include <utility>
#include <vector>

#include "glsim/common.hpp"

namespace glsim {

enum class Basis { monomial, chebyshev };
enum class Parity { even, odd, mixed };

/// A complex polynomial in one real variable.
///
/// Chebyshev polynomials live on an interval [lo, hi] and are expanded in
/// T_k(u) with u = (2x - lo - hi) / (hi - lo). The usual symmetric case is
/// [-alpha, alpha]. Trailing zero coefficients are trimmed, so degree() is
/// the index of the last nonzero coefficient (0 for the zero polynomial).
class Polynomial {
 public:
  static Polynomial monomial(std::vector<Complex> coefficients);
  static Polynomial chebyshev(std::vector<Complex> coefficients, double alpha);
  static Polynomial chebyshev(std::vector<Complex> coefficients, double lo, double hi);
  static Polynomial constant(Complex c) { return monomial({c}); }

  Basis basis() const { return basis_; }
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<Complex>& coefficients() const { return coefficients_; }
  Complex coefficient(int k) const;

  /// Chebyshev interval; monomials report [-inf, inf].
  double lower() const { return lo_; }
  double upper() const { return hi_; }
  double center() const { return 0.5 * (lo_ + hi_); }
  double half_width() const { return 0.5 * (hi_ - lo_); }
  bool symmetric() const;
  /// Half-width of a symmetric Chebyshev interval.
  double alpha() const;
  bool in_interval(double x, double slack = 1e-12) const;

  /// Certified max of |P| on the interval, when known.
  std::optional<double> sup_bound() const { return sup_bound_; }
  Polynomial with_sup_bound(double bound) const;

  /// Parity in x. Only monomials and symmetric Chebyshev expansions can be
  /// even or odd; everything else reports mixed.
  Parity parity() const;

  bool is_zero() const;

 private:
  Polynomial(Basis basis, std::vector<Complex> coefficients, double lo, double hi);

  Basis basis_;
  std::vector<Complex> coefficients_;
  double lo_;
  double hi_;
  std::optional<double> sup_bound_;
};

/// Clenshaw (Chebyshev) or Horner (monomial) evaluation. Warns but still
/// evaluates outside the Chebyshev interval.
Complex eval_scalar(const Polynomial& p, double x);

/// Jacobi-Anger truncation of e^{ixt} on [-alpha, alpha]: coefficient k is
/// (2 - [k == 0]) i^k J_k(alpha t), cut at the first degree whose tail bound
/// sum_{k > d} 2 (|alpha t| / 2)^k / k! is at most eps. sup_bound is 1 plus
/// that tail.
Polynomial exp_poly(double alpha, double t, double eps);

/// Largest degree exp_poly may return: ceil(e alpha |t| / 2) + ceil(log2(1/eps)) + 4.
int exp_poly_degree_cap(double alpha, double t, double eps);

/// Bessel functions J_0..J_n at a real argument by Miller's backward
/// recurrence normalized with J_0 + 2 sum_k J_2k = 1.
std::vector<double> bessel_j_sequence(int n, double z);

/// Writes p(x) = P_cos(x^2) + i x P_sin(x^2). For a symmetric Chebyshev
/// input on [-alpha, alpha] both parts are Chebyshev on [0, alpha^2]; a
/// monomial input gives monomial parts.
std::pair<Polynomial, Polynomial> parity_split(const Polynomial& p);

/// Same polynomial in another basis. Chebyshev targets use [lo, hi]. The
/// Chebyshev-to-monomial direction is refused above degree 30.
Polynomial basis_convert(const Polynomial& p, Basis target, double lo = -1.0, double hi = 1.0);
inline constexpr int kMonomialConversionCap = 30;

/// x * p(x), same basis and interval.
Polynomial times_x(const Polynomial& p);

/// (p(x) - p(0)) / x, same basis and interval.
Polynomial deflate_at_zero(const Polynomial& p);

/// Complex-conjugated coefficients: conj(p)(x) = conj(p(x)) for real x.
Polynomial conjugate(const Polynomial& p);

Polynomial scaled(const Polynomial& p, Complex factor);

/// n Chebyshev nodes of the first kind mapped onto [lo, hi].
std::vector<double> chebyshev_nodes(int n, double lo, double hi);

}  // namespace glsim
