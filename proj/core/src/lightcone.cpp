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


#include "glsim/lightcone.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace glsim {

namespace {

using Row = std::vector<MatrixEntry>;

bool by_index(const MatrixEntry& x, const MatrixEntry& y) { return x.index < y.index; }

void drop_zeros(Row& r) {
  std::erase_if(r, [](const MatrixEntry& e) { return std::abs(e.value) < kHardZero; });
}

// Workspace reused across the steps of one evaluation.
struct Workspace {
  Row fetched;
  Row products;
};

// f * A, summing contributions to each column in ascending source order.
Row times_matrix(const LocalMatrixOracle& a, const Row& f, Workspace& ws) {
  ws.products.clear();
  for (const MatrixEntry& fe : f) {
    a.row(fe.index, ws.fetched);
    for (const MatrixEntry& e : ws.fetched) {
      ws.products.push_back({e.index, fe.value * e.value});
    }
  }
  std::stable_sort(ws.products.begin(), ws.products.end(), by_index);
  Row out;
  for (const MatrixEntry& e : ws.products) {
    if (!out.empty() && out.back().index == e.index) {
      out.back().value += e.value;
    } else {
      out.push_back(e);
    }
  }
  drop_zeros(out);
  return out;
}

// x_scale * x + y_scale * y over the union of supports.
Row combine(Complex x_scale, const Row& x, Complex y_scale, const Row& y) {
  Row out;
  out.reserve(x.size() + y.size());
  std::size_t p = 0;
  std::size_t q = 0;
  while (p < x.size() || q < y.size()) {
    if (q == y.size() || (p < x.size() && x[p].index < y[q].index)) {
      out.push_back({x[p].index, x_scale * x[p].value});
      ++p;
    } else if (p == x.size() || y[q].index < x[p].index) {
      out.push_back({y[q].index, y_scale * y[q].value});
      ++q;
    } else {
      out.push_back({x[p].index, x_scale * x[p].value + y_scale * y[q].value});
      ++p;
      ++q;
    }
  }
  drop_zeros(out);
  return out;
}

void add_at(Row& r, Site i, Complex value) {
  if (value == Complex{}) {
    return;
  }
  auto it = std::lower_bound(r.begin(), r.end(), MatrixEntry{i, {}}, by_index);
  if (it != r.end() && it->index == i) {
    it->value += value;
  } else {
    r.insert(it, {i, value});
  }
  drop_zeros(r);
}

void record(std::vector<SupportStep>* trace, const LocalMatrixOracle& a, Site i, int step,
            std::size_t support) {
  if (trace != nullptr) {
    trace->push_back({step, support, a.graph().ball_size(i, step * a.r0())});
  }
}

}  // namespace

Complex SparseAccumulator::at(Site j) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), MatrixEntry{j, {}}, by_index);
  return it != entries.end() && it->index == j ? it->value : Complex{};
}

void write_support_csv(std::ostream& out, const std::vector<SupportStep>& trace) {
  out << "step,support,ball_bound\n";
  for (const SupportStep& s : trace) {
    out << s.step << ',' << s.support << ',' << s.ball_bound << '\n';
  }
}

SparseAccumulator row_power(const LocalMatrixOracle& a, Site i, int k) {
  require(k >= 0, "power must be nonnegative");
  if (i < 0 || i >= a.dimension()) {
    throw std::out_of_range("row index out of range");
  }
  Workspace ws;
  Row f{{i, Complex{1.0, 0.0}}};
  for (int step = 0; step < k && !f.empty(); ++step) {
    f = times_matrix(a, f, ws);
  }
  return {i, k * a.r0(), std::move(f)};
}

void check_polynomial_domain(const LocalMatrixOracle& a, const Polynomial& p) {
  if (p.basis() != Basis::chebyshev) {
    return;
  }
  const double tol = 1e-12 * std::max(1.0, a.norm_bound());
  if (a.is_hermitian()) {
    const auto [lo, hi] = a.spectral_interval();
    if (lo < p.lower() - tol || hi > p.upper() + tol) {
      std::ostringstream msg;
      msg << "polynomial interval [" << p.lower() << ", " << p.upper()
          << "] does not enclose the spectrum bound [" << lo << ", " << hi << "]";
      throw PreconditionError(msg.str());
    }
    return;
  }
  require(p.symmetric(), "non-Hermitian matrices need a symmetric Chebyshev interval");
  if (a.norm_bound() > p.alpha() + tol) {
    std::ostringstream msg;
    msg << "polynomial scale " << p.alpha() << " is below the norm bound " << a.norm_bound();
    throw PreconditionError(msg.str());
  }
}

SparseAccumulator poly_row(const LocalMatrixOracle& a, const Polynomial& p, Site i,
                           std::vector<SupportStep>* trace) {
  if (i < 0 || i >= a.dimension()) {
    throw std::out_of_range("row index out of range");
  }
  check_polynomial_domain(a, p);
  const auto& c = p.coefficients();
  const int n = p.degree();
  Workspace ws;

  if (p.basis() == Basis::monomial) {
    Row f;
    add_at(f, i, c.back());
    record(trace, a, i, 0, f.size());
    for (int k = n - 1; k >= 0; --k) {
      f = times_matrix(a, f, ws);
      add_at(f, i, c[static_cast<std::size_t>(k)]);
      record(trace, a, i, n - k, f.size());
    }
    return {i, n * a.r0(), std::move(f)};
  }

  const double center = p.center();
  const double inv_half = 1.0 / p.half_width();
  auto times_hat = [&](const Row& b) {
    Row ab = times_matrix(a, b, ws);
    return center == 0.0 ? combine(inv_half, ab, 0.0, Row{}) : combine(inv_half, ab, -center * inv_half, b);
  };
  Row b1;
  Row b2;
  for (int k = n; k >= 1; --k) {
    Row b0 = combine(2.0, times_hat(b1), -1.0, b2);
    add_at(b0, i, c[static_cast<std::size_t>(k)]);
    b2 = std::move(b1);
    b1 = std::move(b0);
    record(trace, a, i, n - k, b1.size());
  }
  Row f = combine(1.0, times_hat(b1), -1.0, b2);
  add_at(f, i, c[0]);
  record(trace, a, i, n, f.size());
  return {i, n * a.r0(), std::move(f)};
}

Complex entry_of_poly_apply(const LocalMatrixOracle& a, const Polynomial& p, const VectorOracle& u,
                            Site i, std::vector<SupportStep>* trace) {
  require(u.dimension() == a.dimension(), "vector and matrix dimensions differ");
  const SparseAccumulator f = poly_row(a, p, i, trace);
  Complex total{};
  for (const MatrixEntry& e : f.entries) {
    total += e.value * u.query(e.index);
  }
  return total;
}

VectorOracle poly_apply_query_oracle(const LocalMatrixOracle& a, const Polynomial& p,
                                     const VectorOracle& u, std::size_t memo_capacity) {
  require(u.dimension() == a.dimension(), "vector and matrix dimensions differ");
  check_polynomial_domain(a, p);
  VectorOracle direct(a.dimension(), [a, p, u](Site i) { return entry_of_poly_apply(a, p, u, i); });
  return memoized(direct, memo_capacity).query_only();
}

}  // namespace glsim
