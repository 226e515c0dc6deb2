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


#include "glsim/oscillators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "glsim/lightcone.hpp"
#include "glsim/polyapprox.hpp"

namespace glsim {

namespace {

using PartnerList = std::vector<std::pair<Site, double>>;

VectorOracle lazy_combination(const VectorOracle& x, Complex a, const VectorOracle& y, Complex b) {
  require(x.dimension() == y.dimension(), "combined vectors differ in dimension");
  return VectorOracle(x.dimension(), [x, a, y, b](Site i) { return a * x.query(i) + b * y.query(i); });
}

VectorOracle masked(const VectorOracle& x, std::vector<Site> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  return VectorOracle(x.dimension(), [x, keep = std::move(keep)](Site i) {
    return std::binary_search(keep.begin(), keep.end(), i) ? x.query(i) : Complex{};
  });
}

VectorOracle mass_weighted(const OscillatorSystem& sys, const std::vector<double>& values) {
  DenseVector out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = std::sqrt(sys.mass(static_cast<Site>(i))) * values[i];
  }
  return query_access(std::move(out));
}

void check_state(const OscillatorSystem& sys, const OscillatorState& state) {
  require(static_cast<Site>(state.x.size()) == sys.sites() && static_cast<Site>(state.xdot.size()) == sys.sites(),
          "state dimensions do not match the system");
}

double state_energy(const OscillatorSystem& sys, const OscillatorState& state) {
  const double e = state.energy ? *state.energy : total_energy(sys, state);
  require(e > 0.0, "the state has zero energy");
  return e;
}

// P_exp(H) psi(0) in blocks: top = (P_cos(A) y' - (y P_sin)(A) y) / sqrt(2E),
// bottom = i B^dagger inner / sqrt(2E) with inner = P_sin(A) y' + P_cos(A) y.
struct EvolvedBlocks {
  Polynomial p_cos;
  Polynomial p_sin;
  double scale;
  VectorOracle top;
  VectorOracle inner;
};

EvolvedBlocks evolved_blocks(const OscillatorSystem& sys, const OscillatorState& state, double t, double eps_poly) {
  check_state(sys, state);
  const double scale = 1.0 / std::sqrt(2.0 * state_energy(sys, state));
  auto [p_cos, p_sin] = parity_split(exp_poly(sys.h_norm_bound() > 0.0 ? sys.h_norm_bound() : 1.0, t, eps_poly));
  const VectorOracle yv = mass_weighted(sys, state.xdot);
  const VectorOracle yx = mass_weighted(sys, state.x);
  const LocalMatrixOracle& a = sys.a();
  VectorOracle top = memoized(lazy_combination(poly_apply_query_oracle(a, p_cos, yv), scale,
                                               poly_apply_query_oracle(a, times_x(p_sin), yx), -scale));
  VectorOracle inner = memoized(
      lazy_combination(poly_apply_query_oracle(a, p_sin, yv), 1.0, poly_apply_query_oracle(a, p_cos, yx), 1.0));
  return {std::move(p_cos), std::move(p_sin), scale, std::move(top), std::move(inner)};
}

VectorOracle join_blocks(const OscillatorSystem& sys, const VectorOracle& top, const VectorOracle& bottom) {
  const Site n = sys.sites();
  return memoized(VectorOracle(sys.extended_dimension(),
                               [n, top, bottom](Site e) { return e < n ? top.query(e) : bottom.query(e); }))
      .query_only();
}

double gershgorin_bound(const SiteGraph& graph, double r0, const OscillatorSystem::Bounds& bounds) {
  require(bounds.kappa_max >= 0.0, "kappa_max must be nonnegative");
  require(bounds.mass_min > 0.0, "mass_min must be positive");
  if (bounds.a_norm_bound) {
    require(*bounds.a_norm_bound >= 0.0, "norm bound must be nonnegative");
    return *bounds.a_norm_bound;
  }
  return 2.0 * static_cast<double>(graph.locality(r0)) * bounds.kappa_max / bounds.mass_min;
}

}  // namespace

OscillatorSystem::OscillatorSystem(SiteGraph graph, MassFn masses, PartnerFn partners, double r0, Bounds bounds)
    : OscillatorSystem(std::make_shared<const SiteGraph>(graph), std::move(masses), std::move(partners), r0,
                       graph.locality(r0), gershgorin_bound(graph, r0, bounds)) {}

OscillatorSystem::OscillatorSystem(std::shared_ptr<const SiteGraph> graph, MassFn masses, PartnerFn partners,
                                   double r0, Site stride, double a_norm_bound)
    : graph_(std::move(graph)), masses_(std::move(masses)), partners_(std::move(partners)), r0_(r0), stride_(stride) {
  require(static_cast<bool>(masses_) && static_cast<bool>(partners_), "mass and spring access are required");
  LocalMatrixOracle::Options options;
  options.symmetry = LocalMatrixOracle::Symmetry::hermitian;
  options.spectral_interval = std::pair{0.0, a_norm_bound};
  auto rows = [masses = masses_, partners = partners_](Site i, std::vector<MatrixEntry>& out) {
    PartnerList list;
    partners(i, list);
    const double mi = masses(i);
    double diagonal = 0.0;
    for (const auto& [j, k] : list) {
      diagonal += k;
    }
    bool placed = false;
    for (const auto& [j, k] : list) {
      if (!placed && j >= i) {
        out.push_back({i, Complex{diagonal / mi, 0.0}});
        placed = true;
      }
      if (j != i) {
        out.push_back({j, Complex{-k / std::sqrt(mi * masses(j)), 0.0}});
      }
    }
    if (!placed) {
      out.push_back({i, Complex{diagonal / mi, 0.0}});
    }
  };
  a_ = std::make_shared<const LocalMatrixOracle>(*graph_, r0_, rows, a_norm_bound, options);
}

OscillatorSystem OscillatorSystem::build(SiteGraph graph, std::vector<double> masses,
                                         const std::vector<Spring>& springs, double r0) {
  const Site n = graph.sites();
  require(static_cast<Site>(masses.size()) == n, "one mass per site is required");
  for (double m : masses) {
    require(m > 0.0 && std::isfinite(m), "masses must be positive");
  }
  auto adjacency = std::make_shared<std::vector<PartnerList>>(static_cast<std::size_t>(n));
  for (const Spring& s : springs) {
    require(s.i >= 0 && s.j >= 0 && s.i < n && s.j < n, "spring endpoint out of range");
    require(s.kappa >= 0.0 && std::isfinite(s.kappa), "spring constants must be nonnegative");
    if (s.kappa == 0.0) {
      continue;
    }
    const std::int64_t d = graph.distance(s.i, s.j);
    if (d < 0 || static_cast<double>(d) > r0) {
      throw LocalityError("spring (" + std::to_string(s.i) + ", " + std::to_string(s.j) + ") is longer than r0");
    }
    auto& pi = (*adjacency)[static_cast<std::size_t>(s.i)];
    for (const auto& [j, k] : pi) {
      require(j != s.j, "spring (" + std::to_string(s.i) + ", " + std::to_string(s.j) + ") is listed twice");
    }
    pi.emplace_back(s.j, s.kappa);
    if (s.i != s.j) {
      (*adjacency)[static_cast<std::size_t>(s.j)].emplace_back(s.i, s.kappa);
    }
  }
  Site stride = 0;
  double row_max = 0.0;
  for (Site i = 0; i < n; ++i) {
    auto& list = (*adjacency)[static_cast<std::size_t>(i)];
    std::sort(list.begin(), list.end());
    Site upper = 0;
    double diagonal = 0.0;
    double off = 0.0;
    const double mi = masses[static_cast<std::size_t>(i)];
    for (const auto& [j, k] : list) {
      upper += j >= i ? 1 : 0;
      diagonal += k;
      if (j != i) {
        off += k / std::sqrt(mi * masses[static_cast<std::size_t>(j)]);
      }
    }
    stride = std::max(stride, upper);
    row_max = std::max(row_max, diagonal / mi + off);
  }
  auto mass_table = std::make_shared<const std::vector<double>>(std::move(masses));
  MassFn mass_fn = [mass_table](Site i) { return (*mass_table)[static_cast<std::size_t>(i)]; };
  PartnerFn partner_fn = [adjacency](Site i, PartnerList& out) {
    const auto& list = (*adjacency)[static_cast<std::size_t>(i)];
    out.insert(out.end(), list.begin(), list.end());
  };
  return OscillatorSystem(std::make_shared<const SiteGraph>(std::move(graph)), mass_fn, partner_fn, r0,
                          std::max<Site>(stride, 1), row_max);
}

void OscillatorSystem::partners(Site i, std::vector<std::pair<Site, double>>& out) const {
  if (i < 0 || i >= sites()) {
    throw std::out_of_range("site " + std::to_string(i) + " out of range");
  }
  out.clear();
  partners_(i, out);
}

void OscillatorSystem::upper_partners(Site i, std::vector<std::pair<Site, double>>& out) const {
  partners(i, out);
  std::erase_if(out, [i](const std::pair<Site, double>& p) { return p.first < i; });
}

double OscillatorSystem::kappa(Site i, Site j) const {
  PartnerList list;
  partners(i, list);
  for (const auto& [q, k] : list) {
    if (q == j) {
      return k;
    }
  }
  return 0.0;
}

double OscillatorSystem::h_norm_bound() const { return std::sqrt(a_->norm_bound()); }

Site OscillatorSystem::spring_index(Site i, Site j) const {
  if (j < i) {
    std::swap(i, j);
  }
  PartnerList list;
  upper_partners(i, list);
  for (std::size_t slot = 0; slot < list.size(); ++slot) {
    if (list[slot].first == j) {
      if (static_cast<Site>(slot) >= stride_) {
        throw CapacityError("site " + std::to_string(i) + " has more springs than the extended stride");
      }
      return sites() + i * stride_ + static_cast<Site>(slot);
    }
  }
  throw PreconditionError("no spring between " + std::to_string(i) + " and " + std::to_string(j));
}

std::optional<std::pair<Site, Site>> OscillatorSystem::spring_pair(Site e) const {
  if (e < 0 || e >= extended_dimension()) {
    throw std::out_of_range("extended index " + std::to_string(e) + " out of range");
  }
  if (e < sites()) {
    return std::nullopt;
  }
  const Site i = (e - sites()) / stride_;
  const auto slot = static_cast<std::size_t>((e - sites()) % stride_);
  PartnerList list;
  upper_partners(i, list);
  if (slot >= list.size()) {
    return std::nullopt;
  }
  return std::pair{i, list[slot].first};
}

void OscillatorSystem::b_dagger_row(Site e, std::vector<MatrixEntry>& out) const {
  out.clear();
  const auto pair = spring_pair(e);
  if (!pair) {
    return;
  }
  const auto [i, j] = *pair;
  const double k = kappa(i, j);
  out.push_back({i, Complex{std::sqrt(k / mass(i)), 0.0}});
  if (j != i) {
    out.push_back({j, Complex{-std::sqrt(k / mass(j)), 0.0}});
  }
}

void OscillatorSystem::b_row(Site i, std::vector<MatrixEntry>& out) const {
  out.clear();
  PartnerList list;
  partners(i, list);
  const double mi = mass(i);
  for (const auto& [j, k] : list) {
    const double value = std::sqrt(k / mi);
    if (j >= i) {
      out.push_back({spring_index(i, j), Complex{value, 0.0}});
    } else {
      out.push_back({spring_index(j, i), Complex{-value, 0.0}});
    }
  }
  std::sort(out.begin(), out.end(), [](const MatrixEntry& x, const MatrixEntry& y) { return x.index < y.index; });
}

VectorOracle OscillatorSystem::b_dagger(const VectorOracle& x) const {
  require(x.dimension() == sites(), "B^dagger acts on site vectors");
  auto self = *this;
  return VectorOracle(extended_dimension(), [self, x](Site e) {
    std::vector<MatrixEntry> row;
    self.b_dagger_row(e, row);
    Complex total{};
    for (const MatrixEntry& r : row) {
      total += r.value * x.query(r.index);
    }
    return total;
  });
}

VectorOracle OscillatorSystem::b(const VectorOracle& g) const {
  require(g.dimension() == extended_dimension(), "B acts on extended vectors");
  auto self = *this;
  return VectorOracle(sites(), [self, g](Site i) {
    std::vector<MatrixEntry> row;
    self.b_row(i, row);
    Complex total{};
    for (const MatrixEntry& r : row) {
      total += r.value * g.query(r.index);
    }
    return total;
  });
}

double total_energy(const OscillatorSystem& sys, const OscillatorState& state) {
  check_state(sys, state);
  double kinetic = 0.0;
  double potential = 0.0;
  PartnerList list;
  for (Site i = 0; i < sys.sites(); ++i) {
    const auto ui = static_cast<std::size_t>(i);
    kinetic += sys.mass(i) * state.xdot[ui] * state.xdot[ui];
    sys.partners(i, list);
    for (const auto& [j, k] : list) {
      if (j == i) {
        potential += k * state.x[ui] * state.x[ui];
      } else if (j > i) {
        const double stretch = state.x[ui] - state.x[static_cast<std::size_t>(j)];
        potential += k * stretch * stretch;
      }
    }
  }
  return 0.5 * (kinetic + potential);
}

DenseVector psi0_dense(const OscillatorSystem& sys, const OscillatorState& state) {
  check_state(sys, state);
  const double scale = 1.0 / std::sqrt(2.0 * state_energy(sys, state));
  const Site n = sys.sites();
  DenseVector psi(static_cast<std::size_t>(sys.extended_dimension()), Complex{});
  std::vector<double> y(static_cast<std::size_t>(n));
  for (Site i = 0; i < n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    psi[ui] = std::sqrt(sys.mass(i)) * state.xdot[ui] * scale;
    y[ui] = std::sqrt(sys.mass(i)) * state.x[ui];
  }
  std::vector<MatrixEntry> row;
  for (Site e = n; e < sys.extended_dimension(); ++e) {
    sys.b_dagger_row(e, row);
    Complex total{};
    for (const MatrixEntry& r : row) {
      total += r.value * y[static_cast<std::size_t>(r.index)];
    }
    psi[static_cast<std::size_t>(e)] = Complex{0.0, 1.0} * total * scale;
  }
  return psi;
}

VectorOracle psi0(const OscillatorSystem& sys, const OscillatorState& state) {
  return sq_access_from_dense(psi0_dense(sys, state));
}

int oscillator_degree(const OscillatorSystem& sys, double t, double eps) {
  return exp_poly(sys.h_norm_bound() > 0.0 ? sys.h_norm_bound() : 1.0, t, eps).degree();
}

VectorOracle evolved_state_oracle(const OscillatorSystem& sys, const OscillatorState& state, double t,
                                  double eps_poly) {
  const EvolvedBlocks blocks = evolved_blocks(sys, state, t, eps_poly);
  const VectorOracle b_inner = sys.b_dagger(blocks.inner);
  const VectorOracle bottom(sys.extended_dimension(), [b_inner, s = blocks.scale](Site e) {
    return Complex{0.0, s} * b_inner.query(e);
  });
  return join_blocks(sys, blocks.top, bottom);
}

EstimateReport estimate_observable(const OscillatorSystem& sys, const OscillatorState& state,
                                   const VectorOracle& v, double t, double eps, double delta, std::uint64_t seed,
                                   const EstimateOptions& options) {
  require(v.dimension() == sys.extended_dimension(), "v must live on the extended index space");
  require(v.zeta() <= eps / 18.0 * (1.0 + 1e-12), "sampling error zeta exceeds eps / 18");
  const VectorOracle w = evolved_state_oracle(sys, state, t, eps / 2.0);
  EstimateReport report = inner_product_estimate(w, v, eps / 2.0, delta, seed, options);
  report.eps = eps;
  return report;
}

EstimateReport estimate_energy(const OscillatorSystem& sys, const OscillatorState& state,
                               const std::vector<Site>& masses, const std::vector<std::pair<Site, Site>>& springs,
                               double t, double eps, double delta, std::uint64_t seed,
                               const EstimateOptions& options) {
  const VectorOracle start = psi0(sys, state);
  require(start.zeta() <= eps / 27.0, "sampling error zeta exceeds eps / 27");
  for (Site i : masses) {
    require(i >= 0 && i < sys.sites(), "mass index out of range");
  }
  std::vector<Site> spring_slots;
  spring_slots.reserve(springs.size());
  for (const auto& [i, j] : springs) {
    spring_slots.push_back(sys.spring_index(i, j));
  }

  const EvolvedBlocks blocks = evolved_blocks(sys, state, t, eps / 4.0);
  const LocalMatrixOracle& a = sys.a();
  const Polynomial cos_bar = conjugate(blocks.p_cos);
  const Polynomial sin_bar = conjugate(blocks.p_sin);
  const Polynomial quotient = deflate_at_zero(cos_bar);
  const Complex cos_at_zero = eval_scalar(cos_bar, 0.0);
  const Complex i_unit{0.0, 1.0};

  // V P psi(0), block by block.
  const VectorOracle kept_top = masked(blocks.top, masses);
  const VectorOracle bottom = memoized(sys.b_dagger(blocks.inner));
  const VectorOracle kept_bottom =
      masked(VectorOracle(sys.extended_dimension(), [bottom, s = blocks.scale](Site e) {
               return Complex{0.0, s} * bottom.query(e);
             }),
             spring_slots);
  const VectorOracle b_kept = memoized(sys.b(kept_bottom));

  // P(H)^dagger applied to (kept_top ; kept_bottom).
  const VectorOracle w_top = lazy_combination(poly_apply_query_oracle(a, cos_bar, kept_top), 1.0,
                                              poly_apply_query_oracle(a, sin_bar, b_kept), -i_unit);
  const VectorOracle sin_top = memoized(poly_apply_query_oracle(a, sin_bar, kept_top));
  const VectorOracle quot_b = memoized(poly_apply_query_oracle(a, quotient, b_kept));
  const VectorOracle w_bottom =
      lazy_combination(lazy_combination(sys.b_dagger(sin_top), -i_unit, sys.b_dagger(quot_b), 1.0), 1.0,
                       kept_bottom, cos_at_zero);
  const VectorOracle w = join_blocks(sys, w_top, w_bottom);

  EstimateReport report = inner_product_estimate(w, start, eps / 3.0, delta, seed, options);
  report.eps = eps;
  return report;
}

}  // namespace glsim
