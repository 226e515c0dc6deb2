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

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "glsim/common.hpp"
#include "glsim/lattice.hpp"
#include "glsim/random.hpp"

namespace glsim {

/// Plain copy of a CostCounter's totals.
struct CostSnapshot {
  std::uint64_t queries = 0;
  std::uint64_t samples = 0;
  std::uint64_t norm_reads = 0;
};

/// Monotone oracle-usage counters, shared by every copy of an oracle handle.
class CostCounter {
 public:
  void add_queries(std::uint64_t n = 1) { queries_.fetch_add(n, std::memory_order_relaxed); }
  void add_samples(std::uint64_t n = 1) { samples_.fetch_add(n, std::memory_order_relaxed); }
  void add_norm_reads(std::uint64_t n = 1) { norm_reads_.fetch_add(n, std::memory_order_relaxed); }

  CostSnapshot snapshot() const {
    return {queries_.load(std::memory_order_relaxed), samples_.load(std::memory_order_relaxed),
            norm_reads_.load(std::memory_order_relaxed)};
  }

 private:
  std::atomic<std::uint64_t> queries_{0};
  std::atomic<std::uint64_t> samples_{0};
  std::atomic<std::uint64_t> norm_reads_{0};
};

/// A probability distribution over sites, either dense or given by a mass
/// function (for index spaces too large to tabulate).
class Distribution {
 public:
  static Distribution dense(std::vector<double> masses);
  static Distribution from_function(Site dimension, std::function<double(Site)> mass);

  Site dimension() const { return dimension_; }
  bool is_dense() const { return !masses_.empty() || dimension_ == 0; }
  double mass(Site i) const;
  const std::vector<double>& masses() const { return masses_; }

 private:
  Site dimension_ = 0;
  std::vector<double> masses_;
  std::function<double(Site)> mass_fn_;
};

/// p^u_i = |u_i|^2 / |u|^2.
Distribution induced_distribution(std::span<const Complex> u);

/// Half the l1 distance between two dense distributions of equal dimension.
double tv_distance(const Distribution& p, const Distribution& q);

/// Query access to a vector, optionally with sampling access to its induced
/// distribution (up to total-variation error zeta) and its norm.
///
/// A VectorOracle is a cheap handle: copies share the underlying callbacks
/// and the cost counter. Query and sample callbacks must be thread-safe;
/// each concurrent consumer supplies its own Rng.
class VectorOracle {
 public:
  using QueryFn = std::function<Complex(Site)>;
  using SampleFn = std::function<Site(Rng&)>;

  VectorOracle(Site dimension, QueryFn query);

  Site dimension() const { return dimension_; }

  /// Entry u_i. Counts one query.
  Complex query(Site i) const;

  bool has_sampler() const { return static_cast<bool>(sampler_); }
  /// Draws an index from the (zeta-perturbed) induced distribution.
  Site sample(Rng& rng) const;

  std::optional<double> norm() const;
  bool has_norm() const { return norm_.has_value(); }
  double zeta() const { return zeta_; }

  const CostCounter& cost() const { return *cost_; }
  std::shared_ptr<CostCounter> cost_handle() const { return cost_; }

  VectorOracle with_sampler(SampleFn sampler, double zeta) const;
  VectorOracle with_norm(double norm) const;
  /// Same entries with no sampler and no norm (query access only).
  VectorOracle query_only() const;

 private:
  Site dimension_;
  QueryFn query_;
  SampleFn sampler_;
  std::optional<double> norm_;
  double zeta_ = 0.0;
  std::shared_ptr<CostCounter> cost_;
};

/// Wraps u so that each distinct index is fetched from u at most once.
/// The memo is sharded and safe for concurrent queries. Once `capacity`
/// entries are stored (0 means unbounded) further results are computed but
/// not cached. Sampler and norm are carried over.
VectorOracle memoized(const VectorOracle& u, std::size_t capacity = 0);

/// Query access only, backed by a dense vector.
VectorOracle query_access(DenseVector u);

/// Exact sampling-and-query access: cumulative-mass table with binary search,
/// exact norm, zeta = 0.
VectorOracle sq_access_from_dense(DenseVector u);

/// The fixed perturbation used by robustness tests: the sampler draws from
/// p~, which moves mass zeta from the heaviest site (lowest index on ties) to
/// the lightest other site (lowest index on ties), so tv(p~, p^u) = zeta.
/// Queries and the norm stay exact.
VectorOracle perturbed_sq_access(DenseVector u, double zeta);

/// The perturbed distribution itself, for verification.
std::vector<double> perturbed_masses(std::span<const Complex> u, double zeta);

/// Cumulative-table sampler over nonnegative weights.
class CumulativeSampler {
 public:
  explicit CumulativeSampler(std::span<const double> weights);
  Site draw(Rng& rng) const;
  double total() const { return cumulative_.empty() ? 0.0 : cumulative_.back(); }

 private:
  std::vector<double> cumulative_;
};

struct MatrixEntry {
  Site index;
  Complex value;
};

/// Lazy row/column access to a geometrically local matrix.
///
/// Row callbacks append the nonzero entries of one row (column index and
/// value). A row fetch is charged one query per returned entry, which is the
/// per-entry cost of slot-wise access. When `check_locality` is on, every
/// returned nonzero is verified to lie within distance r0 of its row.
class LocalMatrixOracle {
 public:
  using RowFn = std::function<void(Site, std::vector<MatrixEntry>&)>;

  enum class Symmetry { none, hermitian, anti_hermitian };

  struct Options {
    Symmetry symmetry = Symmetry::none;
    /// Spectrum enclosure for Hermitian matrices; defaults to
    /// [-norm_bound, norm_bound].
    std::optional<std::pair<double, double>> spectral_interval;
    /// Column access; derived from rows when Hermitian or anti-Hermitian.
    RowFn columns;
#ifdef NDEBUG
    bool check_locality = false;
#else
    bool check_locality = true;
#endif
  };

  LocalMatrixOracle(SiteGraph graph, double r0, RowFn rows, double norm_bound, Options options);
  LocalMatrixOracle(SiteGraph graph, double r0, RowFn rows, double norm_bound)
      : LocalMatrixOracle(std::move(graph), r0, std::move(rows), norm_bound, Options{}) {}

  const SiteGraph& graph() const { return *graph_; }
  Site dimension() const { return graph_->sites(); }
  double r0() const { return r0_; }
  double norm_bound() const { return norm_bound_; }
  Symmetry symmetry() const { return symmetry_; }
  bool is_hermitian() const { return symmetry_ == Symmetry::hermitian; }
  bool is_anti_hermitian() const { return symmetry_ == Symmetry::anti_hermitian; }
  std::pair<double, double> spectral_interval() const;

  /// Appends all nonzero entries of row i to `out` (cleared first).
  void row(Site i, std::vector<MatrixEntry>& out) const;
  void column(Site j, std::vector<MatrixEntry>& out) const;

  /// Slot-wise access: the slot-th nonzero of row i, or nullopt once exhausted.
  std::optional<MatrixEntry> row_query(Site i, std::size_t slot) const;
  std::optional<MatrixEntry> col_query(Site j, std::size_t slot) const;

  /// Throws LocalityError if row i has a nonzero beyond r0 or more entries
  /// than the locality function allows. Does not touch the cost counter.
  void verify_row(Site i) const;

  const CostCounter& cost() const { return *cost_; }
  std::shared_ptr<CostCounter> cost_handle() const { return cost_; }

 private:
  void check_entries(Site i, const std::vector<MatrixEntry>& entries) const;

  std::shared_ptr<const SiteGraph> graph_;
  double r0_;
  RowFn rows_;
  RowFn columns_;
  double norm_bound_;
  Symmetry symmetry_;
  std::optional<std::pair<double, double>> spectral_interval_;
  bool check_locality_;
  std::shared_ptr<CostCounter> cost_;
};

/// scale * A + shift * I as a new oracle over the same graph (fresh counter
/// is NOT created: queries are charged to A's counter).
LocalMatrixOracle affine_transform(const LocalMatrixOracle& a, Complex scale, double shift = 0.0);

/// Oracle over explicitly stored rows (tests, configs, small systems).
LocalMatrixOracle matrix_from_rows(SiteGraph graph, double r0,
                                   std::vector<std::vector<MatrixEntry>> rows,
                                   std::optional<double> norm_bound = std::nullopt,
                                   LocalMatrixOracle::Options options = {});

/// Max absolute row sum (a norm bound) computed from stored rows.
double max_row_sum(const std::vector<std::vector<MatrixEntry>>& rows);

}  // namespace glsim
