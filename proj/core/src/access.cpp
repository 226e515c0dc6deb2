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

#include "glsim/access.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace glsim {

Distribution Distribution::dense(std::vector<double> masses) {
  Distribution d;
  d.dimension_ = static_cast<Site>(masses.size());
  for (double m : masses) {
    if (!(m >= 0.0)) {
      throw PreconditionError("probability masses must be nonnegative");
    }
  }
  d.masses_ = std::move(masses);
  return d;
}

Distribution Distribution::from_function(Site dimension, std::function<double(Site)> mass) {
  Distribution d;
  d.dimension_ = dimension;
  d.mass_fn_ = std::move(mass);
  return d;
}

double Distribution::mass(Site i) const {
  if (i < 0 || i >= dimension_) {
    throw std::out_of_range("distribution index out of range");
  }
  return masses_.empty() ? mass_fn_(i) : masses_[static_cast<std::size_t>(i)];
}

Distribution induced_distribution(std::span<const Complex> u) {
  double total = 0.0;
  for (const Complex& x : u) {
    total += std::norm(x);
  }
  require(total > 0.0, "induced distribution of the zero vector");
  std::vector<double> masses(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    masses[i] = std::norm(u[i]) / total;
  }
  return Distribution::dense(std::move(masses));
}

double tv_distance(const Distribution& p, const Distribution& q) {
  require(p.dimension() == q.dimension(), "tv_distance: dimension mismatch");
  require(p.is_dense() && q.is_dense(), "tv_distance needs dense distributions");
  double total = 0.0;
  for (std::size_t i = 0; i < p.masses().size(); ++i) {
    total += std::abs(p.masses()[i] - q.masses()[i]);
  }
  return 0.5 * total;
}

VectorOracle::VectorOracle(Site dimension, QueryFn query)
    : dimension_(dimension), query_(std::move(query)), cost_(std::make_shared<CostCounter>()) {
  require(dimension > 0, "vector oracle needs a positive dimension");
}

Complex VectorOracle::query(Site i) const {
  if (i < 0 || i >= dimension_) {
    throw std::out_of_range("vector query " + std::to_string(i) + " out of range");
  }
  cost_->add_queries();
  return query_(i);
}

Site VectorOracle::sample(Rng& rng) const {
  require(has_sampler(), "vector oracle has no sampling access");
  cost_->add_samples();
  return sampler_(rng);
}

std::optional<double> VectorOracle::norm() const {
  if (norm_) {
    cost_->add_norm_reads();
  }
  return norm_;
}

VectorOracle VectorOracle::with_sampler(SampleFn sampler, double zeta) const {
  require(zeta >= 0.0, "sampling accuracy must be nonnegative");
  VectorOracle out = *this;
  out.sampler_ = std::move(sampler);
  out.zeta_ = zeta;
  return out;
}

VectorOracle VectorOracle::with_norm(double norm) const {
  require(norm >= 0.0, "norm must be nonnegative");
  VectorOracle out = *this;
  out.norm_ = norm;
  return out;
}

VectorOracle VectorOracle::query_only() const {
  VectorOracle out = *this;
  out.sampler_ = nullptr;
  out.norm_.reset();
  out.zeta_ = 0.0;
  return out;
}

namespace {

class MemoTable {
 public:
  explicit MemoTable(std::size_t capacity) : capacity_(capacity) {}

  std::optional<Complex> find(Site i) {
    Shard& shard = shard_of(i);
    std::lock_guard lock(shard.mutex);
    auto it = shard.values.find(i);
    if (it == shard.values.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  void insert(Site i, Complex value) {
    if (capacity_ != 0 && size_.load(std::memory_order_relaxed) >= capacity_) {
      return;
    }
    Shard& shard = shard_of(i);
    std::lock_guard lock(shard.mutex);
    if (shard.values.emplace(i, value).second) {
      size_.fetch_add(1, std::memory_order_relaxed);
    }
  }

 private:
  static constexpr std::size_t kShards = 16;
  struct Shard {
    std::mutex mutex;
    std::unordered_map<Site, Complex> values;
  };

  Shard& shard_of(Site i) { return shards_[static_cast<std::uint64_t>(i) % kShards]; }

  std::size_t capacity_;
  std::atomic<std::size_t> size_{0};
  Shard shards_[kShards];
};

}  // namespace

VectorOracle memoized(const VectorOracle& u, std::size_t capacity) {
  auto table = std::make_shared<MemoTable>(capacity);
  VectorOracle out(u.dimension(), [u, table](Site i) {
    if (auto hit = table->find(i)) {
      return *hit;
    }
    const Complex value = u.query(i);
    table->insert(i, value);
    return value;
  });
  if (u.has_sampler()) {
    out = out.with_sampler([u](Rng& rng) { return u.sample(rng); }, u.zeta());
  }
  if (u.has_norm()) {
    out = out.with_norm(*u.norm());
  }
  return out;
}

CumulativeSampler::CumulativeSampler(std::span<const double> weights) {
  cumulative_.resize(weights.size());
  double running = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    require(weights[i] >= 0.0, "sampler weights must be nonnegative");
    running += weights[i];
    cumulative_[i] = running;
  }
  require(running > 0.0, "sampler weights sum to zero");
}

Site CumulativeSampler::draw(Rng& rng) const {
  const double target = rng.uniform() * cumulative_.back();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
  if (it == cumulative_.end()) {
    --it;
  }
  // Never return a zero-weight site when rounding lands on a plateau.
  auto idx = static_cast<std::size_t>(it - cumulative_.begin());
  while (idx > 0 && cumulative_[idx] == cumulative_[idx - 1]) {
    --idx;
  }
  return static_cast<Site>(idx);
}

namespace {

std::shared_ptr<const DenseVector> share(DenseVector u) {
  return std::make_shared<const DenseVector>(std::move(u));
}

VectorOracle::QueryFn dense_query(std::shared_ptr<const DenseVector> data) {
  return [data](Site i) { return (*data)[static_cast<std::size_t>(i)]; };
}

double euclidean_norm(std::span<const Complex> u) {
  double total = 0.0;
  for (const Complex& x : u) {
    total += std::norm(x);
  }
  return std::sqrt(total);
}

}  // namespace

VectorOracle query_access(DenseVector u) {
  require(!u.empty(), "empty vector");
  auto data = share(std::move(u));
  return VectorOracle(static_cast<Site>(data->size()), dense_query(data));
}

VectorOracle sq_access_from_dense(DenseVector u) {
  require(!u.empty(), "empty vector");
  const double norm = euclidean_norm(u);
  require(norm > 0.0, "sampling access to the zero vector");
  std::vector<double> weights(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    weights[i] = std::norm(u[i]);
  }
  auto sampler = std::make_shared<const CumulativeSampler>(weights);
  auto data = share(std::move(u));
  return VectorOracle(static_cast<Site>(data->size()), dense_query(data))
      .with_norm(norm)
      .with_sampler([sampler](Rng& rng) { return sampler->draw(rng); }, 0.0);
}

std::vector<double> perturbed_masses(std::span<const Complex> u, double zeta) {
  require(zeta >= 0.0 && zeta < 1.0, "zeta must lie in [0, 1)");
  std::vector<double> p = induced_distribution(u).masses();
  if (zeta == 0.0) {
    return p;
  }
  require(p.size() >= 2, "perturbation needs at least two sites");
  const auto heavy = static_cast<std::size_t>(std::max_element(p.begin(), p.end()) - p.begin());
  std::size_t light = heavy == 0 ? 1 : 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i != heavy && p[i] < p[light]) {
      light = i;
    }
  }
  require(p[heavy] >= zeta, "zeta exceeds the heaviest site's mass");
  p[heavy] -= zeta;
  p[light] += zeta;
  return p;
}

VectorOracle perturbed_sq_access(DenseVector u, double zeta) {
  const std::vector<double> masses = perturbed_masses(u, zeta);
  auto sampler = std::make_shared<const CumulativeSampler>(masses);
  const double norm = euclidean_norm(u);
  auto data = share(std::move(u));
  return VectorOracle(static_cast<Site>(data->size()), dense_query(data))
      .with_norm(norm)
      .with_sampler([sampler](Rng& rng) { return sampler->draw(rng); }, zeta);
}

LocalMatrixOracle::LocalMatrixOracle(SiteGraph graph, double r0, RowFn rows, double norm_bound,
                                     Options options)
    : graph_(std::make_shared<const SiteGraph>(std::move(graph))),
      r0_(r0),
      rows_(std::move(rows)),
      columns_(std::move(options.columns)),
      norm_bound_(norm_bound),
      symmetry_(options.symmetry),
      spectral_interval_(options.spectral_interval),
      check_locality_(options.check_locality),
      cost_(std::make_shared<CostCounter>()) {
  require(r0 >= 0.0, "locality radius must be nonnegative");
  require(norm_bound >= 0.0 && std::isfinite(norm_bound), "norm bound must be finite and nonnegative");
  require(static_cast<bool>(rows_), "row access is required");
  if (spectral_interval_) {
    require(spectral_interval_->first <= spectral_interval_->second, "empty spectral interval");
  }
}

std::pair<double, double> LocalMatrixOracle::spectral_interval() const {
  if (spectral_interval_) {
    return *spectral_interval_;
  }
  return {-norm_bound_, norm_bound_};
}

void LocalMatrixOracle::check_entries(Site i, const std::vector<MatrixEntry>& entries) const {
  const auto limit = static_cast<std::size_t>(graph_->locality(r0_));
  if (entries.size() > limit) {
    throw LocalityError("row " + std::to_string(i) + " has " + std::to_string(entries.size()) +
                        " entries, more than the locality bound " + std::to_string(limit));
  }
  for (const MatrixEntry& e : entries) {
    if (e.value == Complex{}) {
      continue;
    }
    const std::int64_t d = graph_->distance(i, e.index);
    if (d < 0 || static_cast<double>(d) > r0_) {
      throw LocalityError("entry (" + std::to_string(i) + ", " + std::to_string(e.index) +
                          ") lies at distance " + std::to_string(d) + " > r0");
    }
  }
}

void LocalMatrixOracle::row(Site i, std::vector<MatrixEntry>& out) const {
  if (i < 0 || i >= dimension()) {
    throw std::out_of_range("matrix row " + std::to_string(i) + " out of range");
  }
  out.clear();
  rows_(i, out);
  cost_->add_queries(out.size());
  if (check_locality_) {
    check_entries(i, out);
  }
}

void LocalMatrixOracle::column(Site j, std::vector<MatrixEntry>& out) const {
  if (j < 0 || j >= dimension()) {
    throw std::out_of_range("matrix column " + std::to_string(j) + " out of range");
  }
  out.clear();
  if (columns_) {
    columns_(j, out);
  } else if (symmetry_ != Symmetry::none) {
    rows_(j, out);
    const double sign = symmetry_ == Symmetry::hermitian ? 1.0 : -1.0;
    for (MatrixEntry& e : out) {
      e.value = sign * std::conj(e.value);
    }
  } else {
    throw PreconditionError("column access is not available for this matrix");
  }
  cost_->add_queries(out.size());
  if (check_locality_) {
    check_entries(j, out);
  }
}

std::optional<MatrixEntry> LocalMatrixOracle::row_query(Site i, std::size_t slot) const {
  std::vector<MatrixEntry> entries;
  rows_(i, entries);
  cost_->add_queries();
  if (slot >= entries.size()) {
    return std::nullopt;
  }
  if (check_locality_) {
    check_entries(i, entries);
  }
  return entries[slot];
}

std::optional<MatrixEntry> LocalMatrixOracle::col_query(Site j, std::size_t slot) const {
  std::vector<MatrixEntry> entries;
  column(j, entries);
  // column() charged the whole column; slot access is charged one query.
  cost_->add_queries(1);
  if (slot >= entries.size()) {
    return std::nullopt;
  }
  return entries[slot];
}

void LocalMatrixOracle::verify_row(Site i) const {
  std::vector<MatrixEntry> entries;
  rows_(i, entries);
  check_entries(i, entries);
}

LocalMatrixOracle affine_transform(const LocalMatrixOracle& a, Complex scale, double shift) {
  LocalMatrixOracle::Options options;
  LocalMatrixOracle::Symmetry symmetry = LocalMatrixOracle::Symmetry::none;
  const bool real_scale = scale.imag() == 0.0;
  const bool imag_scale = scale.real() == 0.0;
  if (a.is_hermitian() && real_scale) {
    symmetry = LocalMatrixOracle::Symmetry::hermitian;
  } else if (a.is_hermitian() && imag_scale && shift == 0.0) {
    symmetry = LocalMatrixOracle::Symmetry::anti_hermitian;
  } else if (a.is_anti_hermitian() && imag_scale) {
    symmetry = LocalMatrixOracle::Symmetry::hermitian;
  } else if (a.is_anti_hermitian() && real_scale && shift == 0.0) {
    symmetry = LocalMatrixOracle::Symmetry::anti_hermitian;
  }
  options.symmetry = symmetry;
  options.check_locality = false;
  if (symmetry == LocalMatrixOracle::Symmetry::hermitian) {
    if (a.is_hermitian()) {
      auto [lo, hi] = a.spectral_interval();
      lo = scale.real() * lo + shift;
      hi = scale.real() * hi + shift;
      options.spectral_interval = std::pair{std::min(lo, hi), std::max(lo, hi)};
    } else {
      // A = iK with K Hermitian and spectrum in [-|A|, |A|].
      const double s = std::abs(scale) * a.norm_bound();
      options.spectral_interval = std::pair{shift - s, shift + s};
    }
  }
  auto rows = [a, scale, shift](Site i, std::vector<MatrixEntry>& out) {
    a.row(i, out);
    bool diagonal_seen = false;
    for (MatrixEntry& e : out) {
      e.value *= scale;
      if (e.index == i) {
        e.value += shift;
        diagonal_seen = true;
      }
    }
    if (!diagonal_seen && shift != 0.0) {
      out.push_back({i, Complex{shift, 0.0}});
    }
  };
  const double bound = std::abs(scale) * a.norm_bound() + std::abs(shift);
  return LocalMatrixOracle(a.graph(), a.r0(), rows, bound, options);
}

double max_row_sum(const std::vector<std::vector<MatrixEntry>>& rows) {
  double best = 0.0;
  for (const auto& row : rows) {
    double total = 0.0;
    for (const MatrixEntry& e : row) {
      total += std::abs(e.value);
    }
    best = std::max(best, total);
  }
  return best;
}

LocalMatrixOracle matrix_from_rows(SiteGraph graph, double r0,
                                   std::vector<std::vector<MatrixEntry>> rows,
                                   std::optional<double> norm_bound,
                                   LocalMatrixOracle::Options options) {
  require(static_cast<Site>(rows.size()) == graph.sites(), "row count must match the graph");
  for (auto& row : rows) {
    std::sort(row.begin(), row.end(), [](const MatrixEntry& x, const MatrixEntry& y) { return x.index < y.index; });
  }
  double bound = 0.0;
  if (norm_bound) {
    bound = *norm_bound;
  } else {
    // sqrt(|A|_1 |A|_inf) bounds the spectral norm of any matrix.
    std::vector<double> col_sums(rows.size(), 0.0);
    for (const auto& row : rows) {
      for (const MatrixEntry& e : row) {
        col_sums[static_cast<std::size_t>(e.index)] += std::abs(e.value);
      }
    }
    const double row_max = max_row_sum(rows);
    const double col_max = col_sums.empty() ? 0.0 : *std::max_element(col_sums.begin(), col_sums.end());
    bound = std::sqrt(row_max * col_max);
  }
  auto data = std::make_shared<const std::vector<std::vector<MatrixEntry>>>(std::move(rows));
  auto row_fn = [data](Site i, std::vector<MatrixEntry>& out) {
    const auto& r = (*data)[static_cast<std::size_t>(i)];
    out.insert(out.end(), r.begin(), r.end());
  };
  return LocalMatrixOracle(std::move(graph), r0, row_fn, bound, std::move(options));
}

}  // namespace glsim
