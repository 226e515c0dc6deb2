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

#include <cstddef>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "glsim/common.hpp"

namespace glsim {

enum class Boundary { open, periodic };

/// A finite set of lattice sites with an integer hop metric.
///
/// Chain and grid graphs use closed forms and never materialize their sites,
/// so they may be as large as 2^62. General graphs are stored as adjacency
/// lists and answer distance queries by breadth-first search. Embedded graphs
/// place their sites injectively into a host graph and inherit its metric;
/// they describe layouts such as clock registers drawn on a 2D grid.
///
/// Instances are immutable after construction and safe to share between
/// threads. Ball queries go through an internally synchronized LRU memo.
class SiteGraph {
 public:
  enum class Kind { chain, grid, general, embedded };

  /// Maps a site to its host site, and a host site back (-1 when unused).
  using SiteMap = std::function<Site(Site)>;

  static SiteGraph chain(Site n_sites, Boundary boundary = Boundary::open);
  static SiteGraph grid(std::vector<Site> sides, Boundary boundary = Boundary::open);
  static SiteGraph general(Site n_sites, const std::vector<std::pair<Site, Site>>& bonds);
  static SiteGraph embedded(const SiteGraph& host, Site n_sites, SiteMap to_host,
                            SiteMap from_host);

  Kind kind() const { return kind_; }
  Site sites() const { return n_sites_; }
  Boundary boundary() const { return boundary_; }
  /// Spatial dimension: 1 for chains, D for grids, 0 for general graphs.
  int dimension() const;
  const std::vector<Site>& sides() const { return sides_; }

  /// Grid coordinates of a site (axis 0 varies slowest).
  std::vector<Site> coordinates(Site i) const;
  Site site_at(const std::vector<Site>& coordinates) const;

  /// Hop distance. Throws std::out_of_range for invalid sites; returns -1
  /// for disconnected pairs of a general graph.
  std::int64_t distance(Site i, Site j) const;

  /// All sites within distance floor(r) of i, sorted ascending.
  std::vector<Site> ball(Site i, double r) const;
  Site ball_size(Site i, double r) const;

  /// Largest ball size over all sites at radius r, i.e. the locality function.
  Site locality(double r) const;

  /// Caps the number of memoized balls (default 4096).
  void set_ball_cache_capacity(std::size_t capacity) const;

  /// Breadth-first distance over explicit neighbours. Works for every kind and
  /// is used to cross-check the closed forms on small instances.
  std::int64_t bfs_distance(Site i, Site j) const;

  /// Direct neighbours (distance exactly 1), sorted ascending.
  std::vector<Site> neighbours(Site i) const;

 private:
  struct BallCache;
  struct EmbeddedData;

  SiteGraph() = default;
  void check_site(Site i) const;
  std::vector<Site> compute_ball(Site i, std::int64_t radius) const;
  Site grid_locality(std::int64_t radius) const;

  Kind kind_ = Kind::chain;
  Site n_sites_ = 0;
  Boundary boundary_ = Boundary::open;
  std::vector<Site> sides_;
  std::shared_ptr<const std::vector<std::vector<Site>>> adjacency_;
  std::shared_ptr<const EmbeddedData> embedded_;
  std::shared_ptr<BallCache> cache_;
};

}  // namespace glsim
