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

#include "glsim/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <list>
#include <map>
#include <mutex>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace glsim {

struct SiteGraph::EmbeddedData {
  SiteGraph host;
  SiteMap to_host;
  SiteMap from_host;
};

// LRU memo of balls keyed by (site, integer radius), plus the locality
// function per radius. One mutex guards both; entries are small.
struct SiteGraph::BallCache {
  struct Key {
    Site site;
    std::int64_t radius;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<Site>()(k.site) ^ (std::hash<std::int64_t>()(k.radius) * 0x9E3779B97F4A7C15ULL);
    }
  };
  using Entry = std::pair<Key, std::vector<Site>>;

  std::mutex mutex;
  std::size_t capacity = 4096;
  std::list<Entry> order;
  std::unordered_map<Key, std::list<Entry>::iterator, KeyHash> index;
  std::map<std::int64_t, Site> locality;

  bool lookup(const Key& key, std::vector<Site>& out) {
    std::lock_guard lock(mutex);
    auto it = index.find(key);
    if (it == index.end()) {
      return false;
    }
    order.splice(order.begin(), order, it->second);
    out = it->second->second;
    return true;
  }

  void insert(const Key& key, const std::vector<Site>& ball) {
    std::lock_guard lock(mutex);
    if (capacity == 0 || index.contains(key)) {
      return;
    }
    order.emplace_front(key, ball);
    index[key] = order.begin();
    while (index.size() > capacity) {
      index.erase(order.back().first);
      order.pop_back();
    }
  }
};

namespace {

std::int64_t floor_radius(double r) {
  if (!(r >= 0.0)) {
    throw std::invalid_argument("radius must be nonnegative");
  }
  if (r >= 4.0e18) {
    return std::numeric_limits<std::int64_t>::max() / 4;
  }
  return static_cast<std::int64_t>(std::floor(r));
}

std::int64_t axis_distance(Site a, Site b, Site side, Boundary boundary) {
  const std::int64_t d = a > b ? a - b : b - a;
  if (boundary == Boundary::periodic) {
    return std::min(d, side - d);
  }
  return d;
}

// Number of coordinates on one axis at each distance 0..radius from the
// coordinate that maximizes ball sizes (the axis centre).
std::vector<Site> axis_profile(Site side, Boundary boundary, std::int64_t radius) {
  std::vector<Site> counts(static_cast<std::size_t>(radius) + 1, 0);
  if (boundary == Boundary::periodic) {
    for (std::int64_t d = 0; d <= radius; ++d) {
      if (d == 0) {
        counts[0] = 1;
      } else if (2 * d < side) {
        counts[d] = 2;
      } else if (2 * d == side) {
        counts[d] = 1;
      }
    }
    return counts;
  }
  const Site centre = (side - 1) / 2;
  const Site left = centre;
  const Site right = side - 1 - centre;
  for (std::int64_t d = 0; d <= radius; ++d) {
    if (d == 0) {
      counts[0] = 1;
      continue;
    }
    counts[d] = (d <= left ? 1 : 0) + (d <= right ? 1 : 0);
  }
  return counts;
}

}  // namespace

SiteGraph SiteGraph::chain(Site n_sites, Boundary boundary) {
  if (n_sites <= 0) {
    throw std::invalid_argument("chain needs a positive site count");
  }
  SiteGraph g;
  g.kind_ = Kind::chain;
  g.n_sites_ = n_sites;
  g.boundary_ = boundary;
  g.sides_ = {n_sites};
  g.cache_ = std::make_shared<BallCache>();
  return g;
}

SiteGraph SiteGraph::grid(std::vector<Site> sides, Boundary boundary) {
  if (sides.empty()) {
    throw std::invalid_argument("grid needs at least one axis");
  }
  Site total = 1;
  for (Site s : sides) {
    if (s <= 0) {
      throw std::invalid_argument("grid side lengths must be positive");
    }
    if (total > (std::numeric_limits<Site>::max() >> 1) / s) {
      throw std::invalid_argument("grid is too large");
    }
    total *= s;
  }
  SiteGraph g;
  g.kind_ = Kind::grid;
  g.n_sites_ = total;
  g.boundary_ = boundary;
  g.sides_ = std::move(sides);
  g.cache_ = std::make_shared<BallCache>();
  return g;
}

SiteGraph SiteGraph::general(Site n_sites, const std::vector<std::pair<Site, Site>>& bonds) {
  if (n_sites <= 0) {
    throw std::invalid_argument("graph needs a positive site count");
  }
  auto adjacency = std::make_shared<std::vector<std::vector<Site>>>(static_cast<std::size_t>(n_sites));
  for (const auto& [a, b] : bonds) {
    if (a < 0 || b < 0 || a >= n_sites || b >= n_sites) {
      throw std::out_of_range("bond endpoint out of range");
    }
    if (a == b) {
      continue;
    }
    (*adjacency)[a].push_back(b);
    (*adjacency)[b].push_back(a);
  }
  for (auto& row : *adjacency) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  SiteGraph g;
  g.kind_ = Kind::general;
  g.n_sites_ = n_sites;
  g.adjacency_ = std::move(adjacency);
  g.cache_ = std::make_shared<BallCache>();
  return g;
}

SiteGraph SiteGraph::embedded(const SiteGraph& host, Site n_sites, SiteMap to_host,
                              SiteMap from_host) {
  if (n_sites <= 0 || n_sites > host.sites()) {
    throw std::invalid_argument("embedded graph must fit inside its host");
  }
  SiteGraph g;
  g.kind_ = Kind::embedded;
  g.n_sites_ = n_sites;
  g.boundary_ = host.boundary();
  g.sides_ = host.sides();
  g.embedded_ = std::make_shared<EmbeddedData>(EmbeddedData{host, std::move(to_host), std::move(from_host)});
  g.cache_ = std::make_shared<BallCache>();
  return g;
}

int SiteGraph::dimension() const {
  switch (kind_) {
    case Kind::chain:
      return 1;
    case Kind::grid:
      return static_cast<int>(sides_.size());
    case Kind::general:
      return 0;
    case Kind::embedded:
      return embedded_->host.dimension();
  }
  return 0;
}

void SiteGraph::check_site(Site i) const {
  if (i < 0 || i >= n_sites_) {
    throw std::out_of_range("site " + std::to_string(i) + " out of range [0, " +
                            std::to_string(n_sites_) + ")");
  }
}

std::vector<Site> SiteGraph::coordinates(Site i) const {
  check_site(i);
  std::vector<Site> coords(sides_.size());
  for (std::size_t axis = sides_.size(); axis-- > 0;) {
    coords[axis] = i % sides_[axis];
    i /= sides_[axis];
  }
  return coords;
}

Site SiteGraph::site_at(const std::vector<Site>& coords) const {
  if (coords.size() != sides_.size()) {
    throw std::invalid_argument("coordinate rank mismatch");
  }
  Site index = 0;
  for (std::size_t axis = 0; axis < sides_.size(); ++axis) {
    if (coords[axis] < 0 || coords[axis] >= sides_[axis]) {
      throw std::out_of_range("coordinate out of range");
    }
    index = index * sides_[axis] + coords[axis];
  }
  return index;
}

std::int64_t SiteGraph::distance(Site i, Site j) const {
  check_site(i);
  check_site(j);
  switch (kind_) {
    case Kind::chain:
      return axis_distance(i, j, n_sites_, boundary_);
    case Kind::grid: {
      std::int64_t total = 0;
      for (std::size_t axis = sides_.size(); axis-- > 0;) {
        total += axis_distance(i % sides_[axis], j % sides_[axis], sides_[axis], boundary_);
        i /= sides_[axis];
        j /= sides_[axis];
      }
      return total;
    }
    case Kind::general:
      return bfs_distance(i, j);
    case Kind::embedded:
      return embedded_->host.distance(embedded_->to_host(i), embedded_->to_host(j));
  }
  return -1;
}

std::vector<Site> SiteGraph::neighbours(Site i) const {
  check_site(i);
  switch (kind_) {
    case Kind::general:
      return (*adjacency_)[i];
    case Kind::embedded: {
      std::vector<Site> out;
      for (Site h : embedded_->host.neighbours(embedded_->to_host(i))) {
        const Site s = embedded_->from_host(h);
        if (s >= 0) {
          out.push_back(s);
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }
    case Kind::chain:
    case Kind::grid: {
      std::vector<Site> out;
      const std::vector<Site> base = coordinates(i);
      for (std::size_t axis = 0; axis < sides_.size(); ++axis) {
        for (Site step : {Site{-1}, Site{1}}) {
          std::vector<Site> c = base;
          c[axis] += step;
          if (c[axis] < 0 || c[axis] >= sides_[axis]) {
            if (boundary_ == Boundary::open) {
              continue;
            }
            c[axis] = (c[axis] + sides_[axis]) % sides_[axis];
          }
          const Site s = site_at(c);
          if (s != i) {
            out.push_back(s);
          }
        }
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
  }
  return {};
}

std::int64_t SiteGraph::bfs_distance(Site i, Site j) const {
  check_site(i);
  check_site(j);
  if (i == j) {
    return 0;
  }
  std::unordered_map<Site, std::int64_t> seen{{i, 0}};
  std::queue<Site> frontier;
  frontier.push(i);
  while (!frontier.empty()) {
    const Site s = frontier.front();
    frontier.pop();
    const std::int64_t d = seen[s];
    for (Site nb : neighbours(s)) {
      if (seen.contains(nb)) {
        continue;
      }
      if (nb == j) {
        return d + 1;
      }
      seen[nb] = d + 1;
      frontier.push(nb);
    }
  }
  return -1;
}

std::vector<Site> SiteGraph::compute_ball(Site i, std::int64_t radius) const {
  switch (kind_) {
    case Kind::chain: {
      std::vector<Site> out;
      if (2 * radius + 1 >= n_sites_) {
        out.resize(static_cast<std::size_t>(n_sites_));
        for (Site s = 0; s < n_sites_; ++s) {
          out[s] = s;
        }
        return out;
      }
      for (Site s = i - radius; s <= i + radius; ++s) {
        if (s >= 0 && s < n_sites_) {
          out.push_back(s);
        } else if (boundary_ == Boundary::periodic) {
          out.push_back((s % n_sites_ + n_sites_) % n_sites_);
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }
    case Kind::grid: {
      // Enumerate offsets axis by axis, keeping the remaining L1 budget.
      std::vector<Site> out;
      const std::vector<Site> base = coordinates(i);
      std::vector<Site> current(base.size());
      const std::size_t rank = base.size();
      auto recurse = [&](auto&& self, std::size_t axis, std::int64_t budget) -> void {
        if (axis == rank) {
          out.push_back(site_at(current));
          return;
        }
        const Site side = sides_[axis];
        if (boundary_ == Boundary::periodic) {
          const std::int64_t reach = std::min<std::int64_t>(budget, side / 2);
          for (std::int64_t off = -reach; off <= reach; ++off) {
            const std::int64_t cost = std::min<std::int64_t>(off < 0 ? -off : off, side - (off < 0 ? -off : off));
            if (cost > budget) {
              continue;
            }
            // Skip the duplicate antipode on even sides.
            if (2 * off == -side) {
              continue;
            }
            current[axis] = ((base[axis] + off) % side + side) % side;
            self(self, axis + 1, budget - cost);
          }
        } else {
          const Site lo = std::max<Site>(0, base[axis] - budget);
          const Site hi = std::min<Site>(side - 1, base[axis] + budget);
          for (Site c = lo; c <= hi; ++c) {
            current[axis] = c;
            self(self, axis + 1, budget - (c > base[axis] ? c - base[axis] : base[axis] - c));
          }
        }
      };
      recurse(recurse, 0, radius);
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
    case Kind::general: {
      std::vector<Site> out{i};
      std::unordered_map<Site, std::int64_t> seen{{i, 0}};
      std::queue<Site> frontier;
      frontier.push(i);
      while (!frontier.empty()) {
        const Site s = frontier.front();
        frontier.pop();
        const std::int64_t d = seen[s];
        if (d == radius) {
          continue;
        }
        for (Site nb : (*adjacency_)[s]) {
          if (!seen.contains(nb)) {
            seen[nb] = d + 1;
            out.push_back(nb);
            frontier.push(nb);
          }
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }
    case Kind::embedded: {
      std::vector<Site> out;
      for (Site h : embedded_->host.ball(embedded_->to_host(i), static_cast<double>(radius))) {
        const Site s = embedded_->from_host(h);
        if (s >= 0) {
          out.push_back(s);
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  }
  return {};
}

std::vector<Site> SiteGraph::ball(Site i, double r) const {
  check_site(i);
  const std::int64_t radius = floor_radius(r);
  const BallCache::Key key{i, radius};
  std::vector<Site> out;
  if (cache_->lookup(key, out)) {
    return out;
  }
  out = compute_ball(i, radius);
  cache_->insert(key, out);
  return out;
}

Site SiteGraph::ball_size(Site i, double r) const {
  check_site(i);
  const std::int64_t radius = floor_radius(r);
  if (kind_ == Kind::chain) {
    if (2 * radius + 1 >= n_sites_) {
      return n_sites_;
    }
    if (boundary_ == Boundary::periodic) {
      return 2 * radius + 1;
    }
    return std::min(i, radius) + std::min(n_sites_ - 1 - i, radius) + 1;
  }
  if (kind_ == Kind::grid) {
    // Count by convolving per-axis distance profiles of this site.
    const std::vector<Site> base = coordinates(i);
    std::vector<Site> total(static_cast<std::size_t>(radius) + 1, 0);
    total[0] = 1;
    for (std::size_t axis = 0; axis < sides_.size(); ++axis) {
      const Site side = sides_[axis];
      std::vector<Site> profile(static_cast<std::size_t>(radius) + 1, 0);
      for (std::int64_t d = 0; d <= radius; ++d) {
        if (boundary_ == Boundary::periodic) {
          profile[d] = d == 0 ? 1 : (2 * d < side ? 2 : (2 * d == side ? 1 : 0));
        } else {
          profile[d] = d == 0 ? 1 : (base[axis] - d >= 0 ? 1 : 0) + (base[axis] + d < side ? 1 : 0);
        }
      }
      std::vector<Site> next(total.size(), 0);
      for (std::size_t a = 0; a < total.size(); ++a) {
        if (total[a] == 0) {
          continue;
        }
        for (std::size_t b = 0; a + b < total.size(); ++b) {
          next[a + b] += total[a] * profile[b];
        }
      }
      total = std::move(next);
    }
    Site count = 0;
    for (Site c : total) {
      count += c;
    }
    return count;
  }
  return static_cast<Site>(ball(i, r).size());
}

Site SiteGraph::grid_locality(std::int64_t radius) const {
  std::vector<Site> total(static_cast<std::size_t>(radius) + 1, 0);
  total[0] = 1;
  for (Site side : sides_) {
    const std::vector<Site> profile = axis_profile(side, boundary_, radius);
    std::vector<Site> next(total.size(), 0);
    for (std::size_t a = 0; a < total.size(); ++a) {
      if (total[a] == 0) {
        continue;
      }
      for (std::size_t b = 0; a + b < total.size(); ++b) {
        next[a + b] += total[a] * profile[b];
      }
    }
    total = std::move(next);
  }
  Site count = 0;
  for (Site c : total) {
    count += c;
  }
  return std::min(count, n_sites_);
}

Site SiteGraph::locality(double r) const {
  const std::int64_t radius = floor_radius(r);
  switch (kind_) {
    case Kind::chain:
      return 2 * radius + 1 >= n_sites_ ? n_sites_ : 2 * radius + 1;
    case Kind::grid: {
      Site max_span = 0;
      for (Site s : sides_) {
        max_span += s;
      }
      return grid_locality(std::min<std::int64_t>(radius, max_span));
    }
    case Kind::embedded:
      // Declared through the host layout; an upper bound for the image.
      return std::min(embedded_->host.locality(r), n_sites_);
    case Kind::general: {
      {
        std::lock_guard lock(cache_->mutex);
        auto it = cache_->locality.find(radius);
        if (it != cache_->locality.end()) {
          return it->second;
        }
      }
      Site best = 0;
      for (Site i = 0; i < n_sites_; ++i) {
        best = std::max<Site>(best, static_cast<Site>(compute_ball(i, radius).size()));
      }
      std::lock_guard lock(cache_->mutex);
      cache_->locality[radius] = best;
      return best;
    }
  }
  return 0;
}

void SiteGraph::set_ball_cache_capacity(std::size_t capacity) const {
  std::lock_guard lock(cache_->mutex);
  cache_->capacity = capacity;
  while (cache_->index.size() > capacity) {
    cache_->index.erase(cache_->order.back().first);
    cache_->order.pop_back();
  }
}

}  // namespace glsim
