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

#include <cstdint>
#include <random>

namespace glsim {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

/// Derives an independent child seed for `stream` from a master seed.
///
/// Every random consumer in the library (estimator batches, sample draws,
/// test instances) obtains its stream this way, so results depend only on
/// the master seed and the stream id, never on scheduling.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream);

/// Deterministic pseudo-random source. Wraps mt19937_64, whose output
/// sequence is fixed by the standard, and converts to doubles itself so the
/// stream is identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). `bound` must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Standard normal draw (Box-Muller, one value per call).
  double normal();

 private:
  std::mt19937_64 engine_;
};

}  // namespace glsim
