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


#include <benchmark/benchmark.h>

#include <cmath>

#include "glsim/lightcone.hpp"
#include "glsim/pde.hpp"

namespace glsim {
namespace {

LocalMatrixOracle lazy_laplacian(std::vector<Site> sides) {
  return laplacian_oracle(sides.size() == 1 ? SiteGraph::chain(sides[0], Boundary::periodic)
                                            : SiteGraph::grid(std::move(sides), Boundary::periodic));
}

VectorOracle smooth(Site n) {
  return VectorOracle(n, [](Site j) { return Complex(std::cos(0.01 * static_cast<double>(j)), 0.0); });
}

// One entry of e^{iAt} u on a 2^20 chain; the degree grows with t.
void BM_EntryChain(benchmark::State& state) {
  const Site n = Site{1} << 20;
  const LocalMatrixOracle a = lazy_laplacian({n});
  const Polynomial p = exp_poly(a.norm_bound(), static_cast<double>(state.range(0)), 1e-8);
  const VectorOracle u = smooth(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(entry_of_poly_apply(a, p, u, n / 2));
  }
  state.counters["degree"] = p.degree();
}
BENCHMARK(BM_EntryChain)->RangeMultiplier(2)->Range(1, 32)->Unit(benchmark::kMicrosecond);

void BM_EntryGrid(benchmark::State& state) {
  const LocalMatrixOracle a = lazy_laplacian({1024, 1024});
  const Polynomial p = exp_poly(a.norm_bound(), static_cast<double>(state.range(0)), 1e-8);
  const VectorOracle u = smooth(a.dimension());
  for (auto _ : state) {
    benchmark::DoNotOptimize(entry_of_poly_apply(a, p, u, 512 * 1024 + 512));
  }
  state.counters["degree"] = p.degree();
}
BENCHMARK(BM_EntryGrid)->RangeMultiplier(2)->Range(1, 8)->Unit(benchmark::kMicrosecond);

void BM_RowPower(benchmark::State& state) {
  const LocalMatrixOracle a = lazy_laplacian({256, 256});
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(row_power(a, 128 * 256 + 128, k).support());
  }
}
BENCHMARK(BM_RowPower)->RangeMultiplier(2)->Range(2, 64)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace glsim

BENCHMARK_MAIN();
