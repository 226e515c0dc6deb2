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

#include "glsim/estimate.hpp"
#include "glsim/pde.hpp"
#include "glsim/sampling.hpp"

namespace glsim {
namespace {

VectorOracle uniform(Site n) {
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  return VectorOracle(n, [amp](Site) { return Complex(amp); })
      .with_sampler([n](Rng& rng) { return static_cast<Site>(rng.below(static_cast<std::uint64_t>(n))); }, 0.0)
      .with_norm(1.0);
}

VectorOracle point(Site n, Site k) {
  return VectorOracle(n, [k](Site j) { return Complex(j == k ? 1.0 : 0.0); })
      .with_sampler([k](Rng&) { return k; }, 0.0)
      .with_norm(1.0);
}

void BM_InnerProduct(benchmark::State& state) {
  const Site n = Site{1} << 16;
  const VectorOracle v = uniform(n);
  const VectorOracle w = uniform(n);
  const double eps = 1.0 / static_cast<double>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(inner_product_estimate(w, v, eps, 0.05, seed++, {1}).value);
  }
}
BENCHMARK(BM_InnerProduct)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

// v^dagger e^{iAt} u for the periodic chain Laplacian, N = 2^16.
void BM_EvtGl(benchmark::State& state) {
  const Site n = Site{1} << 16;
  const LocalMatrixOracle a = laplacian_oracle(SiteGraph::chain(n, Boundary::periodic));
  const double t = static_cast<double>(state.range(0));
  const Polynomial p = exp_poly(a.norm_bound(), t, 0.05);
  const VectorOracle u = point(n, n / 2);
  const VectorOracle v = uniform(n);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evt_gl_estimate(a, p, u, v, 0.1, 0.05, seed++, {1}).value);
  }
  state.counters["degree"] = p.degree();
}
BENCHMARK(BM_EvtGl)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_EvolvedSample(benchmark::State& state) {
  const Site n = Site{1} << 16;
  const LocalMatrixOracle a = affine_transform(laplacian_oracle(SiteGraph::chain(n, Boundary::periodic)), Complex{0.0, 1.0});
  const EvolvedSampler s(a, static_cast<double>(state.range(0)), point(n, n / 2), {});
  Rng rng(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(s.sample(rng).trials);
  }
}
BENCHMARK(BM_EvolvedSample)->Arg(1)->Arg(4)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace glsim

BENCHMARK_MAIN();
