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


#include <gtest/gtest.h>

#include <cmath>
#include <thread>

#include "glsim/access.hpp"
#include "support.hpp"

namespace glsim {
namespace {

using testing::empirical;
using testing::random_vector;

TEST(InducedDistribution, Examples) {
  EXPECT_EQ(induced_distribution(DenseVector{1.0, 0.0, 0.0}).masses(), (std::vector<double>{1.0, 0.0, 0.0}));
  const auto half = induced_distribution(DenseVector{M_SQRT1_2, M_SQRT1_2}).masses();
  EXPECT_NEAR(half[0], 0.5, 1e-15);
  EXPECT_NEAR(half[1], 0.5, 1e-15);
  const auto p = induced_distribution(DenseVector{3.0, 4.0}).masses();
  EXPECT_NEAR(p[0], 0.36, 1e-15);
  EXPECT_NEAR(p[1], 0.64, 1e-15);
}

TEST(InducedDistribution, ZeroVectorRejected) {
  EXPECT_THROW(induced_distribution(DenseVector{0.0, 0.0}), PreconditionError);
}

TEST(TvDistance, Examples) {
  const auto p = Distribution::dense({0.5, 0.5});
  EXPECT_DOUBLE_EQ(tv_distance(p, p), 0.0);
  EXPECT_DOUBLE_EQ(tv_distance(Distribution::dense({1.0, 0.0}), Distribution::dense({0.0, 1.0})), 1.0);
  EXPECT_DOUBLE_EQ(tv_distance(p, Distribution::dense({0.75, 0.25})), 0.25);
  EXPECT_THROW(tv_distance(p, Distribution::dense({1.0, 0.0, 0.0})), PreconditionError);
}

TEST(SqAccess, PointMass) {
  const VectorOracle u = sq_access_from_dense({0.0, 1.0, 0.0});
  Rng rng(1);
  for (int k = 0; k < 1000; ++k) {
    EXPECT_EQ(u.sample(rng), 1);
  }
  EXPECT_EQ(u.cost().snapshot().samples, 1000u);
}

TEST(SqAccess, UniformFrequencies) {
  const VectorOracle u = sq_access_from_dense({0.5, 0.5, 0.5, 0.5});
  Rng rng(2);
  std::vector<Site> draws(100000);
  for (Site& d : draws) {
    d = u.sample(rng);
  }
  for (double f : empirical(draws, 4)) {
    EXPECT_NEAR(f, 0.25, 0.01);
  }
}

TEST(SqAccess, RandomVectorTv) {
  Rng rng(3);
  const DenseVector v = random_vector(64, rng);
  const VectorOracle u = sq_access_from_dense(v);
  std::vector<Site> draws(100000);
  for (Site& d : draws) {
    d = u.sample(rng);
  }
  EXPECT_LE(testing::tv(empirical(draws, 64), induced_distribution(v).masses()), 0.02);
}

TEST(SqAccess, ChiSquareAgainstMasses) {
  Rng rng(4);
  const DenseVector v = random_vector(20, rng);
  const auto p = induced_distribution(v).masses();
  const VectorOracle u = sq_access_from_dense(v);
  const int draws = 200000;
  std::vector<double> counts(20, 0.0);
  for (int k = 0; k < draws; ++k) {
    counts[static_cast<std::size_t>(u.sample(rng))] += 1.0;
  }
  double chi2 = 0.0;
  for (std::size_t i = 0; i < 20; ++i) {
    const double expected = p[i] * draws;
    chi2 += (counts[i] - expected) * (counts[i] - expected) / expected;
  }
  // 19 degrees of freedom; the 0.999 quantile is 43.8.
  EXPECT_LT(chi2, 43.8);
}

TEST(SqAccess, NormAndQueries) {
  const VectorOracle u = sq_access_from_dense({3.0, Complex{0.0, 4.0}});
  EXPECT_NEAR(*u.norm(), 5.0, 1e-12);
  EXPECT_EQ(u.query(1), (Complex{0.0, 4.0}));
  const auto c = u.cost().snapshot();
  EXPECT_EQ(c.queries, 1u);
  EXPECT_EQ(c.norm_reads, 1u);
  EXPECT_THROW(sq_access_from_dense({0.0, 0.0}), PreconditionError);
  EXPECT_THROW(u.query(2), std::out_of_range);
}

TEST(SqAccess, SameSeedSameStream) {
  Rng seed_rng(5);
  const VectorOracle u = sq_access_from_dense(random_vector(50, seed_rng));
  Rng a(99);
  Rng b(99);
  for (int k = 0; k < 500; ++k) {
    EXPECT_EQ(u.sample(a), u.sample(b));
  }
}

TEST(SqAccess, QueryOnlyHasNoSampler) {
  const VectorOracle u = query_access({1.0, 2.0});
  Rng rng(1);
  EXPECT_FALSE(u.has_sampler());
  EXPECT_THROW(u.sample(rng), PreconditionError);
  EXPECT_FALSE(sq_access_from_dense({1.0}).query_only().has_sampler());
}

TEST(CumulativeSampler, SkipsZeroWeights) {
  const std::vector<double> w = {0.0, 1.0, 0.0, 0.0, 2.0, 0.0};
  const CumulativeSampler s(w);
  Rng rng(8);
  for (int k = 0; k < 10000; ++k) {
    const Site i = s.draw(rng);
    EXPECT_TRUE(i == 1 || i == 4) << i;
  }
}

TEST(Perturbed, ZeroZetaIsExact) {
  const DenseVector v = {1.0, 2.0, 3.0};
  const auto masses = perturbed_masses(v, 0.0);
  const auto exact = induced_distribution(v).masses();
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_DOUBLE_EQ(masses[i], exact[i]);
  }
}

TEST(Perturbed, TieRule) {
  const auto m = perturbed_masses(DenseVector{M_SQRT1_2, M_SQRT1_2}, 0.1);
  EXPECT_NEAR(m[0], 0.4, 1e-12);
  EXPECT_NEAR(m[1], 0.6, 1e-12);
}

TEST(Perturbed, TvEqualsZeta) {
  Rng rng(6);
  for (int t = 0; t < 20; ++t) {
    const DenseVector v = random_vector(30, rng);
    const double zeta = 0.01 * (t + 1) / 4.0;
    const auto p = Distribution::dense(perturbed_masses(v, zeta));
    EXPECT_NEAR(tv_distance(p, induced_distribution(v)), zeta, 1e-12);
  }
}

TEST(Perturbed, InfeasibleRejected) {
  EXPECT_THROW(perturbed_masses(DenseVector{1.0}, 0.1), PreconditionError);
  EXPECT_THROW(perturbed_masses(DenseVector{0.6, 0.8}, 1.0), PreconditionError);
}

TEST(Perturbed, SamplerFollowsPerturbedMassesQueriesExact) {
  const DenseVector v = {0.6, 0.8};
  const VectorOracle u = perturbed_sq_access(v, 0.2);
  EXPECT_NEAR(u.zeta(), 0.2, 1e-15);
  EXPECT_EQ(u.query(0), Complex(0.6));
  EXPECT_NEAR(*u.norm(), 1.0, 1e-12);
  Rng rng(7);
  std::vector<Site> draws(100000);
  for (Site& d : draws) {
    d = u.sample(rng);
  }
  EXPECT_NEAR(empirical(draws, 2)[0], 0.56, 0.01);
}

TEST(Memoized, CountsOnlyFirstQuery) {
  int calls = 0;
  const VectorOracle base(10, [&calls](Site i) {
    ++calls;
    return Complex(static_cast<double>(i));
  });
  const VectorOracle m = memoized(base);
  for (int k = 0; k < 3; ++k) {
    EXPECT_EQ(m.query(4), Complex(4.0));
  }
  EXPECT_EQ(calls, 1);
  EXPECT_EQ(base.cost().snapshot().queries, 1u);
}

TEST(Memoized, ConcurrentReaders) {
  const VectorOracle m = memoized(VectorOracle(1000, [](Site i) { return Complex(i * 0.5); }));
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&m] {
      for (Site i = 0; i < 1000; ++i) {
        EXPECT_EQ(m.query(i), Complex(i * 0.5));
      }
    });
  }
  for (auto& th : pool) {
    th.join();
  }
}

TEST(LocalMatrix, RejectsNonLocalEntry) {
  LocalMatrixOracle::Options options;
  options.check_locality = true;
  const LocalMatrixOracle a(SiteGraph::chain(10), 1.0,
                            [](Site i, std::vector<MatrixEntry>& out) { out.push_back({(i + 3) % 10, 1.0}); }, 1.0,
                            options);
  std::vector<MatrixEntry> row;
  EXPECT_THROW(a.row(0, row), LocalityError);
}

TEST(LocalMatrix, RejectsTooManySlots) {
  LocalMatrixOracle::Options options;
  options.check_locality = true;
  const LocalMatrixOracle a(SiteGraph::chain(10), 1.0,
                            [](Site i, std::vector<MatrixEntry>& out) {
                              for (int k = 0; k < 4; ++k) {
                                out.push_back({i, 1.0});
                              }
                            },
                            1.0, options);
  std::vector<MatrixEntry> row;
  EXPECT_THROW(a.row(0, row), LocalityError);
}

TEST(LocalMatrix, SlotsAndColumns) {
  Rng rng(11);
  const LocalMatrixOracle a = testing::random_local_matrix(SiteGraph::chain(32), 1.0, rng, testing::MatrixFlavor::hermitian);
  const Eigen::MatrixXcd m = testing::eigen_from_rows(a);
  EXPECT_LT((m - m.adjoint()).norm(), 1e-12);
  std::vector<MatrixEntry> col;
  for (Site j = 0; j < 32; ++j) {
    a.column(j, col);
    for (const MatrixEntry& e : col) {
      EXPECT_NEAR(std::abs(e.value - m(e.index, j)), 0.0, 1e-15);
    }
    std::size_t slot = 0;
    while (auto e = a.row_query(j, slot)) {
      EXPECT_EQ(e->value, m(j, e->index));
      ++slot;
    }
    EXPECT_LE(slot, 3u);
  }
}

TEST(LocalMatrix, AntiHermitianColumns) {
  Rng rng(12);
  const LocalMatrixOracle a =
      testing::random_local_matrix(SiteGraph::grid({4, 4}), 1.0, rng, testing::MatrixFlavor::anti_hermitian);
  const Eigen::MatrixXcd m = testing::eigen_from_rows(a);
  EXPECT_LT((m + m.adjoint()).norm(), 1e-12);
  std::vector<MatrixEntry> col;
  a.column(5, col);
  for (const MatrixEntry& e : col) {
    EXPECT_NEAR(std::abs(e.value - m(e.index, 5)), 0.0, 1e-15);
  }
}

TEST(LocalMatrix, AffineTransform) {
  Rng rng(13);
  const LocalMatrixOracle a = testing::random_local_matrix(SiteGraph::chain(16), 1.0, rng, testing::MatrixFlavor::anti_hermitian);
  const LocalMatrixOracle k = affine_transform(a, Complex{0.0, -1.0}, 0.5);
  EXPECT_TRUE(k.is_hermitian());
  const Eigen::MatrixXcd expected =
      Complex{0.0, -1.0} * testing::eigen_from_rows(a) + 0.5 * Eigen::MatrixXcd::Identity(16, 16);
  EXPECT_LT((testing::eigen_from_rows(k) - expected).norm(), 1e-14);
  EXPECT_GE(k.norm_bound(), 1.5 - 1e-15);
}

TEST(LocalMatrix, CostCountsEntries) {
  const LocalMatrixOracle a = testing::hash_chain(64);
  std::vector<MatrixEntry> row;
  a.row(3, row);
  a.row(4, row);
  EXPECT_EQ(a.cost().snapshot().queries, 6u);
}

}  // namespace
}  // namespace glsim
