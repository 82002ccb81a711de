#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "plclique/errors.hpp"
#include "plclique/weights.hpp"

namespace plclique {
namespace {

TEST(ParetoQuantile, BoundaryAndHandValues) {
  const auto params = WeightParams::pareto(1.0, 1.0);
  EXPECT_DOUBLE_EQ(params.x0, 1.0);
  EXPECT_DOUBLE_EQ(pareto_quantile(1.0, params), 1.0);
  EXPECT_DOUBLE_EQ(pareto_quantile(0.25, params), 4.0);
}

TEST(SampleIidPareto, TailFrequencyMatchesSurvivalFunction) {
  const auto params = WeightParams::pareto(2.0, 4.0);
  EXPECT_DOUBLE_EQ(params.x0, 2.0);
  const std::size_t n = 1'000'000;
  const auto w = sample_iid_pareto(n, params, 11);
  const double hits = static_cast<double>((w.w.array() > 4.0).count());
  const double p = 4.0 * std::pow(4.0, -2.0);  // 0.25
  const double se = std::sqrt(p * (1 - p) / n);
  EXPECT_NEAR(hits / n, p, 3 * se);
  EXPECT_GE(w.w.minCoeff(), params.x0);
}

TEST(SampleIidPareto, KolmogorovSmirnovAgainstClosedForm) {
  const auto params = WeightParams::pareto(1.5, 2.0);
  const std::size_t n = 100'000;
  auto w = sample_iid_pareto(n, params, 5);
  std::vector<double> x(w.w.data(), w.w.data() + n);
  std::sort(x.begin(), x.end());
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double cdf = 1.0 - params.a * std::pow(x[i], -params.alpha);
    d = std::max({d, std::abs(cdf - double(i) / n), std::abs(double(i + 1) / n - cdf)});
  }
  EXPECT_LT(d, 1.63 / std::sqrt(double(n)));  // 1% critical value
}

TEST(SampleIidPareto, MaxWeightScale) {
  // P(W* > t n^{1/alpha}) <= n P(W > t n^{1/alpha}) = a t^{-alpha}.
  const auto params = WeightParams::pareto(1.0, 1.0);
  const std::size_t n = 10'000, trials = 1000;
  const double t = 2.0;
  std::size_t exceed = 0;
  for (std::size_t k = 0; k < trials; ++k)
    exceed += sample_iid_pareto(n, params, 1000 + k).max() > t * n;
  const double bound = params.a * std::pow(t, -params.alpha);
  EXPECT_LE(double(exceed) / trials, bound + 3 * std::sqrt(bound * (1 - bound) / trials));
}

TEST(SampleIidPareto, DeterministicGivenSeed) {
  const auto params = WeightParams::pareto(1.0, 1.0);
  EXPECT_EQ(sample_iid_pareto(50, params, 3).w, sample_iid_pareto(50, params, 3).w);
  EXPECT_NE(sample_iid_pareto(50, params, 3).w, sample_iid_pareto(50, params, 4).w);
}

TEST(SampleIidPareto, RejectsInvalidParameters) {
  EXPECT_THROW(sample_iid_pareto(10, WeightParams{1.0, -1.0, 1.0}, 1), ValidationError);
  EXPECT_THROW(sample_iid_pareto(10, WeightParams{0.0, 1.0, 1.0}, 1), ValidationError);
  EXPECT_THROW(sample_iid_pareto(10, WeightParams{1.0, 1.0, 0.0}, 1), ValidationError);
  EXPECT_THROW(WeightParams::pareto(-2.0, 1.0), ValidationError);
}

TEST(DeterministicWeights, FormulaAndOrder) {
  const auto w = deterministic_weights(100, 1.0, 2.0);
  EXPECT_DOUBLE_EQ(w.w[3], 5.0);      // i = 4
  EXPECT_DOUBLE_EQ(w.w[99], 1.0);     // i = n gives a^{1/alpha}
  EXPECT_DOUBLE_EQ(deterministic_weights(7, 8.0, 3.0).w[6], 2.0);
  for (Eigen::Index i = 1; i < w.w.size(); ++i) EXPECT_LT(w.w[i], w.w[i - 1]);
  std::vector<VertexId> identity(100);
  std::iota(identity.begin(), identity.end(), VertexId{0});
  EXPECT_EQ(w.rank, identity);
  EXPECT_THROW(deterministic_weights(0, 1.0, 1.0), ValidationError);
}

TEST(PoissonVertexCount, Degenerate) { EXPECT_EQ(sample_poisson_vertex_count(0.0, 9), 0u); }

TEST(PoissonVertexCount, MeanAndDispersion) {
  const double mean = 1e4;
  const std::size_t reps = 10'000;
  double sum = 0, sumsq = 0;
  for (std::size_t k = 0; k < reps; ++k) {
    const double x = static_cast<double>(sample_poisson_vertex_count(mean, k));
    sum += x;
    sumsq += x * x;
  }
  const double m = sum / reps;
  const double var = (sumsq - reps * m * m) / (reps - 1);
  EXPECT_NEAR(m, mean, 3 * std::sqrt(mean / reps));
  EXPECT_GE(var / m, 0.95);
  EXPECT_LE(var / m, 1.05);
}

TEST(RankByWeight, Examples) {
  const std::vector<double> a{1, 2, 3}, b{2, 2, 1}, c{5};
  EXPECT_EQ(rank_by_weight(a), (std::vector<VertexId>{2, 1, 0}));
  EXPECT_EQ(rank_by_weight(b), (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(rank_by_weight(c), (std::vector<VertexId>{0}));
}

TEST(RankByWeight, SortedPermutationWithAscendingTieBreak) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> value(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> w(1 + trial % 40);
    for (auto& x : w) x = value(rng);
    const auto rank = rank_by_weight(w);
    std::vector<VertexId> sorted = rank;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < w.size(); ++i) ASSERT_EQ(sorted[i], i);
    for (std::size_t k = 1; k < rank.size(); ++k) {
      ASSERT_GE(w[rank[k - 1]], w[rank[k]]);
      if (w[rank[k - 1]] == w[rank[k]]) ASSERT_LT(rank[k - 1], rank[k]);
    }
  }
}

}  // namespace
}  // namespace plclique
