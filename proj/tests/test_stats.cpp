#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "plclique/errors.hpp"
#include "plclique/random.hpp"
#include "plclique/stats.hpp"

namespace plclique {
namespace {

using Points = std::vector<std::pair<double, double>>;

TEST(FitLoglogSlope, ExactPowerLaws) {
  const auto linear = fit_loglog_slope(Points{{1, 2}, {2, 4}, {4, 8}});
  EXPECT_NEAR(linear.slope, 1.0, 1e-12);
  EXPECT_NEAR(linear.intercept, std::log(2.0), 1e-12);
  EXPECT_NEAR(linear.r_squared, 1.0, 1e-12);
  EXPECT_NEAR(linear.slope_stderr, 0.0, 1e-12);
  EXPECT_EQ(linear.points_used, 3u);
  Points root;
  for (double x : {10.0, 100.0, 1e3, 1e4}) root.emplace_back(x, 3.0 * std::sqrt(x));
  EXPECT_NEAR(fit_loglog_slope(root).slope, 0.5, 1e-12);
}

TEST(FitLoglogSlope, NoisyDataMatchesClosedFormOls) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> noise(0.0, 0.1);
  Points pts;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int k = 10; k <= 20; ++k) {
    const double x = std::pow(2.0, k), y = std::pow(x, 0.4) * std::exp(noise(rng));
    pts.emplace_back(x, y);
    const double lx = std::log(x), ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double m = double(pts.size());
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  const auto fit = fit_loglog_slope(pts);
  EXPECT_NEAR(fit.slope, slope, 1e-10);
  EXPECT_GT(fit.slope_stderr, 0.0);
  EXPECT_LT(fit.r_squared, 1.0);
}

TEST(FitLoglogSlope, Rejects) {
  EXPECT_THROW(fit_loglog_slope(Points{{1, 1}, {2, 2}}), ValidationError);
  EXPECT_THROW(fit_loglog_slope(Points{{1, 1}, {2, 0}, {3, 3}}), ValidationError);
}

TEST(PoissonGof, GrossMismatch) {
  const std::vector<std::uint64_t> zeros(500, 0);
  const auto r = poisson_gof(zeros, 5.0);
  EXPECT_LT(r.p_value, 1e-12);
  EXPECT_GE(r.cells, 2u);
  EXPECT_EQ(r.degrees_of_freedom, r.cells - 1);
}

TEST(PoissonGof, SelfConsistency) {
  const double rate = 0.5625;
  std::size_t accepted = 0;
  const std::size_t meta = 200;
  for (std::size_t t = 0; t < meta; ++t) {
    Rng rng = make_rng(7, Stream::replicate, {t});
    std::vector<std::uint64_t> counts(2000);
    for (auto& c : counts) c = poisson(rng, rate);
    accepted += poisson_gof(counts, rate).p_value > 0.01;
  }
  EXPECT_GE(double(accepted) / meta, 0.98);
}

TEST(PoissonGof, Rejects) {
  const std::vector<std::uint64_t> some{0, 1, 2};
  EXPECT_THROW(poisson_gof(some, 0.0), ValidationError);
  EXPECT_THROW(poisson_gof(std::vector<std::uint64_t>{}, 1.0), ValidationError);
}

TEST(Quantile, Type7) {
  EXPECT_DOUBLE_EQ(quantile({1, 2, 3, 4}, 0.5), 2.5);
  EXPECT_DOUBLE_EQ(quantile({1, 2, 3, 4}, 0.25), 1.75);
  EXPECT_DOUBLE_EQ(quantile({4, 1, 3, 2}, 1.0), 4.0);
  EXPECT_DOUBLE_EQ(quantile({7}, 0.95), 7.0);
  EXPECT_DOUBLE_EQ(median({3, 1, 2}), 2.0);
  // 20 values 1..20: h = 19 * 0.95 = 18.05.
  std::vector<double> v(20);
  std::iota(v.begin(), v.end(), 1.0);
  EXPECT_NEAR(quantile(v, 0.95), 19.05, 1e-12);
  EXPECT_THROW(quantile({}, 0.5), ValidationError);
  EXPECT_THROW(quantile({1}, 1.5), ValidationError);
}

TEST(DeriveSeed, DistinctCounters) {
  std::set<Seed> seen;
  for (std::uint64_t n = 0; n < 100; ++n)
    for (std::uint64_t r = 0; r < 100; ++r) seen.insert(derive_seed(1, Stream::replicate, {n, r}));
  EXPECT_EQ(seen.size(), 10000u);
  EXPECT_NE(derive_seed(1, Stream::edges, {}), derive_seed(1, Stream::weights, {}));
  EXPECT_EQ(derive_seed(1, Stream::edges, {3}), derive_seed(1, Stream::edges, {3}));
}

}  // namespace
}  // namespace plclique
