#include <gtest/gtest.h>

#include <cmath>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "plclique/theory.hpp"

namespace plclique {
namespace {

TEST(CliqueConstant, Values) {
  EXPECT_NEAR(clique_constant_c(1.0, 1.0, 1.0), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(clique_constant_c(1.0, 1.0, 1.0), 1.41421, 1e-5);
  EXPECT_NEAR(clique_constant_c(0.6, 2.0, 1e-9), 0.6, 1e-8);
  EXPECT_THROW(clique_constant_c(1.0, 1.0, 2.0), ValidationError);
  EXPECT_THROW(clique_constant_c(1.0, 1.0, 0.0), ValidationError);
}

TEST(CliqueConstant, InvariantUnderRescaling) {
  for (double alpha : {0.3, 1.0, 1.7})
    for (double t : {0.5, 3.0}) {
      const ModelParams p{0.8, 1.3, alpha};
      const auto q = rescale_params(p, t);
      EXPECT_NEAR(clique_constant_c(q.a, q.b, alpha), clique_constant_c(p.a, p.b, alpha), 1e-12);
    }
}

TEST(PredictedOmega, ExponentialKernel) {
  const auto pred = predicted_omega(std::exp(1.0), ModelParams{1.0, 1.0, 1.0});
  ASSERT_TRUE(pred.point);
  EXPECT_NEAR(*pred.point, std::sqrt(2.0) * std::sqrt(std::exp(1.0)), 1e-12);
  EXPECT_NEAR(*pred.point, 2.3316, 1e-4);
  EXPECT_THROW(predicted_omega(100.0, ModelParams{1.0, 1.0, 2.0}), ValidationError);
  EXPECT_THROW(predicted_omega(1.0, ModelParams{1.0, 1.0, 1.0}), ValidationError);
}

TEST(PredictedOmega, CappedKernel) {
  ModelParams p{1.0, 4.0, 1.0, Kernel::capped};
  const auto pred = predicted_omega(100.0, p);
  ASSERT_TRUE(pred.point);
  EXPECT_NEAR(*pred.point, 20.0, 1e-12);
}

TEST(PredictedOmega, RatioKernelGivesExponentOnly) {
  ModelParams p{1.0, 1.0, 1.0, Kernel::ratio};
  const auto pred = predicted_omega(1000.0, p);
  EXPECT_NEAR(pred.exponent, 1.0 / 3.0, 1e-15);
  EXPECT_FALSE(pred.point);
  EXPECT_FALSE(pred.constant);
  ASSERT_TRUE(pred.upper_log_exponent);
  EXPECT_NEAR(*pred.upper_log_exponent, 1.0 / 3.0, 1e-15);
}

TEST(PredictedOmega, NormalizedModel) {
  ModelParams p{2.0, 7.0, 1.0, Kernel::exponential, Normalization::by_weight_sum};
  const double n = 1e6;
  const auto pred = predicted_omega(n, p);
  ASSERT_TRUE(pred.point);
  EXPECT_NEAR(*pred.point, std::sqrt(2.0 * 2.0 * n) / std::log(n), 1e-9);
  // alpha in (1,2): b = 1/E W.
  p.alpha = 1.5;
  const auto mid = predicted_omega(n, p);
  const double b = 1.0 / pareto_mean(2.0, 1.5);
  ModelParams q{2.0, b, 1.5};
  EXPECT_NEAR(*mid.point, *predicted_omega(n, q).point, 1e-9);
  // alpha < 1: random limit, no point value.
  p.alpha = 0.5;
  EXPECT_FALSE(predicted_omega(n, p).point);
}

TEST(PredictedOmega, CappedRemovesLogarithmicFactor) {
  for (double alpha : {0.5, 1.0, 1.5})
    for (double n : {1e3, 1e6}) {
      const ModelParams e{1.3, 0.7, alpha};
      ModelParams c = e;
      c.kernel = Kernel::capped;
      const double ratio = *predicted_omega(n, e).point / *predicted_omega(n, c).point;
      EXPECT_NEAR(ratio, std::pow(1 - alpha / 2, -alpha / 2) * std::pow(std::log(n), -alpha / 2), 1e-12);
    }
}

TEST(FtRatio, Values) {
  EXPECT_NEAR(ft_ratio(1.0), 0.70711, 1e-5);
  EXPECT_NEAR(ft_ratio(1e-12), 1.0, 1e-9);
  EXPECT_NEAR(ft_ratio(2.0 - 1e-12), 0.5, 1e-9);
  EXPECT_THROW(ft_ratio(2.0), ValidationError);
}

TEST(ParetoSecondMoment, ClosedFormAndQuadrature) {
  EXPECT_DOUBLE_EQ(pareto_second_moment(1.0, 3.0), 3.0);
  EXPECT_DOUBLE_EQ(pareto_second_moment(16.0, 4.0), 8.0);
  EXPECT_NEAR(pareto_second_moment(1.0, 1e6), 1.0, 1e-5);
  EXPECT_THROW(pareto_second_moment(1.0, 2.0), ValidationError);
  // E W^2 = x0^2 + int_{x0}^inf 2x P(W > x) dx, alpha = 3, a = 1, x0 = 1.
  boost::math::quadrature::exp_sinh<double> integrator;
  const double tail = integrator.integrate(
      [](double s) { return 2.0 * (1.0 + s) * std::pow(1.0 + s, -3.0); }, 0.0,
      std::numeric_limits<double>::infinity());
  EXPECT_NEAR(1.0 + tail, 3.0, 1e-10);
}

TEST(TriangleLimitRate, Values) {
  EXPECT_NEAR(triangle_limit_rate(0.5, 3.0), 0.5625, 1e-15);
  EXPECT_EQ(triangle_limit_rate(0.0, 3.0), 0.0);
  EXPECT_NEAR(triangle_limit_rate(1.0, 3.0) / triangle_limit_rate(0.5, 3.0), 8.0, 1e-12);
}

TEST(LimitOmegaProbs, Values) {
  auto [p2, p3] = limit_omega_probs(0.0);
  EXPECT_EQ(p2, 1.0);
  EXPECT_EQ(p3, 0.0);
  std::tie(p2, p3) = limit_omega_probs(0.5625);
  EXPECT_NEAR(p2, 0.5698, 1e-4);
  EXPECT_NEAR(p3, 0.4302, 1e-4);
  EXPECT_NEAR(p2 + p3, 1.0, 1e-15);
  std::tie(p2, p3) = limit_omega_probs(800.0);
  EXPECT_NEAR(p2, 0.0, 1e-300);
  EXPECT_EQ(p3, 1.0);
  for (double r = 0.0; r < 20.0; r += 0.37) {
    auto [a, b] = limit_omega_probs(r);
    EXPECT_NEAR(a + b, 1.0, 1e-15);
  }
}

TEST(GnpCliqueBound, Values) {
  EXPECT_NEAR(gnp_clique_bound(100.0, 0.5), 4.0 * std::log(100.0), 1e-12);
  EXPECT_NEAR(gnp_clique_bound(100.0, 0.5), 18.42, 5e-3);
  EXPECT_DOUBLE_EQ(gnp_clique_bound(50.0, 0.0), 2.0 * std::log(50.0));
  EXPECT_THROW(gnp_clique_bound(100.0, 1.0), ValidationError);
  double previous = 0.0;
  for (double p = 0.0; p < 0.99; p += 0.01) {
    const double v = gnp_clique_bound(100.0, p);
    EXPECT_GT(v, previous);
    previous = v;
  }
}

TEST(ApplicablePredictions, ByRegime) {
  auto kinds = [](const std::vector<Prediction>& ps) {
    std::vector<std::string> k;
    for (const auto& p : ps) k.push_back(p.kind);
    return k;
  };
  EXPECT_EQ(kinds(applicable_predictions(1e4, ModelParams{1, 1, 1})),
            (std::vector<std::string>{"omega_lead_constant", "omega_curve", "ft_ratio"}));
  const auto heavy = applicable_predictions(1e4, ModelParams{1, 0.5, 3});
  ASSERT_EQ(kinds(heavy), (std::vector<std::string>{"triangle_rate", "omega_limit_probs"}));
  EXPECT_NEAR(heavy[0].values[0], 0.5625, 1e-15);
  EXPECT_TRUE(applicable_predictions(1e4, ModelParams{1, 1, 2}).empty());
  const auto ratio = applicable_predictions(1e4, ModelParams{1, 1, 1, Kernel::ratio});
  EXPECT_EQ(kinds(ratio), (std::vector<std::string>{"variant_exponent", "ft_ratio"}));
}

}  // namespace
}  // namespace plclique
