#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plclique/errors.hpp"
#include "plclique/model.hpp"

namespace plclique {

// Closed-form predictors for the clique number of the power-law graph.
// All logarithms are natural.

/// Leading constant of omega for 0 < alpha < 2: a b^{alpha/2} (1 - alpha/2)^{-alpha/2}.
template <typename Scalar>
Scalar clique_constant_c(Scalar a, Scalar b, Scalar alpha) {
  using std::pow;
  detail::require(alpha > Scalar(0) && alpha < Scalar(2), "clique constant needs 0 < alpha < 2");
  detail::require(a > Scalar(0) && b > Scalar(0), "clique constant needs a, b > 0");
  return a * pow(b, alpha / Scalar(2)) * pow(Scalar(1) - alpha / Scalar(2), -alpha / Scalar(2));
}

/// Limit of |K_ft| / |K_max|: 2^{-alpha/2}.
template <typename Scalar>
Scalar ft_ratio(Scalar alpha) {
  using std::pow;
  detail::require(alpha > Scalar(0) && alpha < Scalar(2), "full-top ratio needs 0 < alpha < 2");
  return pow(Scalar(2), -alpha / Scalar(2));
}

/// E[W] for the pure Pareto law (alpha > 1).
template <typename Scalar>
Scalar pareto_mean(Scalar a, Scalar alpha) {
  using std::pow;
  detail::require(alpha > Scalar(1), "Pareto mean is infinite for alpha <= 1");
  return pow(a, Scalar(1) / alpha) * alpha / (alpha - Scalar(1));
}

/// E[W^2] for the pure Pareto law (alpha > 2).
template <typename Scalar>
Scalar pareto_second_moment(Scalar a, Scalar alpha) {
  using std::pow;
  detail::require(alpha > Scalar(2), "second moment is infinite for alpha <= 2");
  detail::require(a > Scalar(0), "a must be positive");
  const Scalar x0 = pow(a, Scalar(1) / alpha);
  return x0 * x0 * alpha / (alpha - Scalar(2));
}

/// Poisson limit rate of the triangle count for alpha > 2: (b E[W^2])^3 / 6.
template <typename Scalar>
Scalar triangle_limit_rate(Scalar b, Scalar second_moment) {
  detail::require(b >= Scalar(0) && second_moment > Scalar(0), "triangle rate needs b >= 0, E W^2 > 0");
  const Scalar x = b * second_moment;
  return x * x * x / Scalar(6);
}

/// Limits of (P(omega = 2), P(omega = 3)) for alpha > 2.
template <typename Scalar>
std::pair<Scalar, Scalar> limit_omega_probs(Scalar rate) {
  using std::exp;
  using std::expm1;
  detail::require(rate >= Scalar(0), "rate must be non-negative");
  return {exp(-rate), -expm1(-rate)};
}

/// Whp upper bound on omega(G(n, p)): 2 ln n / (1 - p).
template <typename Scalar>
Scalar gnp_clique_bound(Scalar n, Scalar p) {
  using std::log;
  detail::require(n >= Scalar(2), "G(n,p) bound needs n >= 2");
  detail::require(p >= Scalar(0) && p < Scalar(1), "G(n,p) bound needs 0 <= p < 1");
  return Scalar(2) * log(n) / (Scalar(1) - p);
}

/// Growth law of omega: value ~ constant * n^exponent * (ln n)^log_exponent.
/// When the constant is unknown only the exponents are set; for the ratio
/// kernel the upper bracket carries an extra (ln n)^{upper_log_exponent}.
struct OmegaPrediction {
  Kernel kernel = Kernel::exponential;
  Normalization normalization = Normalization::by_n;
  double exponent = 0.0;
  double log_exponent = 0.0;
  std::optional<double> constant;
  std::optional<double> point;
  std::optional<double> upper_log_exponent;
  std::string form;
};

OmegaPrediction predicted_omega(double n, const ModelParams& params);

/// One named prediction, for reports and the `predict` command.
struct Prediction {
  std::string kind;  // omega_lead_constant, omega_curve, ft_ratio, triangle_rate,
                     // omega_limit_probs, variant_exponent
  std::vector<double> values;
  std::pair<double, double> valid_alpha_range;  // open interval
  std::string note;
};

/// Every prediction that applies to (n, params) for pure Pareto weights.
std::vector<Prediction> applicable_predictions(double n, const ModelParams& params);

/// The b that a by-n model needs to match `params` (1/E W under by-weight-sum).
std::optional<double> equivalent_b(const ModelParams& params);

}  // namespace plclique
