#include "plclique/theory.hpp"

#include <limits>

namespace plclique {

std::optional<double> equivalent_b(const ModelParams& params) {
  if (params.normalization == Normalization::by_n) return params.b;
  if (params.alpha > 1.0) return effective_b_for_normalized(pareto_mean(params.a, params.alpha));
  return std::nullopt;
}

OmegaPrediction predicted_omega(double n, const ModelParams& params) {
  params.validate();
  detail::require(n > 1.0, "omega prediction needs n > 1");
  const double alpha = params.alpha;
  detail::require(alpha > 0.0 && alpha < 2.0, "omega growth laws hold for 0 < alpha < 2");
  const double log_n = std::log(n);
  OmegaPrediction out;
  out.kernel = params.kernel;
  out.normalization = params.normalization;

  switch (params.kernel) {
    case Kernel::exponential: {
      out.exponent = 1.0 - alpha / 2.0;
      out.log_exponent = -alpha / 2.0;
      if (params.normalization == Normalization::by_weight_sum && alpha == 1.0) {
        out.constant = std::sqrt(2.0 * params.a);
        out.exponent = 0.5;
        out.log_exponent = -1.0;
        out.form = "sqrt(2 a n) / ln n";
      } else if (params.normalization == Normalization::by_weight_sum && alpha < 1.0) {
        // The normalized omega has a random (non-degenerate) limit here.
        out.exponent = 0.5;
        out.form = "Z sqrt(n) (ln n)^(-alpha/2), Z random";
        return out;
      } else {
        out.constant = clique_constant_c(params.a, *equivalent_b(params), alpha);
        out.form = "c n^(1-alpha/2) (ln n)^(-alpha/2)";
      }
      break;
    }
    case Kernel::capped: {
      detail::require(params.normalization == Normalization::by_n,
                      "capped-kernel prediction assumes by-n normalization");
      out.exponent = 1.0 - alpha / 2.0;
      out.log_exponent = 0.0;
      out.constant = params.a * std::pow(params.b, alpha / 2.0);
      out.form = "a b^(alpha/2) n^(1-alpha/2)";
      break;
    }
    case Kernel::ratio: {
      detail::require(params.normalization == Normalization::by_n,
                      "ratio-kernel prediction assumes by-n normalization");
      out.exponent = (2.0 - alpha) / (2.0 + alpha);
      out.log_exponent = 0.0;
      out.upper_log_exponent = alpha / (2.0 + alpha);
      out.form = "c n^e <= omega <= C n^e (ln n)^(alpha/(2+alpha)), e = (2-alpha)/(2+alpha)";
      return out;
    }
  }
  out.point = *out.constant * std::pow(n, out.exponent) * std::pow(log_n, out.log_exponent);
  return out;
}

std::vector<Prediction> applicable_predictions(double n, const ModelParams& params) {
  params.validate();
  std::vector<Prediction> out;
  const double alpha = params.alpha;
  const double inf = std::numeric_limits<double>::infinity();
  if (alpha < 2.0) {
    if (params.kernel == Kernel::exponential && equivalent_b(params)) {
      out.push_back({"omega_lead_constant",
                     {clique_constant_c(params.a, *equivalent_b(params), alpha)},
                     {0.0, 2.0},
                     "c = a b^(alpha/2) (1-alpha/2)^(-alpha/2)"});
    }
    if (n > 1.0) {
      try {
        auto omega = predicted_omega(n, params);
        if (omega.point) {
          out.push_back({"omega_curve", {*omega.point}, {0.0, 2.0}, omega.form});
        }
        if (params.kernel != Kernel::exponential) {
          std::vector<double> values{omega.exponent};
          if (omega.upper_log_exponent) values.push_back(*omega.upper_log_exponent);
          out.push_back({"variant_exponent", values, {0.0, 2.0}, omega.form});
        }
      } catch (const ValidationError&) {
        // No growth law for this kernel/normalization pair.
      }
    }
    out.push_back({"ft_ratio", {ft_ratio(alpha)}, {0.0, 2.0}, "|K_ft| / |K_max| -> 2^(-alpha/2)"});
  } else if (alpha > 2.0) {
    const auto b = equivalent_b(params);
    if (b) {
      const double rate = triangle_limit_rate(*b, pareto_second_moment(params.a, alpha));
      const auto [p2, p3] = limit_omega_probs(rate);
      out.push_back({"triangle_rate", {rate}, {2.0, inf}, "X3 -> Po((b E W^2)^3 / 6)"});
      out.push_back({"omega_limit_probs", {p2, p3}, {2.0, inf}, "P(omega=2), P(omega=3)"});
    }
  }
  return out;
}

}  // namespace plclique
