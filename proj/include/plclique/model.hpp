#pragma once

#include <cmath>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "plclique/errors.hpp"

namespace plclique {

/// Map from intensity lambda to edge probability.
enum class Kernel {
  exponential,  // 1 - e^{-lambda}
  capped,       // min(lambda, 1)
  ratio,        // lambda / (1 + lambda)
};

/// How pair intensities are normalized.
enum class Normalization {
  by_n,           // b W_i W_j / n
  by_weight_sum,  // W_i W_j / sum_k W_k  (b unused)
};

struct ModelParams {
  double a = 1.0;
  double b = 1.0;
  double alpha = 1.0;
  Kernel kernel = Kernel::exponential;
  Normalization normalization = Normalization::by_n;

  void validate() const {
    detail::require(std::isfinite(a) && a > 0.0, "a must be positive");
    detail::require(std::isfinite(b) && b >= 0.0, "b must be non-negative");
    detail::require(std::isfinite(alpha) && alpha > 0.0, "alpha must be positive");
  }
};

std::string_view to_string(Kernel k) noexcept;
std::string_view to_string(Normalization n) noexcept;
Kernel parse_kernel(std::string_view s);
Normalization parse_normalization(std::string_view s);

/// lambda_ij. `scale` is n under by-n normalization and sum_k W_k under
/// by-weight-sum.
template <typename Scalar>
Scalar intensity(Scalar wi, Scalar wj, const ModelParams& params, Scalar scale) {
  detail::require(wi > Scalar(0) && wj > Scalar(0), "weights must be positive");
  detail::require(scale > Scalar(0), "intensity scale must be positive");
  if (params.normalization == Normalization::by_weight_sum) return wi * wj / scale;
  return Scalar(params.b) * wi * wj / scale;
}

/// The factor kappa with lambda_ij = kappa W_i W_j.
inline double intensity_factor(const ModelParams& params, double n, double weight_sum) {
  if (params.normalization == Normalization::by_weight_sum) {
    detail::require(weight_sum > 0.0, "weight sum must be positive");
    return 1.0 / weight_sum;
  }
  detail::require(n > 0.0, "n must be positive");
  return params.b / n;
}

template <typename Scalar>
Scalar edge_probability(Scalar lambda, Kernel kernel) {
  using std::expm1;
  using std::min;
  detail::require(lambda >= Scalar(0), "intensity must be non-negative");
  switch (kernel) {
    case Kernel::exponential:
      return -expm1(-lambda);
    case Kernel::capped:
      return min(lambda, Scalar(1));
    case Kernel::ratio:
      return lambda / (Scalar(1) + lambda);
  }
  return Scalar(0);
}

/// Dense intensity matrix (zero diagonal) for small weight sets.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
intensity_matrix(const Eigen::MatrixBase<Derived>& w, const ModelParams& params) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Scalar scale = params.normalization == Normalization::by_weight_sum
                           ? w.sum()
                           : Scalar(static_cast<double>(w.size()));
  Matrix lambda(w.size(), w.size());
  for (Eigen::Index j = 0; j < w.size(); ++j)
    for (Eigen::Index i = 0; i < w.size(); ++i)
      lambda(i, j) = i == j ? Scalar(0) : intensity<Scalar>(w[i], w[j], params, scale);
  return lambda;
}

/// (a, b) -> (a t^alpha, b t^{-2}): the graph law is unchanged when every
/// weight is multiplied by t.
inline ModelParams rescale_params(const ModelParams& params, double t) {
  detail::require(std::isfinite(t) && t > 0.0, "rescaling factor must be positive");
  detail::require(params.normalization == Normalization::by_n,
                  "rescaling applies to by-n normalization");
  ModelParams out = params;
  out.a = params.a * std::pow(t, params.alpha);
  out.b = params.b / (t * t);
  return out;
}

/// The by-n parameter b = 1/E[W] that matches by-weight-sum normalization.
inline double effective_b_for_normalized(double mean_w) {
  detail::require(std::isfinite(mean_w) && mean_w > 0.0, "mean weight must be positive");
  return 1.0 / mean_w;
}

}  // namespace plclique
