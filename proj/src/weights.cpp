#include "plclique/weights.hpp"

#include <algorithm>
#include <numeric>

#include "plclique/errors.hpp"

namespace plclique {

WeightParams WeightParams::pareto(double alpha, double a) {
  detail::require(alpha > 0.0 && a > 0.0, "weight law needs alpha > 0 and a > 0");
  return WeightParams{alpha, a, std::pow(a, 1.0 / alpha)};
}

void WeightParams::validate() const {
  detail::require(std::isfinite(alpha) && alpha > 0.0, "alpha must be positive");
  detail::require(std::isfinite(a) && a > 0.0, "a must be positive");
  detail::require(std::isfinite(x0) && x0 > 0.0, "x0 must be positive");
}

WeightVector::WeightVector(Eigen::VectorXd weights) : w(std::move(weights)) {
  rank = rank_by_weight(std::span<const double>(w.data(), static_cast<std::size_t>(w.size())));
}

std::vector<VertexId> rank_by_weight(std::span<const double> w) {
  std::vector<VertexId> order(w.size());
  std::iota(order.begin(), order.end(), VertexId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId i, VertexId j) { return w[i] > w[j]; });
  return order;
}

WeightVector sample_iid_pareto(std::size_t n, const WeightParams& params, Seed seed) {
  params.validate();
  Rng rng = make_rng(seed, Stream::weights);
  Eigen::VectorXd w(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < w.size(); ++i)
    w[i] = pareto_quantile(uniform_open_closed(rng), params);
  return WeightVector(std::move(w));
}

WeightVector deterministic_weights(std::size_t n, double a, double alpha) {
  detail::require(n >= 1, "deterministic weights need n >= 1");
  const auto params = WeightParams::pareto(alpha, a);
  const double nn = static_cast<double>(n);
  Eigen::VectorXd w(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    w[static_cast<Eigen::Index>(i)] =
        params.x0 * std::pow(nn / static_cast<double>(i + 1), 1.0 / alpha);
  return WeightVector(std::move(w));
}

std::size_t sample_poisson_vertex_count(double mean, Seed seed) {
  detail::require(std::isfinite(mean) && mean >= 0.0, "vertex-count mean must be >= 0");
  Rng rng = make_rng(seed, Stream::vertex_count);
  return static_cast<std::size_t>(poisson(rng, mean));
}

}  // namespace plclique
