#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "plclique/random.hpp"

namespace plclique {

/// Vertex ids are 0-based inside the library; files and the CLI use 1..n.
using VertexId = std::uint32_t;

/// Parameters of the pure Pareto weight law P(W > x) = a x^{-alpha}, x >= x0.
struct WeightParams {
  double alpha = 1.0;
  double a = 1.0;
  double x0 = 1.0;

  /// Pure Pareto: x0 = a^{1/alpha}, so that P(W > x0) = 1.
  static WeightParams pareto(double alpha, double a);

  void validate() const;
};

/// Vertex weights together with their decreasing-weight order.
struct WeightVector {
  Eigen::VectorXd w;
  /// rank[k] is the vertex with the k-th largest weight (ties by ascending id).
  std::vector<VertexId> rank;

  WeightVector() = default;
  explicit WeightVector(Eigen::VectorXd weights);

  std::size_t size() const noexcept { return static_cast<std::size_t>(w.size()); }
  double max() const noexcept { return w.size() ? w.maxCoeff() : 0.0; }
  double sum() const noexcept { return w.sum(); }
};

/// Inverse CDF of the pure Pareto law, u in (0, 1].
inline double pareto_quantile(double u, const WeightParams& params) {
  return params.x0 * std::pow(u, -1.0 / params.alpha);
}

WeightVector sample_iid_pareto(std::size_t n, const WeightParams& params, Seed seed);

/// W_i = a^{1/alpha} (n/i)^{1/alpha}, i = 1..n; strictly decreasing.
WeightVector deterministic_weights(std::size_t n, double a, double alpha);

/// Poisson(mean) vertex count.
std::size_t sample_poisson_vertex_count(double mean, Seed seed);

/// Stable decreasing-weight order, ties broken by ascending id.
std::vector<VertexId> rank_by_weight(std::span<const double> w);

}  // namespace plclique
