#include "plclique/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "plclique/errors.hpp"

namespace plclique {
namespace {

/// Walker/Vose alias table over vertex ids, probabilities proportional to w.
class AliasTable {
 public:
  explicit AliasTable(const Eigen::VectorXd& w) : prob_(w.size()), alias_(w.size()) {
    const auto n = static_cast<std::size_t>(w.size());
    const double total = w.sum();
    std::vector<double> scaled(n);
    std::vector<VertexId> small, large;
    for (std::size_t i = 0; i < n; ++i) {
      scaled[i] = w[static_cast<Eigen::Index>(i)] * static_cast<double>(n) / total;
      (scaled[i] < 1.0 ? small : large).push_back(static_cast<VertexId>(i));
    }
    while (!small.empty() && !large.empty()) {
      const VertexId s = small.back();
      small.pop_back();
      const VertexId l = large.back();
      prob_[s] = scaled[s];
      alias_[s] = l;
      scaled[l] = (scaled[l] + scaled[s]) - 1.0;
      if (scaled[l] < 1.0) {
        large.pop_back();
        small.push_back(l);
      }
    }
    for (VertexId v : large) prob_[v] = 1.0, alias_[v] = v;
    for (VertexId v : small) prob_[v] = 1.0, alias_[v] = v;
  }

  VertexId operator()(Rng& rng) const noexcept {
    const auto k = static_cast<VertexId>(uniform_index(rng, prob_.size()));
    return uniform01(rng) < prob_[k] ? k : alias_[k];
  }

 private:
  std::vector<double> prob_;
  std::vector<VertexId> alias_;
};

double intensity_scale(const WeightVector& weights, const ModelParams& params) {
  return params.normalization == Normalization::by_weight_sum
             ? weights.sum()
             : static_cast<double>(weights.size());
}

/// lambda for the unordered pair, evaluated in a fixed argument order so that
/// every code path sees the same floating-point value.
double pair_lambda(const WeightVector& weights, const ModelParams& params, double scale,
                   VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return intensity(weights.w[u], weights.w[v], params, scale);
}

/// Endpoint pairs of a Poisson multigraph with E_ij ~ Po(boost * kappa W_i W_j),
/// self-loops removed.
EdgeList poisson_endpoint_pairs(const WeightVector& weights, double kappa, double boost,
                                Rng& rng, const SamplerOptions& options) {
  const double total = weights.sum();
  const double mean = boost * kappa * total * total / 2.0;
  if (!(mean <= options.max_expected_edges))
    throw BudgetExceeded("expected " + std::to_string(mean) + " endpoint draws exceed budget of " +
                         std::to_string(options.max_expected_edges));
  EdgeList pairs;
  if (!(mean > 0.0) || weights.size() < 2) return pairs;
  const AliasTable pick(weights.w);
  const std::uint64_t draws = poisson(rng, mean);
  pairs.reserve(draws);
  for (std::uint64_t k = 0; k < draws; ++k) {
    const VertexId i = pick(rng);
    const VertexId j = pick(rng);
    if (i != j) pairs.emplace_back(i, j);
  }
  return pairs;
}

void validate_inputs(const WeightVector& weights, const ModelParams& params) {
  params.validate();
  detail::require(weights.size() == 0 || weights.w.minCoeff() > 0.0, "weights must be positive");
}

Graph sample_ratio(const WeightVector& weights, const ModelParams& params, Seed seed,
                   const SamplerOptions& options) {
  const double scale = intensity_scale(weights, params);
  const double kappa = intensity_factor(params, static_cast<double>(weights.size()), weights.sum());
  Rng edge_rng = make_rng(seed, Stream::edges);
  const Graph base = GraphBuilder::from_pairs(
      weights.size(), poisson_endpoint_pairs(weights, kappa, 1.0, edge_rng, options), weights);

  Rng thin_rng = make_rng(seed, Stream::thinning);
  EdgeList kept;
  for (VertexId u = 0; u < base.num_vertices(); ++u) {
    for (VertexId v : base.neighbors(u)) {
      if (v < u) continue;
      const double lambda = pair_lambda(weights, params, scale, u, v);
      const double keep = lambda / ((1.0 + lambda) * -std::expm1(-lambda));
      if (uniform01(thin_rng) < keep) kept.emplace_back(u, v);
    }
  }
  return GraphBuilder::from_sorted_upper(weights.size(), kept, {}, weights);
}

Graph sample_capped(const WeightVector& weights, const ModelParams& params, Seed seed,
                    const SamplerOptions& options) {
  const double high = options.lambda_high;
  detail::require(high > 0.0 && high < 1.0, "lambda_high must lie in (0, 1)");
  const double scale = intensity_scale(weights, params);
  const double kappa = intensity_factor(params, static_cast<double>(weights.size()), weights.sum());
  const std::size_t n = weights.size();
  EdgeList edges;

  // High-intensity pairs: for each rank position i, the partners with
  // lambda >= high form a prefix of the weight order that shrinks as i grows.
  // The sweep uses a slightly relaxed bound; membership is decided on the
  // exact pair_lambda value so both regions agree.
  Rng high_rng = make_rng(seed, Stream::high_region);
  const auto& rank = weights.rank;
  const double sweep_bound = high * (1.0 - 1e-12);
  std::size_t limit = n;
  for (std::size_t i = 0; i < n && kappa > 0.0; ++i) {
    const double wi = weights.w[rank[i]];
    while (limit > 0 && kappa * wi * weights.w[rank[limit - 1]] < sweep_bound) --limit;
    if (limit <= i + 1) break;
    for (std::size_t j = i + 1; j < limit; ++j) {
      const VertexId u = rank[i], v = rank[j];
      const double lambda = pair_lambda(weights, params, scale, u, v);
      if (lambda < high) continue;
      if (lambda >= 1.0 || uniform01(high_rng) < lambda) edges.emplace_back(std::min(u, v), std::max(u, v));
    }
  }

  // Low-intensity pairs through the boosted candidate process.
  const double boost = -std::log1p(-high) / high;
  Rng cand_rng = make_rng(seed, Stream::candidates);
  const Graph candidates = GraphBuilder::from_pairs(
      n, poisson_endpoint_pairs(weights, kappa, boost, cand_rng, options), weights);
  Rng thin_rng = make_rng(seed, Stream::thinning);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : candidates.neighbors(u)) {
      if (v < u) continue;
      const double lambda = pair_lambda(weights, params, scale, u, v);
      if (lambda >= high) continue;
      const double accept = lambda / -std::expm1(-boost * lambda);
      if (uniform01(thin_rng) < accept) edges.emplace_back(u, v);
    }
  }
  return GraphBuilder::from_pairs(n, std::move(edges), weights);
}

}  // namespace

Graph sample_pairwise(const WeightVector& weights, const ModelParams& params, Seed seed) {
  validate_inputs(weights, params);
  const std::size_t n = weights.size();
  const double scale = intensity_scale(weights, params);
  Rng rng = make_rng(seed, Stream::edges);
  EdgeList edges;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      const double p = edge_probability(pair_lambda(weights, params, scale, i, j), params.kernel);
      if (uniform01(rng) < p) edges.emplace_back(i, j);
    }
  }
  return GraphBuilder::from_sorted_upper(n, edges, {}, weights);
}

Graph sample_multigraph_fast(const WeightVector& weights, const ModelParams& params, Seed seed,
                             const SamplerOptions& options) {
  validate_inputs(weights, params);
  detail::require(params.kernel == Kernel::exponential,
                  "the Poisson multigraph sampler requires the exponential kernel");
  const double kappa = intensity_factor(params, static_cast<double>(weights.size()), weights.sum());
  Rng rng = make_rng(seed, Stream::edges);
  return GraphBuilder::from_pairs(weights.size(),
                                  poisson_endpoint_pairs(weights, kappa, 1.0, rng, options),
                                  weights, /*keep_multiplicity=*/true);
}

Graph collapse_multigraph(const Graph& g) {
  Graph out = g;
  out.multiplicity_.clear();
  out.multiplicity_.shrink_to_fit();
  out.keeps_multiplicity_ = false;
  return out;
}

Graph sample_variant_fast(const WeightVector& weights, const ModelParams& params, Seed seed,
                          const SamplerOptions& options) {
  validate_inputs(weights, params);
  switch (params.kernel) {
    case Kernel::ratio:
      return sample_ratio(weights, params, seed, options);
    case Kernel::capped:
      return sample_capped(weights, params, seed, options);
    case Kernel::exponential:
      break;
  }
  throw ValidationError("sample_variant_fast handles the capped and ratio kernels");
}

Graph sample_sorted_skip(const WeightVector& weights, const ModelParams& params, Seed seed,
                         const SamplerOptions& options) {
  validate_inputs(weights, params);
  const std::size_t n = weights.size();
  const double scale = intensity_scale(weights, params);
  const auto& rank = weights.rank;
  // Every kernel satisfies p <= min(1, lambda), which bounds the edge count.
  const double kappa = intensity_factor(params, static_cast<double>(n), weights.sum());
  double bound_edges = 0.0, suffix = 0.0;
  for (std::size_t i = n; i-- > 0;) {
    bound_edges += std::min(static_cast<double>(n - 1 - i), kappa * weights.w[rank[i]] * suffix);
    suffix += weights.w[rank[i]];
  }
  if (!(bound_edges <= options.max_expected_edges))
    throw BudgetExceeded("up to " + std::to_string(bound_edges) + " expected edges exceed budget of " +
                         std::to_string(options.max_expected_edges));

  Rng rng = make_rng(seed, Stream::edges);
  EdgeList edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const VertexId u = rank[i];
    double bound = edge_probability(pair_lambda(weights, params, scale, u, rank[i + 1]), params.kernel);
    std::size_t j = i + 1;
    while (j < n && bound > 0.0) {
      if (bound < 1.0) {
        const double skip = std::floor(std::log(uniform01(rng)) / std::log1p(-bound));
        if (skip >= static_cast<double>(n - j)) break;
        j += static_cast<std::size_t>(skip);
      }
      const VertexId v = rank[j];
      const double p = edge_probability(pair_lambda(weights, params, scale, u, v), params.kernel);
      if (p >= bound || uniform01(rng) * bound < p) edges.emplace_back(std::min(u, v), std::max(u, v));
      bound = p;
      ++j;
    }
  }
  return GraphBuilder::from_pairs(n, std::move(edges), weights);
}

Graph sample_graph(const WeightVector& weights, const ModelParams& params, Seed seed,
                   const SamplerOptions& options) {
  validate_inputs(weights, params);
  if (weights.size() < 2) return GraphBuilder::from_sorted_upper(weights.size(), {}, {}, weights);
  const double n = static_cast<double>(weights.size());
  const double pairs = n * (n - 1.0) / 2.0;
  const double total = weights.sum();
  double draws = intensity_factor(params, n, total) * total * total / 2.0;
  if (params.kernel == Kernel::capped) draws *= -std::log1p(-options.lambda_high) / options.lambda_high;
  if (draws > pairs || draws > options.max_expected_edges)
    return sample_sorted_skip(weights, params, seed, options);

  if (params.kernel != Kernel::exponential) return sample_variant_fast(weights, params, seed, options);
  const double kappa = intensity_factor(params, n, total);
  Rng rng = make_rng(seed, Stream::edges);
  return GraphBuilder::from_pairs(weights.size(),
                                  poisson_endpoint_pairs(weights, kappa, 1.0, rng, options), weights);
}

bool HeavyVertexSet::contains(VertexId v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

std::vector<VertexId> HeavyVertexSet::complement(std::size_t n) const {
  std::vector<VertexId> light;
  light.reserve(n - members.size());
  for (VertexId v = 0; v < n; ++v)
    if (!contains(v)) light.push_back(v);
  return light;
}

HeavyVertexSet heavy_vertex_set(const WeightVector& weights, double s) {
  detail::require(weights.size() >= 2, "heavy vertex set needs n >= 2");
  detail::require(s > 0.0, "threshold s must be positive");
  const double n = static_cast<double>(weights.size());
  HeavyVertexSet out;
  out.threshold_s = s;
  out.threshold_weight = s * std::sqrt(n * std::log(n));
  for (VertexId v = 0; v < weights.size(); ++v)
    if (weights.w[v] > out.threshold_weight) out.members.push_back(v);
  return out;
}

}  // namespace plclique
