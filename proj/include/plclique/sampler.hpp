#pragma once

#include <vector>

#include "plclique/graph.hpp"
#include "plclique/model.hpp"
#include "plclique/random.hpp"
#include "plclique/weights.hpp"

namespace plclique {

struct SamplerOptions {
  /// Fast samplers refuse to run when the expected number of endpoint draws
  /// exceeds this (each draw costs 8 bytes of scratch memory).
  double max_expected_edges = 1.5e8;
  /// Capped kernel: pairs with lambda >= lambda_high are enumerated directly.
  double lambda_high = 0.9;
};

/// Reference sampler: one uniform per pair {i < j} in lexicographic order,
/// edge iff the uniform falls below the kernel probability. O(n^2).
Graph sample_pairwise(const WeightVector& weights, const ModelParams& params, Seed seed);

/// Conditionally Poissonian multigraph in O(n + M) expected time: a
/// Poisson(kappa (sum W)^2 / 2) number of edges, endpoints drawn i.i.d.
/// proportional to W, self-loops discarded. Multiplicities are retained.
/// Requires the exponential kernel.
Graph sample_multigraph_fast(const WeightVector& weights, const ModelParams& params, Seed seed,
                             const SamplerOptions& options = {});

/// Drops multiplicities; edge present iff multiplicity >= 1.
Graph collapse_multigraph(const Graph& g);

/// Fast exact samplers for the capped and ratio kernels.
///
/// Ratio: thin the exponential-kernel graph, keeping each edge with
/// probability [lambda/(1+lambda)] / [1-e^{-lambda}].
///
/// Capped: pairs with lambda >= lambda_high come from a two-pointer sweep over
/// the weight order (certain when lambda >= 1, Bernoulli(lambda) otherwise);
/// the rest from a Poisson candidate process with rate c*lambda,
/// c = -ln(1-lambda_high)/lambda_high, each candidate accepted with
/// probability lambda/(1-e^{-c lambda}).
Graph sample_variant_fast(const WeightVector& weights, const ModelParams& params, Seed seed,
                          const SamplerOptions& options = {});

/// Exact sampler for any kernel in O(n log n + n + m) expected time: vertices
/// in descending weight order, partners of each vertex visited by geometric
/// skips under the previous partner's probability, then thinned. Throws
/// BudgetExceeded when the bound sum min(1, lambda) on the expected edge
/// count exceeds max_expected_edges.
Graph sample_sorted_skip(const WeightVector& weights, const ModelParams& params, Seed seed,
                         const SamplerOptions& options = {});

/// Fastest exact sampler for the model's kernel, returning a simple graph.
/// Falls back to sample_sorted_skip when the expected number of endpoint draws
/// exceeds the number of vertex pairs or the budget.
Graph sample_graph(const WeightVector& weights, const ModelParams& params, Seed seed,
                   const SamplerOptions& options = {});

/// Vertices with W_i > s sqrt(n ln n) and the threshold used.
struct HeavyVertexSet {
  double threshold_s = 0.0;
  double threshold_weight = 0.0;
  std::vector<VertexId> members;  // ascending ids

  bool contains(VertexId v) const;
  /// The light vertices, ascending.
  std::vector<VertexId> complement(std::size_t n) const;
};

HeavyVertexSet heavy_vertex_set(const WeightVector& weights, double s);

}  // namespace plclique
