#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "plclique/weights.hpp"

namespace plclique {

using Edge = std::pair<VertexId, VertexId>;
using EdgeList = std::vector<Edge>;

/// Immutable simple graph in compressed sparse row form. Neighbor lists are
/// sorted and duplicate-free; multiplicities (parallel-edge counts of the
/// underlying multigraph) are kept only when the graph was built with them.
class Graph {
 public:
  Graph() = default;

  std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return neighbors_.size() / 2; }
  bool has_multiplicity() const noexcept { return keeps_multiplicity_; }

  std::span<const VertexId> neighbors(VertexId v) const noexcept {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  /// Parallel-edge counts aligned with neighbors(v); empty without multiplicities.
  std::span<const std::uint32_t> multiplicities(VertexId v) const noexcept {
    if (multiplicity_.empty()) return {};
    return {multiplicity_.data() + offsets_[v], multiplicity_.data() + offsets_[v + 1]};
  }

  std::size_t degree(VertexId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  /// Multigraph degree; equals degree(v) without multiplicities.
  std::uint64_t multi_degree(VertexId v) const noexcept;

  bool adjacent(VertexId u, VertexId v) const noexcept;

  const WeightVector& weights() const noexcept { return weights_; }

  /// Every unordered edge once as (u, v), u < v, in lexicographic order.
  EdgeList edges() const;

  /// Checks symmetry, ordering, loop-freeness and multiplicity >= 1.
  /// Throws std::logic_error on violation.
  void check_invariants() const;

  friend class GraphBuilder;
  friend Graph collapse_multigraph(const Graph& g);

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<VertexId> neighbors_;
  std::vector<std::uint32_t> multiplicity_;
  bool keeps_multiplicity_ = false;
  WeightVector weights_;
};

/// Builds Graphs from edge multisets.
class GraphBuilder {
 public:
  /// Pairs in any order and orientation; repeated pairs are merged and
  /// counted when `keep_multiplicity` is set. Self-loops and out-of-range
  /// ids throw ValidationError.
  static Graph from_pairs(std::size_t n, EdgeList pairs, WeightVector weights,
                          bool keep_multiplicity = false);

  /// Pairs already unique, oriented u < v and sorted lexicographically.
  /// `multiplicity` is either empty or aligned with `upper`.
  static Graph from_sorted_upper(std::size_t n, const EdgeList& upper,
                                 const std::vector<std::uint32_t>& multiplicity,
                                 WeightVector weights);
};

/// Simple-graph degrees.
std::vector<std::size_t> degrees(const Graph& g);
/// Multigraph degrees (sum of multiplicities); simple degrees without them.
std::vector<std::uint64_t> multi_degrees(const Graph& g);

}  // namespace plclique
