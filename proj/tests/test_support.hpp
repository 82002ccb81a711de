#pragma once

// Small-graph builders and brute-force oracles. The oracles work on a plain
// adjacency matrix built from the edge list, never on Graph queries.

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "plclique/graph.hpp"

namespace plclique::test {

inline Graph make_graph(std::size_t n, EdgeList edges) {
  Eigen::VectorXd w(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) w[static_cast<Eigen::Index>(i)] = static_cast<double>(n - i);
  return GraphBuilder::from_pairs(n, std::move(edges), WeightVector(std::move(w)));
}

inline EdgeList complete_edges(std::size_t n) {
  EdgeList e;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return e;
}

inline EdgeList random_edges(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  EdgeList e;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return e;
}

using AdjMatrix = std::vector<std::vector<bool>>;

inline AdjMatrix adjacency_matrix(std::size_t n, const EdgeList& edges) {
  AdjMatrix a(n, std::vector<bool>(n, false));
  for (auto [u, v] : edges) a[u][v] = a[v][u] = true;
  return a;
}

/// Largest clique by enumerating all 2^n vertex subsets (n <= 20).
inline std::size_t brute_force_omega(const AdjMatrix& a) {
  const std::size_t n = a.size();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= best) continue;
    bool clique = true;
    for (std::size_t i = 0; i < n && clique; ++i)
      if (mask >> i & 1u)
        for (std::size_t j = i + 1; j < n && clique; ++j)
          if ((mask >> j & 1u) && !a[i][j]) clique = false;
    if (clique) best = size;
  }
  return best;
}

inline std::uint64_t brute_force_triangles(const AdjMatrix& a) {
  const std::size_t n = a.size();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) count += a[i][j] && a[i][k] && a[j][k];
  return count;
}

inline std::uint64_t brute_force_k4(const AdjMatrix& a) {
  const std::size_t n = a.size();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l)
          count += a[i][j] && a[i][k] && a[i][l] && a[j][k] && a[j][l] && a[k][l];
  return count;
}

}  // namespace plclique::test
