#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "plclique/graph.hpp"

namespace plclique {

enum class CliqueMethod {
  greedy,
  quasi_top,
  full_top,
  exact,
  degree_greedy,
  degree_quasi_top,
  degree_full_top,
};

enum class OrderKind { weight, degree };

std::string_view to_string(CliqueMethod m) noexcept;
std::string_view to_string(OrderKind o) noexcept;
CliqueMethod parse_clique_method(std::string_view s);
OrderKind parse_order_kind(std::string_view s);

struct CliqueResult {
  std::vector<VertexId> vertices;  // ascending ids
  CliqueMethod method = CliqueMethod::greedy;
  OrderKind order_used = OrderKind::weight;

  std::size_t size() const noexcept { return vertices.size(); }
};

inline constexpr std::uint64_t kDefaultExactBudget = 100'000'000;

/// Decreasing weight, ties by ascending id.
std::vector<VertexId> weight_order(const Graph& g);
/// Decreasing simple-graph degree, ties by decreasing weight, then ascending id.
std::vector<VertexId> degree_order(const Graph& g);

// The three scan algorithms see weights only through `order`, which must be a
// permutation of the vertex ids. A degree order gives the degree-based variants.

/// Keeps a vertex iff it is adjacent to every vertex kept so far.
CliqueResult greedy_clique(const Graph& g, std::span<const VertexId> order,
                           OrderKind kind = OrderKind::weight);
/// Keeps a vertex iff it is adjacent to every vertex before it in the order.
CliqueResult quasi_top_clique(const Graph& g, std::span<const VertexId> order,
                              OrderKind kind = OrderKind::weight);
/// The longest prefix of the order that induces a complete graph.
CliqueResult full_top_clique(const Graph& g, std::span<const VertexId> order,
                             OrderKind kind = OrderKind::weight);

/// Maximum clique by Bron-Kerbosch with Tomita pivoting over a degeneracy
/// ordering, with size-bound pruning. Throws BudgetExceeded once more than
/// `node_budget` search nodes have been expanded.
CliqueResult max_clique_exact(const Graph& g, std::uint64_t node_budget = kDefaultExactBudget);
std::optional<CliqueResult> try_max_clique_exact(const Graph& g,
                                                 std::uint64_t node_budget = kDefaultExactBudget);

/// Runs one named method with the order it implies.
CliqueResult find_clique(const Graph& g, CliqueMethod method,
                         std::uint64_t node_budget = kDefaultExactBudget);

/// Throws ValidationError for ids outside the graph.
bool is_clique(const Graph& g, std::span<const VertexId> vertices);

std::uint64_t count_triangles(const Graph& g);
std::uint64_t count_k4(const Graph& g);

/// Degeneracy (smallest-last) ordering and the degeneracy itself.
std::pair<std::vector<VertexId>, std::size_t> degeneracy_ordering(const Graph& g);

}  // namespace plclique
