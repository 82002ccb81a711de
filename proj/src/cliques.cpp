#include "plclique/cliques.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "plclique/errors.hpp"

namespace plclique {
namespace {

void require_permutation(const Graph& g, std::span<const VertexId> order) {
  const std::size_t n = g.num_vertices();
  if (order.size() != n) throw ValidationError("order must list every vertex exactly once");
  std::vector<bool> seen(n, false);
  for (VertexId v : order) {
    if (v >= n || seen[v]) throw ValidationError("order is not a permutation of the vertex ids");
    seen[v] = true;
  }
}

CliqueMethod tag(CliqueMethod weight_tag, OrderKind kind) {
  if (kind == OrderKind::weight) return weight_tag;
  switch (weight_tag) {
    case CliqueMethod::greedy: return CliqueMethod::degree_greedy;
    case CliqueMethod::quasi_top: return CliqueMethod::degree_quasi_top;
    case CliqueMethod::full_top: return CliqueMethod::degree_full_top;
    default: return weight_tag;
  }
}

CliqueResult make_result(std::vector<VertexId> vertices, CliqueMethod method, OrderKind kind) {
  std::sort(vertices.begin(), vertices.end());
  return CliqueResult{std::move(vertices), tag(method, kind), kind};
}

/// Number of neighbors of v placed before position `before` in the order.
std::size_t earlier_neighbors(const Graph& g, VertexId v, const std::vector<std::size_t>& pos,
                              std::size_t before) {
  std::size_t count = 0;
  for (VertexId u : g.neighbors(v)) count += pos[u] < before;
  return count;
}

std::vector<std::size_t> positions(std::span<const VertexId> order) {
  std::vector<std::size_t> pos(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = k;
  return pos;
}

}  // namespace

std::string_view to_string(CliqueMethod m) noexcept {
  switch (m) {
    case CliqueMethod::greedy: return "greedy";
    case CliqueMethod::quasi_top: return "quasi_top";
    case CliqueMethod::full_top: return "full_top";
    case CliqueMethod::exact: return "exact";
    case CliqueMethod::degree_greedy: return "degree_greedy";
    case CliqueMethod::degree_quasi_top: return "degree_quasi_top";
    case CliqueMethod::degree_full_top: return "degree_full_top";
  }
  return "?";
}

std::string_view to_string(OrderKind o) noexcept { return o == OrderKind::weight ? "weight" : "degree"; }

CliqueMethod parse_clique_method(std::string_view s) {
  for (auto m : {CliqueMethod::greedy, CliqueMethod::quasi_top, CliqueMethod::full_top,
                 CliqueMethod::exact, CliqueMethod::degree_greedy, CliqueMethod::degree_quasi_top,
                 CliqueMethod::degree_full_top})
    if (s == to_string(m)) return m;
  throw ValidationError("unknown clique method '" + std::string(s) + "'");
}

OrderKind parse_order_kind(std::string_view s) {
  if (s == "weight") return OrderKind::weight;
  if (s == "degree") return OrderKind::degree;
  throw ValidationError("unknown order '" + std::string(s) + "'");
}

std::vector<VertexId> weight_order(const Graph& g) {
  const auto& rank = g.weights().rank;
  if (rank.size() == g.num_vertices()) return rank;
  std::vector<VertexId> order(g.num_vertices());
  std::iota(order.begin(), order.end(), VertexId{0});
  return order;
}

std::vector<VertexId> degree_order(const Graph& g) {
  std::vector<VertexId> order = weight_order(g);
  // Stable on top of the weight order: degree ties keep decreasing weight, then id.
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId u, VertexId v) { return g.degree(u) > g.degree(v); });
  return order;
}

CliqueResult greedy_clique(const Graph& g, std::span<const VertexId> order, OrderKind kind) {
  require_permutation(g, order);
  std::vector<VertexId> kept;
  for (VertexId v : order) {
    if (g.degree(v) < kept.size()) continue;
    const bool joins = std::all_of(kept.begin(), kept.end(),
                                   [&](VertexId s) { return g.adjacent(v, s); });
    if (joins) kept.push_back(v);
  }
  return make_result(std::move(kept), CliqueMethod::greedy, kind);
}

CliqueResult quasi_top_clique(const Graph& g, std::span<const VertexId> order, OrderKind kind) {
  require_permutation(g, order);
  const auto pos = positions(order);
  std::vector<VertexId> kept;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const VertexId v = order[k];
    if (g.degree(v) < k) continue;
    if (earlier_neighbors(g, v, pos, k) == k) kept.push_back(v);
  }
  return make_result(std::move(kept), CliqueMethod::quasi_top, kind);
}

CliqueResult full_top_clique(const Graph& g, std::span<const VertexId> order, OrderKind kind) {
  require_permutation(g, order);
  const auto pos = positions(order);
  std::vector<VertexId> kept;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const VertexId v = order[k];
    if (g.degree(v) < k || earlier_neighbors(g, v, pos, k) != k) break;
    kept.push_back(v);
  }
  return make_result(std::move(kept), CliqueMethod::full_top, kind);
}

CliqueResult find_clique(const Graph& g, CliqueMethod method, std::uint64_t node_budget) {
  switch (method) {
    case CliqueMethod::exact:
      return max_clique_exact(g, node_budget);
    case CliqueMethod::greedy:
      return greedy_clique(g, weight_order(g));
    case CliqueMethod::quasi_top:
      return quasi_top_clique(g, weight_order(g));
    case CliqueMethod::full_top:
      return full_top_clique(g, weight_order(g));
    case CliqueMethod::degree_greedy:
      return greedy_clique(g, degree_order(g), OrderKind::degree);
    case CliqueMethod::degree_quasi_top:
      return quasi_top_clique(g, degree_order(g), OrderKind::degree);
    case CliqueMethod::degree_full_top:
      return full_top_clique(g, degree_order(g), OrderKind::degree);
  }
  throw ValidationError("unknown clique method");
}

bool is_clique(const Graph& g, std::span<const VertexId> vertices) {
  for (VertexId v : vertices)
    if (v >= g.num_vertices()) throw ValidationError("unknown vertex id " + std::to_string(v + 1));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

}  // namespace plclique
