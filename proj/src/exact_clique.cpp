#include <algorithm>
#include <string>

#include "plclique/cliques.hpp"
#include "plclique/errors.hpp"

namespace plclique {
namespace {

/// out = a ∩ b for sorted ranges; binary-searches the longer one when the
/// sizes are lopsided.
void intersect(std::span<const VertexId> a, std::span<const VertexId> b, std::vector<VertexId>& out) {
  out.clear();
  if (a.size() > b.size()) std::swap(a, b);
  if (a.size() * 16 < b.size()) {
    for (VertexId x : a)
      if (std::binary_search(b.begin(), b.end(), x)) out.push_back(x);
    return;
  }
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
}

std::size_t intersection_size(std::span<const VertexId> a, std::span<const VertexId> b) {
  if (a.size() > b.size()) std::swap(a, b);
  std::size_t count = 0;
  if (a.size() * 16 < b.size()) {
    for (VertexId x : a) count += std::binary_search(b.begin(), b.end(), x);
    return count;
  }
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else ++count, ++i, ++j;
  }
  return count;
}

class MaxCliqueSearch {
 public:
  MaxCliqueSearch(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

  std::vector<VertexId> run() {
    const std::size_t n = g_.num_vertices();
    if (n == 0) return {};
    auto [order, degeneracy] = degeneracy_ordering(g_);
    std::vector<std::size_t> pos(n);
    for (std::size_t k = 0; k < n; ++k) pos[order[k]] = k;
    best_ = {order.front()};
    for (VertexId v : order) {
      std::vector<VertexId> later, earlier;
      for (VertexId w : g_.neighbors(v)) (pos[w] > pos[v] ? later : earlier).push_back(w);
      if (1 + later.size() <= best_.size()) continue;
      current_.assign(1, v);
      expand(later, earlier);
    }
    return best_;
  }

 private:
  void expand(std::vector<VertexId>& candidates, std::vector<VertexId>& excluded) {
    if (++nodes_ > budget_)
      throw BudgetExceeded("exact clique search exceeded " + std::to_string(budget_) + " nodes");
    if (candidates.empty()) {
      if (current_.size() > best_.size()) best_ = current_;
      return;
    }
    if (current_.size() + candidates.size() <= best_.size()) return;

    // Tomita pivot: the vertex of P ∪ X with most neighbors in P.
    VertexId pivot = candidates.front();
    std::size_t pivot_hits = 0;
    bool saturated = false;
    for (const auto* pool : {&candidates, &excluded}) {
      for (VertexId u : *pool) {
        const std::size_t hits = intersection_size(candidates, g_.neighbors(u));
        if (hits > pivot_hits) {
          pivot = u;
          pivot_hits = hits;
        }
        // No vertex can cover more than |P| - 1 (P members) or |P| (X members).
        if (pivot_hits >= candidates.size()) saturated = true;
        if (saturated) break;
      }
      if (saturated) break;
    }

    std::vector<VertexId> branch;
    const auto pivot_nbrs = g_.neighbors(pivot);
    for (VertexId v : candidates)
      if (!std::binary_search(pivot_nbrs.begin(), pivot_nbrs.end(), v)) branch.push_back(v);

    std::vector<VertexId> next_p, next_x;
    for (VertexId v : branch) {
      if (current_.size() + candidates.size() <= best_.size()) return;
      const auto nbrs = g_.neighbors(v);
      intersect(candidates, nbrs, next_p);
      intersect(excluded, nbrs, next_x);
      current_.push_back(v);
      {
        std::vector<VertexId> p = std::move(next_p), x = std::move(next_x);
        expand(p, x);
      }
      current_.pop_back();
      candidates.erase(std::lower_bound(candidates.begin(), candidates.end(), v));
      excluded.insert(std::lower_bound(excluded.begin(), excluded.end(), v), v);
    }
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<VertexId> current_;
  std::vector<VertexId> best_;
};

}  // namespace

std::pair<std::vector<VertexId>, std::size_t> degeneracy_ordering(const Graph& g) {
  // Batagelj-Zaversnik bucket peeling.
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> deg(n);
  std::size_t max_deg = 0;
  for (VertexId v = 0; v < n; ++v) max_deg = std::max(max_deg, deg[v] = g.degree(v));
  std::vector<std::size_t> bin(max_deg + 1, 0), pos(n);
  std::vector<VertexId> vert(n);
  for (VertexId v = 0; v < n; ++v) ++bin[deg[v]];
  std::size_t start = 0;
  for (auto& b : bin) {
    const std::size_t count = b;
    b = start;
    start += count;
  }
  for (VertexId v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    vert[pos[v]] = v;
  }
  for (std::size_t d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
  if (!bin.empty()) bin[0] = 0;

  std::size_t degeneracy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId v = vert[i];
    degeneracy = std::max(degeneracy, deg[v]);
    for (VertexId u : g.neighbors(v)) {
      if (deg[u] > deg[v]) {
        const std::size_t du = deg[u], pu = pos[u], pw = bin[du];
        const VertexId w = vert[pw];
        if (u != w) {
          pos[u] = pw;
          vert[pu] = w;
          pos[w] = pu;
          vert[pw] = u;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  return {std::move(vert), degeneracy};
}

CliqueResult max_clique_exact(const Graph& g, std::uint64_t node_budget) {
  auto vertices = MaxCliqueSearch(g, node_budget).run();
  std::sort(vertices.begin(), vertices.end());
  return CliqueResult{std::move(vertices), CliqueMethod::exact, OrderKind::weight};
}

std::optional<CliqueResult> try_max_clique_exact(const Graph& g, std::uint64_t node_budget) {
  try {
    return max_clique_exact(g, node_budget);
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

}  // namespace plclique
