#include <algorithm>

#include "plclique/cliques.hpp"

namespace plclique {
namespace {

/// Edges oriented from lower to higher (degree, id); each row sorted by id.
struct ForwardGraph {
  std::vector<std::uint64_t> offsets;
  std::vector<VertexId> targets;

  explicit ForwardGraph(const Graph& g) : offsets(g.num_vertices() + 1, 0) {
    const std::size_t n = g.num_vertices();
    auto before = [&](VertexId u, VertexId v) {
      return g.degree(u) < g.degree(v) || (g.degree(u) == g.degree(v) && u < v);
    };
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v : g.neighbors(u)) offsets[u + 1] += before(u, v);
    for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
    targets.resize(offsets[n]);
    for (VertexId u = 0; u < n; ++u) {
      std::uint64_t k = offsets[u];
      for (VertexId v : g.neighbors(u))
        if (before(u, v)) targets[k++] = v;
    }
  }

  std::span<const VertexId> row(VertexId v) const {
    return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
  }
};

}  // namespace

std::uint64_t count_triangles(const Graph& g) {
  const ForwardGraph fwd(g);
  std::uint64_t total = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    const auto ru = fwd.row(u);
    for (VertexId v : ru) {
      const auto rv = fwd.row(v);
      auto i = ru.begin();
      auto j = rv.begin();
      while (i != ru.end() && j != rv.end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else ++total, ++i, ++j;
      }
    }
  }
  return total;
}

std::uint64_t count_k4(const Graph& g) {
  const ForwardGraph fwd(g);
  std::uint64_t total = 0;
  std::vector<VertexId> common;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    const auto ru = fwd.row(u);
    for (VertexId v : ru) {
      const auto rv = fwd.row(v);
      common.clear();
      std::set_intersection(ru.begin(), ru.end(), rv.begin(), rv.end(), std::back_inserter(common));
      for (VertexId w : common) {
        const auto rw = fwd.row(w);
        auto i = common.begin();
        auto j = rw.begin();
        while (i != common.end() && j != rw.end()) {
          if (*i < *j) ++i;
          else if (*j < *i) ++j;
          else ++total, ++i, ++j;
        }
      }
    }
  }
  return total;
}

}  // namespace plclique
