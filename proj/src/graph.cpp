#include "plclique/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "plclique/errors.hpp"

namespace plclique {

std::uint64_t Graph::multi_degree(VertexId v) const noexcept {
  if (multiplicity_.empty()) return degree(v);
  std::uint64_t d = 0;
  for (auto m : multiplicities(v)) d += m;
  return d;
}

bool Graph::adjacent(VertexId u, VertexId v) const noexcept {
  if (u == v) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(num_edges());
  for (VertexId u = 0; u < num_vertices(); ++u)
    for (VertexId v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::check_invariants() const {
  auto fail = [](const std::string& what) { throw std::logic_error("graph invariant: " + what); };
  const std::size_t n = num_vertices();
  if (weights_.size() != n) fail("weight vector size mismatch");
  if (!multiplicity_.empty() && multiplicity_.size() != neighbors_.size())
    fail("multiplicity size mismatch");
  for (VertexId u = 0; u < n; ++u) {
    auto row = neighbors(u);
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] >= n) fail("neighbor out of range");
      if (row[k] == u) fail("self-loop");
      if (k > 0 && row[k - 1] >= row[k]) fail("neighbor list not strictly increasing");
      auto back = neighbors(row[k]);
      auto it = std::lower_bound(back.begin(), back.end(), u);
      if (it == back.end() || *it != u) fail("asymmetric adjacency");
      if (!multiplicity_.empty()) {
        auto m = multiplicities(u)[k];
        if (m < 1) fail("multiplicity below 1");
        if (multiplicities(row[k])[static_cast<std::size_t>(it - back.begin())] != m)
          fail("asymmetric multiplicity");
      }
    }
  }
}

Graph GraphBuilder::from_pairs(std::size_t n, EdgeList pairs, WeightVector weights,
                               bool keep_multiplicity) {
  detail::require(weights.size() == n, "weight vector size does not match vertex count");
  detail::require(n <= std::numeric_limits<VertexId>::max(), "too many vertices");

  // Bucket the larger endpoint by the smaller one.
  std::vector<std::uint64_t> start(n + 1, 0);
  for (auto& [u, v] : pairs) {
    if (u >= n || v >= n) throw ValidationError("edge endpoint out of range");
    if (u == v) throw ValidationError("self-loop in edge list");
    if (u > v) std::swap(u, v);
    ++start[u + 1];
  }
  for (std::size_t i = 0; i < n; ++i) start[i + 1] += start[i];
  std::vector<VertexId> bucket(pairs.size());
  {
    std::vector<std::uint64_t> fill(start.begin(), start.end() - 1);
    for (const auto& [u, v] : pairs) bucket[fill[u]++] = v;
  }
  EdgeList().swap(pairs);

  // Deduplicate each bucket in place, counting repeats.
  std::vector<std::uint32_t> count(n, 0);
  std::vector<VertexId> distinct;
  std::vector<std::uint32_t> upper_mult;
  if (keep_multiplicity) upper_mult.resize(bucket.size());
  std::vector<std::uint64_t> upper_start(n + 1, 0);
  std::uint64_t write = 0;
  for (std::size_t u = 0; u < n; ++u) {
    distinct.clear();
    for (std::uint64_t k = start[u]; k < start[u + 1]; ++k) {
      VertexId v = bucket[k];
      if (count[v]++ == 0) distinct.push_back(v);
    }
    std::sort(distinct.begin(), distinct.end());
    for (VertexId v : distinct) {
      bucket[write] = v;
      if (keep_multiplicity) upper_mult[write] = count[v];
      ++write;
      count[v] = 0;
    }
    upper_start[u + 1] = write;
  }
  bucket.resize(write);
  if (keep_multiplicity) upper_mult.resize(write);

  // Symmetrize. Rows fill in ascending order: lower neighbors arrive while
  // processing smaller ids, upper neighbors when the row itself is processed.
  Graph g;
  g.keeps_multiplicity_ = keep_multiplicity;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t u = 0; u < n; ++u) {
    g.offsets_[u + 1] += upper_start[u + 1] - upper_start[u];
    for (std::uint64_t k = upper_start[u]; k < upper_start[u + 1]; ++k) ++g.offsets_[bucket[k] + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.neighbors_.resize(2 * write);
  if (keep_multiplicity) g.multiplicity_.resize(2 * write);
  std::vector<std::uint64_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::uint64_t k = upper_start[u]; k < upper_start[u + 1]; ++k) {
      const VertexId v = bucket[k];
      const std::uint64_t a = fill[u]++, b = fill[v]++;
      g.neighbors_[a] = v;
      g.neighbors_[b] = static_cast<VertexId>(u);
      if (keep_multiplicity) g.multiplicity_[a] = g.multiplicity_[b] = upper_mult[k];
    }
  }
  g.weights_ = std::move(weights);
  return g;
}

Graph GraphBuilder::from_sorted_upper(std::size_t n, const EdgeList& upper,
                                      const std::vector<std::uint32_t>& multiplicity,
                                      WeightVector weights) {
  detail::require(weights.size() == n, "weight vector size does not match vertex count");
  detail::require(multiplicity.empty() || multiplicity.size() == upper.size(),
                  "multiplicity size does not match edge count");
  Graph g;
  g.keeps_multiplicity_ = !multiplicity.empty();
  g.offsets_.assign(n + 1, 0);
  for (const auto& [u, v] : upper) {
    if (!(u < v && v < n)) throw ValidationError("edge must satisfy u < v < n");
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.neighbors_.resize(2 * upper.size());
  if (g.keeps_multiplicity_) g.multiplicity_.resize(2 * upper.size());
  std::vector<std::uint64_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (std::size_t k = 0; k < upper.size(); ++k) {
    const auto [u, v] = upper[k];
    if (k > 0 && !(upper[k - 1] < upper[k])) throw ValidationError("edges must be sorted and unique");
    const std::uint64_t a = fill[u]++, b = fill[v]++;
    g.neighbors_[a] = v;
    g.neighbors_[b] = u;
    if (g.keeps_multiplicity_) g.multiplicity_[a] = g.multiplicity_[b] = multiplicity[k];
  }
  g.weights_ = std::move(weights);
  return g;
}

std::vector<std::size_t> degrees(const Graph& g) {
  std::vector<std::size_t> d(g.num_vertices());
  for (VertexId v = 0; v < d.size(); ++v) d[v] = g.degree(v);
  return d;
}

std::vector<std::uint64_t> multi_degrees(const Graph& g) {
  std::vector<std::uint64_t> d(g.num_vertices());
  for (VertexId v = 0; v < d.size(); ++v) d[v] = g.multi_degree(v);
  return d;
}

}  // namespace plclique
