#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "plclique/errors.hpp"
#include "plclique/graph_io.hpp"
#include "test_support.hpp"

namespace plclique {
namespace {

using test::make_graph;

TEST(GraphBuilder, MergesDuplicatesAndOrientations) {
  const Graph g = GraphBuilder::from_pairs(4, {{1, 0}, {0, 1}, {2, 3}, {3, 1}},
                                           deterministic_weights(4, 1, 1), true);
  g.check_invariants();
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_EQ(g.edges(), (EdgeList{{0, 1}, {1, 3}, {2, 3}}));
  EXPECT_EQ(g.multiplicities(0)[0], 2u);
  EXPECT_EQ(g.multi_degree(1), 3u);
  EXPECT_EQ(g.degree(1), 2u);
  EXPECT_TRUE(g.adjacent(3, 1));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(multi_degrees(g), (std::vector<std::uint64_t>{2, 3, 1, 2}));
  EXPECT_EQ(degrees(g), (std::vector<std::size_t>{1, 2, 1, 2}));
}

TEST(GraphBuilder, RejectsLoopsAndBadIds) {
  EXPECT_THROW(make_graph(3, {{1, 1}}), ValidationError);
  EXPECT_THROW(make_graph(3, {{0, 3}}), ValidationError);
}

TEST(GraphBuilder, RandomGraphsAgreeWithAdjacencyMatrix) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial;
    const auto edges = test::random_edges(n, 0.3, rng);
    const auto a = test::adjacency_matrix(n, edges);
    EdgeList shuffled = edges;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& e : shuffled)
      if (rng() & 1) std::swap(e.first, e.second);
    const Graph g = make_graph(n, shuffled);
    g.check_invariants();
    EXPECT_EQ(g.edges(), edges);
    for (VertexId i = 0; i < n; ++i)
      for (VertexId j = 0; j < n; ++j) ASSERT_EQ(g.adjacent(i, j), bool(a[i][j]));
  }
}

TEST(EdgeListFormat, RoundTrip) {
  const Graph g = make_graph(5, {{0, 1}, {3, 4}, {1, 4}});
  std::stringstream ss;
  write_edge_list(ss, g);
  EXPECT_EQ(ss.str(), "5 3\n1 2\n2 5\n4 5\n");
  const auto f = read_edge_list(ss);
  EXPECT_EQ(f.n, 5u);
  EXPECT_EQ(f.edges, g.edges());
}

TEST(DimacsFormat, RoundTripAndComments) {
  const Graph g = make_graph(4, {{0, 3}, {1, 2}});
  std::stringstream ss;
  write_dimacs(ss, g);
  EXPECT_EQ(ss.str(), "p edge 4 2\ne 1 4\ne 2 3\n");
  std::stringstream with_comments("c generated\nc again\np edge 4 2\ne 1 4\ne 3 2\n");
  const auto f = read_dimacs(with_comments);
  EXPECT_EQ(f.n, 4u);
  EXPECT_EQ(make_graph(f.n, f.edges).edges(), g.edges());
}

TEST(EdgeFileReaders, RejectMalformedInput) {
  std::stringstream bad_count("3 2\n1 2\n");
  EXPECT_THROW(read_edge_list(bad_count), ValidationError);
  std::stringstream bad_id("3 1\n1 4\n");
  EXPECT_THROW(read_edge_list(bad_id), ValidationError);
  std::stringstream zero_id("3 1\n0 2\n");
  EXPECT_THROW(read_edge_list(zero_id), ValidationError);
  std::stringstream garbage("three 1\n");
  EXPECT_THROW(read_edge_list(garbage), ValidationError);
  std::stringstream no_header("e 1 2\n");
  EXPECT_THROW(read_dimacs(no_header), ValidationError);
  EXPECT_THROW(parse_graph_format("graphml"), ValidationError);
}

TEST(Weights, RoundTripExactly) {
  const auto w = sample_iid_pareto(100, WeightParams::pareto(1.3, 0.7), 2);
  std::stringstream ss;
  write_weights(ss, w);
  EXPECT_EQ(read_weights(ss).w, w.w);
}

TEST(Files, LoadGraphAndIoErrors) {
  const auto dir = std::filesystem::temp_directory_path() / "plclique_io_test";
  std::filesystem::create_directories(dir);
  const Graph g = make_graph(6, {{0, 1}, {2, 5}, {1, 5}});
  write_graph(dir / "g.txt", g, GraphFormat::dimacs);
  write_weights(dir / "w.txt", deterministic_weights(6, 1, 1));
  const Graph loaded = load_graph(dir / "g.txt", GraphFormat::dimacs, dir / "w.txt");
  EXPECT_EQ(loaded.edges(), g.edges());
  EXPECT_EQ(loaded.weights().w, deterministic_weights(6, 1, 1).w);
  const Graph unweighted = load_graph(dir / "g.txt", GraphFormat::dimacs);
  EXPECT_EQ(unweighted.weights().w, Eigen::VectorXd::Ones(6));
  EXPECT_THROW(load_graph(dir / "missing.txt", GraphFormat::edgelist), IoError);
  write_weights(dir / "short.txt", deterministic_weights(5, 1, 1));
  EXPECT_THROW(load_graph(dir / "g.txt", GraphFormat::dimacs, dir / "short.txt"), ValidationError);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace plclique
