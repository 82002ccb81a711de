#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "plclique/graph.hpp"

namespace plclique {

enum class GraphFormat { edgelist, dimacs };

GraphFormat parse_graph_format(std::string_view s);

// Edge list: "n m" header, then m lines "i j" with 1-based ids and i < j.
// DIMACS: optional "c" comment lines, "p edge n m", then m lines "e i j".

void write_edge_list(std::ostream& out, const Graph& g);
void write_dimacs(std::ostream& out, const Graph& g);
void write_graph(const std::filesystem::path& path, const Graph& g, GraphFormat format);

struct EdgeFile {
  std::size_t n = 0;
  EdgeList edges;  // 0-based
};

EdgeFile read_edge_list(std::istream& in);
EdgeFile read_dimacs(std::istream& in);
EdgeFile read_edge_file(const std::filesystem::path& path, GraphFormat format);

/// One weight per line, vertex id implied by the line number; written in
/// shortest round-trip decimal form.
void write_weights(std::ostream& out, const WeightVector& w);
void write_weights(const std::filesystem::path& path, const WeightVector& w);
WeightVector read_weights(std::istream& in);
WeightVector read_weights(const std::filesystem::path& path);

/// Loads a graph file and attaches weights. Without a weight file every
/// vertex gets weight 1, so the weight order is the id order.
Graph load_graph(const std::filesystem::path& graph_path, GraphFormat format,
                 const std::filesystem::path& weights_path = {});

}  // namespace plclique
