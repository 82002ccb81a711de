#include "plclique/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "plclique/errors.hpp"

namespace plclique {
namespace {

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path.string(), "cannot open for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError(path.string(), "write failed");
}

Edge one_based_pair(long long i, long long j, std::size_t n, std::size_t line_no) {
  if (i < 1 || j < 1 || static_cast<std::size_t>(i) > n || static_cast<std::size_t>(j) > n)
    throw ValidationError("line " + std::to_string(line_no) + ": vertex id out of range 1.." +
                          std::to_string(n));
  if (i == j) throw ValidationError("line " + std::to_string(line_no) + ": self-loop");
  return {static_cast<VertexId>(i - 1), static_cast<VertexId>(j - 1)};
}

}  // namespace

GraphFormat parse_graph_format(std::string_view s) {
  if (s == "edgelist") return GraphFormat::edgelist;
  if (s == "dimacs") return GraphFormat::dimacs;
  throw ValidationError("unknown graph format '" + std::string(s) + "'");
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (VertexId u = 0; u < g.num_vertices(); ++u)
    for (VertexId v : g.neighbors(u))
      if (u < v) out << u + 1 << ' ' << v + 1 << '\n';
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (VertexId u = 0; u < g.num_vertices(); ++u)
    for (VertexId v : g.neighbors(u))
      if (u < v) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void write_graph(const std::filesystem::path& path, const Graph& g, GraphFormat format) {
  auto out = open_out(path);
  if (format == GraphFormat::dimacs)
    write_dimacs(out, g);
  else
    write_edge_list(out, g);
  finish(out, path);
}

EdgeFile read_edge_list(std::istream& in) {
  EdgeFile file;
  std::string line;
  std::size_t line_no = 0;
  std::size_t declared = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    long long x = 0, y = 0;
    if (!(fields >> x >> y)) throw ValidationError("line " + std::to_string(line_no) + ": expected two integers");
    if (!have_header) {
      if (x < 0 || y < 0) throw ValidationError("negative counts in header");
      file.n = static_cast<std::size_t>(x);
      declared = static_cast<std::size_t>(y);
      file.edges.reserve(declared);
      have_header = true;
      continue;
    }
    file.edges.push_back(one_based_pair(x, y, file.n, line_no));
  }
  if (!have_header) throw ValidationError("missing 'n m' header");
  if (file.edges.size() != declared)
    throw ValidationError("header declares " + std::to_string(declared) + " edges, found " +
                          std::to_string(file.edges.size()));
  return file;
}

EdgeFile read_dimacs(std::istream& in) {
  EdgeFile file;
  std::string line;
  std::size_t line_no = 0;
  std::size_t declared = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      long long n = 0, m = 0;
      if (!(fields >> kind >> n >> m) || n < 0 || m < 0)
        throw ValidationError("line " + std::to_string(line_no) + ": malformed problem line");
      file.n = static_cast<std::size_t>(n);
      declared = static_cast<std::size_t>(m);
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) throw ValidationError("edge before problem line");
      long long i = 0, j = 0;
      if (!(fields >> i >> j)) throw ValidationError("line " + std::to_string(line_no) + ": malformed edge");
      file.edges.push_back(one_based_pair(i, j, file.n, line_no));
    } else {
      throw ValidationError("line " + std::to_string(line_no) + ": unknown record '" + tag + "'");
    }
  }
  if (!have_header) throw ValidationError("missing 'p edge n m' line");
  if (file.edges.size() != declared)
    throw ValidationError("problem line declares " + std::to_string(declared) + " edges, found " +
                          std::to_string(file.edges.size()));
  return file;
}

EdgeFile read_edge_file(const std::filesystem::path& path, GraphFormat format) {
  auto in = open_in(path);
  try {
    return format == GraphFormat::dimacs ? read_dimacs(in) : read_edge_list(in);
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void write_weights(std::ostream& out, const WeightVector& w) {
  char buf[64];
  for (Eigen::Index i = 0; i < w.w.size(); ++i) {
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, w.w[i]);
    out.write(buf, end - buf);
    out.put('\n');
  }
}

void write_weights(const std::filesystem::path& path, const WeightVector& w) {
  auto out = open_out(path);
  write_weights(out, w);
  finish(out, path);
}

WeightVector read_weights(std::istream& in) {
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(line.data() + first, line.data() + last + 1, value);
    if (ec != std::errc() || ptr != line.data() + last + 1 || !(value > 0.0))
      throw ValidationError("line " + std::to_string(line_no) + ": expected a positive weight");
    values.push_back(value);
  }
  return WeightVector(Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size())));
}

WeightVector read_weights(const std::filesystem::path& path) {
  auto in = open_in(path);
  try {
    return read_weights(in);
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

Graph load_graph(const std::filesystem::path& graph_path, GraphFormat format,
                 const std::filesystem::path& weights_path) {
  EdgeFile file = read_edge_file(graph_path, format);
  WeightVector weights = weights_path.empty()
                             ? WeightVector(Eigen::VectorXd::Ones(static_cast<Eigen::Index>(file.n)))
                             : read_weights(weights_path);
  if (weights.size() != file.n)
    throw ValidationError(weights_path.string() + ": " + std::to_string(weights.size()) +
                          " weights for " + std::to_string(file.n) + " vertices");
  return GraphBuilder::from_pairs(file.n, std::move(file.edges), std::move(weights));
}

}  // namespace plclique
