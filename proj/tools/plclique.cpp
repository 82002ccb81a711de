// Command-line front end: generate, clique, predict, experiment, gof.
// Exit codes: 0 success, 1 validation error, 2 I/O error, 3 budget exceeded,
// 4 unexpected internal error.

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "plclique/cliques.hpp"
#include "plclique/errors.hpp"
#include "plclique/experiments.hpp"
#include "plclique/graph_io.hpp"
#include "plclique/sampler.hpp"
#include "plclique/stats.hpp"
#include "plclique/theory.hpp"
#include "plclique/weights.hpp"

namespace {

using namespace plclique;

enum ExitCode { kOk = 0, kValidation = 1, kIo = 2, kBudget = 3, kInternal = 4 };

struct ModelFlags {
  double a = 1.0, b = 1.0, alpha = 1.0;
  std::string kernel = "exponential", normalization = "by-n";

  void add_to(CLI::App& cmd) {
    cmd.add_option("--a", a, "tail constant a in P(W > x) = a x^-alpha")->capture_default_str();
    cmd.add_option("--b", b, "intensity scale b")->capture_default_str();
    cmd.add_option("--alpha", alpha, "tail exponent")->capture_default_str();
    cmd.add_option("--kernel", kernel, "exponential | capped | ratio")->capture_default_str();
    cmd.add_option("--normalization", normalization, "by-n | by-weight-sum")->capture_default_str();
  }
  ModelParams params() const {
    ModelParams p{a, b, alpha, parse_kernel(kernel), parse_normalization(normalization)};
    p.validate();
    return p;
  }
};

// Writes to `path`, or stdout when empty.
template <typename Fn>
void emit(const std::string& path, Fn&& write) {
  if (path.empty()) {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError(path, "cannot open for writing");
  write(out);
  out.flush();
  if (!out) throw IoError(path, "write failed");
}

struct GenerateCmd {
  ModelFlags model;
  std::size_t n = 1000;
  std::string weights_mode = "iid";
  Seed seed = 0;
  std::string format = "edgelist";
  std::string out, weights_out;

  void add_to(CLI::App& app) {
    auto* cmd = app.add_subcommand("generate", "sample weights and a graph");
    model.add_to(*cmd);
    cmd->add_option("-n,--n", n, "number of vertices (mean, for poisson-count)")->capture_default_str();
    cmd->add_option("--weights", weights_mode, "iid | deterministic | poisson-count")->capture_default_str();
    cmd->add_option("--seed", seed, "master seed")->capture_default_str();
    cmd->add_option("--format", format, "edgelist | dimacs")->capture_default_str();
    cmd->add_option("--out", out, "graph file (stdout when omitted)");
    cmd->add_option("--weights-out", weights_out, "weight file (default: <out>.weights)");
    cmd->callback([this] { run(); });
  }

  void run() const {
    const ModelParams params = model.params();
    const GraphFormat fmt = parse_graph_format(format);
    WeightVector w;
    switch (parse_weight_mode(weights_mode)) {
      case WeightMode::deterministic:
        w = deterministic_weights(n, params.a, params.alpha);
        break;
      case WeightMode::poisson_count:
        w = sample_iid_pareto(sample_poisson_vertex_count(double(n), seed),
                              WeightParams::pareto(params.alpha, params.a), seed);
        break;
      case WeightMode::iid:
        w = sample_iid_pareto(n, WeightParams::pareto(params.alpha, params.a), seed);
        break;
    }
    const Graph g = sample_graph(w, params, seed);
    emit(out, [&](std::ostream& os) {
      fmt == GraphFormat::dimacs ? write_dimacs(os, g) : write_edge_list(os, g);
    });
    const std::string wpath = !weights_out.empty() ? weights_out : out.empty() ? "" : out + ".weights";
    if (!wpath.empty()) write_weights(std::filesystem::path(wpath), g.weights());
    if (!out.empty())
      std::cerr << "wrote " << g.num_vertices() << " vertices, " << g.num_edges() << " edges\n";
  }
};

struct CliqueCmd {
  std::string graph, weights, method = "greedy", format = "edgelist", out;
  std::uint64_t budget = kDefaultExactBudget;

  void add_to(CLI::App& app) {
    auto* cmd = app.add_subcommand("clique", "run one clique method on a graph file");
    cmd->add_option("graph", graph, "graph file")->required();
    cmd->add_option("--weights", weights, "weight file (all weights 1 when omitted)");
    cmd->add_option("--method", method,
                    "greedy | quasi_top | full_top | exact | degree_greedy | degree_quasi_top | "
                    "degree_full_top")
        ->capture_default_str();
    cmd->add_option("--format", format, "edgelist | dimacs")->capture_default_str();
    cmd->add_option("--budget", budget, "node budget for the exact search")->capture_default_str();
    cmd->add_option("--out", out, "output file (stdout when omitted)");
    cmd->callback([this] { run(); });
  }

  void run() const {
    const CliqueMethod m = parse_clique_method(method);
    const Graph g = load_graph(graph, parse_graph_format(format), weights);
    const CliqueResult r = find_clique(g, m, budget);
    emit(out, [&](std::ostream& os) {
      os << "method " << to_string(r.method) << "\nsize " << r.size() << "\nvertices";
      for (VertexId v : r.vertices) os << ' ' << v + 1;
      os << '\n';
    });
  }
};

struct PredictCmd {
  ModelFlags model;
  double n = 1e4;
  std::optional<double> gnp_p;
  std::string out;

  void add_to(CLI::App& app) {
    auto* cmd = app.add_subcommand("predict", "print the applicable theoretical predictions as JSON");
    model.add_to(*cmd);
    cmd->add_option("-n,--n", n, "number of vertices")->capture_default_str();
    cmd->add_option("--gnp-p", gnp_p, "also report the G(n,p) clique bound for this p");
    cmd->add_option("--out", out, "output file (stdout when omitted)");
    cmd->callback([this] { run(); });
  }

  void run() const {
    const ModelParams p = model.params();
    detail::require(n > 1.0, "n must exceed 1");
    using nlohmann::json;
    json doc;
    doc["n"] = n;
    doc["model"] = {{"a", p.a}, {"b", p.b}, {"alpha", p.alpha},
                    {"kernel", to_string(p.kernel)}, {"normalization", to_string(p.normalization)}};
    json preds = json::array();
    for (const auto& pr : applicable_predictions(n, p)) {
      const auto [lo, hi] = pr.valid_alpha_range;
      preds.push_back({{"kind", pr.kind},
                       {"values", pr.values},
                       {"valid_alpha_range", {lo, std::isinf(hi) ? json(nullptr) : json(hi)}},
                       {"note", pr.note}});
    }
    if (gnp_p) {
      preds.push_back({{"kind", "gnp_bound"},
                       {"values", json::array({gnp_clique_bound(n, *gnp_p)})},
                       {"p", *gnp_p},
                       {"note", "omega(G(n,p)) <= 2 ln n / (1-p) whp"}});
    }
    doc["predictions"] = preds;
    emit(out, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
  }
};

struct ExperimentCmd {
  std::string config_path, out;
  std::optional<Seed> seed;
  std::optional<std::size_t> workers;

  void add_to(CLI::App& app) {
    auto* cmd = app.add_subcommand("experiment", "run the experiment described by a TOML file");
    cmd->add_option("config", config_path, "TOML configuration")->required();
    cmd->add_option("--seed", seed, "override master_seed");
    cmd->add_option("--workers", workers, "override workers");
    cmd->add_option("--out", out, "override output_path");
    cmd->callback([this] { run(); });
  }

  void run() const {
    ExperimentConfig config = load_config(config_path);
    if (seed) config.master_seed = *seed;
    if (workers) config.workers = *workers;
    if (!out.empty()) config.output_path = out;
    config.validate();
    const Report report = run_and_report(config);
    write_summary_csv(std::cout, report);
    if (report.greedy_fit)
      std::cout << "greedy log-log slope " << report.greedy_fit->slope << " (se "
                << report.greedy_fit->slope_stderr << ")\n";
  }
};

struct GofCmd {
  std::string counts_path, out;
  double rate = 0.0;

  void add_to(CLI::App& app) {
    auto* cmd = app.add_subcommand("gof", "chi-square test of counts against a Poisson law");
    cmd->add_option("counts", counts_path, "file of non-negative integer counts")->required();
    cmd->add_option("--rate", rate, "Poisson rate")->required();
    cmd->add_option("--out", out, "output file (stdout when omitted)");
    cmd->callback([this] { run(); });
  }

  void run() const {
    std::ifstream in(counts_path);
    if (!in) throw IoError(counts_path, "cannot open for reading");
    std::vector<std::uint64_t> counts;
    std::string token;
    while (in >> token) {
      std::uint64_t v = 0;
      const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc() || end != token.data() + token.size())
        throw ValidationError(counts_path + ": not a non-negative integer: '" + token + "'");
      counts.push_back(v);
    }
    const GofResult r = poisson_gof(counts, rate);
    const nlohmann::json doc{{"samples", counts.size()},
                             {"rate", rate},
                             {"chi_square", r.chi_square},
                             {"p_value", r.p_value},
                             {"cells", r.cells},
                             {"degrees_of_freedom", r.degrees_of_freedom}};
    emit(out, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cliques in power-law random graphs"};
  app.require_subcommand(1);
  GenerateCmd generate;
  CliqueCmd clique;
  PredictCmd predict;
  ExperimentCmd experiment;
  GofCmd gof;
  generate.add_to(app);
  clique.add_to(app);
  predict.add_to(app);
  experiment.add_to(app);
  gof.add_to(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kValidation;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}
