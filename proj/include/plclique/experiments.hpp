#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plclique/cliques.hpp"
#include "plclique/model.hpp"
#include "plclique/random.hpp"
#include "plclique/sampler.hpp"
#include "plclique/stats.hpp"
#include "plclique/theory.hpp"

namespace plclique {

enum class WeightMode { iid, deterministic, poisson_count };

std::string_view to_string(WeightMode m) noexcept;
WeightMode parse_weight_mode(std::string_view s);

struct ExperimentConfig {
  ModelParams model;
  WeightMode weight_mode = WeightMode::iid;
  std::vector<std::size_t> n_grid;
  std::size_t replications = 1;
  Seed master_seed = 0;
  std::vector<CliqueMethod> algorithms{CliqueMethod::greedy, CliqueMethod::quasi_top,
                                       CliqueMethod::full_top, CliqueMethod::exact};
  /// Order used by the plain greedy/quasi_top/full_top entries.
  OrderKind order = OrderKind::weight;
  std::size_t exact_oracle_max_n = 200;
  std::uint64_t exact_budget = kDefaultExactBudget;
  /// Triangle and K4 counts are recorded only for n up to this.
  std::size_t subgraph_counts_max_n = 20000;
  std::filesystem::path output_path;
  std::size_t workers = 1;
  SamplerOptions sampler;

  void validate() const;
};

/// Parses the TOML experiment description; see README for the layout.
ExperimentConfig parse_config(std::string_view toml_text);
ExperimentConfig load_config(const std::filesystem::path& path);

inline constexpr std::size_t kMethodCount = 7;

struct RunRecord {
  std::size_t n_nominal = 0;
  std::size_t n = 0;  // realized vertex count
  std::size_t replicate = 0;
  Seed seed = 0;
  std::array<std::optional<std::size_t>, kMethodCount> sizes{};
  bool exact_budget_exceeded = false;
  std::optional<std::uint64_t> x3;
  std::optional<std::uint64_t> x4;
  std::uint64_t edge_count = 0;
  double wall_time = 0.0;  // seconds; excluded from equality

  std::optional<std::size_t> size(CliqueMethod m) const { return sizes[static_cast<std::size_t>(m)]; }
  void set_size(CliqueMethod m, std::size_t s) { sizes[static_cast<std::size_t>(m)] = s; }

  bool operator==(const RunRecord& other) const;
};

/// Throws std::logic_error unless |K_ft| <= |K_qt| <= |K_gr| (<= exact) for
/// each order family present in the record.
void check_chain(const RunRecord& record);

/// Seed of replicate `rep` at nominal size n; independent of grid position.
Seed replicate_seed(Seed master, std::size_t n, std::size_t rep) noexcept;

/// One replicate: weights, graph, clique sizes and counts.
RunRecord run_replicate(const ExperimentConfig& config, std::size_t n, std::size_t rep);

/// All replicates, ordered by (grid position, replicate). The result does not
/// depend on config.workers.
std::vector<RunRecord> run_experiment(const ExperimentConfig& config);

struct MethodSummary {
  CliqueMethod method;
  std::size_t count = 0;
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
};

struct SizeSummary {
  std::size_t n = 0;
  std::size_t replicates = 0;
  std::vector<MethodSummary> methods;
  std::optional<double> ratio_ft_gr;
  std::optional<double> ratio_qt_gr;
  std::optional<double> ratio_degree_gr;  // degree_greedy / greedy
  std::optional<double> p_omega2;
  std::optional<double> p_omega3;
  std::optional<double> p_omega_ge4;
  double median_edges = 0.0;
  std::optional<double> mean_x3;
  std::vector<Prediction> predictions;
};

struct Report {
  std::vector<SizeSummary> rows;
  std::optional<ScalingFit> greedy_fit;  // median |K_gr| against n
};

/// Per-n medians and quartiles, per-replicate size ratios (their median),
/// omega frequencies from the exact oracle, and the theory side by side.
Report summarize(const std::vector<RunRecord>& records, const ModelParams& model);

void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records);
void write_timings_csv(std::ostream& out, const std::vector<RunRecord>& records);
void write_summary_csv(std::ostream& out, const Report& report);
std::string summary_json(const Report& report, const ExperimentConfig& config);

/// Runs the experiment and writes records.csv, timings.csv, summary.csv and
/// summary.json under config.output_path (when set).
Report run_and_report(const ExperimentConfig& config, std::vector<RunRecord>* records_out = nullptr);

}  // namespace plclique
