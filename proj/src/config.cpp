#include <fstream>
#include <set>
#include <sstream>

#include <toml.hpp>

#include "plclique/errors.hpp"
#include "plclique/experiments.hpp"

namespace plclique {
namespace {

void reject_unknown_keys(const toml::table& table, const std::set<std::string>& known,
                         const std::string& where) {
  for (const auto& [key, node] : table)
    if (!known.count(std::string(key.str())))
      throw ValidationError("unknown key '" + std::string(key.str()) + "' in " + where);
}

double get_double(const toml::table& t, const char* key, double fallback) {
  const auto* node = t.get(key);
  if (!node) return fallback;
  if (auto v = node->value<double>()) return *v;
  throw ValidationError(std::string("'") + key + "' must be a number");
}

std::int64_t get_int(const toml::table& t, const char* key, std::int64_t fallback) {
  const auto* node = t.get(key);
  if (!node) return fallback;
  if (!node->is_integer()) throw ValidationError(std::string("'") + key + "' must be an integer");
  return *node->value<std::int64_t>();
}

std::size_t get_count(const toml::table& t, const char* key, std::size_t fallback) {
  const auto v = get_int(t, key, static_cast<std::int64_t>(fallback));
  if (v < 0) throw ValidationError(std::string("'") + key + "' must be non-negative");
  return static_cast<std::size_t>(v);
}

std::optional<std::string> get_string(const toml::table& t, const char* key) {
  const auto* node = t.get(key);
  if (!node) return std::nullopt;
  if (auto v = node->value<std::string>()) return *v;
  throw ValidationError(std::string("'") + key + "' must be a string");
}

const toml::array* get_array(const toml::table& t, const char* key) {
  const auto* node = t.get(key);
  if (!node) return nullptr;
  if (!node->is_array()) throw ValidationError(std::string("'") + key + "' must be an array");
  return node->as_array();
}

}  // namespace

std::string_view to_string(WeightMode m) noexcept {
  switch (m) {
    case WeightMode::iid: return "iid";
    case WeightMode::deterministic: return "deterministic";
    case WeightMode::poisson_count: return "poisson-count";
  }
  return "?";
}

WeightMode parse_weight_mode(std::string_view s) {
  if (s == "iid") return WeightMode::iid;
  if (s == "deterministic") return WeightMode::deterministic;
  if (s == "poisson-count") return WeightMode::poisson_count;
  throw ValidationError("unknown weight mode '" + std::string(s) + "'");
}

void ExperimentConfig::validate() const {
  model.validate();
  detail::require(!n_grid.empty(), "n_grid must not be empty");
  for (std::size_t i = 1; i < n_grid.size(); ++i)
    detail::require(n_grid[i - 1] < n_grid[i], "n_grid must be strictly ascending");
  detail::require(replications >= 1, "replications must be at least 1");
  detail::require(!algorithms.empty(), "at least one algorithm is required");
  detail::require(workers >= 1, "workers must be at least 1");
  detail::require(sampler.lambda_high > 0.0 && sampler.lambda_high < 1.0, "lambda_high must lie in (0, 1)");
  detail::require(sampler.max_expected_edges > 0.0, "max_expected_edges must be positive");
}

ExperimentConfig parse_config(std::string_view toml_text) {
  toml::table root;
  try {
    root = toml::parse(toml_text);
  } catch (const toml::parse_error& e) {
    std::ostringstream msg;
    msg << "TOML parse error: " << e.description() << " at line " << e.source().begin.line;
    throw ValidationError(msg.str());
  }
  reject_unknown_keys(root, {"model", "experiment", "sampler"}, "top level");

  ExperimentConfig cfg;
  if (const auto* model = root["model"].as_table()) {
    reject_unknown_keys(*model, {"a", "b", "alpha", "kernel", "normalization"}, "[model]");
    cfg.model.a = get_double(*model, "a", cfg.model.a);
    cfg.model.b = get_double(*model, "b", cfg.model.b);
    cfg.model.alpha = get_double(*model, "alpha", cfg.model.alpha);
    if (auto k = get_string(*model, "kernel")) cfg.model.kernel = parse_kernel(*k);
    if (auto k = get_string(*model, "normalization")) cfg.model.normalization = parse_normalization(*k);
  }
  if (const auto* exp = root["experiment"].as_table()) {
    reject_unknown_keys(*exp,
                        {"weight_mode", "n_grid", "replications", "master_seed", "algorithms", "order",
                         "exact_oracle_max_n", "exact_budget", "subgraph_counts_max_n", "output_path",
                         "workers"},
                        "[experiment]");
    if (auto s = get_string(*exp, "weight_mode")) cfg.weight_mode = parse_weight_mode(*s);
    if (const auto* grid = get_array(*exp, "n_grid")) {
      for (const auto& item : *grid) {
        auto v = item.value<std::int64_t>();
        if (!item.is_integer() || !v || *v < 1) throw ValidationError("n_grid entries must be positive integers");
        cfg.n_grid.push_back(static_cast<std::size_t>(*v));
      }
    }
    cfg.replications = get_count(*exp, "replications", cfg.replications);
    cfg.master_seed = static_cast<Seed>(get_count(*exp, "master_seed", 0));
    if (const auto* algs = get_array(*exp, "algorithms")) {
      cfg.algorithms.clear();
      for (const auto& item : *algs) {
        auto s = item.value<std::string>();
        if (!s) throw ValidationError("algorithms entries must be strings");
        cfg.algorithms.push_back(parse_clique_method(*s));
      }
    }
    if (auto s = get_string(*exp, "order")) cfg.order = parse_order_kind(*s);
    cfg.exact_oracle_max_n = get_count(*exp, "exact_oracle_max_n", cfg.exact_oracle_max_n);
    cfg.exact_budget = get_count(*exp, "exact_budget", cfg.exact_budget);
    cfg.subgraph_counts_max_n = get_count(*exp, "subgraph_counts_max_n", cfg.subgraph_counts_max_n);
    if (auto s = get_string(*exp, "output_path")) cfg.output_path = *s;
    cfg.workers = get_count(*exp, "workers", cfg.workers);
  }
  if (const auto* smp = root["sampler"].as_table()) {
    reject_unknown_keys(*smp, {"max_expected_edges", "lambda_high"}, "[sampler]");
    cfg.sampler.max_expected_edges = get_double(*smp, "max_expected_edges", cfg.sampler.max_expected_edges);
    cfg.sampler.lambda_high = get_double(*smp, "lambda_high", cfg.sampler.lambda_high);
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path.string(), "cannot open for reading");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_config(buffer.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

}  // namespace plclique
