#include "plclique/experiments.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "plclique/errors.hpp"
#include "plclique/weights.hpp"

namespace plclique {
namespace {

constexpr std::array<CliqueMethod, kMethodCount> kAllMethods{
    CliqueMethod::greedy,        CliqueMethod::quasi_top,        CliqueMethod::full_top,
    CliqueMethod::exact,         CliqueMethod::degree_greedy,    CliqueMethod::degree_quasi_top,
    CliqueMethod::degree_full_top};

CliqueMethod resolve(CliqueMethod m, OrderKind order) {
  if (order == OrderKind::weight) return m;
  switch (m) {
    case CliqueMethod::greedy: return CliqueMethod::degree_greedy;
    case CliqueMethod::quasi_top: return CliqueMethod::degree_quasi_top;
    case CliqueMethod::full_top: return CliqueMethod::degree_full_top;
    default: return m;
  }
}

WeightVector make_weights(const ExperimentConfig& config, std::size_t n, Seed seed) {
  const auto& m = config.model;
  switch (config.weight_mode) {
    case WeightMode::deterministic:
      return deterministic_weights(n, m.a, m.alpha);
    case WeightMode::poisson_count:
      return sample_iid_pareto(sample_poisson_vertex_count(static_cast<double>(n), seed),
                               WeightParams::pareto(m.alpha, m.a), seed);
    case WeightMode::iid:
      break;
  }
  return sample_iid_pareto(n, WeightParams::pareto(m.alpha, m.a), seed);
}

std::ofstream open_report(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  return out;
}

void close_report(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError(path.string(), "write failed");
}

template <typename T>
std::string optional_cell(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

}  // namespace

bool RunRecord::operator==(const RunRecord& o) const {
  return n_nominal == o.n_nominal && n == o.n && replicate == o.replicate && seed == o.seed &&
         sizes == o.sizes && exact_budget_exceeded == o.exact_budget_exceeded && x3 == o.x3 &&
         x4 == o.x4 && edge_count == o.edge_count;
}

void check_chain(const RunRecord& r) {
  auto check_family = [&](CliqueMethod ft, CliqueMethod qt, CliqueMethod gr) {
    const auto a = r.size(ft), b = r.size(qt), c = r.size(gr), w = r.size(CliqueMethod::exact);
    auto le = [](const std::optional<std::size_t>& x, const std::optional<std::size_t>& y) {
      return !x || !y || *x <= *y;
    };
    if (!le(a, b) || !le(b, c) || !le(a, c) || !le(c, w) || !le(b, w) || !le(a, w))
      throw std::logic_error("clique size chain violated at n=" + std::to_string(r.n) +
                             ", replicate " + std::to_string(r.replicate));
  };
  check_family(CliqueMethod::full_top, CliqueMethod::quasi_top, CliqueMethod::greedy);
  check_family(CliqueMethod::degree_full_top, CliqueMethod::degree_quasi_top, CliqueMethod::degree_greedy);
}

Seed replicate_seed(Seed master, std::size_t n, std::size_t rep) noexcept {
  return derive_seed(master, Stream::replicate, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(rep)});
}

RunRecord run_replicate(const ExperimentConfig& config, std::size_t n, std::size_t rep) {
  const auto started = std::chrono::steady_clock::now();
  RunRecord record;
  record.n_nominal = n;
  record.replicate = rep;
  record.seed = replicate_seed(config.master_seed, n, rep);

  const Graph g = sample_graph(make_weights(config, n, record.seed), config.model, record.seed, config.sampler);
  record.n = g.num_vertices();
  record.edge_count = g.num_edges();

  std::optional<std::vector<VertexId>> by_weight, by_degree;
  for (CliqueMethod requested : config.algorithms) {
    const CliqueMethod m = resolve(requested, config.order);
    if (record.size(m)) continue;
    switch (m) {
      case CliqueMethod::exact:
        if (record.n <= config.exact_oracle_max_n) {
          if (auto res = try_max_clique_exact(g, config.exact_budget))
            record.set_size(m, res->size());
          else
            record.exact_budget_exceeded = true;
        }
        break;
      case CliqueMethod::greedy:
      case CliqueMethod::quasi_top:
      case CliqueMethod::full_top: {
        if (!by_weight) by_weight = weight_order(g);
        const auto res = m == CliqueMethod::greedy      ? greedy_clique(g, *by_weight)
                         : m == CliqueMethod::quasi_top ? quasi_top_clique(g, *by_weight)
                                                        : full_top_clique(g, *by_weight);
        record.set_size(m, res.size());
        break;
      }
      case CliqueMethod::degree_greedy:
      case CliqueMethod::degree_quasi_top:
      case CliqueMethod::degree_full_top: {
        if (!by_degree) by_degree = degree_order(g);
        const auto k = OrderKind::degree;
        const auto res = m == CliqueMethod::degree_greedy      ? greedy_clique(g, *by_degree, k)
                         : m == CliqueMethod::degree_quasi_top ? quasi_top_clique(g, *by_degree, k)
                                                               : full_top_clique(g, *by_degree, k);
        record.set_size(m, res.size());
        break;
      }
    }
  }
  if (record.n <= config.subgraph_counts_max_n) {
    record.x3 = count_triangles(g);
    record.x4 = count_k4(g);
  }
  check_chain(record);
  record.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return record;
}

std::vector<RunRecord> run_experiment(const ExperimentConfig& config) {
  config.validate();
  std::vector<std::pair<std::size_t, std::size_t>> work;
  for (std::size_t n : config.n_grid)
    for (std::size_t rep = 0; rep < config.replications; ++rep) work.emplace_back(n, rep);

  std::vector<RunRecord> records(work.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < work.size();) {
      try {
        records[i] = run_replicate(config, work[i].first, work[i].second);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = work.size();
      }
    }
  };
  const std::size_t threads = std::min(config.workers, work.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

Report summarize(const std::vector<RunRecord>& records, const ModelParams& model) {
  detail::require(!records.empty(), "nothing to summarize");
  std::vector<std::size_t> order;
  std::map<std::size_t, std::vector<const RunRecord*>> groups;
  for (const auto& r : records) {
    check_chain(r);
    if (!groups.count(r.n_nominal)) order.push_back(r.n_nominal);
    groups[r.n_nominal].push_back(&r);
  }

  auto median_ratio = [](const std::vector<const RunRecord*>& rs, CliqueMethod num,
                         CliqueMethod den) -> std::optional<double> {
    std::vector<double> ratios;
    for (const auto* r : rs)
      if (r->size(num) && r->size(den) && *r->size(den) > 0)
        ratios.push_back(static_cast<double>(*r->size(num)) / static_cast<double>(*r->size(den)));
    if (ratios.empty()) return std::nullopt;
    return median(std::move(ratios));
  };

  Report report;
  for (std::size_t n : order) {
    const auto& rs = groups[n];
    SizeSummary row;
    row.n = n;
    row.replicates = rs.size();
    for (CliqueMethod m : kAllMethods) {
      std::vector<double> values;
      for (const auto* r : rs)
        if (r->size(m)) values.push_back(static_cast<double>(*r->size(m)));
      if (values.empty()) continue;
      row.methods.push_back({m, values.size(), quantile(values, 0.5), quantile(values, 0.25),
                             quantile(values, 0.75)});
    }
    row.ratio_ft_gr = median_ratio(rs, CliqueMethod::full_top, CliqueMethod::greedy);
    row.ratio_qt_gr = median_ratio(rs, CliqueMethod::quasi_top, CliqueMethod::greedy);
    row.ratio_degree_gr = median_ratio(rs, CliqueMethod::degree_greedy, CliqueMethod::greedy);

    std::vector<double> edges;
    std::size_t exact_runs = 0, omega2 = 0, omega3 = 0, omega4 = 0;
    double x3_total = 0.0;
    std::size_t x3_runs = 0;
    for (const auto* r : rs) {
      edges.push_back(static_cast<double>(r->edge_count));
      if (auto w = r->size(CliqueMethod::exact)) {
        ++exact_runs;
        omega2 += *w == 2;
        omega3 += *w == 3;
        omega4 += *w >= 4;
      }
      if (r->x3) x3_total += static_cast<double>(*r->x3), ++x3_runs;
    }
    row.median_edges = median(edges);
    if (x3_runs) row.mean_x3 = x3_total / static_cast<double>(x3_runs);
    if (model.alpha > 2.0 && exact_runs) {
      const double runs = static_cast<double>(exact_runs);
      row.p_omega2 = omega2 / runs;
      row.p_omega3 = omega3 / runs;
      row.p_omega_ge4 = omega4 / runs;
    }
    row.predictions = applicable_predictions(static_cast<double>(n), model);
    report.rows.push_back(std::move(row));
  }

  std::vector<std::pair<double, double>> points;
  for (const auto& row : report.rows)
    for (const auto& ms : row.methods)
      if (ms.method == CliqueMethod::greedy && ms.median > 0.0)
        points.emplace_back(static_cast<double>(row.n), ms.median);
  if (points.size() >= 3) report.greedy_fit = fit_loglog_slope(points);
  return report;
}

void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << "n_nominal,n,replicate,seed";
  for (CliqueMethod m : kAllMethods) out << ',' << to_string(m);
  out << ",exact_budget_exceeded,x3,x4,edge_count\n";
  for (const auto& r : records) {
    out << r.n_nominal << ',' << r.n << ',' << r.replicate << ',' << r.seed;
    for (CliqueMethod m : kAllMethods) out << ',' << optional_cell(r.size(m));
    out << ',' << (r.exact_budget_exceeded ? 1 : 0) << ',' << optional_cell(r.x3) << ','
        << optional_cell(r.x4) << ',' << r.edge_count << '\n';
  }
}

void write_timings_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << "n_nominal,replicate,wall_time_s\n";
  for (const auto& r : records) out << r.n_nominal << ',' << r.replicate << ',' << r.wall_time << '\n';
}

void write_summary_csv(std::ostream& out, const Report& report) {
  out << "n,method,count,median,q1,q3,predicted_omega\n";
  for (const auto& row : report.rows) {
    std::string predicted;
    for (const auto& p : row.predictions)
      if (p.kind == "omega_curve") predicted = std::to_string(p.values.front());
    for (const auto& ms : row.methods)
      out << row.n << ',' << to_string(ms.method) << ',' << ms.count << ',' << ms.median << ','
          << ms.q1 << ',' << ms.q3 << ',' << predicted << '\n';
  }
}

std::string summary_json(const Report& report, const ExperimentConfig& config) {
  using nlohmann::json;
  auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  json doc;
  doc["model"] = {{"a", config.model.a},
                  {"b", config.model.b},
                  {"alpha", config.model.alpha},
                  {"kernel", to_string(config.model.kernel)},
                  {"normalization", to_string(config.model.normalization)}};
  doc["weight_mode"] = to_string(config.weight_mode);
  doc["replications"] = config.replications;
  doc["master_seed"] = config.master_seed;
  doc["n_grid"] = config.n_grid;
  json rows = json::array();
  for (const auto& row : report.rows) {
    json r;
    r["n"] = row.n;
    r["replicates"] = row.replicates;
    json methods = json::object();
    for (const auto& ms : row.methods)
      methods[std::string(to_string(ms.method))] = {
          {"count", ms.count}, {"median", ms.median}, {"q1", ms.q1}, {"q3", ms.q3}};
    r["methods"] = methods;
    r["ratio_ft_gr"] = opt(row.ratio_ft_gr);
    r["ratio_qt_gr"] = opt(row.ratio_qt_gr);
    r["ratio_degree_gr"] = opt(row.ratio_degree_gr);
    r["p_omega2"] = opt(row.p_omega2);
    r["p_omega3"] = opt(row.p_omega3);
    r["p_omega_ge4"] = opt(row.p_omega_ge4);
    r["median_edges"] = row.median_edges;
    r["mean_x3"] = opt(row.mean_x3);
    json preds = json::array();
    for (const auto& p : row.predictions)
      preds.push_back({{"kind", p.kind}, {"values", p.values}, {"note", p.note}});
    r["predictions"] = preds;
    rows.push_back(r);
  }
  doc["rows"] = rows;
  if (report.greedy_fit) {
    const auto& f = *report.greedy_fit;
    doc["greedy_fit"] = {{"slope", f.slope},
                         {"intercept", f.intercept},
                         {"slope_stderr", f.slope_stderr},
                         {"r_squared", f.r_squared},
                         {"points_used", f.points_used}};
  } else {
    doc["greedy_fit"] = nullptr;
  }
  return doc.dump(2);
}

Report run_and_report(const ExperimentConfig& config, std::vector<RunRecord>* records_out) {
  auto records = run_experiment(config);
  Report report = summarize(records, config.model);
  if (!config.output_path.empty()) {
    const auto& dir = config.output_path;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError(dir.string(), ec.message());
    {
      auto path = dir / "records.csv";
      auto out = open_report(path);
      write_records_csv(out, records);
      close_report(out, path);
    }
    {
      auto path = dir / "timings.csv";
      auto out = open_report(path);
      write_timings_csv(out, records);
      close_report(out, path);
    }
    {
      auto path = dir / "summary.csv";
      auto out = open_report(path);
      write_summary_csv(out, report);
      close_report(out, path);
    }
    {
      auto path = dir / "summary.json";
      auto out = open_report(path);
      out << summary_json(report, config) << '\n';
      close_report(out, path);
    }
  }
  if (records_out) *records_out = std::move(records);
  return report;
}

}  // namespace plclique
