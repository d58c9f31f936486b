#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "antidim/anonymity.hpp"
#include "antidim/closure_search.hpp"
#include "antidim/edge_list_io.hpp"
#include "antidim/generators.hpp"

namespace antidim {

inline constexpr int kReportFormatVersion = 1;

struct ExperimentConfig {
  std::vector<std::size_t> m_values{1, 2, 3};
  std::vector<std::size_t> k_values{1, 2, 3, 4, 5, 6, 7, 8};
  std::size_t graphs_per_cell = 300;
  std::size_t n_max = 40;
  std::uint64_t rng_seed = 1;
  /// Adds one cell per m in which k is set to each graph's order.
  bool order_cell = false;
  SearchLimits limits{};
  std::size_t workers = 1;
  /// Timings make the report non-reproducible, so they are off by default.
  bool timing = false;

  void validate() const {
    if (m_values.empty() || (k_values.empty() && !order_cell)) throw Error("empty experiment grid");
    if (graphs_per_cell == 0) throw Error("graphs_per_cell must be positive");
    for (auto m : m_values)
      if (m < 1) throw Error("m must be >= 1");
    std::size_t k_top = order_cell ? 1 : 0;
    for (auto k : k_values) {
      if (k < 1) throw Error("k must be >= 1");
      k_top = std::max(k_top, k);
    }
    if (n_max < k_top + 2) throw Error("n_max must be >= max(k) + 2");
  }
};

struct CellResult {
  std::size_t m = 0;
  std::optional<std::size_t> k;  // empty: k equals the order of each graph
  std::string algorithm;         // "set" or "basis"
  std::size_t found = 0;
  std::size_t absent = 0;
  std::size_t unknown = 0;
  double total_ms = 0.0;

  std::size_t total() const { return found + absent + unknown; }
  double success_rate() const {
    return total() == 0 ? 0.0 : static_cast<double>(found + absent) / static_cast<double>(total());
  }
  double mean_ms() const { return total() == 0 ? 0.0 : total_ms / static_cast<double>(total()); }
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<CellResult> cells;
  int format_version = kReportFormatVersion;

  const CellResult* find(std::size_t m, std::optional<std::size_t> k, std::string_view algorithm) const {
    for (const auto& c : cells)
      if (c.m == m && c.k == k && c.algorithm == algorithm) return &c;
    return nullptr;
  }
};

/// Seed of the i-th graph drawn for threshold k. Independent of m, so every m
/// sees the same graphs.
inline std::uint64_t study_graph_seed(std::uint64_t base, std::uint64_t k, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32),
                    static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (std::uint64_t{out[0]} << 32) | out[1];
}

/// Runs both searches for every (m, k) cell on random graphs from
/// `random_graph`. Unknown verdicts (including cap or budget hits) count as
/// failures.
inline ExperimentReport run_success_rate_study(const ExperimentConfig& cfg) {
  cfg.validate();
  struct Job {
    std::optional<std::size_t> k;
    std::size_t index;
  };
  std::vector<Job> jobs;
  for (auto k : cfg.k_values)
    for (std::size_t i = 0; i < cfg.graphs_per_cell; ++i) jobs.push_back({k, i});
  if (cfg.order_cell)
    for (std::size_t i = 0; i < cfg.graphs_per_cell; ++i) jobs.push_back({std::nullopt, i});

  // outcome[job][m][alg] and time
  struct Outcome {
    Verdict verdict;
    double ms;
  };
  const std::size_t per_job = cfg.m_values.size() * 2;
  std::vector<Outcome> outcomes(jobs.size() * per_job);

  auto run_job = [&](std::size_t j) {
    const auto& job = jobs[j];
    const std::uint64_t key = job.k ? *job.k : 0;
    const auto g = random_graph(study_graph_seed(cfg.rng_seed, key, job.index), job.k.value_or(1), cfg.n_max);
    const auto dm = all_pairs_distances(g);
    const std::size_t k = job.k.value_or(g.order());
    for (std::size_t mi = 0; mi < cfg.m_values.size(); ++mi) {
      for (int alg = 0; alg < 2; ++alg) {
        const auto t0 = std::chrono::steady_clock::now();
        const Verdict v = alg == 0 ? find_antiresolving_set(dm, k, cfg.m_values[mi], cfg.limits).verdict
                                   : find_antiresolving_basis(dm, k, cfg.m_values[mi], cfg.limits).verdict;
        const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
        outcomes[j * per_job + mi * 2 + static_cast<std::size_t>(alg)] = {v, dt.count()};
      }
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(cfg.workers, jobs.size()));
  if (workers == 1) {
    for (std::size_t j = 0; j < jobs.size(); ++j) run_job(j);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t j = next++; j < jobs.size(); j = next++) run_job(j);
      });
    for (auto& t : pool) t.join();
  }

  ExperimentReport report{cfg, {}, kReportFormatVersion};
  std::vector<std::optional<std::size_t>> ks(cfg.k_values.begin(), cfg.k_values.end());
  if (cfg.order_cell) ks.push_back(std::nullopt);
  for (std::size_t mi = 0; mi < cfg.m_values.size(); ++mi) {
    for (const auto& k : ks) {
      for (int alg = 0; alg < 2; ++alg) {
        CellResult cell{cfg.m_values[mi], k, alg == 0 ? "set" : "basis", 0, 0, 0, 0.0};
        for (std::size_t j = 0; j < jobs.size(); ++j) {
          if (jobs[j].k != k) continue;
          const auto& o = outcomes[j * per_job + mi * 2 + static_cast<std::size_t>(alg)];
          if (o.verdict == Verdict::Found) ++cell.found;
          else if (o.verdict == Verdict::Absent) ++cell.absent;
          else ++cell.unknown;
          cell.total_ms += o.ms;
        }
        report.cells.push_back(std::move(cell));
      }
    }
  }
  return report;
}

namespace detail {
inline std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}
}  // namespace detail

/// CSV with header `m,k,algorithm,found,absent,unknown,success_rate,mean_ms`.
/// The order cell prints k as `n`; mean_ms is `NA` unless timing was enabled.
inline std::string to_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "m,k,algorithm,found,absent,unknown,success_rate,mean_ms\n";
  for (const auto& c : report.cells) {
    out << c.m << ',' << (c.k ? std::to_string(*c.k) : std::string("n")) << ',' << c.algorithm << ','
        << c.found << ',' << c.absent << ',' << c.unknown << ',' << detail::fixed(c.success_rate(), 4) << ','
        << (report.config.timing ? detail::fixed(c.mean_ms(), 3) : std::string("NA")) << '\n';
  }
  return out.str();
}

inline nlohmann::json to_json(const ExperimentReport& report) {
  const auto& cfg = report.config;
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : report.cells) {
    nlohmann::json cell{{"m", c.m},
                        {"k", c.k ? nlohmann::json(*c.k) : nlohmann::json("n")},
                        {"algorithm", c.algorithm},
                        {"found", c.found},
                        {"absent", c.absent},
                        {"unknown", c.unknown},
                        {"success_rate", std::stod(detail::fixed(c.success_rate(), 4))}};
    cell["mean_ms"] = cfg.timing ? nlohmann::json(std::stod(detail::fixed(c.mean_ms(), 3))) : nlohmann::json();
    cells.push_back(std::move(cell));
  }
  return {{"format_version", report.format_version},
          {"config",
           {{"m_values", cfg.m_values},
            {"k_values", cfg.k_values},
            {"graphs_per_cell", cfg.graphs_per_cell},
            {"n_max", cfg.n_max},
            {"rng_seed", cfg.rng_seed},
            {"order_cell", cfg.order_cell},
            {"max_frontier", cfg.limits.max_frontier}}},
          {"cells", std::move(cells)}};
}

// ---------------------------------------------------------------------------
// Real-graph audit
// ---------------------------------------------------------------------------

struct AuditRecord {
  std::size_t n = 0;
  std::size_t m = 0;
  std::string source;
  AnonymityResult result;
  std::vector<std::string> witness_labels;
  double elapsed_ms = 0.0;
  bool component_reduced = false;
  std::string method;  // "single_vertex_scan", "bounded_exact" or "search"
};

/// Audits an already-loaded graph: the largest connected component is kept,
/// a singleton 1-antiresolving vertex settles k = 1 immediately, otherwise
/// the exact size-bounded enumeration runs when it fits the oracle limits and
/// the closure search with parameter `m` runs when it does not.
inline AuditRecord audit_graph(const Graph& input, std::string source, std::size_t ell, std::size_t m,
                               const SearchLimits& limits = {}, const OracleLimits& oracle = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  auto [g, reduced] = largest_component(input);
  if (ell < 1 || ell >= g.order()) throw Error("ell out of range");
  AuditRecord rec;
  rec.n = g.order();
  rec.m = g.size();
  rec.source = std::move(source);
  rec.component_reduced = reduced;
  if (auto v = single_vertex_scan(g)) {
    rec.method = "single_vertex_scan";
    rec.result.ell = ell;
    rec.result.k = 1;
    rec.result.confidence = Confidence::Certified;
    rec.result.witness = VertexSet(g.order(), {*v});
    rec.result.probe_log.push_back({1, "scan:found", 1, true, true});
  } else if (g.order() <= 63 &&
             (g.order() <= oracle.max_order || bounded_subset_count(g.order(), ell) <= oracle.max_subsets)) {
    rec.method = "bounded_exact";
    EvaluationMode mode = EvaluationMode::oracle();
    mode.oracle_limits = oracle;
    rec.result = evaluate(g, ell, mode);
  } else {
    rec.method = "search";
    EvaluationMode mode = EvaluationMode::search(m);
    mode.search_limits = limits;
    rec.result = evaluate(g, ell, mode);
  }
  rec.witness_labels = g.labels_of(rec.result.witness.universe() == g.order() ? rec.result.witness
                                                                               : VertexSet(g.order()));
  const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
  rec.elapsed_ms = dt.count();
  return rec;
}

inline AuditRecord audit_social_graph(const std::string& path, std::size_t ell, std::size_t m,
                                      const SearchLimits& limits = {}, const OracleLimits& oracle = {}) {
  return audit_graph(read_edge_list_file(path), path, ell, m, limits, oracle);
}

inline nlohmann::json to_json(const AuditRecord& rec) {
  return {{"graph", {{"n", rec.n}, {"m", rec.m}, {"source", rec.source}}},
          {"ell", rec.result.ell},
          {"k", rec.result.k ? nlohmann::json(*rec.result.k) : nlohmann::json()},
          {"confidence", std::string(to_string(rec.result.confidence))},
          {"witness", rec.witness_labels},
          {"elapsed_ms", std::stod(detail::fixed(rec.elapsed_ms, 3))},
          {"component_reduced", rec.component_reduced},
          {"method", rec.method}};
}

}  // namespace antidim
