// antidim: command-line front end.
//
// Exit codes: 0 definite answer, 2 unknown or inconclusive, 1 error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "antidim/antidim.hpp"

using namespace antidim;
using nlohmann::json;

namespace {

constexpr int kExitDefinite = 0;
constexpr int kExitError = 1;
constexpr int kExitUnknown = 2;

struct InputOptions {
  std::string input;
  std::string gen;
  std::optional<std::uint64_t> seed;
};

struct OutputOptions {
  std::string format = "human";
};

struct SearchOptions {
  std::string mode = "oracle";
  std::size_t m = 2;
  std::size_t max_frontier = SearchLimits{}.max_frontier;
  std::optional<long> time_budget_ms;
  std::size_t max_order = OracleLimits{}.max_order;

  SearchLimits limits() const {
    SearchLimits l;
    l.max_frontier = max_frontier;
    if (time_budget_ms) l.time_budget = std::chrono::milliseconds(*time_budget_ms);
    return l;
  }
  OracleLimits oracle() const {
    OracleLimits o;
    o.max_order = max_order;
    return o;
  }
};

void add_input(CLI::App* cmd, InputOptions& in) {
  auto* file = cmd->add_option("--input", in.input, "Edge-list file");
  auto* gen = cmd->add_option("--gen", in.gen, "Generator spec, e.g. cycle:6 or family_F:r=3,dx=2,dy=2");
  file->excludes(gen);
  gen->excludes(file);
  cmd->add_option("--seed", in.seed, "Seed for random generator specs");
}

void add_output(CLI::App* cmd, OutputOptions& out, const std::string& default_format = "human") {
  out.format = default_format;
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "human"}))
      ->capture_default_str();
}

void add_search(CLI::App* cmd, SearchOptions& s, bool with_mode) {
  if (with_mode)
    cmd->add_option("--mode", s.mode, "oracle (exhaustive) or search (closure search)")
        ->check(CLI::IsMember({"oracle", "search"}))
        ->capture_default_str();
  cmd->add_option("--m", s.m, "Search depth")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--max-frontier", s.max_frontier, "Largest search level")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--time-budget-ms", s.time_budget_ms, "Wall-clock budget per search")->check(CLI::PositiveNumber);
  cmd->add_option("--max-order", s.max_order, "Largest graph the oracle accepts")->capture_default_str();
}

struct LoadedGraph {
  Graph graph;
  std::string source;
};

LoadedGraph load(const InputOptions& in) {
  if (in.input.empty() == in.gen.empty()) throw Error("exactly one of --input or --gen is required");
  if (!in.input.empty()) return {read_edge_list_file(in.input), in.input};
  auto spec = parse_graph_spec(in.gen);
  if (in.seed && spec.family == Family::random) spec.params.at(0) = *in.seed;
  return {generate(spec), to_string(spec)};
}

json labels(const Graph& g, const VertexSet& s) { return g.labels_of(s); }

json graph_json(const LoadedGraph& lg) {
  return {{"n", lg.graph.order()}, {"m", lg.graph.size()}, {"source", lg.source}};
}

std::string join_labels(const json& arr) {
  std::string out = "{";
  for (std::size_t i = 0; i < arr.size(); ++i) out += (i ? ", " : "") + arr[i].get<std::string>();
  return out + "}";
}

std::string csv_field(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + csv_field(v[i]);
    return out;
  }
  return v.dump();
}

// Human output is derived from the JSON document only.
std::string render_human(const json& doc) {
  std::ostringstream out;
  const auto& cmd = doc["command"];
  const auto graph = doc.contains("graph") ? doc["graph"] : json();
  if (!graph.is_null())
    out << "graph: " << graph["source"].get<std::string>() << " (n=" << graph["n"] << ", m=" << graph["m"] << ")\n";
  if (cmd == "adim") {
    const auto k = doc["k"].get<std::size_t>();
    if (doc["value"].is_null()) {
      if (doc["status"] == "none")
        out << "no " << k << "-antiresolving set\n";
      else
        out << "adim_" << k << ": unknown\n";
    } else {
      out << "adim_" << k << " " << (doc["status"] == "upper_bound" ? "<= " : "= ") << doc["value"] << "\n";
      out << "witness: " << join_labels(doc["witness"]) << "\n";
    }
    out << "confidence: " << doc["confidence"].get<std::string>() << "\n";
  } else if (cmd == "anonymity") {
    if (doc["k"].is_null())
      out << "no k found with adim_k <= " << doc["ell"] << "\n";
    else
      out << "(" << doc["k"] << "," << doc["ell"] << ")-anonymity\nwitness: " << join_labels(doc["witness"]) << "\n";
    out << "confidence: " << doc["confidence"].get<std::string>() << "\n";
    for (const auto& p : doc["probe_log"])
      out << "  k=" << p["k"] << " " << p["verdict"].get<std::string>()
          << (p["set_size"].is_null() ? "" : " size=" + p["set_size"].dump()) << "\n";
  } else if (cmd == "spectrum") {
    for (const auto& row : doc["per_k"])
      out << "k=" << row["k"] << " adim=" << row["adim"] << " basis=" << join_labels(row["basis"]) << "\n";
    out << "antidimensional k: " << doc["antidimensional_k"] << "\n";
  } else if (cmd == "experiment") {
    out << "m  k   algorithm  found  absent  unknown  success\n";
    for (const auto& c : doc["cells"]) {
      char line[96];
      std::snprintf(line, sizeof line, "%-2s %-3s %-10s %5s  %6s  %7s  %7.2f%%\n", c["m"].dump().c_str(),
                    csv_field(c["k"]).c_str(), c["algorithm"].get<std::string>().c_str(), c["found"].dump().c_str(),
                    c["absent"].dump().c_str(), c["unknown"].dump().c_str(), 100.0 * c["success_rate"].get<double>());
      out << line;
    }
  } else if (cmd == "audit") {
    out << "ell=" << doc["ell"] << " k=" << (doc["k"].is_null() ? "none" : doc["k"].dump())
        << " confidence=" << doc["confidence"].get<std::string>() << " method=" << doc["method"].get<std::string>()
        << "\nwitness: " << join_labels(doc["witness"]) << "\ncomponent reduced: "
        << (doc["component_reduced"].get<bool>() ? "yes" : "no") << "\n";
  } else {
    out << doc.dump(2) << "\n";
  }
  return out.str();
}

void emit(const json& doc, const std::string& format, const std::vector<std::string>& csv_columns) {
  if (format == "json") {
    std::cout << doc.dump() << "\n";
  } else if (format == "csv") {
    for (std::size_t i = 0; i < csv_columns.size(); ++i) std::cout << (i ? "," : "") << csv_columns[i];
    std::cout << "\n";
    for (std::size_t i = 0; i < csv_columns.size(); ++i) {
      const auto& v = doc.contains(csv_columns[i]) ? doc[csv_columns[i]] : json();
      std::cout << (i ? "," : "") << csv_field(v);
    }
    std::cout << "\n";
  } else {
    std::cout << render_human(doc);
  }
}

// ---------------------------------------------------------------------------

int run_adim(const InputOptions& in, const OutputOptions& out, const SearchOptions& s, std::size_t k) {
  if (k < 1) throw Error("k must be >= 1");
  const auto lg = load(in);
  const auto dm = all_pairs_distances(lg.graph);
  json doc{{"command", "adim"}, {"graph", graph_json(lg)}, {"k", k}, {"mode", s.mode}};
  int code = kExitDefinite;
  if (s.mode == "oracle") {
    const auto r = brute_adim(dm, k, s.oracle());
    doc["status"] = r ? "exact" : "none";
    doc["value"] = r ? json(r->adim) : json();
    doc["witness"] = r ? labels(lg.graph, r->basis) : json::array();
    doc["confidence"] = "exact";
  } else {
    doc["m"] = s.m;
    const auto b = find_antiresolving_basis(dm, k, s.m, s.limits());
    if (b.verdict == Verdict::Found) {
      doc["status"] = "exact";
      doc["value"] = b.witness->size();
      doc["witness"] = labels(lg.graph, *b.witness);
      doc["confidence"] = "certified";
    } else if (b.verdict == Verdict::Absent) {
      doc["status"] = "none";
      doc["value"] = json();
      doc["witness"] = json::array();
      doc["confidence"] = "certified";
    } else {
      const auto a = find_antiresolving_set(dm, k, s.m, s.limits());
      if (a.verdict == Verdict::Found) {
        doc["status"] = "upper_bound";
        doc["value"] = a.witness->size();
        doc["witness"] = labels(lg.graph, *a.witness);
        doc["confidence"] = "upper_bound_only";
      } else {
        doc["status"] = "unknown";
        doc["value"] = json();
        doc["witness"] = json::array();
        doc["confidence"] = "inconclusive";
        if (!b.diagnostic.empty()) doc["diagnostic"] = b.diagnostic;
        code = kExitUnknown;
      }
    }
  }
  emit(doc, out.format, {"k", "mode", "status", "value", "confidence", "witness"});
  return code;
}

int run_anonymity(const InputOptions& in, const OutputOptions& out, const SearchOptions& s, std::size_t ell) {
  const auto lg = load(in);
  if (ell < 1 || ell >= lg.graph.order()) throw Error("ell out of range");
  EvaluationMode mode = s.mode == "oracle" ? EvaluationMode::oracle() : EvaluationMode::search(s.m);
  mode.search_limits = s.limits();
  mode.oracle_limits = s.oracle();
  if (s.mode == "oracle" && lg.graph.order() > mode.oracle_limits.max_order &&
      bounded_subset_count(lg.graph.order(), ell) > mode.oracle_limits.max_subsets)
    throw Error("oracle size limit");
  const auto r = evaluate(lg.graph, ell, mode);
  json log = json::array();
  for (const auto& p : r.probe_log)
    log.push_back({{"k", p.k},
                   {"verdict", p.verdict},
                   {"set_size", p.set_size ? json(*p.set_size) : json()},
                   {"qualifies", p.qualifies},
                   {"certain", p.certain}});
  json doc{{"command", "anonymity"},
           {"graph", graph_json(lg)},
           {"ell", ell},
           {"mode", s.mode},
           {"k", r.k ? json(*r.k) : json()},
           {"confidence", std::string(to_string(r.confidence))},
           {"witness", r.k ? labels(lg.graph, r.witness) : json::array()},
           {"probe_log", log}};
  emit(doc, out.format, {"ell", "k", "confidence", "witness"});
  return r.confidence == Confidence::Inconclusive ? kExitUnknown : kExitDefinite;
}

int run_spectrum(const InputOptions& in, const OutputOptions& out, const SearchOptions& s) {
  const auto lg = load(in);
  const auto sp = spectrum(lg.graph, s.oracle());
  json rows = json::array();
  for (const auto& [k, r] : sp.per_k) rows.push_back({{"k", k}, {"adim", r.adim}, {"basis", labels(lg.graph, r.basis)}});
  json doc{{"command", "spectrum"},
           {"graph", graph_json(lg)},
           {"per_k", rows},
           {"antidimensional_k", sp.antidimensional_k}};
  if (out.format == "csv") {
    std::cout << "k,adim,basis\n";
    for (const auto& row : rows) std::cout << row["k"] << "," << row["adim"] << "," << csv_field(row["basis"]) << "\n";
  } else {
    emit(doc, out.format, {});
  }
  return kExitDefinite;
}

// Parses `m=1,2` and `k=1..4,n` style cell selectors.
void parse_cells(const std::vector<std::string>& cells, ExperimentConfig& cfg) {
  for (const auto& cell : cells) {
    const auto eq = cell.find('=');
    if (eq == std::string::npos) throw Error("cell selector needs key=values: '" + cell + "'");
    const auto key = cell.substr(0, eq);
    std::vector<std::size_t> values;
    bool order = false;
    std::stringstream list(cell.substr(eq + 1));
    std::string item;
    while (std::getline(list, item, ',')) {
      if (item == "n" && key == "k") {
        order = true;
        continue;
      }
      const auto dots = item.find("..");
      auto number = [&](const std::string& text) {
        std::size_t pos = 0;
        const auto v = std::stoull(text, &pos);
        if (pos != text.size()) throw Error("bad number '" + text + "'");
        return static_cast<std::size_t>(v);
      };
      try {
        if (dots == std::string::npos) {
          values.push_back(number(item));
        } else {
          const auto lo = number(item.substr(0, dots));
          const auto hi = number(item.substr(dots + 2));
          if (lo > hi) throw Error("empty range '" + item + "'");
          for (auto v = lo; v <= hi; ++v) values.push_back(v);
        }
      } catch (const std::logic_error&) {
        throw Error("bad cell value '" + item + "'");
      }
    }
    if (key == "m") {
      cfg.m_values = values;
    } else if (key == "k") {
      cfg.k_values = values;
      cfg.order_cell = order;
    } else {
      throw Error("unknown cell key '" + key + "'");
    }
  }
}

std::size_t default_workers() {
  if (const char* env = std::getenv("ANTIDIM_WORKERS")) {
    try {
      const auto v = std::stoul(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw Error("ANTIDIM_WORKERS must be a positive integer");
  }
  return 1;
}

int run_experiment(const std::vector<std::string>& cells, std::size_t per_cell, std::uint64_t seed,
                   std::size_t n_max, std::optional<std::size_t> workers, bool timing, const std::string& out_path,
                   const std::string& format, const SearchOptions& s) {
  ExperimentConfig cfg;
  parse_cells(cells, cfg);
  cfg.graphs_per_cell = per_cell;
  cfg.rng_seed = seed;
  cfg.n_max = n_max;
  cfg.workers = workers ? *workers : default_workers();
  cfg.timing = timing;
  cfg.limits = s.limits();
  cfg.validate();
  const auto report = run_success_rate_study(cfg);
  auto doc = to_json(report);
  doc["command"] = "experiment";
  std::string text;
  if (format == "json")
    text = doc.dump(2) + "\n";
  else if (format == "csv")
    text = to_csv(report);
  else
    text = render_human(doc);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw Error("cannot write '" + out_path + "'");
    f << text;
  }
  return kExitDefinite;
}

int run_audit(const std::string& path, std::size_t ell, const OutputOptions& out, const SearchOptions& s) {
  const auto rec = audit_social_graph(path, ell, s.m, s.limits(), s.oracle());
  auto doc = to_json(rec);
  doc["command"] = "audit";
  emit(doc, out.format, {"ell", "k", "confidence", "witness", "elapsed_ms", "component_reduced"});
  return rec.result.confidence == Confidence::Inconclusive ? kExitUnknown : kExitDefinite;
}

int run_gen(const std::string& family, std::optional<std::uint64_t> seed, const std::string& out_path) {
  auto spec = parse_graph_spec(family);
  if (seed && spec.family == Family::random) spec.params.at(0) = *seed;
  const auto g = generate(spec);
  if (out_path.empty()) {
    write_edge_list(std::cout, g, to_string(spec));
  } else {
    std::ofstream f(out_path);
    if (!f) throw Error("cannot write '" + out_path + "'");
    write_edge_list(f, g, to_string(spec));
  }
  return kExitDefinite;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-metric antidimension and (k,l)-anonymity of graphs"};
  app.require_subcommand(1);
  app.footer("Exit codes: 0 definite answer, 2 unknown/inconclusive, 1 error.\nANTIDIM_WORKERS sets the default worker count of `experiment`.");

  InputOptions in;
  OutputOptions out, audit_out;
  SearchOptions search;
  std::size_t k = 0, ell = 0;

  auto* adim = app.add_subcommand("adim", "k-metric antidimension of one graph");
  add_input(adim, in);
  add_output(adim, out);
  add_search(adim, search, true);
  adim->add_option("--k", k, "Target k")->required();

  auto* anon = app.add_subcommand("anonymity", "(k,l)-anonymity for an attacker budget l");
  add_input(anon, in);
  add_output(anon, out);
  add_search(anon, search, true);
  anon->add_option("--ell", ell, "Attacker budget l")->required();

  auto* spec = app.add_subcommand("spectrum", "adim_k for every k (exhaustive)");
  add_input(spec, in);
  add_output(spec, out);
  spec->add_option("--max-order", search.max_order, "Largest graph the oracle accepts")->capture_default_str();

  std::vector<std::string> cells{"m=1,2,3", "k=1..8"};
  std::size_t per_cell = 300, n_max = 40;
  std::uint64_t exp_seed = 0;
  std::optional<std::size_t> workers;
  bool timing = false;
  std::string exp_out;
  std::string exp_format = "csv";
  auto* exp = app.add_subcommand("experiment", "success-rate study on random graphs");
  exp->add_option("--cells", cells, "Cell selectors, e.g. m=1,2 k=1..4,n (n: k equals the order)")
      ->capture_default_str();
  exp->add_option("--per-cell", per_cell, "Graphs per (m,k) cell")->capture_default_str();
  exp->add_option("--seed", exp_seed, "RNG seed")->required();
  exp->add_option("--n-max", n_max, "Largest random graph order")->capture_default_str();
  exp->add_option("--workers", workers, "Worker threads (default: ANTIDIM_WORKERS or 1)");
  exp->add_flag("--timing", timing, "Record mean runtimes (output is then not reproducible)");
  exp->add_option("--out", exp_out, "Write the report here instead of stdout");
  exp->add_option("--format", exp_format, "Report format")
      ->check(CLI::IsMember({"json", "csv", "human"}))
      ->capture_default_str();
  exp->add_option("--max-frontier", search.max_frontier, "Largest search level")->capture_default_str();
  exp->add_option("--time-budget-ms", search.time_budget_ms, "Wall-clock budget per search");

  std::string audit_path;
  std::size_t audit_ell = 1;
  auto* audit = app.add_subcommand("audit", "anonymity audit of an edge-list file");
  audit->add_option("--input", audit_path, "Edge-list file")->required();
  audit->add_option("--ell", audit_ell, "Attacker budget l")->capture_default_str();
  add_output(audit, audit_out, "json");
  add_search(audit, search, false);

  std::string family, gen_out;
  std::optional<std::uint64_t> gen_seed;
  auto* gen = app.add_subcommand("gen", "write a generated graph as an edge list");
  gen->add_option("--family", family, "Generator spec, e.g. family_F:r=3,dx=2,dy=2")->required();
  gen->add_option("--seed", gen_seed, "Seed for random specs");
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*adim) return run_adim(in, out, search, k);
    if (*anon) return run_anonymity(in, out, search, ell);
    if (*spec) return run_spectrum(in, out, search);
    if (*exp) return run_experiment(cells, per_cell, exp_seed, n_max, workers, timing, exp_out, exp_format, search);
    if (*audit) return run_audit(audit_path, audit_ell, audit_out, search);
    if (*gen) return run_gen(family, gen_seed, gen_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
