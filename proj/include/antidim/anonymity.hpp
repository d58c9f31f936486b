#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "antidim/closure_search.hpp"
#include "antidim/exact_oracle.hpp"
#include "antidim/graph.hpp"

namespace antidim {

enum class Confidence { Exact, Certified, UpperBoundOnly, Inconclusive };

inline std::string_view to_string(Confidence c) {
  switch (c) {
    case Confidence::Exact: return "exact";
    case Confidence::Certified: return "certified";
    case Confidence::UpperBoundOnly: return "upper_bound_only";
    case Confidence::Inconclusive: return "inconclusive";
  }
  return "?";
}

/// What was learned about one k during the ascending scan.
struct ProbeRecord {
  std::size_t k = 0;
  std::string verdict;                  // e.g. "basis:found", "set:unknown", "oracle:absent"
  std::optional<std::size_t> set_size;  // size of the best set seen for this k
  bool qualifies = false;               // an antiresolving set of size <= ell was found
  bool certain = false;                 // the outcome for this k is proven either way
};

/// (k, ell)-anonymity: k is the smallest positive integer whose k-metric
/// antidimension is at most ell. An adversary controlling at most ell
/// vertices cannot re-identify a vertex with probability above 1/k.
struct AnonymityResult {
  std::optional<std::size_t> k;
  std::size_t ell = 0;
  Confidence confidence = Confidence::Inconclusive;
  VertexSet witness;
  std::vector<ProbeRecord> probe_log;
};

struct EvaluationMode {
  enum class Kind { oracle, search };
  Kind kind = Kind::oracle;
  std::size_t m = 2;
  SearchLimits search_limits{};
  OracleLimits oracle_limits{};

  static EvaluationMode oracle() { return {}; }
  static EvaluationMode search(std::size_t m) { return {Kind::search, m, {}, {}}; }
};

namespace detail {

inline AnonymityResult evaluate_oracle(const Graph& g, const DistanceMatrix& dm, std::size_t ell,
                                       const OracleLimits& limits) {
  AnonymityResult out;
  out.ell = ell;
  const auto table = bounded_adim_table(dm, ell, limits);
  for (std::size_t k = 1; k <= g.max_degree(); ++k) {
    auto it = table.find(k);
    ProbeRecord rec{k, "oracle:absent", std::nullopt, false, true};
    if (it != table.end()) {
      rec = {k, "oracle:found", it->second.adim, true, true};
      out.probe_log.push_back(rec);
      out.k = k;
      out.witness = it->second.basis;
      out.confidence = Confidence::Exact;
      return out;
    }
    out.probe_log.push_back(rec);
  }
  return out;
}

inline AnonymityResult evaluate_search(const Graph& g, const DistanceMatrix& dm, std::size_t ell,
                                       std::size_t m, const SearchLimits& limits) {
  AnonymityResult out;
  out.ell = ell;
  bool all_certain = true;
  for (std::size_t k = 1; k <= g.max_degree(); ++k) {
    ProbeRecord rec{k, "", std::nullopt, false, false};
    const auto basis = find_antiresolving_basis(dm, k, m, limits);
    std::optional<VertexSet> witness;
    if (basis.verdict == Verdict::Found) {
      rec.verdict = "basis:found";
      rec.set_size = basis.witness->size();
      rec.certain = true;  // exact adim_k
      rec.qualifies = *rec.set_size <= ell;
      witness = basis.witness;
    } else if (basis.verdict == Verdict::Absent) {
      rec.verdict = "basis:absent";
      rec.certain = true;
    } else {
      const auto set = find_antiresolving_set(dm, k, m, limits);
      rec.verdict = std::string("set:") + std::string(to_string(set.verdict));
      if (set.verdict == Verdict::Found) {
        rec.set_size = set.witness->size();
        rec.qualifies = *rec.set_size <= ell;
        witness = set.witness;
      }
      rec.certain = set.verdict == Verdict::Absent || rec.qualifies;
    }
    out.probe_log.push_back(rec);
    if (rec.qualifies) {
      out.k = k;
      out.witness = *witness;
      out.confidence = all_certain ? Confidence::Certified : Confidence::UpperBoundOnly;
      return out;
    }
    all_certain = all_certain && rec.certain;
  }
  out.confidence = Confidence::Inconclusive;
  return out;
}

}  // namespace detail

/// Scans k = 1 .. max degree and stops at the first k with adim_k <= ell.
/// k values whose status stays unknown are logged and lower the confidence
/// of the final answer to UpperBoundOnly.
inline AnonymityResult evaluate(const Graph& g, std::size_t ell, const EvaluationMode& mode) {
  if (ell < 1 || ell >= g.order()) throw Error("ell out of range");
  const auto dm = all_pairs_distances(g);
  if (mode.kind == EvaluationMode::Kind::oracle)
    return detail::evaluate_oracle(g, dm, ell, mode.oracle_limits);
  return detail::evaluate_search(g, dm, ell, mode.m, mode.search_limits);
}

/// First vertex v (by index) such that {v} is 1-antiresolving, i.e. some
/// distance shell around v holds exactly one vertex. O(n (n + m)); no
/// distance matrix is built.
inline std::optional<Vertex> single_vertex_scan(const Graph& g) {
  if (!is_connected(g)) throw Error("graph not connected");
  std::vector<std::size_t> shell;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto dist = bfs_distances(g, v);
    shell.assign(g.order(), 0);
    for (auto d : dist) ++shell[d];
    for (std::size_t i = 1; i < shell.size() && shell[i] != 0; ++i)
      if (shell[i] == 1) return v;
  }
  return std::nullopt;
}

}  // namespace antidim
