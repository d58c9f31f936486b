#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "antidim/generators.hpp"
#include "antidim/graph.hpp"

namespace antidim {

/// Eccentricities and distance-shell statistics.
///
/// phi(v) is the size of the smallest distance shell {u : d(u, v) = i},
/// 1 <= i <= ecc(v); the singleton {v} is exactly phi(v)-antiresolving.
struct EccentricityProfile {
  std::vector<std::size_t> eccentricity;
  std::size_t radius = 0;
  std::size_t diameter = 0;
  VertexSet center;
  std::vector<std::size_t> phi;
  std::size_t phi_graph = 0;
};

inline EccentricityProfile eccentricity_profile(const DistanceMatrix& dm) {
  const std::size_t n = dm.order();
  EccentricityProfile p;
  p.eccentricity.resize(n, 0);
  p.phi.resize(n, 0);
  p.center = VertexSet(n);
  std::vector<std::size_t> shell;
  for (Vertex v = 0; v < n; ++v) {
    const auto row = dm.row(v);
    const std::size_t ecc = *std::max_element(row.begin(), row.end());
    shell.assign(ecc + 1, 0);
    for (auto d : row) ++shell[d];
    p.eccentricity[v] = ecc;
    p.phi[v] = ecc == 0 ? 0 : *std::min_element(shell.begin() + 1, shell.end());
  }
  if (n == 0) return p;
  p.radius = *std::min_element(p.eccentricity.begin(), p.eccentricity.end());
  p.diameter = *std::max_element(p.eccentricity.begin(), p.eccentricity.end());
  for (Vertex v = 0; v < n; ++v)
    if (p.eccentricity[v] == p.radius) p.center.insert(v);
  p.phi_graph = *std::max_element(p.phi.begin(), p.phi.end());
  return p;
}

/// Maximal classes of pairwise twins (equal open or equal closed
/// neighbourhoods), singletons omitted, ordered by smallest member.
inline std::vector<VertexSet> twin_classes(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<std::vector<Vertex>> closed(n);
  for (Vertex v = 0; v < n; ++v) {
    closed[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    closed[v].insert(std::lower_bound(closed[v].begin(), closed[v].end(), v), v);
  }
  for (Vertex u = 0; u < n; ++u) {
    const auto nu = g.neighbors(u);
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.degree(v) != nu.size()) continue;
      const auto nv = g.neighbors(v);
      const bool false_twins = std::equal(nu.begin(), nu.end(), nv.begin(), nv.end());
      if (false_twins || closed[u] == closed[v]) parent[find(v)] = find(u);
    }
  }
  std::vector<VertexSet> classes;
  std::vector<std::optional<std::size_t>> slot(n);
  for (Vertex v = 0; v < n; ++v) {
    const Vertex r = find(v);
    if (!slot[r]) {
      slot[r] = classes.size();
      classes.emplace_back(n);
    }
    classes[*slot[r]].insert(v);
  }
  std::erase_if(classes, [](const VertexSet& c) { return c.size() < 2; });
  return classes;
}

/// max(phi(G), largest twin-class size). A twin class T with T != V makes
/// V - T a |T|-antiresolving set; when every vertex is a twin of every other
/// (complete and empty-complement cases) the class contributes n - 1.
inline std::size_t antidimensional_lower_bound(const Graph& g, const DistanceMatrix& dm) {
  std::size_t bound = eccentricity_profile(dm).phi_graph;
  for (const auto& c : twin_classes(g)) {
    const std::size_t size = c.size();
    bound = std::max(bound, size == g.order() ? size - 1 : size);
  }
  return bound;
}

inline std::size_t antidimensional_lower_bound(const Graph& g) {
  return antidimensional_lower_bound(g, all_pairs_distances(g));
}

/// Closed forms for adim_k, keyed by generator family:
///   complete n:              n - k               for 1 <= k <= n - 1
///   complete_bipartite r,t:  r + t - k           for t < k <= r   (r >= t)
///                            r + t - 2k          for 1 < k <= t
///   path n (odd):            1                   for k = 2
///   cycle n:                 1 (odd), 2 (even)   for k = 2
/// Returns nothing when k lies outside the range a formula covers.
///
/// Note: the r + t - 2k branch does not match exhaustive search when k < t
/// (the true value is t - k) or when r = t = k (true value k).
inline std::optional<std::size_t> closed_form_adim(const GraphSpec& spec, std::size_t k) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::complete:
      if (p.size() != 1) break;
      if (k >= 1 && k < p[0]) return p[0] - k;
      return std::nullopt;
    case Family::complete_bipartite: {
      if (p.size() != 2) break;
      const std::size_t r = std::max(p[0], p[1]);
      const std::size_t t = std::min(p[0], p[1]);
      if (t < k && k <= r) return r + t - k;
      if (1 < k && k <= t) return r + t - 2 * k;
      return std::nullopt;
    }
    case Family::path:
      if (p.size() != 1) break;
      if (k == 2 && p[0] % 2 == 1 && p[0] >= 3) return 1;
      return std::nullopt;
    case Family::cycle:
      if (p.size() != 1) break;
      if (k == 2) return p[0] % 2 == 1 ? 1 : 2;
      return std::nullopt;
    default:
      break;
  }
  throw Error("no closed form for family '" + std::string(family_name(spec.family)) + "'");
}

}  // namespace antidim
