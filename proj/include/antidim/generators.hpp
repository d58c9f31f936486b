#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "antidim/graph.hpp"

namespace antidim {

enum class Family { path, cycle, complete, complete_bipartite, star, family_F, spider, random };

/// A generator request such as `cycle:6`, `complete_bipartite:3,2`,
/// `family_F:r=3,dx=2,dy=2` or `random:seed=7,k=2,nmax=40`.
///
/// Vertex numbering per family:
///   path, cycle      0..n-1 along the path / around the cycle
///   complete         0..n-1
///   complete_bipartite  part of size r first (0..r-1), then the part of size t
///   star             centre 0, leaves 1..n-1 (n vertices in total)
///   family_F         root x = 0, x's descendants breadth-first, then root y,
///                    then y's descendants breadth-first
///   spider           centre 0, then each leg outward in the order given
struct GraphSpec {
  Family family = Family::path;
  std::vector<std::uint64_t> params;
};

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::star: return "star";
    case Family::family_F: return "family_F";
    case Family::spider: return "spider";
    case Family::random: return "random";
  }
  return "?";
}

inline std::string to_string(const GraphSpec& spec) {
  std::string out(family_name(spec.family));
  out += ':';
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(spec.params[i]);
  }
  return out;
}

namespace detail {

inline std::uint64_t parse_uint(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty())
    throw Error("invalid " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace detail

inline GraphSpec parse_graph_spec(std::string_view text) {
  static const std::map<std::string_view, std::pair<Family, std::vector<std::string_view>>> kFamilies{
      {"path", {Family::path, {"n"}}},
      {"cycle", {Family::cycle, {"n"}}},
      {"complete", {Family::complete, {"n"}}},
      {"complete_bipartite", {Family::complete_bipartite, {"r", "t"}}},
      {"bipartite", {Family::complete_bipartite, {"r", "t"}}},
      {"star", {Family::star, {"n"}}},
      {"family_F", {Family::family_F, {"r", "dx", "dy"}}},
      {"spider", {Family::spider, {}}},
      {"random", {Family::random, {"seed", "k", "nmax"}}},
  };
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error("generator spec needs 'family:params'");
  const auto name = text.substr(0, colon);
  auto it = kFamilies.find(name);
  if (it == kFamilies.end()) throw Error("unknown graph family '" + std::string(name) + "'");
  const auto& [family, keys] = it->second;

  GraphSpec spec{family, {}};
  const auto body = text.substr(colon + 1);
  const auto tokens = detail::split(body, ',');
  if (family == Family::spider) {
    for (auto tok : tokens) spec.params.push_back(detail::parse_uint(tok, "leg length"));
    return spec;
  }
  if (tokens.size() != keys.size())
    throw Error("family '" + std::string(name) + "' expects " + std::to_string(keys.size()) +
                " parameter(s)");
  spec.params.assign(keys.size(), 0);
  std::vector<bool> assigned(keys.size(), false);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto eq = tokens[i].find('=');
    std::size_t slot = i;
    std::string_view value = tokens[i];
    if (eq != std::string_view::npos) {
      const auto key = tokens[i].substr(0, eq);
      auto pos = std::find(keys.begin(), keys.end(), key);
      if (pos == keys.end()) throw Error("unknown parameter '" + std::string(key) + "'");
      slot = static_cast<std::size_t>(pos - keys.begin());
      value = tokens[i].substr(eq + 1);
    }
    if (assigned[slot]) throw Error("parameter given twice");
    assigned[slot] = true;
    spec.params[slot] = detail::parse_uint(value, keys[slot]);
  }
  return spec;
}

inline Graph path_graph(std::size_t n) {
  if (n < 1) throw Error("path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, edges);
}

inline Graph complete_graph(std::size_t n) {
  if (n < 1) throw Error("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline Graph complete_bipartite_graph(std::size_t r, std::size_t t) {
  if (r < 1 || t < 1) throw Error("complete bipartite graph needs r, t >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < r; ++u)
    for (std::size_t j = 0; j < t; ++j) edges.emplace_back(u, static_cast<Vertex>(r + j));
  return Graph(r + t, edges);
}

inline Graph star_graph(std::size_t n) {
  if (n < 1) throw Error("star needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, edges);
}

/// Two adjacent roots, each the top of a complete r-ary tree of the given depth.
/// Both depths must agree, otherwise the centre is not {x, y}.
inline Graph family_F_tree(std::size_t r, std::size_t depth_x, std::size_t depth_y) {
  if (r < 2) throw Error("family_F needs r >= 2");
  if (depth_x < 1 || depth_y < 1) throw Error("family_F needs depths >= 1");
  if (depth_x != depth_y) throw Error("family_F needs equal depths (centre must be {x,y})");
  std::vector<Edge> edges;
  Vertex next = 0;
  auto grow = [&](std::size_t depth) {
    const Vertex root = next++;
    std::vector<Vertex> frontier{root};
    for (std::size_t level = 0; level < depth; ++level) {
      std::vector<Vertex> children;
      for (Vertex p : frontier)
        for (std::size_t c = 0; c < r; ++c) {
          edges.emplace_back(p, next);
          children.push_back(next++);
        }
      frontier = std::move(children);
    }
    return root;
  };
  const Vertex x = grow(depth_x);
  const Vertex y = grow(depth_y);
  edges.emplace_back(x, y);
  return Graph(next, edges);
}

/// Root of a family_F tree with the given parameters (x is always 0).
inline Vertex family_F_root_y(std::size_t r, std::size_t depth_x) {
  std::size_t count = 1, level = 1;
  for (std::size_t d = 0; d < depth_x; ++d) {
    level *= r;
    count += level;
  }
  return static_cast<Vertex>(count);
}

inline Graph spider_graph(std::span<const std::uint64_t> legs) {
  if (legs.empty()) throw Error("spider needs at least one leg");
  std::vector<Edge> edges;
  Vertex next = 1;
  for (auto len : legs) {
    if (len < 1) throw Error("spider legs need length >= 1");
    Vertex prev = 0;
    for (std::uint64_t i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph(next, edges);
}

/// Random connected graph: N uniform in [k+2, n_max], edge count uniform in
/// [0, N(N-1)/2], edges placed uniformly at random. Disconnected draws are
/// discarded (edge count and edges redrawn, N kept) up to 1000 times.
inline Graph random_graph(std::uint64_t seed, std::size_t k, std::size_t n_max) {
  if (k < 1) throw Error("random graph needs k >= 1");
  if (n_max < k + 2) throw Error("random graph needs n_max >= k + 2");
  std::mt19937_64 rng(seed);
  const auto n = std::uniform_int_distribution<std::size_t>(k + 2, n_max)(rng);
  std::vector<Edge> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  constexpr int kRetryCap = 1000;
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    const auto m = std::uniform_int_distribution<std::size_t>(0, pairs.size())(rng);
    // Partial Fisher-Yates: the first m slots become a uniform m-subset.
    for (std::size_t i = 0; i < m; ++i) {
      const auto j = std::uniform_int_distribution<std::size_t>(i, pairs.size() - 1)(rng);
      std::swap(pairs[i], pairs[j]);
    }
    Graph g(n, std::span<const Edge>(pairs.data(), m));
    if (is_connected(g)) return g;
  }
  throw Error("could not generate connected graph");
}

inline Graph generate(const GraphSpec& spec) {
  const auto& p = spec.params;
  auto need = [&](std::size_t count) {
    if (p.size() != count)
      throw Error("family '" + std::string(family_name(spec.family)) + "' expects " +
                  std::to_string(count) + " parameter(s)");
  };
  switch (spec.family) {
    case Family::path: need(1); return path_graph(p[0]);
    case Family::cycle: need(1); return cycle_graph(p[0]);
    case Family::complete: need(1); return complete_graph(p[0]);
    case Family::complete_bipartite: need(2); return complete_bipartite_graph(p[0], p[1]);
    case Family::star: need(1); return star_graph(p[0]);
    case Family::family_F: need(3); return family_F_tree(p[0], p[1], p[2]);
    case Family::spider: return spider_graph(p);
    case Family::random: need(3); return random_graph(p[0], p[1], p[2]);
  }
  throw Error("unsupported family");
}

inline Graph generate(std::string_view spec) { return generate(parse_graph_spec(spec)); }

}  // namespace antidim
