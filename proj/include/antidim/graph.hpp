#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "antidim/vertex_set.hpp"

namespace antidim {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Neighbour lists are sorted ascending. Every vertex carries an external
/// label; generated graphs use the decimal index, ingested graphs keep the
/// tokens found in the file.
class Graph {
 public:
  Graph() = default;

  /// Self-loops and repeated edges are dropped.
  Graph(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels = {})
      : adjacency_(n), labels_(std::move(labels)) {
    if (labels_.empty()) {
      labels_.reserve(n);
      for (std::size_t v = 0; v < n; ++v) labels_.push_back(std::to_string(v));
    }
    if (labels_.size() != n) throw Error("label count does not match vertex count");
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) throw Error("edge endpoint out of range");
      if (u == v) continue;
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) {
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
      edge_count_ += nbrs.size();
    }
    edge_count_ /= 2;
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  std::size_t max_degree() const noexcept {
    std::size_t d = 0;
    for (const auto& nbrs : adjacency_) d = std::max(d, nbrs.size());
    return d;
  }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& nbrs = adjacency_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<Vertex> find_label(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<Vertex>(it - labels_.begin());
  }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adjacency_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  std::vector<std::string> labels_of(const VertexSet& s) const {
    std::vector<std::string> out;
    s.for_each([&](Vertex v) { out.push_back(labels_.at(v)); });
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_ && a.labels_ == b.labels_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// Builds a graph from labelled pairs. Labels are mapped to dense indices in
/// order of first appearance.
inline Graph from_edge_list(std::span<const std::pair<std::string, std::string>> pairs) {
  if (pairs.empty()) throw Error("empty graph");
  std::unordered_map<std::string, Vertex> index;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = index.try_emplace(label, static_cast<Vertex>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };
  for (const auto& [a, b] : pairs) {
    const Vertex u = intern(a);
    const Vertex v = intern(b);
    edges.emplace_back(u, v);
  }
  const auto n = labels.size();
  return Graph(n, edges, std::move(labels));
}

/// Hop distances from `source`; unreachable vertices get `kUnreachable`.
inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

inline std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::uint32_t> dist(g.order(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  dist.at(source) = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](auto d) { return d == kUnreachable; });
}

struct ComponentReduction {
  Graph graph;
  bool reduced = false;  // true when the input had more than one component
};

/// Largest connected component (ties: the one containing the lowest vertex).
/// Vertex order and labels of the kept vertices are preserved.
inline ComponentReduction largest_component(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw Error("empty graph");
  std::vector<std::int64_t> comp(n, -1);
  std::vector<std::size_t> comp_size;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const auto id = static_cast<std::int64_t>(comp_size.size());
    std::size_t count = 0;
    std::vector<Vertex> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      ++count;
      for (Vertex w : g.neighbors(u))
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    comp_size.push_back(count);
  }
  if (comp_size.size() == 1) return {g, false};
  const auto best = static_cast<std::int64_t>(
      std::max_element(comp_size.begin(), comp_size.end()) - comp_size.begin());
  std::vector<Vertex> remap(n, 0);
  std::vector<std::string> labels;
  for (Vertex v = 0; v < n; ++v)
    if (comp[v] == best) {
      remap[v] = static_cast<Vertex>(labels.size());
      labels.push_back(g.label(v));
    }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (comp[u] == best) edges.emplace_back(remap[u], remap[v]);
  const auto order = labels.size();
  return {Graph(order, edges, std::move(labels)), true};
}

/// All-pairs hop counts of a connected graph, stored as 16-bit entries.
class DistanceMatrix {
 public:
  using Distance = std::uint16_t;
  static constexpr std::size_t kMaxDistance = 65534;

  DistanceMatrix() = default;

  /// Row-major n*n table; validated only for shape.
  DistanceMatrix(std::size_t n, std::vector<Distance> table) : n_(n), d_(std::move(table)) {
    if (d_.size() != n_ * n_) throw Error("distance table has wrong shape");
    for (Distance x : d_) diameter_ = std::max<std::size_t>(diameter_, x);
  }

  std::size_t order() const noexcept { return n_; }
  Distance operator()(Vertex u, Vertex v) const noexcept { return d_[u * n_ + v]; }
  std::span<const Distance> row(Vertex u) const { return {d_.data() + u * n_, n_}; }
  std::size_t diameter() const noexcept { return diameter_; }

 private:
  std::size_t n_ = 0;
  std::vector<Distance> d_;
  std::size_t diameter_ = 0;
};

/// One BFS per source: O(n (n + m)).
inline DistanceMatrix all_pairs_distances(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw Error("empty graph");
  std::vector<DistanceMatrix::Distance> table(n * n);
  for (Vertex s = 0; s < n; ++s) {
    const auto dist = bfs_distances(g, s);
    for (Vertex v = 0; v < n; ++v) {
      if (dist[v] == kUnreachable) throw Error("graph not connected");
      if (dist[v] > DistanceMatrix::kMaxDistance) throw Error("graph diameter exceeds 65534");
      table[s * n + v] = static_cast<DistanceMatrix::Distance>(dist[v]);
    }
  }
  return DistanceMatrix(n, std::move(table));
}

}  // namespace antidim
