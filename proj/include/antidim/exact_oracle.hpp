#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <type_traits>
#include <vector>

#include "antidim/graph.hpp"

namespace antidim {

// Brute-force ground truth for small graphs. Nothing here shares code with the
// closure search; the two are cross-checked against each other in the tests.

struct OracleLimits {
  /// Full enumeration (all 2^n subsets) is refused above this order.
  std::size_t max_order = 20;
  /// Size-bounded enumeration is refused when it would visit more subsets.
  std::uint64_t max_subsets = std::uint64_t{1} << 26;
};

/// Number of non-empty subsets with at most `max_size` members, saturating.
inline std::uint64_t bounded_subset_count(std::size_t n, std::size_t max_size) {
  constexpr auto kCap = std::numeric_limits<std::uint64_t>::max() / 2;
  std::uint64_t total = 0;
  std::uint64_t binom = 1;
  for (std::size_t i = 1; i <= std::min(max_size, n); ++i) {
    if (binom > kCap / (n - i + 1)) return kCap;
    binom = binom * (n - i + 1) / i;
    if (total > kCap - binom) return kCap;
    total += binom;
  }
  return total;
}

struct AdimResult {
  std::size_t adim = 0;
  VertexSet basis;
};

struct AntidimSpectrum {
  std::map<std::size_t, AdimResult> per_k;  // only k that admit a k-antiresolving set
  std::size_t antidimensional_k = 0;
};

namespace detail {

/// Visits every non-empty proper subset S with |S| <= max_size in
/// lexicographic order of its ascending member sequence (so within one
/// cardinality the first visit is the lexicographically least set), calling
/// `f(mask, |S|, k)` where k is the smallest class size of C_S. A callback
/// returning bool ends the scan by returning true.
class SubsetScanner {
 public:
  using Mask = std::uint64_t;

  explicit SubsetScanner(const DistanceMatrix& dm) : n_(dm.order()), dm_(&dm) {
    if (n_ == 0 || n_ > 63) throw Error("subset scanner needs 1..63 vertices");
  }

  template <class F>
  void run(std::size_t max_size, F&& f) {
    max_size = std::min(max_size, n_ - 1);
    if (max_size == 0) return;
    levels_.assign(max_size + 1, {});
    levels_[0].push_back(((Mask{1} << n_) - 1));
    stop_ = false;
    visit(0, 0, 0, max_size, f);
  }

 private:
  template <class F>
  void visit(Mask s, std::size_t depth, Vertex first, std::size_t max_size, F& f) {
    const auto& parent = levels_[depth];
    for (Vertex v = first; v < n_; ++v) {
      auto& mine = levels_[depth + 1];
      mine.clear();
      const Mask bit = Mask{1} << v;
      std::size_t smallest = std::numeric_limits<std::size_t>::max();
      for (Mask c : parent) {
        c &= ~bit;
        // group the members of c by their distance to v
        while (c != 0) {
          const auto u = static_cast<Vertex>(std::countr_zero(c));
          const auto d = (*dm_)(u, v);
          Mask same = 0;
          for (Mask rest = c; rest != 0; rest &= rest - 1) {
            const auto w = static_cast<Vertex>(std::countr_zero(rest));
            if ((*dm_)(w, v) == d) same |= Mask{1} << w;
          }
          mine.push_back(same);
          smallest = std::min<std::size_t>(smallest, static_cast<std::size_t>(std::popcount(same)));
          c &= ~same;
        }
      }
      const Mask next = s | bit;
      if (mine.empty()) continue;  // S = V
      if constexpr (std::is_same_v<std::invoke_result_t<F&, Mask, std::size_t, std::size_t>, bool>) {
        if (f(next, depth + 1, smallest)) stop_ = true;
      } else {
        f(next, depth + 1, smallest);
      }
      if (stop_) return;
      if (depth + 1 < max_size) visit(next, depth + 1, v + 1, max_size, f);
      if (stop_) return;
    }
  }

  std::size_t n_;
  const DistanceMatrix* dm_;
  std::vector<std::vector<Mask>> levels_;
  bool stop_ = false;
};

inline void check_oracle_size(std::size_t n, const OracleLimits& limits) {
  if (n > limits.max_order || n > 63) throw Error("oracle size limit");
}

}  // namespace detail

/// Exact k-metric antidimension and the lexicographically least basis, or
/// nothing when the graph has no k-antiresolving set.
inline std::optional<AdimResult> brute_adim(const DistanceMatrix& dm, std::size_t k,
                                            const OracleLimits& limits = {}) {
  if (k < 1) throw Error("k must be >= 1");
  const std::size_t n = dm.order();
  detail::check_oracle_size(n, limits);
  std::optional<AdimResult> best;
  detail::SubsetScanner scanner(dm);
  scanner.run(n - 1, [&](std::uint64_t mask, std::size_t size, std::size_t kv) {
    if (kv == k && (!best || size < best->adim)) best = AdimResult{size, VertexSet::from_mask(n, mask)};
  });
  return best;
}

inline std::optional<AdimResult> brute_adim(const Graph& g, std::size_t k,
                                            const OracleLimits& limits = {}) {
  detail::check_oracle_size(g.order(), limits);
  return brute_adim(all_pairs_distances(g), k, limits);
}

inline AntidimSpectrum spectrum(const DistanceMatrix& dm, const OracleLimits& limits = {}) {
  const std::size_t n = dm.order();
  detail::check_oracle_size(n, limits);
  AntidimSpectrum out;
  if (n < 2) return out;
  detail::SubsetScanner scanner(dm);
  scanner.run(n - 1, [&](std::uint64_t mask, std::size_t size, std::size_t kv) {
    auto it = out.per_k.find(kv);
    if (it == out.per_k.end())
      out.per_k.emplace(kv, AdimResult{size, VertexSet::from_mask(n, mask)});
    else if (size < it->second.adim)
      it->second = AdimResult{size, VertexSet::from_mask(n, mask)};
  });
  out.antidimensional_k = out.per_k.empty() ? 0 : out.per_k.rbegin()->first;
  return out;
}

inline AntidimSpectrum spectrum(const Graph& g, const OracleLimits& limits = {}) {
  detail::check_oracle_size(g.order(), limits);
  return spectrum(all_pairs_distances(g), limits);
}

/// First set in scan order whose smallest class has at least k members, i.e. a
/// witness that the graph is k'-metric antidimensional for some k' >= k.
inline std::optional<VertexSet> find_set_with_k_at_least(const DistanceMatrix& dm, std::size_t k,
                                                         const OracleLimits& limits = {}) {
  const std::size_t n = dm.order();
  detail::check_oracle_size(n, limits);
  std::optional<VertexSet> out;
  if (n < 2) return out;
  detail::SubsetScanner scanner(dm);
  scanner.run(n - 1, [&](std::uint64_t mask, std::size_t, std::size_t kv) {
    if (kv < k) return false;
    out = VertexSet::from_mask(n, mask);
    return true;
  });
  return out;
}

/// For each k, the lexicographically least smallest set among all sets with
/// at most `max_size` members whose smallest class has size k.
inline std::map<std::size_t, AdimResult> bounded_adim_table(const DistanceMatrix& dm, std::size_t max_size,
                                                            const OracleLimits& limits = {}) {
  const std::size_t n = dm.order();
  if (n > 63 || (n > limits.max_order && bounded_subset_count(n, max_size) > limits.max_subsets))
    throw Error("oracle size limit");
  std::map<std::size_t, AdimResult> table;
  if (n < 2) return table;
  detail::SubsetScanner scanner(dm);
  scanner.run(max_size, [&](std::uint64_t mask, std::size_t size, std::size_t kv) {
    auto it = table.find(kv);
    if (it == table.end() || size < it->second.adim)
      table.insert_or_assign(kv, AdimResult{size, VertexSet::from_mask(n, mask)});
  });
  return table;
}

/// Calls `f(graph)` for every connected simple graph on vertices 0..n-1,
/// ordered by the bitmask of present edges over the pairs (0,1), (0,2), ...,
/// (n-2,n-1).
template <class F>
void for_each_connected_graph(std::size_t n, F&& f) {
  if (n < 1 || n > 8) throw Error("graph enumeration supports 1 <= n <= 8");
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<std::uint32_t> adj(n);
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::fill(adj.begin(), adj.end(), 0U);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1U) {
        adj[pairs[i].first] |= 1U << pairs[i].second;
        adj[pairs[i].second] |= 1U << pairs[i].first;
      }
    std::uint32_t reached = 1, frontier = 1;
    while (frontier != 0) {
      std::uint32_t grow = 0;
      for (std::uint32_t f2 = frontier; f2 != 0; f2 &= f2 - 1) grow |= adj[static_cast<std::size_t>(std::countr_zero(f2))];
      frontier = grow & ~reached;
      reached |= grow;
    }
    if (reached != (1U << n) - 1) continue;
    edges.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1U) edges.push_back(pairs[i]);
    f(Graph(n, edges));
  }
}

inline std::vector<Graph> enumerate_connected_graphs(std::size_t n) {
  std::vector<Graph> out;
  for_each_connected_graph(n, [&](Graph g) { out.push_back(std::move(g)); });
  return out;
}

/// Calls `f(tree)` for each of the n^(n-2) labelled trees on n vertices,
/// decoded from Prüfer sequences in lexicographic order. n = 1 and n = 2 give
/// the single tree.
template <class F>
void for_each_labeled_tree(std::size_t n, F&& f) {
  if (n < 1 || n > 12) throw Error("tree enumeration supports 1 <= n <= 12");
  if (n <= 2) {
    std::vector<Edge> edges;
    if (n == 2) edges.emplace_back(0, 1);
    f(Graph(n, edges));
    return;
  }
  std::vector<Vertex> seq(n - 2, 0);
  std::vector<std::size_t> degree(n);
  std::vector<Edge> edges;
  while (true) {
    std::fill(degree.begin(), degree.end(), 1);
    for (Vertex x : seq) ++degree[x];
    edges.clear();
    for (Vertex x : seq) {
      Vertex leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, x);
      --degree[leaf];
      --degree[x];
    }
    Vertex a = 0;
    while (degree[a] != 1) ++a;
    Vertex b = a + 1;
    while (degree[b] != 1) ++b;
    edges.emplace_back(a, b);
    f(Graph(n, edges));

    std::size_t pos = seq.size();
    while (pos > 0 && seq[pos - 1] == n - 1) seq[--pos] = 0;
    if (pos == 0) break;
    ++seq[pos - 1];
  }
}

}  // namespace antidim
