#pragma once

// Slow, deliberately naive reference computations used as test oracles. They
// only read vertex counts and edge lists from the library types; distances,
// partitions and minimisation are recomputed here from scratch.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "antidim/graph.hpp"

namespace ref {

using Matrix = std::vector<std::vector<int>>;

inline constexpr int kInf = 1 << 20;

inline Matrix floyd_warshall(const antidim::Graph& g) {
  const int n = static_cast<int>(g.order());
  Matrix d(n, std::vector<int>(n, kInf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int w = 0; w < n; ++w)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][w] + d[w][j] < d[i][j]) d[i][j] = d[i][w] + d[w][j];
  return d;
}

inline std::vector<int> members(std::uint64_t mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i);
  return out;
}

/// Smallest class size of the partition of V - S by distance vectors, or
/// nothing for S = V.
inline std::optional<int> k_of(const Matrix& d, std::uint64_t s) {
  const int n = static_cast<int>(d.size());
  const auto src = members(s);
  std::map<std::vector<int>, int> count;
  for (int v = 0; v < n; ++v) {
    if ((s >> v) & 1) continue;
    std::vector<int> key;
    for (int u : src) key.push_back(d[v][u]);
    ++count[key];
  }
  if (count.empty()) return std::nullopt;
  int best = n;
  for (const auto& [key, c] : count) best = c < best ? c : best;
  return best;
}

/// adim per k: k -> (size, lexicographically least set mask of that size).
struct Entry {
  int size;
  std::vector<int> set;
};

inline std::map<int, Entry> spectrum(const Matrix& d, int max_size = 1 << 20) {
  const int n = static_cast<int>(d.size());
  std::map<int, Entry> out;
  for (std::uint64_t s = 1; s + 1 < (std::uint64_t{1} << n); ++s) {
    const int size = static_cast<int>(members(s).size());
    if (size > max_size) continue;
    const int k = *k_of(d, s);
    auto it = out.find(k);
    const auto set = members(s);
    if (it == out.end() || size < it->second.size || (size == it->second.size && set < it->second.set))
      out[k] = Entry{size, set};
  }
  return out;
}

inline std::optional<int> adim(const antidim::Graph& g, int k) {
  const auto sp = spectrum(floyd_warshall(g));
  auto it = sp.find(k);
  if (it == sp.end()) return std::nullopt;
  return it->second.size;
}

/// Number of connected labelled graphs on n vertices, by the standard
/// recurrence over the component containing vertex 1.
inline std::uint64_t connected_labelled_count(int n) {
  std::vector<double> c(n + 1, 0);
  auto binom = [](int a, int b) {
    double r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  auto all = [](int m) { return static_cast<double>(std::uint64_t{1} << (m * (m - 1) / 2)); };
  for (int m = 1; m <= n; ++m) {
    double v = all(m);
    for (int k = 1; k < m; ++k) v -= binom(m - 1, k - 1) * c[k] * all(m - k);
    c[m] = v;
  }
  return static_cast<std::uint64_t>(c[n] + 0.5);
}

}  // namespace ref
