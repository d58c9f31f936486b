#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "antidim/graph.hpp"

namespace antidim {

using Representation = std::vector<DistanceMatrix::Distance>;

/// Distances from `v` to the members of `s`, in ascending member order.
inline Representation representation(const DistanceMatrix& dm, Vertex v, const VertexSet& s) {
  if (s.empty()) throw Error("representation needs a non-empty set");
  Representation r;
  r.reserve(s.size());
  s.for_each([&](Vertex u) { r.push_back(dm(v, u)); });
  return r;
}

/// The classes of V - S under equality of metric representation w.r.t. S.
struct MetricPartition {
  VertexSet base_set;
  std::vector<VertexSet> classes;         // ordered by representation, lexicographically
  std::vector<Representation> vectors;    // vectors[i] is shared by classes[i]
  std::optional<std::size_t> k_value;     // smallest class size
};

inline MetricPartition partition(const DistanceMatrix& dm, const VertexSet& s) {
  const std::size_t n = dm.order();
  if (s.universe() != n) throw Error("vertex set does not match graph");
  if (s.empty()) throw Error("partition needs a non-empty set");
  if (s.size() == n) throw Error("empty complement");

  std::map<Representation, VertexSet> groups;
  for (Vertex v = 0; v < n; ++v) {
    if (s.contains(v)) continue;
    auto [it, _] = groups.try_emplace(representation(dm, v, s), n);
    it->second.insert(v);
  }
  MetricPartition p{s, {}, {}, std::nullopt};
  for (auto& [vec, members] : groups) {
    const std::size_t size = members.size();
    p.k_value = p.k_value ? std::min(*p.k_value, size) : size;
    p.vectors.push_back(vec);
    p.classes.push_back(std::move(members));
  }
  return p;
}

/// The unique k for which `s` is a k-antiresolving set.
inline std::size_t antiresolving_k(const DistanceMatrix& dm, const VertexSet& s) {
  return *partition(dm, s).k_value;
}

/// True iff the smallest class has exactly k members; a set whose smallest
/// class is larger than k is not k-antiresolving.
inline bool is_k_antiresolving(const DistanceMatrix& dm, const VertexSet& s, std::size_t k) {
  if (k < 1) throw Error("k must be >= 1");
  return antiresolving_k(dm, s) == k;
}

/// Every vertex has a distinct representation w.r.t. `s` (members included).
inline bool is_resolving(const DistanceMatrix& dm, const VertexSet& s) {
  std::map<Representation, int> seen;
  for (Vertex v = 0; v < dm.order(); ++v)
    if (++seen[representation(dm, v, s)] > 1) return false;
  return true;
}

}  // namespace antidim
