#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

#include "antidim/graph.hpp"
#include "antidim/metric_partition.hpp"
#include "antidim/structural_theory.hpp"

namespace antidim {

inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

/// The subtree hanging off neighbour `neighbor` of the root, root excluded.
struct Branch {
  Vertex neighbor = 0;
  VertexSet vertices;
  std::size_t eccentricity = 0;  // eccentricity of the root inside root + branch
};

/// Branches at a vertex of degree >= 2. Two branches are equivalent when
/// their eccentricities agree; `xi` is the size of the largest equivalence
/// family and `l_xi` its common eccentricity (on ties, the largest one).
struct BranchProfile {
  Vertex root = 0;
  std::vector<Branch> branches;  // ordered by neighbour index
  std::size_t xi = 0;
  std::size_t l_xi = 0;
};

inline BranchProfile branch_profile(const Graph& t, Vertex x) {
  if (!is_tree(t)) throw Error("graph is not a tree");
  if (t.degree(x) < 2) throw Error("branch root needs degree >= 2");
  const std::size_t n = t.order();
  BranchProfile p;
  p.root = x;
  std::vector<std::size_t> depth(n, 0);
  for (Vertex y : t.neighbors(x)) {
    Branch b{y, VertexSet(n), 1};
    std::vector<Vertex> stack{y};
    depth[y] = 1;
    b.vertices.insert(y);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      b.eccentricity = std::max(b.eccentricity, depth[u]);
      for (Vertex w : t.neighbors(u)) {
        if (w == x || b.vertices.contains(w)) continue;
        b.vertices.insert(w);
        depth[w] = depth[u] + 1;
        stack.push_back(w);
      }
    }
    p.branches.push_back(std::move(b));
  }
  std::map<std::size_t, std::size_t> multiplicity;
  for (const auto& b : p.branches) ++multiplicity[b.eccentricity];
  for (auto [ecc, count] : multiplicity)
    if (count >= p.xi) {
      p.xi = count;
      p.l_xi = ecc;
    }
  return p;
}

inline std::size_t xi_of_tree(const Graph& t) {
  if (!is_tree(t)) throw Error("graph is not a tree");
  std::size_t best = 0;
  bool internal = false;
  for (Vertex v = 0; v < t.order(); ++v)
    if (t.degree(v) >= 2) {
      internal = true;
      best = std::max(best, branch_profile(t, v).xi);
    }
  if (!internal) throw Error("tree has no vertex of degree >= 2");
  return best;
}

/// max(phi(T), xi(T)): the tree admits a k-antiresolving set for some k at
/// least this large.
inline std::size_t tree_antidimensional_bound(const Graph& t) {
  if (!is_tree(t)) throw Error("graph is not a tree");
  if (t.order() < 2) return 0;
  const std::size_t phi = eccentricity_profile(all_pairs_distances(t)).phi_graph;
  bool internal = false;
  for (Vertex v = 0; v < t.order(); ++v) internal = internal || t.degree(v) >= 2;
  return internal ? std::max(phi, xi_of_tree(t)) : phi;
}

struct TreeAdimBound {
  std::size_t bound = 0;       // |set|
  VertexSet set;               // V minus the removed branch vertices
  std::size_t verified_k = 0;  // the k for which `set` is k-antiresolving
};

/// Upper bound on adim_k of a tree from branch structure. For every vertex v
/// with xi(v) >= k, remove all branches at v shorter than l_xi(v) and the k
/// largest branches of eccentricity exactly l_xi(v) (ties: lowest neighbour
/// index). What remains is returned along with the k it actually achieves.
inline TreeAdimBound tree_adim_upper_bound(const Graph& t, std::size_t k) {
  if (!is_tree(t)) throw Error("graph is not a tree");
  if (k < 2) throw Error("tree bound needs k >= 2");
  if (k > tree_antidimensional_bound(t)) throw Error("k exceeds max(phi(T), xi(T))");
  const std::size_t n = t.order();
  VertexSet removed(n);
  bool any = false;
  for (Vertex v = 0; v < n; ++v) {
    if (t.degree(v) < 2) continue;
    const auto p = branch_profile(t, v);
    if (p.xi < k) continue;
    any = true;
    std::vector<const Branch*> equal;
    for (const auto& b : p.branches) {
      if (b.eccentricity < p.l_xi) removed |= b.vertices;
      if (b.eccentricity == p.l_xi) equal.push_back(&b);
    }
    std::stable_sort(equal.begin(), equal.end(), [](const Branch* a, const Branch* b) {
      return a->vertices.size() > b->vertices.size();
    });
    for (std::size_t i = 0; i < k; ++i) removed |= equal[i]->vertices;
  }
  if (!any) throw Error("no vertex with xi(v) >= " + std::to_string(k));
  TreeAdimBound out;
  out.set = removed.complement();
  out.bound = out.set.size();
  if (out.set.empty()) throw Error("constructed set is empty");
  out.verified_k = antiresolving_k(all_pairs_distances(t), out.set);
  return out;
}

}  // namespace antidim
