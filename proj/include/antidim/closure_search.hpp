#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "antidim/graph.hpp"
#include "antidim/metric_partition.hpp"

namespace antidim {

// ---------------------------------------------------------------------------
// Closure kernels
//
// f(S) absorbs every class of C_S smaller than k into S until no such class
// remains. Both kernels maintain the partition of V - S incrementally: adding
// vertices to S only refines the classes that are left, so each absorbed
// vertex costs one refinement pass.
// ---------------------------------------------------------------------------

namespace detail {

template <class Set>
struct Closed {
  Set set;
  std::size_t min_class = 0;  // 0 iff set == V
};

/// Graphs with at most 64 vertices: sets and classes are single machine words
/// and a class is split by intersecting it with the distance shells of the
/// refining vertex.
class SmallKernel {
 public:
  using Set = std::uint64_t;
  using Hash = std::hash<std::uint64_t>;

  explicit SmallKernel(const DistanceMatrix& dm) : n_(dm.order()) {
    if (n_ == 0 || n_ > 64) throw Error("small kernel needs 1..64 vertices");
    full_ = n_ == 64 ? ~Set{0} : (Set{1} << n_) - 1;
    offset_.resize(n_ + 1, 0);
    for (Vertex s = 0; s < n_; ++s) {
      std::size_t ecc = 0;
      for (auto d : dm.row(s)) ecc = std::max<std::size_t>(ecc, d);
      offset_[s + 1] = offset_[s] + ecc + 1;
    }
    shells_.assign(offset_[n_], 0);
    for (Vertex s = 0; s < n_; ++s) {
      const auto row = dm.row(s);
      for (Vertex v = 0; v < n_; ++v) shells_[offset_[s] + row[v]] |= Set{1} << v;
    }
  }

  Set singleton(Vertex v) const { return Set{1} << v; }
  Set full() const { return full_; }
  static bool subset(Set a, Set b) { return (a & ~b) == 0; }
  static Set unite(Set a, Set b) { return a | b; }
  static std::size_t card(Set s) { return static_cast<std::size_t>(std::popcount(s)); }
  VertexSet to_vertex_set(Set s) const { return VertexSet::from_mask(n_, s); }
  Set from_vertex_set(const VertexSet& s) const { return s.words().empty() ? 0 : s.words()[0]; }

  Closed<Set> close(Set s, std::size_t k) {
    if (s == full_) return {full_, 0};
    classes_.clear();
    classes_.push_back(full_ & ~s);
    refine(s);
    while (true) {
      Set absorbed = 0;
      std::size_t min_class = std::numeric_limits<std::size_t>::max();
      std::size_t kept = 0;
      for (Set c : classes_) {
        const auto size = card(c);
        if (size < k) {
          absorbed |= c;
        } else {
          classes_[kept++] = c;
          min_class = std::min(min_class, size);
        }
      }
      classes_.resize(kept);
      if (absorbed == 0) return {s, min_class};
      s |= absorbed;
      if (s == full_) return {full_, 0};
      refine(absorbed);
    }
  }

 private:
  void refine(Set by) {
    while (by != 0) {
      const auto v = static_cast<std::size_t>(std::countr_zero(by));
      by &= by - 1;
      scratch_.clear();
      const Set* first = shells_.data() + offset_[v] + 1;
      const Set* last = shells_.data() + offset_[v + 1];
      for (Set c : classes_) {
        if ((c & (c - 1)) == 0) {
          scratch_.push_back(c);
          continue;
        }
        for (const Set* shell = first; shell != last && c != 0; ++shell) {
          const Set part = c & *shell;
          if (part != 0) {
            scratch_.push_back(part);
            c &= ~part;
          }
        }
      }
      classes_.swap(scratch_);
    }
  }

  std::size_t n_;
  Set full_ = 0;
  std::vector<std::size_t> offset_;
  std::vector<Set> shells_;  // shells_[offset_[s] + d] = vertices at distance d from s
  std::vector<Set> classes_;
  std::vector<Set> scratch_;
};

/// Any order: classes are vertex lists split by sorting on the distance to
/// the refining vertex.
class GenericKernel {
 public:
  using Set = VertexSet;
  using Hash = VertexSetHash;

  explicit GenericKernel(const DistanceMatrix& dm) : dm_(&dm), n_(dm.order()) {}

  Set singleton(Vertex v) const { return VertexSet(n_, {v}); }
  Set full() const { return VertexSet::full(n_); }
  static bool subset(const Set& a, const Set& b) { return a.is_subset_of(b); }
  static Set unite(const Set& a, const Set& b) { return a | b; }
  static std::size_t card(const Set& s) { return s.size(); }
  VertexSet to_vertex_set(const Set& s) const { return s; }
  Set from_vertex_set(const VertexSet& s) const { return s; }

  Closed<Set> close(Set s, std::size_t k) {
    if (s.is_full()) return {std::move(s), 0};
    classes_.clear();
    classes_.emplace_back();
    for (Vertex v = 0; v < n_; ++v)
      if (!s.contains(v)) classes_.back().push_back(v);
    refine(s.members());
    while (true) {
      std::vector<Vertex> absorbed;
      std::size_t min_class = std::numeric_limits<std::size_t>::max();
      std::size_t kept = 0;
      for (auto& c : classes_) {
        if (c.size() < k) {
          absorbed.insert(absorbed.end(), c.begin(), c.end());
        } else {
          min_class = std::min(min_class, c.size());
          if (&classes_[kept] != &c) classes_[kept] = std::move(c);
          ++kept;
        }
      }
      classes_.resize(kept);
      if (absorbed.empty()) return {std::move(s), min_class};
      for (Vertex v : absorbed) s.insert(v);
      if (s.is_full()) return {std::move(s), 0};
      refine(absorbed);
    }
  }

 private:
  void refine(const std::vector<Vertex>& by) {
    for (Vertex v : by) {
      const auto row = dm_->row(v);
      scratch_.clear();
      for (auto& c : classes_) {
        if (c.size() == 1) {
          scratch_.push_back(std::move(c));
          continue;
        }
        std::sort(c.begin(), c.end(), [&](Vertex a, Vertex b) {
          return row[a] != row[b] ? row[a] < row[b] : a < b;
        });
        std::size_t start = 0;
        for (std::size_t i = 1; i <= c.size(); ++i) {
          if (i == c.size() || row[c[i]] != row[c[start]]) {
            scratch_.emplace_back(c.begin() + static_cast<std::ptrdiff_t>(start),
                                  c.begin() + static_cast<std::ptrdiff_t>(i));
            start = i;
          }
        }
      }
      classes_.swap(scratch_);
    }
  }

  const DistanceMatrix* dm_;
  std::size_t n_;
  std::vector<std::vector<Vertex>> classes_;
  std::vector<std::vector<Vertex>> scratch_;
};

}  // namespace detail

/// The closure f(S) for threshold k. Returns V when the recursion absorbs
/// every vertex.
inline VertexSet closure_f(const DistanceMatrix& dm, const VertexSet& s, std::size_t k) {
  if (s.empty()) throw Error("closure needs a non-empty set");
  if (k < 1) throw Error("k must be >= 1");
  if (s.universe() != dm.order()) throw Error("vertex set does not match graph");
  if (dm.order() <= 64) {
    detail::SmallKernel kernel(dm);
    return kernel.to_vertex_set(kernel.close(kernel.from_vertex_set(s), k).set);
  }
  detail::GenericKernel kernel(dm);
  return kernel.close(s, k).set;
}

// ---------------------------------------------------------------------------
// Level-wise closure search
// ---------------------------------------------------------------------------

enum class Verdict { Found, Absent, Unknown };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Found: return "found";
    case Verdict::Absent: return "absent";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

struct SearchLimits {
  /// Largest number of distinct sets kept in one level; exceeding it turns the
  /// verdict into Unknown.
  std::size_t max_frontier = 2'000'000;
  /// Wall-clock budget per search; exhausting it turns the verdict into Unknown.
  std::optional<std::chrono::milliseconds> time_budget;
};

struct SearchOutcome {
  Verdict verdict = Verdict::Unknown;
  std::optional<VertexSet> witness;
  std::size_t witness_k_check = 0;          // k of the witness, recomputed independently
  std::vector<std::size_t> frontier_stats;  // |C_1|, |C_2|, ... (after deduplication)
  std::string diagnostic;
};

struct BasisOutcome : SearchOutcome {
  /// Smallest cardinality in the last level examined (absent for an empty level).
  std::optional<std::size_t> min_frontier_card;
};

namespace detail {

/// Runs the level-wise search. With `basis == false` the first k-antiresolving
/// closure (in join order) is returned. With `basis == true` the smallest
/// k-antiresolving closure seen so far is returned as soon as its size does
/// not exceed the smallest set of the current level; every k-antiresolving
/// basis is then either already explored or covered by sets of that level, so
/// the witness is a basis.
template <class Kernel>
BasisOutcome run_search(Kernel& kernel, const DistanceMatrix& dm, std::size_t k, std::size_t m,
                        const SearchLimits& limits, bool basis) {
  using Set = typename Kernel::Set;
  using Hash = typename Kernel::Hash;
  struct Entry {
    Set set;
    std::size_t card;
    std::size_t min_class;
  };

  if (k < 1) throw Error("k must be >= 1");
  if (m < 1) throw Error("m must be >= 1");

  const auto start = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    return limits.time_budget &&
           std::chrono::steady_clock::now() - start > *limits.time_budget;
  };

  BasisOutcome out;
  std::optional<Entry> best;
  auto finish_found = [&](const Set& s) {
    out.verdict = Verdict::Found;
    out.witness = kernel.to_vertex_set(s);
    out.witness_k_check = antiresolving_k(dm, *out.witness);
    return out;
  };
  auto all_full = [&](const std::vector<Entry>& level) {
    return std::all_of(level.begin(), level.end(), [](const Entry& e) { return e.min_class == 0; });
  };
  // Returns true when the basis condition fires for this level.
  auto basis_check = [&](const std::vector<Entry>& level) {
    std::optional<std::size_t> min_card;
    for (const auto& e : level) {
      min_card = min_card ? std::min(*min_card, e.card) : e.card;
      if (e.min_class == k && (!best || e.card < best->card)) best = e;
    }
    out.min_frontier_card = min_card;
    return best && (!min_card || best->card <= *min_card);
  };

  const std::size_t n = dm.order();
  std::vector<Entry> level;
  std::unordered_set<Set, Hash> in_level;
  for (Vertex v = 0; v < n; ++v) {
    auto closed = kernel.close(kernel.singleton(v), k);
    if (!basis && closed.min_class == k) {
      out.frontier_stats.push_back(level.size() + 1);
      return finish_found(closed.set);
    }
    if (in_level.insert(closed.set).second)
      level.push_back({closed.set, Kernel::card(closed.set), closed.min_class});
  }
  out.frontier_stats.push_back(level.size());
  if (basis && basis_check(level)) return finish_found(best->set);
  if (all_full(level)) {
    out.verdict = Verdict::Absent;
    return out;
  }

  for (std::size_t h = 2; h <= m; ++h) {
    std::vector<Entry> next;
    std::unordered_set<Set, Hash> in_next;
    std::unordered_set<Set, Hash> unions;
    std::size_t joins = 0;
    for (std::size_t i = 0; i < level.size(); ++i) {
      for (std::size_t j = i + 1; j < level.size(); ++j) {
        const Set& a = level[i].set;
        const Set& b = level[j].set;
        if (Kernel::subset(a, b) || Kernel::subset(b, a)) continue;
        Set u = Kernel::unite(a, b);
        if (unions.size() < limits.max_frontier) {
          if (!unions.insert(u).second) continue;
        }
        auto closed = kernel.close(std::move(u), k);
        if (!basis && closed.min_class == k) {
          out.frontier_stats.push_back(next.size() + 1);
          return finish_found(closed.set);
        }
        if (in_next.insert(closed.set).second) {
          const auto card = Kernel::card(closed.set);
          next.push_back({std::move(closed.set), card, closed.min_class});
          if (next.size() > limits.max_frontier) {
            out.frontier_stats.push_back(next.size());
            out.diagnostic = "frontier cap exceeded at level " + std::to_string(h);
            return out;
          }
        }
        if ((++joins & 1023U) == 0 && out_of_time()) {
          out.frontier_stats.push_back(next.size());
          out.diagnostic = "time budget exhausted at level " + std::to_string(h);
          return out;
        }
      }
    }
    out.frontier_stats.push_back(next.size());
    level = std::move(next);
    if (basis && basis_check(level)) return finish_found(best->set);
    if (all_full(level)) {
      out.verdict = Verdict::Absent;
      return out;
    }
  }
  return out;
}

template <class F>
decltype(auto) with_kernel(const DistanceMatrix& dm, F&& f) {
  if (dm.order() <= 64) {
    SmallKernel kernel(dm);
    return f(kernel);
  }
  GenericKernel kernel(dm);
  return f(kernel);
}

}  // namespace detail

/// Searches for a k-antiresolving set among closures of at most 2^(m-1)
/// joined singletons. Found answers are always correct; Absent means every
/// closure of the last level is V, which rules out any k-antiresolving set.
inline SearchOutcome find_antiresolving_set(const DistanceMatrix& dm, std::size_t k, std::size_t m,
                                            const SearchLimits& limits = {}) {
  return detail::with_kernel(dm, [&](auto& kernel) -> SearchOutcome {
    return detail::run_search(kernel, dm, k, m, limits, false);
  });
}

inline SearchOutcome find_antiresolving_set(const Graph& g, std::size_t k, std::size_t m,
                                            const SearchLimits& limits = {}) {
  return find_antiresolving_set(all_pairs_distances(g), k, m, limits);
}

/// As `find_antiresolving_set`, but Found additionally certifies that the
/// witness has minimum cardinality among all k-antiresolving sets.
inline BasisOutcome find_antiresolving_basis(const DistanceMatrix& dm, std::size_t k, std::size_t m,
                                             const SearchLimits& limits = {}) {
  return detail::with_kernel(dm, [&](auto& kernel) {
    return detail::run_search(kernel, dm, k, m, limits, true);
  });
}

inline BasisOutcome find_antiresolving_basis(const Graph& g, std::size_t k, std::size_t m,
                                             const SearchLimits& limits = {}) {
  return find_antiresolving_basis(all_pairs_distances(g), k, m, limits);
}

struct AdimBound {
  std::size_t value = 0;
  bool exact = false;  // false: only an upper bound on adim_k
  VertexSet witness;
};

inline std::optional<AdimBound> adim_upper_bound(const DistanceMatrix& dm, std::size_t k,
                                                 std::size_t m, const SearchLimits& limits = {}) {
  auto b = find_antiresolving_basis(dm, k, m, limits);
  if (b.verdict == Verdict::Found) return AdimBound{b.witness->size(), true, *b.witness};
  if (b.verdict == Verdict::Absent) return std::nullopt;
  auto s = find_antiresolving_set(dm, k, m, limits);
  if (s.verdict == Verdict::Found) return AdimBound{s.witness->size(), false, *s.witness};
  return std::nullopt;
}

inline std::optional<AdimBound> adim_upper_bound(const Graph& g, std::size_t k, std::size_t m,
                                                 const SearchLimits& limits = {}) {
  return adim_upper_bound(all_pairs_distances(g), k, m, limits);
}

}  // namespace antidim
