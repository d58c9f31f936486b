#include <gtest/gtest.h>

#include <random>

#include "antidim/closure_search.hpp"
#include "antidim/exact_oracle.hpp"
#include "antidim/generators.hpp"
#include "support/reference.hpp"

using namespace antidim;

namespace {

// Closure by literal iteration of the absorption rule on the reference matrix.
std::uint64_t reference_closure(const ref::Matrix& d, std::uint64_t s, int k) {
  const int n = static_cast<int>(d.size());
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  while (s != full) {
    std::map<std::vector<int>, std::uint64_t> classes;
    const auto src = ref::members(s);
    for (int v = 0; v < n; ++v) {
      if ((s >> v) & 1) continue;
      std::vector<int> key;
      for (int u : src) key.push_back(d[v][u]);
      classes[key] |= std::uint64_t{1} << v;
    }
    std::uint64_t small = 0;
    for (const auto& [key, c] : classes)
      if (std::popcount(c) < k) small |= c;
    if (small == 0) break;
    s |= small;
  }
  return s;
}

std::uint64_t mask_of(const VertexSet& s) {
  std::uint64_t m = 0;
  s.for_each([&](Vertex v) { m |= std::uint64_t{1} << v; });
  return m;
}

}  // namespace

TEST(Closure, Examples) {
  const auto p5 = all_pairs_distances(path_graph(5));
  EXPECT_EQ(closure_f(p5, VertexSet(5, {0}), 1), VertexSet(5, {0}));
  EXPECT_TRUE(closure_f(p5, VertexSet(5, {0}), 2).is_full());
  // {v0..v3} in P_5 leaves the lone class {v4}
  EXPECT_TRUE(closure_f(p5, VertexSet(5, {0, 1, 2, 3}), 2).is_full());
  EXPECT_EQ(closure_f(p5, VertexSet(5, {2}), 2), VertexSet(5, {2}));
  EXPECT_THROW(closure_f(p5, VertexSet(5), 2), Error);
  EXPECT_THROW(closure_f(p5, VertexSet(5, {1}), 0), Error);
}

TEST(Closure, MatchesReferenceIteration) {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto g = random_graph(seed, 1, 12);
    const auto dm = all_pairs_distances(g);
    const auto fw = ref::floyd_warshall(g);
    const std::size_t n = g.order();
    for (int trial = 0; trial < 10; ++trial) {
      const auto s = std::uniform_int_distribution<std::uint64_t>(1, (std::uint64_t{1} << n) - 1)(rng);
      const int k = std::uniform_int_distribution<int>(1, static_cast<int>(n))(rng);
      ASSERT_EQ(mask_of(closure_f(dm, VertexSet::from_mask(n, s), k)), reference_closure(fw, s, k));
    }
  }
}

TEST(Closure, AlgebraicLaws) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto g = random_graph(rng(), 1, 12);
    const auto dm = all_pairs_distances(g);
    const std::size_t n = g.order();
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    const auto s_mask = std::uniform_int_distribution<std::uint64_t>(1, full)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, n)(rng);
    const auto s = VertexSet::from_mask(n, s_mask);
    const auto fs = closure_f(dm, s, k);
    ASSERT_TRUE(s.is_subset_of(fs));
    ASSERT_EQ(closure_f(dm, fs, k), fs);
    const auto sub_mask = s_mask & rng();
    if (sub_mask == 0 || sub_mask == s_mask) continue;
    const auto sub = VertexSet::from_mask(n, sub_mask);
    const auto rest = VertexSet::from_mask(n, s_mask & ~sub_mask);
    ASSERT_TRUE(closure_f(dm, sub, k).is_subset_of(fs));
    ASSERT_EQ(closure_f(dm, closure_f(dm, rest, k) | closure_f(dm, sub, k), k), fs);
  }
}

TEST(Closure, AbsorptionStaysInsideAntiresolvingSets) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for_each_connected_graph(n, [&](const Graph& g) {
      const auto dm = all_pairs_distances(g);
      const auto fw = ref::floyd_warshall(g);
      for (std::uint64_t big = 1; big + 1 < (std::uint64_t{1} << n); ++big) {
        const int k = *ref::k_of(fw, big);
        for (std::uint64_t sub = big; sub != 0; sub = (sub - 1) & big)
          ASSERT_TRUE(closure_f(dm, VertexSet::from_mask(n, sub), k).is_subset_of(VertexSet::from_mask(n, big)));
      }
    });
  }
}

TEST(Closure, KernelsAgree) {
  std::mt19937_64 rng(23);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = random_graph(seed, 1, 40);
    const auto dm = all_pairs_distances(g);
    const std::size_t n = g.order();
    detail::SmallKernel small(dm);
    detail::GenericKernel generic(dm);
    for (int trial = 0; trial < 20; ++trial) {
      const auto mask = rng() & ((std::uint64_t{1} << n) - 1);
      if (mask == 0) continue;
      const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
      const auto a = small.close(mask, k);
      const auto b = generic.close(VertexSet::from_mask(n, mask), k);
      ASSERT_EQ(VertexSet::from_mask(n, a.set), b.set);
      ASSERT_EQ(a.min_class, b.min_class);
    }
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto x = detail::run_search(small, dm, k, 2, {}, true);
      const auto y = detail::run_search(generic, dm, k, 2, {}, true);
      ASSERT_EQ(x.verdict, y.verdict);
      ASSERT_EQ(x.witness, y.witness);
      ASSERT_EQ(x.frontier_stats, y.frontier_stats);
    }
  }
}

TEST(Closure, LargeGraphsUseTheGenericKernel) {
  const auto g = cycle_graph(101);
  const auto dm = all_pairs_distances(g);
  EXPECT_EQ(closure_f(dm, VertexSet(101, {0}), 2), VertexSet(101, {0}));
  const auto r = find_antiresolving_basis(dm, 2, 1);
  ASSERT_EQ(r.verdict, Verdict::Found);
  EXPECT_EQ(r.witness->size(), 1u);
  const auto kn = complete_graph(80);
  const auto s = find_antiresolving_set(kn, 79, 1);
  ASSERT_EQ(s.verdict, Verdict::Found);
  EXPECT_EQ(*s.witness, VertexSet(80, {0}));
}

TEST(SetSearch, Examples) {
  const auto k6 = find_antiresolving_set(complete_graph(6), 5, 1);
  ASSERT_EQ(k6.verdict, Verdict::Found);
  EXPECT_EQ(k6.witness->size(), 1u);
  EXPECT_EQ(k6.witness_k_check, 5u);

  const auto p5 = find_antiresolving_set(path_graph(5), 3, 2);
  EXPECT_NE(p5.verdict, Verdict::Found);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = random_graph(seed, 1, 15);
    EXPECT_EQ(find_antiresolving_set(g, g.order(), 1).verdict, Verdict::Absent);
  }
  EXPECT_THROW(find_antiresolving_set(Graph(3, {{0, 1}}), 1, 1), Error);
  EXPECT_THROW(find_antiresolving_set(path_graph(3), 0, 1), Error);
  EXPECT_THROW(find_antiresolving_set(path_graph(3), 1, 0), Error);
}

TEST(BasisSearch, Examples) {
  const auto c5 = find_antiresolving_basis(cycle_graph(5), 2, 1);
  ASSERT_EQ(c5.verdict, Verdict::Found);
  EXPECT_EQ(c5.witness->size(), 1u);

  const auto c6 = find_antiresolving_basis(cycle_graph(6), 2, 2);
  ASSERT_EQ(c6.verdict, Verdict::Found);
  EXPECT_EQ(c6.witness->size(), 2u);

  const auto k32 = find_antiresolving_basis(complete_bipartite_graph(3, 2), 3, 3);
  ASSERT_EQ(k32.verdict, Verdict::Found);
  EXPECT_EQ(k32.witness->size(), 2u);
  ASSERT_TRUE(k32.min_frontier_card.has_value());
  EXPECT_LE(k32.witness->size(), *k32.min_frontier_card);
}

TEST(AdimUpperBound, Examples) {
  const auto k5 = adim_upper_bound(complete_graph(5), 3, 2);
  ASSERT_TRUE(k5);
  EXPECT_EQ(k5->value, 2u);
  EXPECT_TRUE(k5->exact);
  const auto p5 = adim_upper_bound(path_graph(5), 2, 2);
  ASSERT_TRUE(p5);
  EXPECT_EQ(p5->value, 1u);
}

TEST(Search, FrontierCapGivesUnknown) {
  SearchLimits tight;
  tight.max_frontier = 3;
  const auto g = random_graph(5, 3, 30);
  bool saw_cap = false;
  for (std::size_t k = 1; k <= 6; ++k) {
    const auto r = find_antiresolving_basis(g, k, 3, tight);
    if (!r.diagnostic.empty()) {
      saw_cap = true;
      EXPECT_EQ(r.verdict, Verdict::Unknown);
    }
  }
  EXPECT_TRUE(saw_cap);
}

TEST(Search, SoundAgainstReferenceOracle) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for_each_connected_graph(n, [&](const Graph& g) {
      const auto dm = all_pairs_distances(g);
      const auto sp = ref::spectrum(ref::floyd_warshall(g));
      for (std::size_t k = 1; k <= g.max_degree(); ++k) {
        const auto it = sp.find(static_cast<int>(k));
        for (std::size_t m = 1; m <= 3; ++m) {
          const auto a = find_antiresolving_set(dm, k, m);
          const auto b = find_antiresolving_basis(dm, k, m);
          if (a.verdict == Verdict::Found) { ASSERT_EQ(a.witness_k_check, k); }
          if (a.verdict == Verdict::Absent || b.verdict == Verdict::Absent) { ASSERT_EQ(it, sp.end()); }
          if (b.verdict == Verdict::Found) {
            ASSERT_NE(it, sp.end());
            ASSERT_EQ(b.witness->size(), static_cast<std::size_t>(it->second.size));
            ASSERT_EQ(b.witness_k_check, k);
          }
        }
      }
    });
  }
}

TEST(Search, LevelSizesAreBoundedByPairCounts) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = random_graph(seed, 2, 20);
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto r = find_antiresolving_basis(g, k, 3);
      for (std::size_t h = 1; h < r.frontier_stats.size(); ++h) {
        const auto prev = r.frontier_stats[h - 1];
        ASSERT_LE(r.frontier_stats[h], prev * (prev - (prev > 0)) / 2);
      }
    }
  }
}

TEST(Search, SuccessGrowsWithM) {
  std::size_t known[4] = {0, 0, 0, 0};
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto g = random_graph(seed, 3, 18);
    const auto dm = all_pairs_distances(g);
    for (std::size_t m = 1; m <= 3; ++m) {
      const auto v = find_antiresolving_basis(dm, 3, m).verdict;
      if (v != Verdict::Unknown) ++known[m];
      if (m > 1 && v == Verdict::Unknown) {
        ASSERT_EQ(find_antiresolving_basis(dm, 3, m - 1).verdict, Verdict::Unknown);
      }
    }
  }
  EXPECT_LE(known[1], known[2]);
  EXPECT_LE(known[2], known[3]);
}

TEST(Search, WitnessIsDeterministic) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = random_graph(seed, 2, 25);
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto a = find_antiresolving_set(g, k, 2);
      const auto b = find_antiresolving_set(g, k, 2);
      ASSERT_EQ(a.verdict, b.verdict);
      ASSERT_EQ(a.witness, b.witness);
    }
  }
}
