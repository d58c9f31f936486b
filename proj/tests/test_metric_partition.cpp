#include <gtest/gtest.h>

#include <random>

#include "antidim/generators.hpp"
#include "antidim/metric_partition.hpp"
#include "antidim/structural_theory.hpp"
#include "support/reference.hpp"

using namespace antidim;

TEST(Representation, Examples) {
  const auto c6 = all_pairs_distances(cycle_graph(6));
  EXPECT_EQ(representation(c6, 2, VertexSet(6, {0})), Representation{2});
  const auto p5 = all_pairs_distances(path_graph(5));
  EXPECT_EQ(representation(p5, 0, VertexSet(5, {2})), Representation{2});
  EXPECT_EQ(representation(p5, 4, VertexSet(5, {2})), Representation{2});
  EXPECT_EQ(representation(p5, 3, VertexSet(5, {1, 3})), (Representation{2, 0}));
  EXPECT_THROW(representation(p5, 0, VertexSet(5)), Error);
}

TEST(Partition, Examples) {
  const auto c4 = all_pairs_distances(cycle_graph(4));
  const auto p = partition(c4, VertexSet(4, {0}));
  ASSERT_EQ(p.classes.size(), 2u);
  EXPECT_EQ(p.classes[0], VertexSet(4, {1, 3}));
  EXPECT_EQ(p.classes[1], VertexSet(4, {2}));
  EXPECT_EQ(p.k_value, 1u);

  const auto k5 = all_pairs_distances(complete_graph(5));
  const auto q = partition(k5, VertexSet(5, {1, 4}));
  ASSERT_EQ(q.classes.size(), 1u);
  EXPECT_EQ(q.k_value, 3u);

  const auto star = all_pairs_distances(star_graph(5));
  EXPECT_EQ(partition(star, VertexSet(5, {0})).k_value, 4u);

  EXPECT_THROW(partition(c4, VertexSet::full(4)), Error);
  EXPECT_THROW(partition(c4, VertexSet(4)), Error);
}

TEST(AntiresolvingK, Examples) {
  EXPECT_EQ(antiresolving_k(all_pairs_distances(path_graph(5)), VertexSet(5, {2})), 2u);
  EXPECT_EQ(antiresolving_k(all_pairs_distances(cycle_graph(6)), VertexSet(6, {0, 3})), 2u);
  for (std::size_t n = 2; n <= 9; ++n) {
    const auto dm = all_pairs_distances(complete_graph(n));
    VertexSet s(n);
    for (Vertex t = 0; t + 1 < n; ++t) {
      s.insert(t);
      EXPECT_EQ(antiresolving_k(dm, s), n - s.size());
    }
  }
}

TEST(IsKAntiresolving, ExactEquality) {
  const auto k5 = all_pairs_distances(complete_graph(5));
  EXPECT_TRUE(is_k_antiresolving(k5, VertexSet(5, {0, 1}), 3));
  EXPECT_FALSE(is_k_antiresolving(k5, VertexSet(5, {0, 1}), 2));
  const auto c4 = all_pairs_distances(cycle_graph(4));
  EXPECT_FALSE(is_k_antiresolving(c4, VertexSet(4, {0}), 2));
  EXPECT_THROW(is_k_antiresolving(c4, VertexSet(4, {0}), 0), Error);
}

TEST(IsKAntiresolving, ResolvingSetsAreOneAntiresolving) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = random_graph(seed, 1, 10);
    const auto dm = all_pairs_distances(g);
    const std::size_t n = g.order();
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
      const auto s = VertexSet::from_mask(n, mask);
      if (is_resolving(dm, s)) { ASSERT_TRUE(is_k_antiresolving(dm, s, 1)); }
    }
  }
}

TEST(Partition, MatchesReferenceAndIsCanonical) {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto g = random_graph(seed, 1, 12);
    const auto dm = all_pairs_distances(g);
    const auto fw = ref::floyd_warshall(g);
    const std::size_t n = g.order();
    for (int trial = 0; trial < 20; ++trial) {
      const auto mask = std::uniform_int_distribution<std::uint64_t>(1, (std::uint64_t{1} << n) - 2)(rng);
      const auto s = VertexSet::from_mask(n, mask);
      const auto p = partition(dm, s);
      ASSERT_EQ(*p.k_value, static_cast<std::size_t>(*ref::k_of(fw, mask)));
      ASSERT_GE(*p.k_value, 1u);
      ASSERT_LE(*p.k_value, n - s.size());
      VertexSet seen(n);
      for (std::size_t i = 0; i < p.classes.size(); ++i) {
        ASSERT_FALSE(p.classes[i].empty());
        ASSERT_TRUE((seen & p.classes[i]).empty());
        seen |= p.classes[i];
        if (i > 0) { ASSERT_LT(p.vectors[i - 1], p.vectors[i]); }
        p.classes[i].for_each([&](Vertex v) { ASSERT_EQ(representation(dm, v, s), p.vectors[i]); });
      }
      ASSERT_EQ(seen, s.complement());
      const auto again = partition(dm, s);
      ASSERT_EQ(again.classes, p.classes);
    }
  }
}

TEST(Partition, RefinesUnderSupersets) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto g = random_graph(seed, 1, 12);
    const auto dm = all_pairs_distances(g);
    const std::size_t n = g.order();
    for (int trial = 0; trial < 20; ++trial) {
      const auto big = std::uniform_int_distribution<std::uint64_t>(1, (std::uint64_t{1} << n) - 2)(rng);
      auto small = big & rng();
      if (small == 0) small = big & (~big + 1);
      const auto s = VertexSet::from_mask(n, big);
      const auto s2 = VertexSet::from_mask(n, small);
      const auto fine = partition(dm, s);
      const auto coarse = partition(dm, s2);
      for (const auto& c : fine.classes) {
        std::size_t containing = 0;
        for (const auto& d : coarse.classes) {
          if (c.is_subset_of(d)) ++containing;
          else ASSERT_TRUE((c & d).empty());
        }
        ASSERT_EQ(containing, 1u);
      }
    }
  }
}

TEST(Partition, TwinsShareAClass) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = random_graph(seed, 1, 10);
    const auto dm = all_pairs_distances(g);
    const std::size_t n = g.order();
    for (const auto& twins : twin_classes(g)) {
      const auto outside = twins.complement();
      std::uint64_t out_mask = 0;
      outside.for_each([&](Vertex v) { out_mask |= std::uint64_t{1} << v; });
      for (std::uint64_t sub = out_mask; sub != 0; sub = (sub - 1) & out_mask) {
        const auto p = partition(dm, VertexSet::from_mask(n, sub));
        std::size_t hit = 0;
        for (const auto& c : p.classes) hit += !(c & twins).empty();
        ASSERT_EQ(hit, 1u);
      }
    }
  }
}
