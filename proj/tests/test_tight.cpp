#include <gtest/gtest.h>

#include "support.hpp"

using namespace judicious;

TEST(Tight, BlocksOfSmallShapes) {
  // Bowtie: two triangles sharing vertex 2.
  const auto bow = from_arc_list(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  const auto bs = blocks(bow, jt::iota_set(0, 5));
  ASSERT_EQ(bs.size(), 2u);
  for (const auto& b : bs) EXPECT_TRUE(b.is_odd_clique());
  EXPECT_TRUE(is_tight(bow, jt::iota_set(0, 5)));

  // Directed 4-cycle: one block, not a clique.
  const auto c4 = from_arc_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_EQ(blocks(c4, jt::iota_set(0, 4)).size(), 1u);
  EXPECT_FALSE(is_tight(c4, jt::iota_set(0, 4)));

  // A path has K2 blocks, which are even.
  const auto path = from_arc_list(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(blocks(path, jt::iota_set(0, 3)).size(), 2u);
  EXPECT_FALSE(is_tight(path, jt::iota_set(0, 3)));

  // Opposite arcs collapse to one underlying edge.
  const auto k3 = from_arc_list(3, {{0, 1}, {1, 0}, {1, 2}, {2, 0}});
  EXPECT_TRUE(is_tight(k3, jt::iota_set(0, 3)));
  EXPECT_FALSE(has_no_antiparallel(k3, jt::iota_set(0, 3)));

  // Isolated vertex is a K1 block.
  const auto iso = Digraph(1, {});
  ASSERT_EQ(blocks(iso, VertexSet{0}).size(), 1u);
  EXPECT_TRUE(is_tight(iso, VertexSet{0}));
}

TEST(Tight, TwoTrianglesAndAntiparallelArc) {
  const auto two = from_arc_list(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  const auto r = essential_tight_components(two, jt::iota_set(0, 6));
  EXPECT_EQ(r.components.size(), 2u);
  EXPECT_EQ(r.tau, 2u);
  const auto anti = from_arc_list(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {1, 0}});
  const auto r2 = essential_tight_components(anti, jt::iota_set(0, 6));
  EXPECT_EQ(r2.tau, 1u);
  EXPECT_TRUE(r2.tight_flags[0]);
  EXPECT_FALSE(r2.essential_flags[0]);
}

TEST(Tight, MatchesNaiveChecker) {
  for (std::uint64_t s = 0; s < 150; ++s) {
    const std::size_t n = 4 + s % 9;
    // Sparse enough that blocks stay small and varied.
    const auto d = jt::random_digraph(n, 0.08 + 0.04 * (s % 5), 7000 + s);
    const auto x = jt::random_subset(n, s % 3, 7000 + s);
    const auto y = complement(n, x);
    const auto r = essential_tight_components(d, y);
    for (std::size_t i = 0; i < r.components.size(); ++i) {
      const bool naive = jt::naive_is_tight(d, r.components[i]);
      EXPECT_EQ(r.tight_flags[i], naive) << "seed " << s;
      EXPECT_EQ(r.essential_flags[i], naive && has_no_antiparallel(d, r.components[i]));
    }
  }
}

TEST(Tight, ExtremalFamilyComponents) {
  // Pure disjoint union: two K7 and one K9, all tight, all bidirection-free.
  const auto d = gen_tight_extremal(4, 2, false);
  const auto r = essential_tight_components(d, jt::iota_set(0, 23));
  EXPECT_EQ(r.tau, 3u);
  // Augmented: the K7 blocks are tight once the K9 is removed.
  const auto a = gen_tight_extremal(4, 2, true);
  EXPECT_EQ(min_outdegree(a), 4);
  const auto ra = essential_tight_components(a, jt::iota_set(0, 14));
  EXPECT_EQ(ra.tau, 2u);
  // With everything in Y the bridging arcs break tightness.
  EXPECT_EQ(essential_tight_components(a, jt::iota_set(0, 23)).tau, 0u);
}

TEST(Tight, ComponentsSortedBySmallestVertex) {
  const auto d = from_arc_list(6, {{5, 0}, {1, 4}, {2, 3}});
  const auto comps = underlying_components(d, jt::iota_set(0, 6));
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (VertexSet{0, 5}));
  EXPECT_EQ(comps[1], (VertexSet{1, 4}));
  EXPECT_EQ(comps[2], (VertexSet{2, 3}));
}
