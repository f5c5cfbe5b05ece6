#include <gtest/gtest.h>

#include "support.hpp"

using namespace judicious;

namespace {

Count brute_max_min(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  Count best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Bipartition p(n);
    for (std::size_t v = 0; v < n; ++v) p[static_cast<Vertex>(v)] = (mask >> v & 1U) ? Side::Two : Side::One;
    best = std::max(best, cut_counts(d, p).minval);
  }
  return best;
}

}  // namespace

TEST(Oracle, SmallValues) {
  EXPECT_EQ(exact_max_min_cut(gen_eulerian_complete(3)).optimum, 1);
  EXPECT_EQ(exact_max_min_cut(gen_star_triangle(6)).optimum, 1);
  EXPECT_EQ(exact_max_min_cut(gen_eulerian_complete(9)).optimum, 10);
  EXPECT_EQ(exact_max_min_cut(Digraph(1, {})).optimum, 0);
}

TEST(Oracle, MatchesPlainEnumerationAndWitness) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const auto d = jt::random_digraph(3 + s % 8, 0.35, 40 + s);
    const auto r = exact_max_min_cut(d);
    EXPECT_EQ(r.optimum, brute_max_min(d));
    EXPECT_EQ(cut_counts(d, r.witness).minval, r.optimum);
    EXPECT_EQ(r.witness[0], Side::One);
    EXPECT_EQ(r.evaluated, std::uint64_t{1} << (d.vertex_count() - 1));
  }
}

TEST(Oracle, StarTriangleCentreSideBound) {
  const std::size_t n = 7;
  const auto d = gen_star_triangle(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Bipartition p(n, Side::Two);
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1U) p[static_cast<Vertex>(v)] = Side::One;
    if (p[0] != Side::One) continue;
    EXPECT_LE(cut_counts(d, p).e12, 1);
  }
}

TEST(Oracle, Limits) {
  EXPECT_THROW(exact_max_min_cut(Digraph(0, {})), Error);
  try {
    exact_max_min_cut(gen_sec6_d4(25));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
    EXPECT_TRUE(is_resource_limit(e.kind()));
  }
  EXPECT_NO_THROW(exact_max_min_cut(gen_sec6_d4(12), 12));
}

TEST(Oracle, MinGapWitnessIsOptimal) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const std::size_t n = 8 + s % 5;
    const auto x = jt::random_subset(n, 1 + s % 6, 60 + s);
    const auto d = jt::random_digraph(n, 0.3, 60 + s);
    const auto y = complement(n, x);
    const auto w = exact_min_gap(d, x, y);
    EXPECT_EQ(std::abs(gap(d, w.x1, w.x2, y)), w.theta_abs);
    EXPECT_EQ(w.x1.size() + w.x2.size(), x.size());
  }
}
