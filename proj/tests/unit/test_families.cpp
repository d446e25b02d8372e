#include <gtest/gtest.h>

#include <random>

#include "patchwork/families.hpp"
#include "patchwork/patchwork.hpp"

using namespace patchwork;

TEST(Families, OnionClosedForm) {
  EXPECT_EQ(onion_scheme(1).render(), "<J>");
  EXPECT_EQ(onion_scheme(2).render(), "<1>");
  EXPECT_EQ(onion_scheme(6).render(), "<1<1<1>>>");
  EXPECT_EQ(onion_scheme(7).render(), "<J u 1<1<1>>>");
  for (int d = 1; d <= 10; ++d) {
    const auto f = family("onion", d);
    EXPECT_EQ(Patchwork(f.triangulation, f.signs).scheme(), f.expected_scheme) << d;
  }
}

TEST(Families, SpecialHarnackClosedForm) {
  EXPECT_EQ(special_harnack_scheme(7).render(), "<J u 15>");
  EXPECT_EQ(special_harnack_scheme(8).render(), "<18 u 1<3>>");
  EXPECT_EQ(special_harnack_scheme(6).render(), "<9 u 1<1>>");
  for (int d = 1; d <= 10; ++d) {
    const auto s = special_harnack_scheme(d);
    EXPECT_EQ(s.ovals() + (s.pseudo_line() ? 1 : 0), harnack_bound(d)) << d;
    const auto f = family("special_harnack", d);
    EXPECT_EQ(Patchwork(f.triangulation, f.signs).scheme(), s) << d;
  }
}

TEST(Families, SpecialHarnackOnRandomTriangulations) {
  for (int d = 4; d <= 8; ++d)
    for (int seed = 0; seed < 50; ++seed) {
      const Triangulation t = random_flip_walk(honeycomb(d), 5 * d * d, 1000 * d + seed);
      EXPECT_EQ(Patchwork(t, harnack(d)).scheme(), special_harnack_scheme(d)) << d << " " << seed;
    }
}

TEST(Families, NestedBox) {
  EXPECT_EQ(nested_box_scheme(6).render(), "<9 u 1<1>>");
  EXPECT_EQ(nested_box_scheme(8).render(), "<17 u 1<2 u 1<1>>>");
  EXPECT_THROW(nested_box_scheme(7), InvalidDegree);
  EXPECT_THROW(nested_box_scheme(4), InvalidDegree);
  for (int d = 6; d <= 12; d += 2) {
    const auto f = family("nested_box", d);
    EXPECT_EQ(Patchwork(f.triangulation, f.signs).scheme(), f.expected_scheme) << d;
    EXPECT_EQ(f.expected_scheme.ovals(), harnack_bound(d)) << d;  // M-curves
  }
}

TEST(Families, Arrowheads) {
  const auto [row, both] = arrowheads_schemes(8);
  EXPECT_EQ(row, parse_scheme("<17 u 1<2> u 1<1>>"));
  EXPECT_EQ(both, parse_scheme("<16 u 3<1>>"));
  for (int d : {8, 12}) {
    for (const char* v : {"arrowheads_row", "arrowheads_both"}) {
      const auto f = family(v, d);
      EXPECT_EQ(Patchwork(f.triangulation, f.signs).scheme(), f.expected_scheme) << v << " " << d;
    }
  }
  EXPECT_THROW(arrowheads_schemes(10), InvalidDegree);
  EXPECT_THROW(arrowheads_signs(8, "column"), InputError);
}

// Flipping edges away from row and column d-4 of the framed chessboard does
// not change the arrowheads scheme.
TEST(Families, ArrowheadsInsensitiveToDistantFlips) {
  const int d = 8;
  const auto f = family("arrowheads_row", d);
  std::mt19937_64 rng(8);
  int done = 0;
  for (const auto& q : f.triangulation.interior_edges()) {
    if (!q.convex) continue;
    bool near = false;
    for (const int i : {q.edge.first, q.edge.second, q.opposite.first, q.opposite.second}) {
      const LatticePoint p = f.triangulation.point(i);
      near |= p.x == d - 4 || p.y == d - 4 || p.x == d - 5 || p.y == d - 5 || p.x == d - 3 || p.y == d - 3;
    }
    if (near || rng() % 2) continue;
    EXPECT_EQ(Patchwork(f.triangulation.flip(q.edge), f.signs).scheme(), f.expected_scheme);
    ++done;
  }
  EXPECT_GT(done, 0);
}

TEST(Families, UnknownFamily) {
  EXPECT_THROW(family("spiral", 6), InputError);
  EXPECT_EQ(family_names().size(), 5u);
}
