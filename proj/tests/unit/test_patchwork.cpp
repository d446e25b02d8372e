#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "patchwork/catalog.hpp"
#include "patchwork/evaluator.hpp"
#include "patchwork/patchwork.hpp"

using namespace patchwork;

namespace {

SignDistribution random_signs(int d, std::mt19937_64& rng) {
  std::vector<std::uint8_t> b(num_lattice_points(d));
  for (auto& x : b) x = static_cast<std::uint8_t>(rng() & 1u);
  return SignDistribution(d, std::move(b));
}

Triangulation random_triangulation(int d, std::mt19937_64& rng) {
  return random_flip_walk(honeycomb(d), 10 * d * d, rng());
}

std::set<int> region_vertices(const Patchwork& p, int r) {
  return {p.regions()[r].vertices.begin(), p.regions()[r].vertices.end()};
}

}  // namespace

TEST(Patchwork, SurfaceIsProjectivePlane) {
  for (int d = 1; d <= 8; ++d) {
    const Surface S(honeycomb(d));
    EXPECT_EQ(S.num_vertices(), 2 * d * d + 1);
    EXPECT_EQ(S.num_edges(), 6 * d * d);
    EXPECT_EQ(S.num_triangles(), 4 * d * d);
    EXPECT_EQ(S.euler_characteristic(), 1);
  }
}

// Loop, pseudo-line and region counts against the coordinate-level oracle.
TEST(Patchwork, AgreesWithOracleOnRandomInstances) {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 300; ++rep) {
    const int d = 1 + static_cast<int>(rng() % 7);
    const Triangulation t = random_triangulation(d, rng);
    const auto s = random_signs(d, rng);
    const Patchwork p(t, s);
    const auto o = oracle::summarize(t, s.bits());
    EXPECT_EQ(static_cast<int>(p.loops().size()), o.loops);
    EXPECT_EQ(p.num_pseudo_lines(), o.pseudo_lines);
    EXPECT_EQ(static_cast<int>(p.regions().size()), o.regions);
    EXPECT_EQ(o.vertices - o.edges + o.faces, 1);
    EXPECT_TRUE(p.check_invariants().empty());
    if (d % 2 == 1) EXPECT_TRUE(p.orientation_reversing_regions().empty());
  }
}

TEST(Patchwork, EvaluatorAgreesWithFullConstruction) {
  std::mt19937_64 rng(12);
  for (const auto& name : catalog_names()) {
    const Triangulation t = catalog(name);
    Evaluator ev(t);
    for (int rep = 0; rep < 200; ++rep) {
      const auto s = random_signs(t.degree(), rng);
      const Patchwork p(t, s);
      const auto r = ev.evaluate(s);
      EXPECT_EQ(r.code, p.scheme().code()) << name;
      EXPECT_EQ(r.loops(), static_cast<int>(p.loops().size()));
    }
  }
  for (int rep = 0; rep < 300; ++rep) {
    const int d = 1 + static_cast<int>(rng() % 8);
    const Triangulation t = random_triangulation(d, rng);
    const auto s = random_signs(d, rng);
    EXPECT_EQ(Evaluator(t).scheme(s.mask()), Patchwork(t, s).scheme());
  }
}

TEST(Patchwork, SchemeIsConstantOnOrbits) {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 100; ++rep) {
    const int d = 2 + static_cast<int>(rng() % 6);
    const Triangulation t = random_triangulation(d, rng);
    const auto s = random_signs(d, rng);
    const RealScheme ref = Patchwork(t, s).scheme();
    for (const auto& o : orbit(s)) EXPECT_EQ(Patchwork(t, o).scheme(), ref);
  }
}

TEST(Patchwork, DegreeTwoOnesIsOneOval) {
  const Patchwork p(honeycomb(2), constant_signs(2));
  ASSERT_EQ(p.loops().size(), 1u);
  EXPECT_EQ(p.loops()[0].kind, LoopKind::oval);
  EXPECT_EQ(p.scheme().render(), "<1>");
  EXPECT_EQ(p.regions().size(), 2u);
  // The root region lies outside the oval and contains the orientation
  // reversing loop.
  EXPECT_EQ(p.orientation_reversing_regions(), std::vector<int>{p.root_region()});
  EXPECT_EQ(p.nesting_tree().parent[p.root_region()], -1);
  // Every patchwork of degree 2 is a single oval.
  for (std::uint64_t k = 0; k < class_count(2); ++k) EXPECT_EQ(Patchwork(honeycomb(2), from_index(2, k)).scheme().render(), "<1>");
}

TEST(Patchwork, SchemeStatisticsOfKnownCurves) {
  const Patchwork bat(catalog("bat"), parse_signs(6, "1110 1001 1010 0010 1101 1101 0000"));
  EXPECT_EQ(bat.scheme().render(), "<5 u 1<5>>");
  EXPECT_EQ(bat.scheme().stats().p, 6);
  EXPECT_EQ(bat.scheme().stats().n, 5);
  for (const auto& name : {"radiant", "split_radiant", "frayed_radiant", "honeycomb7"}) {
    const Patchwork h(catalog(name), harnack(7));
    EXPECT_EQ(h.scheme().render(), "<J u 15>") << name;
    EXPECT_EQ(h.scheme().stats().p, 15);
    EXPECT_EQ(h.scheme().stats().n, 0);
  }
}

TEST(Patchwork, MonochromeTrianglesCarryNoCurve) {
  const Patchwork p(catalog("moth"), parse_signs(6, "1100 0001 1000 0000 0000 0000 0000"));
  std::set<int> crossed;
  for (const auto& l : p.loops())
    for (const auto& [tri, e] : l.dual_edge_cycle) crossed.insert(tri);
  const auto& S = p.surface();
  for (int t = 0; t < S.num_triangles(); ++t) {
    const auto& pos = S.triangles()[t];
    const bool mono = p.position_sign(pos[0]) == p.position_sign(pos[1]) && p.position_sign(pos[1]) == p.position_sign(pos[2]);
    EXPECT_EQ(crossed.count(t) == 0, mono);
  }
  EXPECT_EQ(p.scheme().render(), "<1<1<1>>>");
}

TEST(Patchwork, RootIsotopyBasics) {
  const Patchwork p(catalog("bat"), harnack(6));
  EXPECT_TRUE(root_isotopic(p, p));
  EXPECT_THROW(root_isotopic(p, Patchwork(honeycomb(2), constant_signs(2))), InputError);
}

// The degree-2 example: flipping (1,0)-(1,1) in honeycomb(2) under the
// constant signs is a bridge flip. Both curves are one oval, the curves differ
// in one quadrant only, and the two regions trade places.
TEST(Patchwork, DegreeTwoBridgeFlip) {
  const Triangulation h = honeycomb(2);
  const auto s = constant_signs(2);
  const Edge e = make_edge(h.index_of({1, 0}), h.index_of({1, 1}));
  ASSERT_TRUE(is_bridge_flip(h, s, e));
  const Triangulation f = h.flip(e);
  const Patchwork a(h, s), b(f, s);
  EXPECT_EQ(a.scheme().render(), "<1>");
  EXPECT_EQ(b.scheme().render(), "<1>");
  EXPECT_FALSE(root_isotopic(a, b));
  const auto agree = quadrant_agreement(a, b);
  EXPECT_EQ(std::count(agree.begin(), agree.end(), true), 3);
  // All signs are 1 on A, so the positive quadrant carries no curve at all;
  // the change happens in the quadrant x < 0, y > 0.
  EXPECT_TRUE(agree[static_cast<int>(Quadrant::pp)]);
  EXPECT_FALSE(agree[static_cast<int>(Quadrant::mp)]);
  const int other_a = 1 - a.root_region(), other_b = 1 - b.root_region();
  EXPECT_EQ(region_vertices(a, a.root_region()), region_vertices(b, other_b));
  EXPECT_EQ(region_vertices(a, other_a), region_vertices(b, b.root_region()));
}

TEST(Patchwork, BridgeFlipProperties) {
  std::mt19937_64 rng(14);
  int tested = 0;
  while (tested < 300) {
    const int d = 3 + static_cast<int>(rng() % 3);
    const Triangulation t = random_triangulation(d, rng);
    const auto s = random_signs(d, rng);
    std::vector<Edge> bridges;
    for (const auto& q : t.interior_edges())
      if (q.convex && is_bridge_flip(t, s, q.edge)) bridges.push_back(q.edge);
    if (bridges.empty()) continue;
    const Edge e = bridges[rng() % bridges.size()];
    const Patchwork a(t, s), b(t.flip(e), s);
    const auto agree = quadrant_agreement(a, b);
    EXPECT_EQ(std::count(agree.begin(), agree.end(), true), 3);
    EXPECT_FALSE(root_isotopic(a, b));
    ++tested;
  }
}

// A quadrangle whose four signs agree on A is still a bridge flip: the four
// vertices have pairwise distinct parity forms, so a reflected copy separates
// the diagonals.
TEST(Patchwork, MonochromeQuadranglesAreBridgeFlips) {
  std::mt19937_64 rng(15);
  for (int rep = 0; rep < 50; ++rep) {
    const int d = 3 + static_cast<int>(rng() % 4);
    const Triangulation t = random_triangulation(d, rng);
    const auto s = constant_signs(d);
    for (const auto& q : t.interior_edges()) {
      if (!q.convex) continue;
      EXPECT_TRUE(is_bridge_flip(t, s, q.edge));
      const auto agree = quadrant_agreement(Patchwork(t, s), Patchwork(t.flip(q.edge), s));
      EXPECT_TRUE(agree[static_cast<int>(Quadrant::pp)]);
      EXPECT_EQ(std::count(agree.begin(), agree.end(), true), 3);
    }
  }
}

TEST(Patchwork, HarnackHasNoBridgeFlipsOnHoneycomb) {
  for (int d = 2; d <= 8; ++d) {
    const Triangulation h = honeycomb(d);
    for (const auto& q : h.interior_edges())
      if (q.convex) EXPECT_FALSE(is_bridge_flip(h, harnack(d), q.edge));
  }
}

TEST(Patchwork, NonBridgeFlipsKeepSchemeWhenCurveIsUntouched) {
  // Three equal signs: a flip moves the curve inside one quadrangle only.
  std::mt19937_64 rng(16);
  int seen = 0;
  for (int rep = 0; rep < 200 && seen < 50; ++rep) {
    const int d = 4;
    const Triangulation t = random_triangulation(d, rng);
    const auto s = random_signs(d, rng);
    for (const auto& q : t.interior_edges()) {
      if (!q.convex || is_bridge_flip(t, s, q.edge)) continue;
      const Patchwork a(t, s), b(t.flip(q.edge), s);
      EXPECT_EQ(a.scheme(), b.scheme());
      EXPECT_TRUE(root_isotopic(a, b));
      ++seen;
      break;
    }
  }
  EXPECT_GT(seen, 0);
}

TEST(Patchwork, NotFlippableEdges) {
  const Triangulation h = honeycomb(3);
  EXPECT_THROW(is_bridge_flip(h, harnack(3), make_edge(h.index_of({0, 0}), h.index_of({1, 0}))), NotFlippable);
}

TEST(Patchwork, DegreeMismatch) {
  EXPECT_THROW(Patchwork(honeycomb(3), constant_signs(4)), InputError);
}
