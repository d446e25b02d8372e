#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "patchwork/catalog.hpp"
#include "patchwork/io.hpp"
#include "patchwork/regularity.hpp"

using namespace patchwork;

TEST(Regularity, CatalogLiftingsSatisfyFoldingConditions) {
  for (const auto& name : catalog_names()) {
    const Triangulation t = catalog(name);
    EXPECT_TRUE(verify_lifting(t).empty()) << name;
    EXPECT_TRUE(oracle::lifting_is_convex(t, *t.lifting())) << name;
  }
}

TEST(Regularity, WorkedInstanceOnBat) {
  const Triangulation t = catalog("bat");
  const Edge e = make_edge(t.index_of({1, 0}), t.index_of({0, 1}));
  bool seen = false;
  for (const auto& c : folding_conditions(t)) {
    if (c.edge != e) continue;
    seen = true;
    EXPECT_EQ(c.opposite, make_edge(t.index_of({0, 0}), t.index_of({1, 1})));
    const auto& w = *t.lifting();
    EXPECT_EQ(w[c.opposite.first] + w[c.opposite.second], 4 + 1);
    EXPECT_EQ(w[c.edge.first] + w[c.edge.second], 2 + 2);
    EXPECT_EQ(c.scale, 1);
    EXPECT_EQ(c.coef_v, 1);
    EXPECT_EQ(c.coef_x, 1);
  }
  EXPECT_TRUE(seen);
}

TEST(Regularity, ViolationsAreReported) {
  const Triangulation t = catalog("bat");
  auto w = *t.lifting();
  w[t.index_of({1, 1})] = 3;
  w[t.index_of({0, 0})] = 0;  // 0 + 3 <= 2 + 2
  const auto v = verify_lifting(t, w);
  ASSERT_FALSE(v.empty());
  EXPECT_FALSE(oracle::lifting_is_convex(t, w));
  EXPECT_NE(format_violation(t, v.front()).find(" vs "), std::string::npos);
  EXPECT_THROW(verify_lifting(t, std::vector<long long>(3, 0)), InputError);
  EXPECT_THROW(verify_lifting(honeycomb(3)), InputError);
}

TEST(Regularity, AffineChangesDoNotAffectViolations) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> small(-5, 5);
  for (const auto& name : catalog_names()) {
    const Triangulation t = catalog(name);
    auto broken = *t.lifting();
    broken[t.index_of({1, 1})] -= 1000;
    const auto base = verify_lifting(t, broken).size();
    EXPECT_GT(base, 0u);
    for (int rep = 0; rep < 5; ++rep) {
      const int a = small(rng), b = small(rng), c = small(rng);
      auto w = *t.lifting(), wb = broken;
      for (int i = 0; i < t.num_points(); ++i) {
        const long long aff = a * t.point(i).x + b * t.point(i).y + c;
        w[i] += aff;
        wb[i] += aff;
      }
      EXPECT_TRUE(verify_lifting(t, w).empty()) << name;
      EXPECT_EQ(verify_lifting(t, wb).size(), base) << name;
    }
  }
}

TEST(Regularity, FindLiftingProducesValidLiftings) {
  std::vector<Triangulation> ts{honeycomb(1), honeycomb(4), honeycomb(7), bow_tie(6), framed_chessboard(8), catalog("moth")};
  for (int s = 0; s < 10; ++s) ts.push_back(random_flip_walk(honeycomb(5), 100, s));
  for (const auto& t : ts) {
    const auto w = find_lifting(t);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(verify_lifting(t, *w).empty());
    EXPECT_TRUE(oracle::lifting_is_convex(t, *w));
    for (const long long x : *w) EXPECT_GE(x, 0);
  }
}

TEST(Regularity, NonregularTriangulationHasNoLifting) {
  const Triangulation t = triangulation_from_json(read_json_file(std::string(PATCHWORK_DATA_DIR) + "/samples/nonregular_d10.json"));
  EXPECT_TRUE(t.validate().ok());
  EXPECT_FALSE(find_lifting(t).has_value());
}
