#include <gtest/gtest.h>

#include <bit>
#include <fstream>
#include <functional>
#include <random>
#include <set>

#include "patchwork/scheme.hpp"

using namespace patchwork;

TEST(Scheme, RenderAndParse) {
  EXPECT_EQ(parse_scheme("<0>").render(), "<0>");
  EXPECT_EQ(parse_scheme("<J>").render(), "<J>");
  EXPECT_EQ(parse_scheme("<1 u 1<9>>").render(), "<1 u 1<9>>");
  EXPECT_EQ(parse_scheme("<1<9> u 1>").render(), "<1 u 1<9>>");
  EXPECT_EQ(parse_scheme("⟨J ⊔ 15⟩"), make_scheme(true, 15));
  EXPECT_EQ(parse_scheme("\\langle 5 \\sqcup 1\\langle 5\\rangle\\rangle"), make_scheme(false, 5, 1, 5));
  EXPECT_EQ(parse_scheme("<1<1<1>>>").ovals(), 3);
  EXPECT_EQ(parse_scheme("<16 u 3<1>>").ovals(), 22);
  EXPECT_EQ(parse_scheme("<17 u 1<1> u 1<2>>").render(), "<17 u 1<2> u 1<1>>");
}

TEST(Scheme, ParseErrors) {
  for (const char* bad : {"", "<", "<1", "<J u J>", "<1<J>>", "<x>", "<1 u>", "<1>>"})
    EXPECT_THROW(parse_scheme(bad), ParseError) << bad;
}

TEST(Scheme, Statistics) {
  const auto s = parse_scheme("<5 u 1<5>>").stats();
  EXPECT_EQ(s.p, 6);
  EXPECT_EQ(s.n, 5);
  EXPECT_EQ(s.max_depth, 1);
  EXPECT_EQ(parse_scheme("<J u 15>").stats().p, 15);
  EXPECT_EQ(parse_scheme("<J>").stats().max_depth, -1);
  EXPECT_EQ(parse_scheme("<J>").stats().loops, 1);
  const auto nest = parse_scheme("<17 u 1<2 u 1<1>>>").stats();
  EXPECT_EQ(nest.p, 17 + 1 + 1);
  EXPECT_EQ(nest.n, 2 + 1);
}

TEST(Scheme, ClassificationSizes) {
  const std::vector<std::size_t> sizes{1, 2, 2, 6, 8, 56, 121};
  for (int d = 1; d <= 7; ++d) {
    const auto list = enumerate_schemes(d);
    EXPECT_EQ(list.size(), sizes[d - 1]) << d;
    EXPECT_EQ(std::set<RealScheme>(list.begin(), list.end()).size(), list.size());
    for (const auto& s : list) {
      EXPECT_EQ(s.pseudo_line(), d % 2 == 1);
      EXPECT_LE(s.ovals() + (s.pseudo_line() ? 1 : 0), harnack_bound(d));
      EXPECT_EQ(parse_scheme(s.render()), s);
    }
  }
  EXPECT_THROW(enumerate_schemes(8), UnsupportedDegree);
}

// Degree 6: M-curves are exactly <9 u 1<1>>, <5 u 1<5>>, <1 u 1<9>>.
TEST(Scheme, DegreeSixMCurves) {
  std::set<std::string> m;
  for (const auto& s : enumerate_schemes(6))
    if (s.ovals() == 11) m.insert(s.render());
  EXPECT_EQ(m, (std::set<std::string>{"<9 u 1<1>>", "<5 u 1<5>>", "<1 u 1<9>>"}));
}

// The 55 support-table schemes are exactly the nonempty degree-6 schemes.
TEST(Scheme, SupportTableCoversNonemptyDegreeSix) {
  std::ifstream is(std::string(PATCHWORK_DATA_DIR) + "/table1.csv");
  ASSERT_TRUE(is);
  std::string line;
  std::getline(is, line);
  std::set<RealScheme> table;
  while (std::getline(is, line))
    if (!line.empty()) table.insert(parse_scheme(line.substr(0, line.find(','))));
  std::set<RealScheme> nonempty;
  for (const auto& s : enumerate_schemes(6))
    if (s.ovals() > 0) nonempty.insert(s);
  EXPECT_EQ(table, nonempty);
}

TEST(Scheme, CodeRoundTrip) {
  for (int d = 1; d <= 7; ++d)
    for (const auto& s : enumerate_schemes(d)) {
      EXPECT_EQ(RealScheme::from_code(s.code(), s.pseudo_line()), s);
      EXPECT_EQ(std::bit_width(s.code()) - 1, 2 * s.ovals());
    }
  std::mt19937 rng(3);
  for (int rep = 0; rep < 500; ++rep) {
    // Random forests of up to 20 ovals.
    std::function<OvalNode(int&)> grow = [&](int& budget) {
      OvalNode n;
      while (budget > 0 && rng() % 3 == 0) {
        --budget;
        n.children.push_back(grow(budget));
      }
      return n;
    };
    int budget = 20;
    std::vector<OvalNode> top;
    while (budget > 0 && rng() % 4 != 0) {
      --budget;
      top.push_back(grow(budget));
    }
    const RealScheme s(rep % 2 == 1, top);
    EXPECT_EQ(RealScheme::from_code(s.code(), s.pseudo_line()), s);
    EXPECT_EQ(parse_scheme(s.render()), s);
  }
}

TEST(Scheme, HarnackBound) {
  EXPECT_EQ(harnack_bound(6), 11);
  EXPECT_EQ(harnack_bound(7), 16);
  EXPECT_EQ(harnack_bound(2), 1);
}
