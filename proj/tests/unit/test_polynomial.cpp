#include <gtest/gtest.h>

#include "patchwork/io.hpp"
#include "patchwork/polynomial.hpp"

using namespace patchwork;

TEST(Polynomial, DegreeOne) {
  const auto t = Triangulation::from_points(1, {{{{0, 0}, {1, 0}, {0, 1}}}});
  const auto f = export_polynomial(t, constant_signs(1));
  EXPECT_EQ(f.to_string(), "-z - y - x");
  EXPECT_EQ(f.terms().size(), 3u);
}

// Direct substitution into sum (-1)^sigma t^w x^i y^j z^(d-i-j).
TEST(Polynomial, DegreeTwoHarnack) {
  const Triangulation h = honeycomb(2);
  const auto f = export_polynomial(h, harnack(2));
  ASSERT_EQ(f.terms().size(), 6u);
  const auto w = lifting_for_export(h);
  EXPECT_TRUE(verify_lifting(h, w).empty());
  for (const auto& m : f.terms()) {
    EXPECT_EQ(m.i + m.j + m.k, 2);
    EXPECT_EQ(m.sign, harnack(2).at({m.i, m.j}) ? -1 : 1);
    EXPECT_EQ(m.t_power, w[h.index_of({m.i, m.j})]);
  }
  const std::string sym = f.to_string();
  EXPECT_NE(sym.find("x^2"), std::string::npos);
  const std::string at_one = f.to_string(parse_rational("1"));
  EXPECT_EQ(at_one.find('t'), std::string::npos);
  EXPECT_NE(f.to_string(parse_rational("1/2")).find("/"), std::string::npos);
}

TEST(Polynomial, UsesShippedLiftingAndCountsMonomials) {
  for (const auto& name : catalog_names()) {
    const Triangulation t = catalog(name);
    const auto f = export_polynomial(t, harnack(t.degree()));
    EXPECT_EQ(static_cast<int>(f.terms().size()), num_lattice_points(t.degree()));
    for (const auto& m : f.terms()) EXPECT_EQ(m.t_power, (*t.lifting())[t.index_of({m.i, m.j})]);
  }
}

TEST(Polynomial, NonregularTriangulationIsRejected) {
  const Triangulation t = triangulation_from_json(read_json_file(std::string(PATCHWORK_DATA_DIR) + "/samples/nonregular_d10.json"));
  EXPECT_THROW(export_polynomial(t, constant_signs(10)), NoLifting);
}

TEST(Polynomial, RationalParsing) {
  EXPECT_EQ(parse_rational("3/6"), boost::multiprecision::cpp_rational(1, 2));
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("1/-2"), InputError);
  EXPECT_THROW(parse_rational("abc"), InputError);
  const auto f = export_polynomial(honeycomb(1), constant_signs(1));
  EXPECT_THROW(f.to_string(parse_rational("-1")), InputError);
}
