#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "patchwork/patchwork.hpp"
#include "patchwork/signs.hpp"

using namespace patchwork;

namespace {

SignDistribution random_signs(int d, std::mt19937_64& rng) {
  std::vector<std::uint8_t> b(num_lattice_points(d));
  for (auto& x : b) x = static_cast<std::uint8_t>(rng() & 1u);
  return SignDistribution(d, std::move(b));
}

}  // namespace

TEST(Signs, ExtensionMatchesDirectFormula) {
  std::mt19937_64 rng(1);
  for (int d = 1; d <= 7; ++d) {
    const auto s = random_signs(d, rng);
    const Diamond D(d);
    for (const auto& p : D.points()) EXPECT_EQ(extend(s, p), oracle::extended_sign(s.bits(), d, {p.x, p.y}));
  }
}

// Opposite boundary edges are bicolored together even though for odd d the
// two copies of a boundary point carry opposite signs.
TEST(Signs, BicoloringIsWellDefinedOnIdentifiedEdges) {
  std::mt19937_64 rng(2);
  for (int d = 1; d <= 7; ++d) {
    const Surface S(honeycomb(d));
    for (int rep = 0; rep < 20; ++rep) {
      const auto s = random_signs(d, rng);
      for (const auto& e : S.edges()) {
        if (!e.boundary) continue;
        const LatticePoint a = S.diamond().point(e.a), b = S.diamond().point(e.b);
        EXPECT_EQ(extend(s, a) ^ extend(s, b), extend(s, -a) ^ extend(s, -b));
        if (d % 2 == 1) EXPECT_NE(extend(s, a), extend(s, -a));
      }
    }
  }
}

TEST(Signs, NamedDistributions) {
  const auto eta = harnack(3);
  for (const auto& p : lattice_points(3)) EXPECT_EQ(eta.at(p), ((p.x + 1) * (p.y + 1)) % 2);
  EXPECT_EQ(format_signs(harnack(2), 0), "101001");
  EXPECT_EQ(format_signs(constant_signs(2)), "1111 11");
  EXPECT_THROW(SignDistribution(2, std::vector<std::uint8_t>(5, 0)), InputError);
}

TEST(Signs, ParseAndFormatRoundTrip) {
  const auto s = parse_signs(6, "1100 0001 1111 0010 1001 1101 0000");
  EXPECT_EQ(s.size(), 28);
  EXPECT_EQ(format_signs(s), "1100 0001 1111 0010 1001 1101 0000");
  EXPECT_EQ(parse_signs(6, format_signs(s, 0)), s);
  EXPECT_THROW(parse_signs(2, "1102 11"), ParseError);
  EXPECT_THROW(parse_signs(2, "11111"), InputError);
  try {
    parse_signs(2, "11x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(Signs, OrbitsHaveEightMembersAndCanonicalizeIsIdempotent) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 10000; ++rep) {
    const int d = 1 + static_cast<int>(rng() % 7);
    const auto s = random_signs(d, rng);
    const auto orb = orbit(s);
    EXPECT_EQ(std::set<SignDistribution>(orb.begin(), orb.end()).size(), 8u);
    const auto c = canonicalize(s);
    EXPECT_TRUE(is_canonical(c));
    EXPECT_EQ(canonicalize(c), c);
    EXPECT_EQ(std::count_if(orb.begin(), orb.end(), [](const auto& t) { return is_canonical(t); }), 1);
    for (const auto& t : orb) EXPECT_EQ(canonicalize(t), c);
  }
}

// Orbit members computed straight from the definition: restrict the
// reflected extension to A, optionally complemented.
TEST(Signs, ActionMatchesDefinition) {
  std::mt19937_64 rng(4);
  for (int d = 1; d <= 6; ++d) {
    const auto s = random_signs(d, rng);
    for (const Symmetry g : klein_symmetries)
      for (int eps = 0; eps < 2; ++eps) {
        const auto t = act(s, g, eps);
        for (const auto& p : lattice_points(d)) {
          const auto q = apply_symmetry(p, g);
          EXPECT_EQ(t.at(p), oracle::extended_sign(s.bits(), d, {q.x, q.y}) ^ eps);
        }
      }
  }
}

TEST(Signs, ClassCountsMatchOrbitEnumeration) {
  for (int d = 1; d <= 3; ++d) {
    const int n = num_lattice_points(d);
    std::set<SignDistribution> reps;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) reps.insert(canonicalize(SignDistribution::from_mask(d, m)));
    EXPECT_EQ(reps.size(), class_count(d));
  }
  const std::vector<std::uint64_t> expected{1, 8, 128, 4096, 262144, 33554432, 8589934592ULL, 4398046511104ULL};
  for (int d = 1; d <= 8; ++d) EXPECT_EQ(class_count(d), expected[d - 1]);
  EXPECT_THROW(class_count(11), UnsupportedDegree);
}

TEST(Signs, ClassIndexBijection) {
  for (int d = 1; d <= 4; ++d)
    for (std::uint64_t k = 0; k < class_count(d); ++k) {
      const auto s = from_index(d, k);
      EXPECT_TRUE(is_canonical(s));
      EXPECT_EQ(index(s), k);
      EXPECT_EQ(s.mask(), class_mask(d, k));
    }
  std::mt19937_64 rng(6);
  for (int rep = 0; rep < 1000; ++rep) {
    const int d = 5 + static_cast<int>(rng() % 3);
    const std::uint64_t k = rng() % class_count(d);
    EXPECT_EQ(index(from_index(d, k)), k);
    EXPECT_EQ(from_index(d, k).mask(), class_mask(d, k));
  }
  EXPECT_THROW(from_index(2, 8), OutOfRange);
}

TEST(Signs, ToggleAndComplement) {
  const auto s = constant_signs(3);
  const auto t = s.toggled({1, 2});
  EXPECT_EQ(t.at({1, 2}), 0);
  EXPECT_EQ(t.toggled({1, 2}), s);
  EXPECT_THROW(s.toggled({3, 1}), OutOfRange);
  EXPECT_EQ(s.complement(), constant_signs(3, 0));
}
