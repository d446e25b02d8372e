#pragma once

// Infinite families of T-curves: closed-form schemes and (T, sigma) builders.

#include <string>
#include <string_view>
#include <vector>

#include "patchwork/error.hpp"
#include "patchwork/scheme.hpp"
#include "patchwork/signs.hpp"
#include "patchwork/triangulation.hpp"

namespace patchwork {

/// floor(d/2) nested ovals, plus the pseudo-line for odd d.
inline RealScheme onion_scheme(int d) {
  require_degree(d);
  std::vector<OvalNode> top;
  const int depth = d / 2;
  if (depth > 0) {
    OvalNode n;
    for (int i = 1; i < depth; ++i) n = OvalNode{{n}};
    top.push_back(n);
  }
  return RealScheme(d % 2 == 1, std::move(top));
}

/// d = 2k: <3(k^2-k)/2 u 1<(k-1)(k-2)/2>>; odd d: <J u (d-1)(d-2)/2>.
inline RealScheme special_harnack_scheme(int d) {
  require_degree(d);
  if (d % 2 == 1) return make_scheme(true, (d - 1) * (d - 2) / 2);
  const int k = d / 2;
  if (k == 1) return make_scheme(false, 1);
  return make_scheme(false, 3 * (k * k - k) / 2, 1, (k - 1) * (k - 2) / 2);
}

/// <d(d+2)/4 - 3 u 1<d-6 u 1<d-8 u ... 1<2 u 1<1>>...>>>.
inline RealScheme nested_box_scheme(int d) {
  if (d < 6 || d % 2 != 0) throw InvalidDegree("nested box curves need even d >= 6, got " + std::to_string(d));
  OvalNode box{{OvalNode{}}};
  for (int c = 2; c <= d - 6; c += 2) {
    OvalNode outer{std::vector<OvalNode>(static_cast<std::size_t>(c))};
    outer.children.push_back(box);
    box = outer;
  }
  std::vector<OvalNode> top(static_cast<std::size_t>(d * (d + 2) / 4 - 3));
  top.push_back(box);
  return RealScheme(false, std::move(top));
}

inline void require_arrowheads_degree(int d) {
  if (d < 8 || d % 4 != 0) throw InvalidDegree("arrowheads curves need d divisible by 4 and d >= 8, got " + std::to_string(d));
}

/// First: "row" variant, second: "both" variant (d = 2k).
inline std::pair<RealScheme, RealScheme> arrowheads_schemes(int d) {
  require_arrowheads_degree(d);
  const int k = d / 2;
  const int big = 3 * (k * k - k) / 2;
  const int inner = (k - 1) * (k - 2) / 2;
  const OvalNode one{{OvalNode{}}};
  std::vector<OvalNode> a(static_cast<std::size_t>(big - 1));
  a.push_back(one);
  a.push_back(OvalNode{std::vector<OvalNode>(static_cast<std::size_t>(inner - 1))});
  std::vector<OvalNode> b(static_cast<std::size_t>(big - 2));
  b.push_back(one);
  b.push_back(one);
  b.push_back(OvalNode{std::vector<OvalNode>(static_cast<std::size_t>(inner - 2))});
  return {RealScheme(false, std::move(a)), RealScheme(false, std::move(b))};
}

/// Harnack signs with the two 0 signs of row d-4 set to 1 ("row"); "both"
/// does the same for column d-4.
inline SignDistribution arrowheads_signs(int d, std::string_view variant) {
  require_arrowheads_degree(d);
  if (variant != "row" && variant != "both") throw InputError("arrowheads variant must be 'row' or 'both'");
  std::vector<std::uint8_t> b = harnack(d).bits();
  b[lex_index({1, d - 4}, d)] = 1;
  b[lex_index({3, d - 4}, d)] = 1;
  if (variant == "both") {
    b[lex_index({d - 4, 1}, d)] = 1;
    b[lex_index({d - 4, 3}, d)] = 1;
  }
  return SignDistribution(d, std::move(b));
}

struct FamilySpec {
  std::string name;
  int degree = 0;
  RealScheme expected_scheme;
  Triangulation triangulation;
  SignDistribution signs;
};

inline const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"onion", "special_harnack", "nested_box", "arrowheads_row", "arrowheads_both"};
  return names;
}

/// The family member of degree d, built on its standard triangulation
/// (special Harnack uses the honeycomb; any unimodular one works).
inline FamilySpec family(std::string_view name, int d) {
  require_degree(d);
  if (name == "onion") return {"onion", d, onion_scheme(d), honeycomb(d), constant_signs(d)};
  if (name == "special_harnack") return {"special_harnack", d, special_harnack_scheme(d), honeycomb(d), harnack(d)};
  if (name == "nested_box") {
    auto s = nested_box_scheme(d);
    return {"nested_box", d, s, bow_tie(d), constant_signs(d)};
  }
  if (name == "arrowheads_row" || name == "arrowheads_both") {
    const auto [row, both] = arrowheads_schemes(d);
    const bool is_row = name == "arrowheads_row";
    return {std::string(name), d, is_row ? row : both, framed_chessboard(d), arrowheads_signs(d, is_row ? "row" : "both")};
  }
  throw InputError("unknown family '" + std::string(name) + "'");
}

}  // namespace patchwork
