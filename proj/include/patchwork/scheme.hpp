#pragma once

// Real schemes as rooted trees of ovals, with the ASCII grammar
//   Scheme := '<' Items '>' | '<0>'
//   Items  := Item (' u ' Item)*
//   Item   := 'J' | INT | INT '<' Items '>'
// where "k<X>" stands for k disjoint ovals each containing X.

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "patchwork/error.hpp"

namespace patchwork {

struct OvalNode {
  std::vector<OvalNode> children;

  int size() const {
    int n = 1;
    for (const auto& c : children) n += c.size();
    return n;
  }
  bool operator==(const OvalNode&) const = default;
};

namespace detail {

/// Rendering order: plain ovals first, then larger subtrees, then recursively.
inline int compare_nodes(const OvalNode& a, const OvalNode& b) {
  const bool la = a.children.empty(), lb = b.children.empty();
  if (la != lb) return la ? -1 : 1;
  const int sa = a.size(), sb = b.size();
  if (sa != sb) return sa > sb ? -1 : 1;
  const std::size_t n = std::min(a.children.size(), b.children.size());
  for (std::size_t i = 0; i < n; ++i)
    if (const int c = compare_nodes(a.children[i], b.children[i]); c != 0) return c;
  if (a.children.size() != b.children.size()) return a.children.size() < b.children.size() ? -1 : 1;
  return 0;
}

inline void canonicalize_nodes(std::vector<OvalNode>& nodes) {
  for (auto& n : nodes) canonicalize_nodes(n.children);
  std::sort(nodes.begin(), nodes.end(), [](const OvalNode& a, const OvalNode& b) { return compare_nodes(a, b) < 0; });
}

}  // namespace detail

struct SchemeStats {
  int loops = 0;
  int p = 0;
  int n = 0;
  int max_depth = -1;  // depth of the deepest oval, -1 without ovals
};

class RealScheme {
 public:
  RealScheme() = default;
  RealScheme(bool pseudo_line, std::vector<OvalNode> top) : pseudo_line_(pseudo_line), top_(std::move(top)) {
    detail::canonicalize_nodes(top_);
  }

  bool pseudo_line() const { return pseudo_line_; }
  const std::vector<OvalNode>& root_children() const { return top_; }

  int ovals() const {
    int n = 0;
    for (const auto& c : top_) n += c.size();
    return n;
  }

  SchemeStats stats() const {
    SchemeStats s;
    walk(top_, 0, s);
    s.loops = s.p + s.n + (pseudo_line_ ? 1 : 0);
    return s;
  }

  std::string render() const {
    std::string items = render_items(top_);
    if (pseudo_line_) items = items.empty() ? "J" : "J u " + items;
    if (items.empty()) items = "0";
    return "<" + items + ">";
  }

  bool operator==(const RealScheme&) const = default;
  bool operator<(const RealScheme& o) const { return render() < o.render(); }

  /// Packed bracket code: a leading 1 followed by, for each oval, a 1, the
  /// codes of its children and a 0. Children are ordered by (length, value).
  /// Supports up to 31 ovals.
  std::uint64_t code() const {
    if (ovals() > 31) throw UnsupportedDegree("scheme code supports at most 31 ovals");
    std::vector<std::pair<int, std::uint64_t>> parts;
    for (const auto& c : top_) parts.push_back(node_code(c));
    const auto [len, bits] = concat_codes(parts);
    return (std::uint64_t{1} << len) | bits;
  }

  static RealScheme from_code(std::uint64_t code, bool pseudo_line) {
    if (code == 0) throw InputError("invalid scheme code 0");
    int pos = 62 - std::countl_zero(code);  // first payload bit below the sentinel
    std::vector<OvalNode> top;
    while (pos >= 0) top.push_back(read_node(code, pos));
    return RealScheme(pseudo_line, std::move(top));
  }

  /// Combines (length, bits) codes in canonical order.
  static std::pair<int, std::uint64_t> concat_codes(std::vector<std::pair<int, std::uint64_t>>& parts) {
    std::sort(parts.begin(), parts.end());
    int len = 0;
    std::uint64_t bits = 0;
    for (const auto& [l, b] : parts) {
      bits = (bits << l) | b;
      len += l;
    }
    return {len, bits};
  }

 private:
  static std::pair<int, std::uint64_t> node_code(const OvalNode& n) {
    std::vector<std::pair<int, std::uint64_t>> parts;
    for (const auto& c : n.children) parts.push_back(node_code(c));
    const auto [len, bits] = concat_codes(parts);
    return {len + 2, (std::uint64_t{1} << (len + 1)) | (bits << 1)};
  }

  static OvalNode read_node(std::uint64_t code, int& pos) {
    if (pos < 0 || !((code >> pos) & 1u)) throw InputError("malformed scheme code");
    --pos;
    OvalNode n;
    while (pos >= 0 && ((code >> pos) & 1u)) n.children.push_back(read_node(code, pos));
    if (pos < 0) throw InputError("malformed scheme code");
    --pos;
    return n;
  }

  static void walk(const std::vector<OvalNode>& nodes, int depth, SchemeStats& s) {
    for (const auto& c : nodes) {
      (depth % 2 == 0 ? s.p : s.n) += 1;
      s.max_depth = std::max(s.max_depth, depth);
      walk(c.children, depth + 1, s);
    }
  }

  static std::string render_items(const std::vector<OvalNode>& nodes) {
    std::string out;
    for (std::size_t i = 0; i < nodes.size();) {
      std::size_t j = i;
      while (j < nodes.size() && nodes[j] == nodes[i]) ++j;
      if (!out.empty()) out += " u ";
      out += std::to_string(j - i);
      if (!nodes[i].children.empty()) out += "<" + render_items(nodes[i].children) + ">";
      i = j;
    }
    return out;
  }

  bool pseudo_line_ = false;
  std::vector<OvalNode> top_;
};

namespace detail {

class SchemeParser {
 public:
  explicit SchemeParser(std::string text) : s_(std::move(text)) {}

  RealScheme parse() {
    skip();
    expect('<');
    bool pseudo = false;
    auto items = parse_items(true, pseudo);
    expect('>');
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return RealScheme(pseudo, std::move(items));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  void expect(char c) {
    skip();
    if (i_ >= s_.size() || s_[i_] != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }

  std::vector<OvalNode> parse_items(bool top, bool& pseudo) {
    std::vector<OvalNode> out;
    for (;;) {
      skip();
      if (i_ < s_.size() && s_[i_] == 'J') {
        if (!top) fail("pseudo-line inside an oval");
        if (pseudo) fail("more than one pseudo-line");
        pseudo = true;
        ++i_;
      } else {
        if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected count or 'J'");
        std::size_t k = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
          k = 10 * k + static_cast<std::size_t>(s_[i_] - '0');
          if (k > 1000) fail("count too large");
          ++i_;
        }
        OvalNode n;
        skip();
        if (i_ < s_.size() && s_[i_] == '<') {
          ++i_;
          bool dummy = false;
          n.children = parse_items(false, dummy);
          expect('>');
        }
        for (std::size_t c = 0; c < k; ++c) out.push_back(n);
      }
      skip();
      if (i_ < s_.size() && s_[i_] == 'u') {
        ++i_;
        continue;
      }
      return out;
    }
  }

  std::string s_;
  std::size_t i_ = 0;
};

inline std::string normalize_scheme_text(std::string_view in) {
  std::string out(in);
  const std::pair<std::string_view, std::string_view> repl[] = {
      {"⟨", "<"}, {"⟩", ">"}, {"⊔", " u "}, {"\\langle", "<"}, {"\\rangle", ">"}, {"\\sqcup", " u "}};
  for (const auto& [from, to] : repl) {
    for (std::size_t p = out.find(from); p != std::string::npos; p = out.find(from, p + to.size()))
      out.replace(p, from.size(), to);
  }
  return out;
}

}  // namespace detail

/// Parses ASCII or Unicode notation. Error positions refer to the text after
/// Unicode brackets and cup signs are replaced by their ASCII forms.
inline RealScheme parse_scheme(std::string_view text) {
  return detail::SchemeParser(detail::normalize_scheme_text(text)).parse();
}

inline std::string render(const RealScheme& s) { return s.render(); }

/// M = (d-1)(d-2)/2 + 1.
constexpr int harnack_bound(int d) { return (d - 1) * (d - 2) / 2 + 1; }

/// <J u alpha u 1<beta>> style helper; beta = 0 means no nest.
inline RealScheme make_scheme(bool pseudo, int alpha, int nests = 0, int beta = 0) {
  std::vector<OvalNode> top(static_cast<std::size_t>(alpha));
  for (int i = 0; i < nests; ++i) top.push_back(OvalNode{std::vector<OvalNode>(static_cast<std::size_t>(beta))});
  return RealScheme(pseudo, std::move(top));
}

/// Known classification lists for degrees 1 to 7 (including the empty scheme
/// for even degree).
inline std::vector<RealScheme> enumerate_schemes(int d) {
  if (d < 1) throw InvalidDegree("degree must be >= 1, got " + std::to_string(d));
  std::vector<RealScheme> out;
  const auto nested3 = [](bool pseudo) {
    return RealScheme(pseudo, {OvalNode{{OvalNode{{OvalNode{}}}}}});
  };
  switch (d) {
    case 1: out = {make_scheme(true, 0)}; break;
    case 2: out = {make_scheme(false, 0), make_scheme(false, 1)}; break;
    case 3: out = {make_scheme(true, 0), make_scheme(true, 1)}; break;
    case 4:
      for (int a = 0; a <= 4; ++a) out.push_back(make_scheme(false, a));
      out.push_back(make_scheme(false, 0, 1, 1));
      break;
    case 5:
      for (int a = 0; a <= 6; ++a) out.push_back(make_scheme(true, a));
      out.push_back(make_scheme(true, 0, 1, 1));
      break;
    case 6:
      for (int a = 0; a <= 9; ++a)
        for (int b = 1; b <= 9; ++b) {
          const int s = a + b, diff = ((a - b) % 8 + 8) % 8;
          if (s > 10) continue;
          if (s == 10 && diff != 0) continue;
          if (s == 9 && diff != 1 && diff != 7) continue;
          out.push_back(make_scheme(false, a, 1, b));
        }
      for (int a = 0; a <= 10; ++a) out.push_back(make_scheme(false, a));
      out.push_back(nested3(false));
      break;
    case 7:
      for (int a = 0; a <= 13; ++a)
        for (int b = 1; b <= 13; ++b)
          if (a + b <= 14) out.push_back(make_scheme(true, a, 1, b));
      for (int a = 0; a <= 15; ++a) out.push_back(make_scheme(true, a));
      out.push_back(nested3(true));
      break;
    default: throw UnsupportedDegree("no classification list for degree " + std::to_string(d));
  }
  return out;
}

}  // namespace patchwork
