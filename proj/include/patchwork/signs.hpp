#pragma once

// Sign distributions sigma: A(d) -> GF(2), their extension to the diamond and
// the eight-element equivalence classes generated by the Klein group
// {id, s, tst, s*tst} and the global flip epsilon.

#include <array>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "patchwork/error.hpp"
#include "patchwork/lattice.hpp"

namespace patchwork {

class SignDistribution {
 public:
  SignDistribution() = default;
  SignDistribution(int degree, std::vector<std::uint8_t> bits) : degree_(degree), bits_(std::move(bits)) {
    require_degree(degree_);
    if (static_cast<int>(bits_.size()) != num_lattice_points(degree_))
      throw InputError("sign vector has length " + std::to_string(bits_.size()) + ", expected " +
                       std::to_string(num_lattice_points(degree_)) + " for degree " + std::to_string(degree_));
    for (auto& b : bits_) b &= 1;
  }

  /// Bits taken from the low |A| bits of `mask` (bit i = lex position i).
  static SignDistribution from_mask(int degree, std::uint64_t mask) {
    require_degree(degree);
    const int n = num_lattice_points(degree);
    if (n > 64) throw UnsupportedDegree("bit masks hold at most 64 points");
    std::vector<std::uint8_t> b(n);
    for (int i = 0; i < n; ++i) b[i] = static_cast<std::uint8_t>((mask >> i) & 1u);
    return SignDistribution(degree, std::move(b));
  }

  int degree() const { return degree_; }
  int size() const { return static_cast<int>(bits_.size()); }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  int operator[](int lex) const { return bits_[lex]; }
  int at(LatticePoint p) const {
    if (!in_triangle(p, degree_)) throw OutOfRange(to_string(p) + " is not a point of A(" + std::to_string(degree_) + ")");
    return bits_[lex_index(p, degree_)];
  }

  std::uint64_t mask() const {
    if (bits_.size() > 64) throw UnsupportedDegree("bit masks hold at most 64 points");
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) m |= static_cast<std::uint64_t>(bits_[i]) << i;
    return m;
  }

  SignDistribution toggled(LatticePoint p) const {
    (void)at(p);
    SignDistribution r = *this;
    r.bits_[lex_index(p, degree_)] ^= 1;
    return r;
  }

  SignDistribution complement() const {
    SignDistribution r = *this;
    for (auto& b : r.bits_) b ^= 1;
    return r;
  }

  auto operator<=>(const SignDistribution&) const = default;

 private:
  int degree_ = 1;
  std::vector<std::uint8_t> bits_;
};

/// Parity correction applied when reflecting a point of A into the diamond.
constexpr int extension_offset(LatticePoint p) {
  return ((p.x < 0 ? -p.x : 0) + (p.y < 0 ? -p.y : 0)) & 1;
}

/// sigma(+-i, +-j) = sigma(i, j) + (i if x < 0) + (j if y < 0) mod 2.
inline int extend(const SignDistribution& s, LatticePoint p) {
  const int d = s.degree();
  if (!in_diamond(p, d)) throw OutOfRange(to_string(p) + " lies outside the diamond of degree " + std::to_string(d));
  const LatticePoint a{std::abs(p.x), std::abs(p.y)};
  return s[lex_index(a, d)] ^ extension_offset(p);
}

inline SignDistribution constant_signs(int d, int value = 1) {
  require_degree(d);
  return SignDistribution(d, std::vector<std::uint8_t>(num_lattice_points(d), static_cast<std::uint8_t>(value & 1)));
}

/// eta(i, j) = (i+1)(j+1) mod 2.
inline SignDistribution harnack(int d) {
  require_degree(d);
  std::vector<std::uint8_t> b;
  for (const LatticePoint p : lattice_points(d)) b.push_back(static_cast<std::uint8_t>(((p.x + 1) * (p.y + 1)) & 1));
  return SignDistribution(d, std::move(b));
}

/// tau(u) = eps + sigma~(g(u)) for u in A.
inline SignDistribution act(const SignDistribution& s, Symmetry g, int eps) {
  const int d = s.degree();
  std::vector<std::uint8_t> b;
  b.reserve(s.size());
  for (const LatticePoint p : lattice_points(d)) b.push_back(static_cast<std::uint8_t>(extend(s, apply_symmetry(p, g)) ^ (eps & 1)));
  return SignDistribution(d, std::move(b));
}

/// The eight members, ordered (g, eps) with g over the Klein group.
inline std::vector<SignDistribution> orbit(const SignDistribution& s) {
  std::vector<SignDistribution> out;
  out.reserve(8);
  for (const Symmetry g : klein_symmetries)
    for (int eps = 0; eps < 2; ++eps) out.push_back(act(s, g, eps));
  return out;
}

inline bool is_canonical(const SignDistribution& s) {
  const int d = s.degree();
  return s[lex_index({0, 0}, d)] == 1 && s[lex_index({1, 0}, d)] == 1 && s[lex_index({0, 1}, d)] == 1;
}

inline SignDistribution canonicalize(const SignDistribution& s) {
  for (auto& t : orbit(s))
    if (is_canonical(t)) return t;
  throw Error("internal", "orbit without canonical member");
}

/// 2^(|A| - 3).
inline std::uint64_t class_count(int d) {
  require_degree(d);
  const int free = num_lattice_points(d) - 3;
  if (free > 63) throw UnsupportedDegree("class indices are 64-bit; degree " + std::to_string(d) + " is too large");
  return std::uint64_t{1} << free;
}

/// Lex positions that are not anchors, ascending.
inline std::vector<int> free_positions(int d) {
  const int a0 = lex_index({0, 0}, d), a1 = lex_index({0, 1}, d), a2 = lex_index({1, 0}, d);
  std::vector<int> f;
  for (int i = 0; i < num_lattice_points(d); ++i)
    if (i != a0 && i != a1 && i != a2) f.push_back(i);
  return f;
}

/// Anchor bits of the canonical representatives as a mask.
inline std::uint64_t anchor_mask(int d) {
  return (std::uint64_t{1} << lex_index({0, 0}, d)) | (std::uint64_t{1} << lex_index({0, 1}, d)) |
         (std::uint64_t{1} << lex_index({1, 0}, d));
}

/// Canonical representative number k: anchors set, bit b of k on the b-th free position.
inline std::uint64_t class_mask(int d, std::uint64_t k) {
  // Free positions are all but 0, 1 and d+1: bits 0 and 1 of k skip over
  // positions 0 and 1, and higher bits skip position d+1 as well.
  const std::uint64_t lo = (k & ((std::uint64_t{1} << (d - 1)) - 1)) << 2;
  const std::uint64_t hi = (k >> (d - 1)) << (d + 2);
  return anchor_mask(d) | lo | hi;
}

inline SignDistribution from_index(int d, std::uint64_t k) {
  if (k >= class_count(d))
    throw OutOfRange("class index " + std::to_string(k) + " out of range for degree " + std::to_string(d));
  std::vector<std::uint8_t> b(num_lattice_points(d), 0);
  b[lex_index({0, 0}, d)] = b[lex_index({0, 1}, d)] = b[lex_index({1, 0}, d)] = 1;
  const auto f = free_positions(d);
  for (std::size_t i = 0; i < f.size(); ++i) b[f[i]] = static_cast<std::uint8_t>((k >> i) & 1u);
  return SignDistribution(d, std::move(b));
}

/// Inverse of from_index on canonical representatives.
inline std::uint64_t index(const SignDistribution& s) {
  const SignDistribution c = canonicalize(s);
  const auto f = free_positions(s.degree());
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < f.size(); ++i) k |= static_cast<std::uint64_t>(c[f[i]]) << i;
  return k;
}

/// '0'/'1' characters in lex order, whitespace ignored.
inline SignDistribution parse_signs(int d, std::string_view text) {
  std::vector<std::uint8_t> b;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c != '0' && c != '1') throw ParseError(std::string("unexpected character '") + c + "' in sign vector", i);
    b.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return SignDistribution(d, std::move(b));
}

/// Lex bit string in groups of `group` characters (0 = no spaces).
inline std::string format_signs(const SignDistribution& s, int group = 4) {
  std::string out;
  for (int i = 0; i < s.size(); ++i) {
    if (group > 0 && i > 0 && i % group == 0) out += ' ';
    out += static_cast<char>('0' + s[i]);
  }
  return out;
}

}  // namespace patchwork
