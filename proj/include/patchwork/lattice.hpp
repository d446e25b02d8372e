#pragma once

// Integer geometry of the scaled triangle A(d) = d*Delta_2 and of the diamond
// {|x| + |y| <= d} that carries the four reflected copies of a triangulation.

#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "patchwork/error.hpp"

namespace patchwork {

struct LatticePoint {
  int x = 0;
  int y = 0;

  constexpr auto operator<=>(const LatticePoint&) const = default;
  constexpr LatticePoint operator-() const { return {-x, -y}; }
  constexpr LatticePoint operator+(LatticePoint o) const { return {x + o.x, y + o.y}; }
  constexpr LatticePoint operator-(LatticePoint o) const { return {x - o.x, y - o.y}; }
};

inline std::ostream& operator<<(std::ostream& os, LatticePoint p) {
  return os << '(' << p.x << ',' << p.y << ')';
}

inline std::string to_string(LatticePoint p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

constexpr long long cross(LatticePoint a, LatticePoint b) {
  return static_cast<long long>(a.x) * b.y - static_cast<long long>(a.y) * b.x;
}

/// Twice the signed area of (a, b, c); positive for counter-clockwise order.
constexpr long long orient(LatticePoint a, LatticePoint b, LatticePoint c) {
  return cross(b - a, c - a);
}

inline void require_degree(int d) {
  if (d < 1) throw InvalidDegree("degree must be >= 1, got " + std::to_string(d));
}

/// |A(d)| = (d+1)(d+2)/2.
constexpr int num_lattice_points(int d) { return (d + 1) * (d + 2) / 2; }

constexpr bool in_triangle(LatticePoint p, int d) {
  return p.x >= 0 && p.y >= 0 && p.x + p.y <= d;
}

constexpr bool in_diamond(LatticePoint p, int d) {
  return std::abs(p.x) + std::abs(p.y) <= d;
}

constexpr bool on_diamond_boundary(LatticePoint p, int d) {
  return std::abs(p.x) + std::abs(p.y) == d;
}

/// Position of p in the lexicographic order (0,0),(0,1),...,(0,d),(1,0),...,(d,0).
constexpr int lex_index(LatticePoint p, int d) {
  // Rows x = 0..p.x-1 contribute (d+1) + d + ... + (d - p.x + 2) points.
  return p.x * (d + 1) - p.x * (p.x - 1) / 2 + p.y;
}

inline std::vector<LatticePoint> lattice_points(int d) {
  require_degree(d);
  std::vector<LatticePoint> pts;
  pts.reserve(num_lattice_points(d));
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j + i <= d; ++j) pts.push_back({i, j});
  return pts;
}

constexpr std::pair<int, int> parity_form(LatticePoint p) {
  return {((p.x % 2) + 2) % 2, ((p.y % 2) + 2) % 2};
}

/// The eight elements of the dihedral group generated by the reflection
/// s(x,y) = (-x,y) and the swap t(x,y) = (y,x).
enum class Symmetry : std::uint8_t {
  identity,   // e
  negate_x,   // s
  negate_y,   // tst
  negate_xy,  // s * tst, the point reflection
  swap,       // t
  swap_negate_x,   // (x,y) -> (-y, x), s t
  swap_negate_y,   // (x,y) -> (y, -x), t s
  swap_negate_xy,  // (x,y) -> (-y, -x), reflection at x = -y
};

inline constexpr std::array<Symmetry, 8> all_symmetries = {
    Symmetry::identity, Symmetry::negate_x,      Symmetry::negate_y,      Symmetry::negate_xy,
    Symmetry::swap,     Symmetry::swap_negate_x, Symmetry::swap_negate_y, Symmetry::swap_negate_xy};

/// The Klein four-group <s, tst> used by sign-distribution equivalence.
inline constexpr std::array<Symmetry, 4> klein_symmetries = {
    Symmetry::identity, Symmetry::negate_x, Symmetry::negate_y, Symmetry::negate_xy};

constexpr LatticePoint apply_symmetry(LatticePoint p, Symmetry g) {
  switch (g) {
    case Symmetry::identity: return p;
    case Symmetry::negate_x: return {-p.x, p.y};
    case Symmetry::negate_y: return {p.x, -p.y};
    case Symmetry::negate_xy: return {-p.x, -p.y};
    case Symmetry::swap: return {p.y, p.x};
    case Symmetry::swap_negate_x: return {-p.y, p.x};
    case Symmetry::swap_negate_y: return {p.y, -p.x};
    case Symmetry::swap_negate_xy: return {-p.y, -p.x};
  }
  return p;
}

/// A vertex of the cell surface: an equivalence class of diamond points under
/// the antipodal identification of the diamond boundary.
struct SurfaceVertex {
  LatticePoint representative;
  bool on_boundary = false;

  constexpr auto operator<=>(const SurfaceVertex&) const = default;
};

inline SurfaceVertex identify(LatticePoint p, int d) {
  if (!in_diamond(p, d))
    throw OutOfRange(to_string(p) + " lies outside the diamond of degree " + std::to_string(d));
  if (!on_diamond_boundary(p, d)) return {p, false};
  return {std::min(p, -p), true};
}

/// Indexing of the diamond points and of the identified vertex set S_0.
class Diamond {
 public:
  explicit Diamond(int d) : d_(d) {
    require_degree(d);
    row_offset_.resize(2 * d + 2);
    int n = 0;
    for (int x = -d; x <= d; ++x) {
      row_offset_[x + d] = n;
      const int h = d - std::abs(x);
      for (int y = -h; y <= h; ++y) points_.push_back({x, y});
      n += 2 * h + 1;
    }
    row_offset_[2 * d + 1] = n;

    vertex_of_.assign(points_.size(), -1);
    sheet_flip_.assign(points_.size(), 0);
    for (std::size_t i = 0; i < points_.size(); ++i) {
      const SurfaceVertex v = identify(points_[i], d);
      if (v.representative == points_[i]) {
        vertex_of_[i] = static_cast<int>(vertices_.size());
        vertices_.push_back(v);
      }
    }
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (vertex_of_[i] >= 0) continue;
      const int rep = index(-points_[i]);
      vertex_of_[i] = vertex_of_[rep];
      sheet_flip_[i] = 1;
    }
  }

  int degree() const { return d_; }
  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<LatticePoint>& points() const { return points_; }
  LatticePoint point(int i) const { return points_[i]; }

  int index(LatticePoint p) const {
    if (!in_diamond(p, d_))
      throw OutOfRange(to_string(p) + " lies outside the diamond of degree " + std::to_string(d_));
    const int h = d_ - std::abs(p.x);
    return row_offset_[p.x + d_] + p.y + h;
  }

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  const std::vector<SurfaceVertex>& vertices() const { return vertices_; }
  /// S_0 id of the diamond point with index i.
  int vertex_of(int i) const { return vertex_of_[i]; }
  /// 1 when diamond point i is the non-representative member of an antipodal pair.
  int sheet_flip(int i) const { return sheet_flip_[i]; }

 private:
  int d_;
  std::vector<int> row_offset_;
  std::vector<LatticePoint> points_;
  std::vector<SurfaceVertex> vertices_;
  std::vector<int> vertex_of_;
  std::vector<std::uint8_t> sheet_flip_;
};

}  // namespace patchwork
