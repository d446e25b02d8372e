#pragma once

// Triangulations of A(d) = d*Delta_2 cap Z^2. Triangles are stored as sorted
// triples of lexicographic point indices; the list itself is kept sorted so
// that two triangulations compare equal iff they have the same triangles.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "patchwork/error.hpp"
#include "patchwork/lattice.hpp"

namespace patchwork {

using Triangle = std::array<int, 3>;
using Edge = std::pair<int, int>;  // lex indices, first < second

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct InteriorEdgeQuadrangle {
  Edge edge;      // the current diagonal (v, x)
  Edge opposite;  // the two apexes (t, w) of the adjacent triangles
  bool convex = false;  // t, v, w, x in strictly convex position
};

struct ValidationReport {
  bool indices_in_range = true;
  bool unimodular = true;
  bool coverage = true;
  bool vertex_usage = true;
  std::vector<std::string> problems;

  bool ok() const { return indices_in_range && unimodular && coverage && vertex_usage; }
};

class Triangulation {
 public:
  Triangulation() = default;
  Triangulation(int degree, std::vector<Triangle> triangles,
                std::optional<std::vector<long long>> lifting = std::nullopt)
      : degree_(degree), triangles_(std::move(triangles)), lifting_(std::move(lifting)) {
    require_degree(degree_);
    points_ = lattice_points(degree_);
    for (auto& t : triangles_) std::sort(t.begin(), t.end());
    std::sort(triangles_.begin(), triangles_.end());
  }

  /// Builds from triangles given by their corner coordinates.
  static Triangulation from_points(int degree, const std::vector<std::array<LatticePoint, 3>>& tris,
                                   std::optional<std::vector<long long>> lifting = std::nullopt) {
    require_degree(degree);
    std::vector<Triangle> idx;
    idx.reserve(tris.size());
    for (const auto& t : tris) {
      Triangle r{};
      for (int k = 0; k < 3; ++k) {
        if (!in_triangle(t[k], degree))
          throw OutOfRange(to_string(t[k]) + " is not a point of A(" + std::to_string(degree) + ")");
        r[k] = lex_index(t[k], degree);
      }
      idx.push_back(r);
    }
    return Triangulation(degree, std::move(idx), std::move(lifting));
  }

  int degree() const { return degree_; }
  int num_points() const { return static_cast<int>(points_.size()); }
  const std::vector<LatticePoint>& points() const { return points_; }
  LatticePoint point(int i) const { return points_[i]; }
  int index_of(LatticePoint p) const {
    if (!in_triangle(p, degree_))
      throw OutOfRange(to_string(p) + " is not a point of A(" + std::to_string(degree_) + ")");
    return lex_index(p, degree_);
  }

  const std::vector<Triangle>& triangles() const { return triangles_; }
  const std::optional<std::vector<long long>>& lifting() const { return lifting_; }
  void set_lifting(std::optional<std::vector<long long>> w) { lifting_ = std::move(w); }

  /// Same triangle set (liftings are ignored).
  bool same_triangles(const Triangulation& o) const {
    return degree_ == o.degree_ && triangles_ == o.triangles_;
  }
  bool operator==(const Triangulation& o) const {
    return same_triangles(o) && lifting_ == o.lifting_;
  }

  /// Map from each edge to the triangles containing it.
  std::map<Edge, std::vector<int>> edge_map() const {
    std::map<Edge, std::vector<int>> m;
    for (int i = 0; i < static_cast<int>(triangles_.size()); ++i) {
      const auto& t = triangles_[i];
      m[make_edge(t[0], t[1])].push_back(i);
      m[make_edge(t[0], t[2])].push_back(i);
      m[make_edge(t[1], t[2])].push_back(i);
    }
    return m;
  }

  bool has_edge(int a, int b) const {
    const Edge e = make_edge(a, b);
    for (const auto& t : triangles_) {
      const bool ha = t[0] == e.first || t[1] == e.first || t[2] == e.first;
      const bool hb = t[0] == e.second || t[1] == e.second || t[2] == e.second;
      if (ha && hb) return true;
    }
    return false;
  }

  /// Every interior edge with its quadrangle, in edge order.
  std::vector<InteriorEdgeQuadrangle> interior_edges() const {
    std::vector<InteriorEdgeQuadrangle> out;
    for (const auto& [e, tri] : edge_map()) {
      if (tri.size() != 2) continue;
      InteriorEdgeQuadrangle q;
      q.edge = e;
      q.opposite = make_edge(apex(triangles_[tri[0]], e), apex(triangles_[tri[1]], e));
      q.convex = strictly_convex(q);
      out.push_back(q);
    }
    return out;
  }

  std::optional<InteriorEdgeQuadrangle> quadrangle(Edge e) const {
    e = make_edge(e.first, e.second);
    std::vector<int> tri;
    for (int i = 0; i < static_cast<int>(triangles_.size()); ++i)
      if (contains(triangles_[i], e)) tri.push_back(i);
    if (tri.size() != 2) return std::nullopt;
    InteriorEdgeQuadrangle q;
    q.edge = e;
    q.opposite = make_edge(apex(triangles_[tri[0]], e), apex(triangles_[tri[1]], e));
    q.convex = strictly_convex(q);
    return q;
  }

  ValidationReport validate() const {
    ValidationReport r;
    const int n = num_points();
    for (const auto& t : triangles_) {
      for (int v : t)
        if (v < 0 || v >= n) r.indices_in_range = false;
      if (t[0] == t[1] || t[1] == t[2]) r.indices_in_range = false;
    }
    if (!r.indices_in_range) {
      r.unimodular = r.coverage = r.vertex_usage = false;
      r.problems.push_back("triangle vertex index out of range or repeated");
      return r;
    }
    long long area2 = 0;
    for (const auto& t : triangles_) {
      const long long det = std::llabs(orient(points_[t[0]], points_[t[1]], points_[t[2]]));
      area2 += det;
      if (det != 1) {
        r.unimodular = false;
        r.problems.push_back("triangle " + to_string(points_[t[0]]) + to_string(points_[t[1]]) +
                             to_string(points_[t[2]]) + " has |det| " + std::to_string(det));
      }
    }
    const long long d = degree_;
    if (static_cast<long long>(triangles_.size()) != d * d) {
      r.coverage = false;
      r.problems.push_back("expected " + std::to_string(d * d) + " triangles, got " +
                           std::to_string(triangles_.size()));
    }
    if (area2 != d * d) {
      r.coverage = false;
      r.problems.push_back("total area mismatch");
    }
    for (const auto& [e, tri] : edge_map()) {
      const bool boundary = on_boundary_line(points_[e.first], points_[e.second]);
      if (tri.size() > 2 || (boundary && tri.size() != 1) || (!boundary && tri.size() != 2)) {
        r.coverage = false;
        r.problems.push_back("edge " + to_string(points_[e.first]) + to_string(points_[e.second]) +
                             " borders " + std::to_string(tri.size()) + " triangles");
        continue;
      }
      if (tri.size() == 2) {
        const LatticePoint a = points_[e.first], b = points_[e.second];
        const long long s0 = orient(a, b, points_[apex(triangles_[tri[0]], e)]);
        const long long s1 = orient(a, b, points_[apex(triangles_[tri[1]], e)]);
        if ((s0 > 0) == (s1 > 0)) {
          r.coverage = false;
          r.problems.push_back("triangles overlap along edge " + to_string(a) + to_string(b));
        }
      }
    }
    std::vector<char> used(n, 0);
    for (const auto& t : triangles_)
      for (int v : t) used[v] = 1;
    for (int i = 0; i < n; ++i)
      if (!used[i]) {
        r.vertex_usage = false;
        r.problems.push_back("point " + to_string(points_[i]) + " is not a vertex");
      }
    return r;
  }

  /// Exchanges the diagonal of the quadrangle around the interior edge (a, b).
  Triangulation flip(Edge e) const {
    e = make_edge(e.first, e.second);
    std::vector<int> tri;
    for (int i = 0; i < static_cast<int>(triangles_.size()); ++i)
      if (contains(triangles_[i], e)) tri.push_back(i);
    if (tri.size() != 2)
      throw NotFlippable("edge " + edge_string(e) + (tri.empty() ? " is not an edge" : " is a boundary edge"));
    const int t = apex(triangles_[tri[0]], e);
    const int w = apex(triangles_[tri[1]], e);
    InteriorEdgeQuadrangle q{e, make_edge(t, w), false};
    if (!strictly_convex(q))
      throw NotFlippable("quadrangle around " + edge_string(e) + " is not strictly convex");
    std::vector<Triangle> out;
    out.reserve(triangles_.size());
    for (int i = 0; i < static_cast<int>(triangles_.size()); ++i)
      if (i != tri[0] && i != tri[1]) out.push_back(triangles_[i]);
    out.push_back({t, w, e.first});
    out.push_back({t, w, e.second});
    return Triangulation(degree_, std::move(out));
  }

  Triangulation flip(LatticePoint a, LatticePoint b) const { return flip(make_edge(index_of(a), index_of(b))); }

  /// True iff the reflection (x,y) -> (y,x) maps the triangle set onto itself.
  bool is_symmetric() const {
    std::vector<Triangle> mirrored;
    mirrored.reserve(triangles_.size());
    for (const auto& t : triangles_) {
      Triangle m{};
      for (int k = 0; k < 3; ++k) {
        const LatticePoint p = points_[t[k]];
        m[k] = lex_index({p.y, p.x}, degree_);
      }
      std::sort(m.begin(), m.end());
      mirrored.push_back(m);
    }
    std::sort(mirrored.begin(), mirrored.end());
    return mirrored == triangles_;
  }

  std::string edge_string(Edge e) const { return to_string(points_[e.first]) + "-" + to_string(points_[e.second]); }

 private:
  static bool contains(const Triangle& t, Edge e) {
    const auto has = [&](int v) { return t[0] == v || t[1] == v || t[2] == v; };
    return has(e.first) && has(e.second);
  }
  static int apex(const Triangle& t, Edge e) {
    for (int v : t)
      if (v != e.first && v != e.second) return v;
    return -1;
  }
  bool on_boundary_line(LatticePoint a, LatticePoint b) const {
    return (a.x == 0 && b.x == 0) || (a.y == 0 && b.y == 0) ||
           (a.x + a.y == degree_ && b.x + b.y == degree_);
  }
  bool strictly_convex(const InteriorEdgeQuadrangle& q) const {
    const LatticePoint v = points_[q.edge.first], x = points_[q.edge.second];
    const LatticePoint t = points_[q.opposite.first], w = points_[q.opposite.second];
    const long long a = orient(v, x, t), b = orient(v, x, w);
    const long long c = orient(t, w, v), d = orient(t, w, x);
    return ((a > 0 && b < 0) || (a < 0 && b > 0)) && ((c > 0 && d < 0) || (c < 0 && d > 0));
  }

  int degree_ = 1;
  std::vector<LatticePoint> points_;
  std::vector<Triangle> triangles_;
  std::optional<std::vector<long long>> lifting_;
};

/// Honeycomb triangulation: chambers of the affine A2 arrangement
/// (lines x = c, y = c, x + y = c) restricted to d*Delta_2.
inline Triangulation honeycomb(int d) {
  require_degree(d);
  std::vector<std::array<LatticePoint, 3>> tris;
  for (int i = 0; i < d; ++i)
    for (int j = 0; i + j < d; ++j) {
      tris.push_back({LatticePoint{i, j}, {i + 1, j}, {i, j + 1}});
      if (i + j + 2 <= d) tris.push_back({LatticePoint{i + 1, j}, {i, j + 1}, {i + 1, j + 1}});
    }
  return Triangulation::from_points(d, tris);
}

/// Bow tie triangulation B_d (d even): the split along x = y, with the lower
/// half fanned from each diagonal point (j,j) to the row below and the upper
/// half fanned from each diagonal point (i,i) to the column to its right.
inline Triangulation bow_tie(int d) {
  require_degree(d);
  if (d % 2 != 0) throw InvalidDegree("bow tie triangulation needs an even degree, got " + std::to_string(d));
  std::vector<std::array<LatticePoint, 3>> tris;
  for (int j = 1; 2 * j <= d; ++j) {
    // Strip between rows j-1 and j below the diagonal.
    for (int i = j - 1; i <= d - j; ++i) tris.push_back({LatticePoint{j, j}, {i, j - 1}, {i + 1, j - 1}});
    for (int i = j; i < d - j; ++i) tris.push_back({LatticePoint{i, j}, {i + 1, j}, {d - j + 1, j - 1}});
  }
  for (int i = 0; 2 * i + 2 <= d; ++i) {
    // Strip between columns i and i+1 above the diagonal.
    for (int j = i + 1; j + 1 <= d - i - 1; ++j) tris.push_back({LatticePoint{i, i}, {i + 1, j}, {i + 1, j + 1}});
    for (int j = i; j < d - i; ++j) tris.push_back({LatticePoint{i, j}, {i, j + 1}, {i + 1, d - i - 1}});
  }
  return Triangulation::from_points(d, tris);
}

namespace detail {

/// Bounded faces of a plane straight-line graph on points of A(d), each as a
/// counter-clockwise vertex cycle (collinear boundary points included).
inline std::vector<std::vector<LatticePoint>> bounded_faces(const std::set<std::pair<LatticePoint, LatticePoint>>& edges) {
  std::map<LatticePoint, std::vector<LatticePoint>> adj;
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  // Exact counter-clockwise angular order around each vertex.
  for (auto& [p, nbrs] : adj) {
    const auto half = [&](LatticePoint q) {
      const LatticePoint v = q - p;
      return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1;
    };
    std::sort(nbrs.begin(), nbrs.end(), [&](LatticePoint a, LatticePoint b) {
      const int ha = half(a), hb = half(b);
      if (ha != hb) return ha < hb;
      return cross(a - p, b - p) > 0;
    });
  }
  std::set<std::pair<LatticePoint, LatticePoint>> seen;
  std::vector<std::vector<LatticePoint>> faces;
  for (const auto& [p, nbrs] : adj) {
    for (LatticePoint q : nbrs) {
      if (seen.count({p, q})) continue;
      std::vector<LatticePoint> face;
      LatticePoint a = p, b = q;
      while (!seen.count({a, b})) {
        seen.insert({a, b});
        face.push_back(a);
        const auto& nb = adj[b];
        const auto it = std::find(nb.begin(), nb.end(), a);
        const std::size_t k = static_cast<std::size_t>(it - nb.begin());
        const LatticePoint c = nb[(k + nb.size() - 1) % nb.size()];
        a = b;
        b = c;
      }
      long long area2 = 0;
      for (std::size_t i = 0; i < face.size(); ++i) area2 += cross(face[i], face[(i + 1) % face.size()]);
      if (area2 > 0) faces.push_back(std::move(face));
    }
  }
  return faces;
}

}  // namespace detail

/// Framed chessboard triangulation F_d (4 | d, d >= 8). The coarse cell
/// structure consists of the split lines x - y = 0 (mod 4), x + y = 0 (mod 4),
/// the even grid lines and the arrowhead edges; each of its lattice-area-2
/// triangles carries one lattice point on an edge and is split through it.
inline Triangulation framed_chessboard(int d) {
  require_degree(d);
  if (d % 4 != 0 || d < 8)
    throw InvalidDegree("framed chessboard needs d divisible by 4 and d >= 8, got " + std::to_string(d));
  std::set<std::pair<LatticePoint, LatticePoint>> edges;
  const auto add = [&](LatticePoint p, LatticePoint q) {
    if (in_triangle(p, d) && in_triangle(q, d)) edges.insert({std::min(p, q), std::max(p, q)});
  };
  for (int a = 0; 4 * a <= d; ++a)
    for (int b = 0; 4 * b <= d; ++b)
      for (const LatticePoint c : {LatticePoint{4 * a, 4 * b}, LatticePoint{4 * a + 2, 4 * b + 2}}) {
        const int i = c.x, j = c.y;
        for (const int s : {1, -1}) {
          if (i >= j) add(c, {i + s, j - 2});
          if (i > j) add(c, {i + s, j + 2});
          if (i <= j) add(c, {i - 2, j + s});
          if (i < j) add(c, {i + 2, j + s});
        }
        if (i == j) add(c, {i + 1, i + 1});
      }
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j) {
      if (i % 2 == 0) add({i, j}, {i, j + 1});
      if (j % 2 == 0) add({i, j}, {i + 1, j});
      if ((i - j) % 4 == 0) add({i, j}, {i + 1, j + 1});
      if ((i + j + 1) % 4 == 0) add({i, j + 1}, {i + 1, j});
    }
  for (int i = 0; i < d; ++i) add({i, d - i}, {i + 1, d - i - 1});

  std::vector<std::array<LatticePoint, 3>> tris;
  for (const auto& face : detail::bounded_faces(edges)) {
    if (face.size() == 3) {
      tris.push_back({face[0], face[1], face[2]});
      continue;
    }
    if (face.size() != 4) throw Error("internal", "framed chessboard cell with " + std::to_string(face.size()) + " vertices");
    // One vertex lies on the segment between its two neighbours.
    for (std::size_t k = 0; k < 4; ++k) {
      const LatticePoint prev = face[(k + 3) % 4], mid = face[k], next = face[(k + 1) % 4];
      if (orient(prev, mid, next) == 0) {
        const LatticePoint opp = face[(k + 2) % 4];
        tris.push_back({prev, mid, opp});
        tris.push_back({mid, next, opp});
        break;
      }
    }
  }
  return Triangulation::from_points(d, tris);
}

/// Performs `steps` flips, each on an edge drawn uniformly from the currently
/// flippable interior edges. Deterministic for a fixed seed.
inline Triangulation random_flip_walk(const Triangulation& start, int steps, std::uint64_t seed) {
  Triangulation t = start;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < steps; ++s) {
    std::vector<Edge> flippable;
    for (const auto& q : t.interior_edges())
      if (q.convex) flippable.push_back(q.edge);
    if (flippable.empty()) break;
    const std::size_t k = static_cast<std::size_t>(rng() % flippable.size());
    t = t.flip(flippable[k]);
  }
  return t;
}

}  // namespace patchwork
