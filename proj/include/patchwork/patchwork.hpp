#pragma once

// The cell surface S on RP^2 glued from the four reflected copies of a
// triangulation, the T-curve on it, its regions, root region and nesting tree.

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "patchwork/error.hpp"
#include "patchwork/lattice.hpp"
#include "patchwork/scheme.hpp"
#include "patchwork/signs.hpp"
#include "patchwork/triangulation.hpp"

namespace patchwork {

/// Quadrant copies, in the order of klein_symmetries.
enum class Quadrant : std::uint8_t { pp = 0, mp = 1, pm = 2, mm = 3 };

inline constexpr std::array<Quadrant, 4> all_quadrants = {Quadrant::pp, Quadrant::mp, Quadrant::pm, Quadrant::mm};

inline std::string to_string(Quadrant q) {
  switch (q) {
    case Quadrant::pp: return "++";
    case Quadrant::mp: return "-+";
    case Quadrant::pm: return "+-";
    case Quadrant::mm: return "--";
  }
  return "?";
}

inline Quadrant parse_quadrant(std::string_view s) {
  if (s == "++") return Quadrant::pp;
  if (s == "-+") return Quadrant::mp;
  if (s == "+-") return Quadrant::pm;
  if (s == "--") return Quadrant::mm;
  throw InputError("unknown quadrant '" + std::string(s) + "'");
}

struct SurfaceEdge {
  int a = 0, b = 0;    // diamond positions (one representative of an identified pair)
  int va = 0, vb = 0;  // S_0 vertex ids
  int lex_a = 0, lex_b = 0;  // lex positions of |a|, |b| in A
  std::uint8_t offset = 0;   // sign(a) + sign(b) = sigma[lex_a] + sigma[lex_b] + offset
  std::uint8_t parity = 0;   // sheet change of the lift to the double cover
  bool boundary = false;     // lies on the identified diamond boundary
  std::array<int, 2> triangles{-1, -1};
};

/// Combinatorial surface of a triangulation; independent of the signs.
class Surface {
 public:
  explicit Surface(const Triangulation& t) : d_(t.degree()), diamond_(t.degree()) {
    std::map<std::pair<int, int>, int> edge_id;
    const auto key_of = [&](int p, int q) {
      std::pair<int, int> k{std::min(p, q), std::max(p, q)};
      const LatticePoint P = diamond_.point(p), Q = diamond_.point(q);
      if (on_diamond_boundary(P, d_) && on_diamond_boundary(Q, d_)) {
        const int p2 = diamond_.index(-P), q2 = diamond_.index(-Q);
        k = std::min(k, std::pair<int, int>{std::min(p2, q2), std::max(p2, q2)});
      }
      return k;
    };
    for (int qi = 0; qi < 4; ++qi) {
      const Symmetry g = klein_symmetries[qi];
      for (const auto& tri : t.triangles()) {
        std::array<int, 3> pos{};
        for (int k = 0; k < 3; ++k) pos[k] = diamond_.index(apply_symmetry(t.point(tri[k]), g));
        const int tid = static_cast<int>(triangles_.size());
        triangles_.push_back(pos);
        quadrant_.push_back(static_cast<Quadrant>(qi));
        std::array<int, 3> te{};
        const std::array<std::pair<int, int>, 3> sides{{{pos[0], pos[1]}, {pos[1], pos[2]}, {pos[0], pos[2]}}};
        for (int k = 0; k < 3; ++k) {
          const auto key = key_of(sides[k].first, sides[k].second);
          auto [it, fresh] = edge_id.try_emplace(key, static_cast<int>(edges_.size()));
          if (fresh) edges_.push_back(make_edge_record(key.first, key.second));
          auto& e = edges_[it->second];
          if (e.triangles[0] < 0) e.triangles[0] = tid;
          else if (e.triangles[1] < 0) e.triangles[1] = tid;
          else throw InputError("edge shared by more than two surface triangles; invalid triangulation");
          te[k] = it->second;
        }
        triangle_edges_.push_back(te);
      }
    }
    for (const auto& e : edges_)
      if (e.triangles[1] < 0) throw InputError("surface is not closed; invalid triangulation");
  }

  int degree() const { return d_; }
  const Diamond& diamond() const { return diamond_; }
  int num_vertices() const { return diamond_.num_vertices(); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_triangles() const { return static_cast<int>(triangles_.size()); }
  int euler_characteristic() const { return num_vertices() - num_edges() + num_triangles(); }

  const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
  const std::vector<std::array<int, 3>>& triangle_edges() const { return triangle_edges_; }
  const std::vector<SurfaceEdge>& edges() const { return edges_; }
  Quadrant quadrant(int tri) const { return quadrant_[tri]; }

 private:
  SurfaceEdge make_edge_record(int a, int b) const {
    SurfaceEdge e;
    e.a = a;
    e.b = b;
    e.va = diamond_.vertex_of(a);
    e.vb = diamond_.vertex_of(b);
    const LatticePoint A = diamond_.point(a), B = diamond_.point(b);
    e.lex_a = lex_index({std::abs(A.x), std::abs(A.y)}, d_);
    e.lex_b = lex_index({std::abs(B.x), std::abs(B.y)}, d_);
    e.offset = static_cast<std::uint8_t>(extension_offset(A) ^ extension_offset(B));
    e.parity = static_cast<std::uint8_t>(diamond_.sheet_flip(a) ^ diamond_.sheet_flip(b));
    e.boundary = on_diamond_boundary(A, d_) && on_diamond_boundary(B, d_);
    return e;
  }

  int d_;
  Diamond diamond_;
  std::vector<std::array<int, 3>> triangles_;
  std::vector<std::array<int, 3>> triangle_edges_;
  std::vector<Quadrant> quadrant_;
  std::vector<SurfaceEdge> edges_;
};

enum class LoopKind : std::uint8_t { oval, pseudo_line };

inline std::string to_string(LoopKind k) { return k == LoopKind::oval ? "oval" : "pseudo_line"; }

struct Loop {
  std::vector<std::pair<int, int>> dual_edge_cycle;  // (surface triangle, edge crossed when leaving it)
  LoopKind kind = LoopKind::oval;
  std::vector<int> incident_regions;
  int boundary_crossings = 0;  // parity decides whether the lift to the sphere closes

  bool lift_is_open() const { return boundary_crossings % 2 == 1; }
};

struct Region {
  int id = 0;
  std::vector<int> vertices;  // S_0 ids
};

struct NestingTree {
  int root = 0;
  std::vector<int> parent;      // per region, -1 at the root
  std::vector<int> oval_above;  // per region, loop id of the oval separating it from its parent
  std::vector<std::vector<int>> children;
};

namespace detail {

/// Number of patchworks that passed check_invariants() on construction.
inline std::atomic<long long> invariant_checks{0};

/// Union-find with GF(2) edge labels; a component is odd if it contains a
/// cycle of odd label sum.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(int n) : parent_(n), rel_(n, 0), odd_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::pair<int, int> find(int v) {
    int p = 0;
    int r = v;
    while (parent_[r] != r) {
      p ^= rel_[r];
      r = parent_[r];
    }
    // Path compression, keeping parities relative to the root.
    int acc = p;
    while (parent_[v] != r) {
      const int next = parent_[v];
      const int nrel = acc ^ rel_[v];
      parent_[v] = r;
      rel_[v] = static_cast<std::uint8_t>(acc);
      acc = nrel;
      v = next;
    }
    return {r, p};
  }

  void unite(int a, int b, int label) {
    const auto [ra, pa] = find(a);
    const auto [rb, pb] = find(b);
    const int w = pa ^ pb ^ label;
    if (ra == rb) {
      if (w) odd_[ra] = 1;
      return;
    }
    parent_[rb] = ra;
    rel_[rb] = static_cast<std::uint8_t>(w);
    odd_[ra] = static_cast<std::uint8_t>(odd_[ra] | odd_[rb]);
  }

  bool odd(int v) { return odd_[find(v).first] != 0; }

 private:
  std::vector<int> parent_;
  std::vector<std::uint8_t> rel_;
  std::vector<std::uint8_t> odd_;
};

}  // namespace detail

class Patchwork {
 public:
  Patchwork(const Triangulation& t, const SignDistribution& s) : Patchwork(std::make_shared<const Surface>(t), t, s) {}

  Patchwork(std::shared_ptr<const Surface> surface, Triangulation t, SignDistribution s)
      : surface_(std::move(surface)), tri_(std::move(t)), signs_(std::move(s)) {
    if (tri_.degree() != signs_.degree())
      throw InputError("triangulation has degree " + std::to_string(tri_.degree()) + " but signs have degree " +
                       std::to_string(signs_.degree()));
    if (surface_->degree() != tri_.degree()) throw InputError("surface degree mismatch");
    compute();
#ifdef PATCHWORK_CHECK_INVARIANTS
    if (const auto bad = check_invariants(); !bad.empty()) throw Error("invariant", bad.front());
    ++detail::invariant_checks;
#endif
  }

  int degree() const { return tri_.degree(); }
  const Surface& surface() const { return *surface_; }
  std::shared_ptr<const Surface> surface_ptr() const { return surface_; }
  const Triangulation& triangulation() const { return tri_; }
  const SignDistribution& signs() const { return signs_; }

  /// Sign at a diamond position (not per identified vertex).
  int position_sign(int pos) const { return position_signs_[pos]; }
  bool bicolored(int edge) const { return bicolored_[edge] != 0; }

  const std::vector<Loop>& loops() const { return loops_; }
  const std::vector<Region>& regions() const { return regions_; }
  int region_of(int vertex) const { return region_of_[vertex]; }
  int root_region() const { return root_; }
  const NestingTree& nesting_tree() const { return nesting_; }
  const RealScheme& scheme() const { return scheme_; }

  int num_ovals() const {
    int n = 0;
    for (const auto& l : loops_) n += l.kind == LoopKind::oval ? 1 : 0;
    return n;
  }
  int num_pseudo_lines() const { return static_cast<int>(loops_.size()) - num_ovals(); }

  /// Topological consistency checks; returns the violated ones.
  std::vector<std::string> check_invariants() const {
    std::vector<std::string> bad;
    const int d = degree();
    const int loops = static_cast<int>(loops_.size());
    const int m = (d - 1) * (d - 2) / 2 + 1;
    if (surface_->euler_characteristic() != 1) bad.push_back("Euler characteristic is not 1");
    if (loops < 1 || loops > m) bad.push_back(std::to_string(loops) + " loops, outside [1, " + std::to_string(m) + "]");
    if (num_pseudo_lines() != d % 2) bad.push_back("pseudo-line count differs from d mod 2");
    if (static_cast<int>(regions_.size()) != num_ovals() + 1) bad.push_back("|regions| != |ovals| + 1");
    for (const auto& l : loops_)
      if ((l.kind == LoopKind::pseudo_line) != l.lift_is_open())
        bad.push_back("region-count and double-cover loop classifications disagree");
    if (d % 2 == 1 && !odd_regions_.empty()) bad.push_back("odd degree with a connected-preimage region");
    if (d % 2 == 0 && odd_regions_.size() != 1) bad.push_back("even degree without a unique connected-preimage region");
    for (const auto& l : loops_)
      if (l.kind == LoopKind::pseudo_line && l.incident_regions.front() != root_)
        bad.push_back("pseudo-line does not lie in the root region");
    if (scheme_.ovals() != num_ovals()) bad.push_back("scheme oval count differs from the loop count");
    return bad;
  }

  /// Regions whose double-cover preimage is connected (empty for odd degree).
  const std::vector<int>& orientation_reversing_regions() const { return odd_regions_; }

  /// Curve segments inside the copies of quadrant q, each as a pair of crossed
  /// edges given by their diamond endpoints.
  using EdgeKey = std::pair<LatticePoint, LatticePoint>;
  using Segment = std::pair<EdgeKey, EdgeKey>;

  std::vector<Segment> quadrant_curve(Quadrant q) const {
    std::vector<Segment> out;
    const auto& S = *surface_;
    for (int t = 0; t < S.num_triangles(); ++t) {
      if (S.quadrant(t) != q) continue;
      const auto& pos = S.triangles()[t];
      std::vector<EdgeKey> crossed;
      const std::array<std::pair<int, int>, 3> sides{{{pos[0], pos[1]}, {pos[1], pos[2]}, {pos[0], pos[2]}}};
      for (const auto& [a, b] : sides)
        if (position_signs_[a] != position_signs_[b]) crossed.push_back(edge_key(a, b));
      if (crossed.size() == 2) out.push_back(std::minmax(crossed[0], crossed[1]));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Edges of the quadrant copy q, as diamond endpoint pairs.
  std::set<EdgeKey> quadrant_edges(Quadrant q) const {
    std::set<EdgeKey> out;
    const auto& S = *surface_;
    for (int t = 0; t < S.num_triangles(); ++t) {
      if (S.quadrant(t) != q) continue;
      const auto& p = S.triangles()[t];
      out.insert(edge_key(p[0], p[1]));
      out.insert(edge_key(p[1], p[2]));
      out.insert(edge_key(p[0], p[2]));
    }
    return out;
  }

 private:
  EdgeKey edge_key(int a, int b) const {
    const LatticePoint A = surface_->diamond().point(a), B = surface_->diamond().point(b);
    return std::minmax(A, B);
  }

  void compute() {
    const Surface& S = *surface_;
    const Diamond& D = S.diamond();
    const int nv = S.num_vertices();

    position_signs_.resize(D.size());
    for (int i = 0; i < D.size(); ++i) position_signs_[i] = static_cast<std::uint8_t>(extend(signs_, D.point(i)));

    bicolored_.resize(S.num_edges());
    detail::ParityUnionFind uf(nv);
    for (int e = 0; e < S.num_edges(); ++e) {
      const auto& E = S.edges()[e];
      bicolored_[e] = static_cast<std::uint8_t>(position_signs_[E.a] ^ position_signs_[E.b]);
      if (!bicolored_[e]) uf.unite(E.va, E.vb, E.parity);
    }

    // Regions, numbered by smallest vertex.
    region_of_.assign(nv, -1);
    std::vector<int> rep_region(nv, -1);
    for (int v = 0; v < nv; ++v) {
      const int r = uf.find(v).first;
      if (rep_region[r] < 0) {
        rep_region[r] = static_cast<int>(regions_.size());
        regions_.push_back(Region{rep_region[r], {}});
        if (uf.odd(r)) odd_regions_.push_back(rep_region[r]);
      }
      region_of_[v] = rep_region[r];
      regions_[rep_region[r]].vertices.push_back(v);
    }

    // Dual cycles, started at the lowest unvisited triangle.
    std::vector<char> visited(S.num_triangles(), 0);
    for (int t0 = 0; t0 < S.num_triangles(); ++t0) {
      if (visited[t0]) continue;
      std::array<int, 2> be{};
      if (bicolored_edges_of(t0, be) != 2) continue;
      Loop loop;
      int t = t0;
      int leave = std::min(be[0], be[1]);
      std::set<int> inc;
      for (;;) {
        visited[t] = 1;
        loop.dual_edge_cycle.emplace_back(t, leave);
        const auto& E = S.edges()[leave];
        inc.insert(region_of_[E.va]);
        inc.insert(region_of_[E.vb]);
        if (E.boundary) ++loop.boundary_crossings;
        const int next = E.triangles[0] == t ? E.triangles[1] : E.triangles[0];
        if (next == t0) break;
        std::array<int, 2> nb{};
        if (bicolored_edges_of(next, nb) != 2) throw Error("internal", "curve enters a triangle without an exit");
        leave = nb[0] == leave ? nb[1] : nb[0];
        t = next;
      }
      loop.incident_regions.assign(inc.begin(), inc.end());
      loop.kind = loop.incident_regions.size() == 1 ? LoopKind::pseudo_line : LoopKind::oval;
      loops_.push_back(std::move(loop));
    }

    // Even degree: the root is the one region containing an orientation
    // reversing loop. Odd degree: the complement of the pseudo-line is a disk,
    // no region has a connected preimage, and the root is the region the
    // pseudo-line runs through.
    if (degree() % 2 == 0) {
      if (odd_regions_.size() != 1)
        throw Error("internal", "expected exactly one region with connected preimage, found " +
                                    std::to_string(odd_regions_.size()));
      root_ = odd_regions_.front();
    } else {
      if (num_pseudo_lines() != 1)
        throw Error("internal", "expected exactly one pseudo-line, found " + std::to_string(num_pseudo_lines()));
      for (const auto& l : loops_)
        if (l.kind == LoopKind::pseudo_line) root_ = l.incident_regions.front();
    }

    // Nesting tree: regions joined by ovals, rooted at the root region.
    const int nr = static_cast<int>(regions_.size());
    std::vector<std::vector<std::pair<int, int>>> adj(nr);
    for (int l = 0; l < static_cast<int>(loops_.size()); ++l) {
      if (loops_[l].kind != LoopKind::oval) continue;
      if (loops_[l].incident_regions.size() != 2) throw Error("internal", "oval with more than two sides");
      const int a = loops_[l].incident_regions[0], b = loops_[l].incident_regions[1];
      adj[a].emplace_back(b, l);
      adj[b].emplace_back(a, l);
    }
    nesting_.root = root_;
    nesting_.parent.assign(nr, -2);
    nesting_.oval_above.assign(nr, -1);
    nesting_.children.assign(nr, {});
    nesting_.parent[root_] = -1;
    std::vector<int> order{root_};
    for (std::size_t i = 0; i < order.size(); ++i) {
      const int r = order[i];
      for (const auto& [c, l] : adj[r]) {
        if (c == nesting_.parent[r] && l == nesting_.oval_above[r]) continue;
        if (nesting_.parent[c] != -2) throw Error("internal", "oval graph on regions has a cycle");
        nesting_.parent[c] = r;
        nesting_.oval_above[c] = l;
        nesting_.children[r].push_back(c);
        order.push_back(c);
      }
    }
    if (static_cast<int>(order.size()) != nr) throw Error("internal", "oval graph on regions is disconnected");

    const auto build_node = [&](auto&& self, int r) -> OvalNode {
      OvalNode n;
      for (int c : nesting_.children[r]) n.children.push_back(self(self, c));
      return n;
    };
    std::vector<OvalNode> top;
    for (int c : nesting_.children[root_]) top.push_back(build_node(build_node, c));
    scheme_ = RealScheme(num_pseudo_lines() > 0, std::move(top));
  }

  int bicolored_edges_of(int t, std::array<int, 2>& out) const {
    int n = 0;
    for (int e : surface_->triangle_edges()[t])
      if (bicolored_[e]) {
        if (n < 2) out[n] = e;
        ++n;
      }
    return n;
  }

  std::shared_ptr<const Surface> surface_;
  Triangulation tri_;
  SignDistribution signs_;
  std::vector<std::uint8_t> position_signs_;
  std::vector<std::uint8_t> bicolored_;
  std::vector<int> region_of_;
  std::vector<Region> regions_;
  std::vector<int> odd_regions_;
  int root_ = 0;
  std::vector<Loop> loops_;
  NestingTree nesting_;
  RealScheme scheme_;
};

inline Patchwork build(const Triangulation& t, const SignDistribution& s) { return Patchwork(t, s); }

namespace detail {

/// Replaces chains x - n - y through degree-two nodes n in `drop` by x - y.
inline std::vector<Patchwork::Segment> contract(std::vector<Patchwork::Segment> segs,
                                                const std::set<Patchwork::EdgeKey>& keep) {
  for (bool changed = true; changed;) {
    changed = false;
    std::map<Patchwork::EdgeKey, std::vector<std::size_t>> inc;
    for (std::size_t i = 0; i < segs.size(); ++i) {
      inc[segs[i].first].push_back(i);
      inc[segs[i].second].push_back(i);
    }
    for (const auto& [node, ids] : inc) {
      if (keep.count(node) || ids.size() != 2 || ids[0] == ids[1]) continue;
      const auto other = [&](std::size_t i) { return segs[i].first == node ? segs[i].second : segs[i].first; };
      const Patchwork::Segment merged = std::minmax(other(ids[0]), other(ids[1]));
      const std::size_t hi = std::max(ids[0], ids[1]), lo = std::min(ids[0], ids[1]);
      segs.erase(segs.begin() + static_cast<std::ptrdiff_t>(hi));
      segs[lo] = merged;
      changed = true;
      break;
    }
  }
  std::sort(segs.begin(), segs.end());
  return segs;
}

}  // namespace detail

/// For each quadrant, whether the two curves agree there up to isotopy inside
/// the cells where the triangulations differ: crossings of edges present in
/// only one of the two triangulations are contracted before comparing.
inline std::array<bool, 4> quadrant_agreement(const Patchwork& a, const Patchwork& b) {
  if (a.degree() != b.degree()) throw InputError("patchworks have different degrees");
  std::array<bool, 4> out{};
  for (const Quadrant q : all_quadrants) {
    const auto ea = a.quadrant_edges(q), eb = b.quadrant_edges(q);
    const auto ca = detail::contract(a.quadrant_curve(q), eb);
    const auto cb = detail::contract(b.quadrant_curve(q), ea);
    out[static_cast<int>(q)] = ca == cb;
  }
  return out;
}

/// Same scheme, and the two root regions share a vertex of S_0.
inline bool root_isotopic(const Patchwork& a, const Patchwork& b) {
  if (a.degree() != b.degree()) throw InputError("patchworks have different degrees");
  if (!(a.scheme() == b.scheme())) return false;
  const auto& ra = a.regions()[a.root_region()].vertices;
  const auto& rb = b.regions()[b.root_region()].vertices;
  std::vector<int> common;
  std::set_intersection(ra.begin(), ra.end(), rb.begin(), rb.end(), std::back_inserter(common));
  return !common.empty();
}

/// Some orbit member tau has tau(t) = tau(w) != tau(u) = tau(v) on the
/// quadrangle of e = (u, v) with apexes t, w.
inline bool is_bridge_flip(const Triangulation& t, const SignDistribution& s, Edge e) {
  const auto q = t.quadrangle(e);
  if (!q || !q->convex) throw NotFlippable("edge " + t.edge_string(make_edge(e.first, e.second)) + " is not flippable");
  const LatticePoint u = t.point(q->edge.first), v = t.point(q->edge.second);
  const LatticePoint a = t.point(q->opposite.first), w = t.point(q->opposite.second);
  for (const Symmetry g : klein_symmetries) {
    const int su = extend(s, apply_symmetry(u, g)), sv = extend(s, apply_symmetry(v, g));
    const int sa = extend(s, apply_symmetry(a, g)), sw = extend(s, apply_symmetry(w, g));
    if (su == sv && sa == sw && su != sa) return true;
  }
  return false;
}

}  // namespace patchwork
