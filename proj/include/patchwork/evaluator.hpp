#pragma once

// Scheme-only evaluation of many sign distributions on one triangulation.
// Works on bit masks over A and skips everything the census does not need
// (loop traversal, geometry). Regions come from a parity union-find over the
// monochrome edges; ovals are the distinct region pairs across bicolored
// edges. For even degree the root region is the one whose double-cover
// preimage is connected; for odd degree it is the region the pseudo-line
// crosses through.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <memory>
#include <vector>

#include "patchwork/error.hpp"
#include "patchwork/patchwork.hpp"
#include "patchwork/scheme.hpp"
#include "patchwork/triangulation.hpp"

namespace patchwork {

struct FastResult {
  std::uint64_t code = 0;  // RealScheme::code() of the scheme
  int ovals = 0;
  bool pseudo_line = false;

  int loops() const { return ovals + (pseudo_line ? 1 : 0); }
};

class Evaluator {
 public:
  static constexpr int max_regions = 64;

  explicit Evaluator(const Triangulation& t) : Evaluator(Surface(t)) {}

  explicit Evaluator(const Surface& s) : d_(s.degree()), odd_degree_(s.degree() % 2 == 1), nv_(s.num_vertices()) {
    if (num_lattice_points(d_) > 64) throw UnsupportedDegree("fast evaluation supports |A| <= 64");
    edges_.reserve(s.edges().size());
    for (const auto& e : s.edges())
      edges_.push_back({static_cast<std::uint8_t>(e.lex_a), static_cast<std::uint8_t>(e.lex_b), e.offset, e.parity,
                        static_cast<std::uint16_t>(e.va), static_cast<std::uint16_t>(e.vb)});
    parent_.resize(nv_);
    rel_.resize(nv_);
    odd_.resize(nv_);
    region_.resize(nv_);
    bic_.reserve(edges_.size());
  }

  int degree() const { return d_; }

  /// Not thread-safe: each worker owns its Evaluator.
  FastResult evaluate(std::uint64_t mask) {
    for (int v = 0; v < nv_; ++v) {
      parent_[v] = static_cast<std::uint16_t>(v);
      rel_[v] = 0;
      odd_[v] = 0;
    }
    bic_.clear();
    for (const auto& e : edges_) {
      const unsigned s = static_cast<unsigned>(((mask >> e.la) ^ (mask >> e.lb)) & 1u) ^ e.offset;
      if (s) {
        bic_.push_back(static_cast<std::uint32_t>(e.va) | (static_cast<std::uint32_t>(e.vb) << 16));
        continue;
      }
      unite(e.va, e.vb, e.parity);
    }

    // Compact region ids.
    int nr = 0;
    int root = -1;
    std::fill(region_.begin(), region_.end(), static_cast<std::int16_t>(-1));
    for (int v = 0; v < nv_; ++v) {
      const int r = find(v);
      if (region_[r] < 0) {
        if (nr >= max_regions) throw UnsupportedDegree("too many regions for the fast evaluator");
        region_[r] = static_cast<std::int16_t>(nr);
        if (odd_[r] && !odd_degree_) {
          if (root >= 0) throw Error("internal", "two root regions");
          root = nr;
        }
        ++nr;
      }
      region_[v] = region_[r];
    }
    std::array<std::uint64_t, max_regions> adj{};
    for (const std::uint32_t p : bic_) {
      const int a = region_[p & 0xffffu], b = region_[p >> 16];
      if (a != b) {
        adj[a] |= std::uint64_t{1} << b;
        adj[b] |= std::uint64_t{1} << a;
      } else {
        root = a;  // crossed by the pseudo-line
      }
    }
    if (root < 0) throw Error("internal", "no root region");
    int degsum = 0;
    for (int r = 0; r < nr; ++r) degsum += std::popcount(adj[r]);
    FastResult out;
    out.ovals = degsum / 2;
    out.pseudo_line = (d_ % 2) == 1;
    if (out.ovals != nr - 1) throw Error("internal", "oval graph on regions is not a tree");
    if (out.ovals > 31) throw UnsupportedDegree("scheme code supports at most 31 ovals");

    const auto [len, bits] = subtree_code(root, -1, adj);
    out.code = (std::uint64_t{1} << len) | bits;
    return out;
  }

  FastResult evaluate(const SignDistribution& s) { return evaluate(s.mask()); }

  RealScheme scheme(std::uint64_t mask) {
    const FastResult r = evaluate(mask);
    return RealScheme::from_code(r.code, r.pseudo_line);
  }

 private:
  struct PackedEdge {
    std::uint8_t la, lb, offset, parity;
    std::uint16_t va, vb;
  };

  int find(int v) {
    int p = 0;
    int r = v;
    while (parent_[r] != r) {
      p ^= rel_[r];
      r = parent_[r];
    }
    while (parent_[v] != r) {
      const int next = parent_[v];
      const int nrel = p ^ rel_[v];
      parent_[v] = static_cast<std::uint16_t>(r);
      rel_[v] = static_cast<std::uint8_t>(p);
      p = nrel;
      v = next;
    }
    return r;
  }

  int find_parity(int v, int& parity) {
    int p = 0;
    int r = v;
    while (parent_[r] != r) {
      p ^= rel_[r];
      r = parent_[r];
    }
    parity = p;
    find(v);
    return r;
  }

  void unite(int a, int b, int label) {
    int pa = 0, pb = 0;
    const int ra = find_parity(a, pa);
    const int rb = find_parity(b, pb);
    const int w = pa ^ pb ^ label;
    if (ra == rb) {
      odd_[ra] |= static_cast<std::uint8_t>(w);
      return;
    }
    parent_[rb] = static_cast<std::uint16_t>(ra);
    rel_[rb] = static_cast<std::uint8_t>(w);
    odd_[ra] |= odd_[rb];
  }

  /// Code of the ovals below region r (parent region `from`), as (length, bits).
  std::pair<int, std::uint64_t> subtree_code(int r, int from, const std::array<std::uint64_t, max_regions>& adj) {
    std::array<std::pair<int, std::uint64_t>, max_regions> parts;
    int n = 0;
    std::uint64_t m = adj[r];
    if (from >= 0) m &= ~(std::uint64_t{1} << from);
    while (m) {
      const int c = std::countr_zero(m);
      m &= m - 1;
      const auto [l, b] = subtree_code(c, r, adj);
      parts[n++] = {l + 2, (std::uint64_t{1} << (l + 1)) | (b << 1)};
    }
    std::sort(parts.begin(), parts.begin() + n);
    int len = 0;
    std::uint64_t bits = 0;
    for (int i = 0; i < n; ++i) {
      bits = (bits << parts[i].first) | parts[i].second;
      len += parts[i].first;
    }
    return {len, bits};
  }

  int d_;
  bool odd_degree_;
  int nv_;
  std::vector<PackedEdge> edges_;
  std::vector<std::uint16_t> parent_;
  std::vector<std::uint8_t> rel_;
  std::vector<std::uint8_t> odd_;
  std::vector<std::int16_t> region_;
  std::vector<std::uint32_t> bic_;
};

}  // namespace patchwork
