#pragma once

// SVG picture of a patchwork on the diamond: triangles, signs, the curve,
// shaded oval interiors (by nesting depth) and the root region.

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "patchwork/io.hpp"
#include "patchwork/patchwork.hpp"

namespace patchwork {

struct SvgOptions {
  double cell = 40;  // pixels per lattice unit
  double margin = 20;
  bool show_triangles = true;
  bool show_signs = true;
};

inline std::string render_svg(const Patchwork& p, const SvgOptions& opt = {}) {
  const int d = p.degree();
  const Surface& S = p.surface();
  const Diamond& D = S.diamond();
  const double size = 2 * d * opt.cell + 2 * opt.margin;
  const auto X = [&](double x) { return (x + d) * opt.cell + opt.margin; };
  const auto Y = [&](double y) { return (d - y) * opt.cell + opt.margin; };
  char buf[64];
  const auto xy = [&](double x, double y) {
    std::snprintf(buf, sizeof buf, "%.2f,%.2f", X(x), Y(y));
    return std::string(buf);
  };

  const NestingTree& nt = p.nesting_tree();
  std::vector<int> depth(p.regions().size(), 0);
  for (std::size_t r = 0; r < depth.size(); ++r)
    for (int q = static_cast<int>(r); nt.parent[q] >= 0; q = nt.parent[q]) ++depth[r];
  const auto fill = [&](int region) -> std::string {
    if (region == p.root_region()) return "#fff4d6";
    static const char* shades[] = {"#c6dbef", "#9ecae1", "#6baed6", "#4292c6", "#2171b5"};
    return shades[(depth[region] - 1) % 5];
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
     << size << ' ' << size << "\">\n";
  std::string title;
  for (const char c : p.scheme().render()) title += c == '<' ? "&lt;" : c == '>' ? "&gt;" : std::string(1, c);
  os << "<title>" << title << "</title>\n<g stroke=\"none\">\n";
  for (int t = 0; t < S.num_triangles(); ++t) {
    const auto& pos = S.triangles()[t];
    std::array<LatticePoint, 3> P{D.point(pos[0]), D.point(pos[1]), D.point(pos[2])};
    std::array<int, 3> sg{p.position_sign(pos[0]), p.position_sign(pos[1]), p.position_sign(pos[2])};
    const auto reg = [&](int k) { return p.region_of(D.vertex_of(pos[k])); };
    const auto mid = [&](int a, int b) { return xy((P[a].x + P[b].x) / 2.0, (P[a].y + P[b].y) / 2.0); };
    if (sg[0] == sg[1] && sg[1] == sg[2]) {
      os << "<polygon points=\"" << xy(P[0].x, P[0].y) << ' ' << xy(P[1].x, P[1].y) << ' ' << xy(P[2].x, P[2].y)
         << "\" fill=\"" << fill(reg(0)) << "\"/>\n";
      continue;
    }
    const int v = sg[0] == sg[1] ? 2 : (sg[0] == sg[2] ? 1 : 0);
    const int u = (v + 1) % 3, w = (v + 2) % 3;
    os << "<polygon points=\"" << xy(P[v].x, P[v].y) << ' ' << mid(v, u) << ' ' << mid(v, w) << "\" fill=\""
       << fill(reg(v)) << "\"/>\n";
    os << "<polygon points=\"" << xy(P[u].x, P[u].y) << ' ' << xy(P[w].x, P[w].y) << ' ' << mid(w, v) << ' '
       << mid(u, v) << "\" fill=\"" << fill(reg(u)) << "\"/>\n";
  }
  os << "</g>\n";

  if (opt.show_triangles) {
    os << "<g stroke=\"#999\" stroke-width=\"0.5\" fill=\"none\">\n";
    for (const auto& pos : S.triangles())
      os << "<polygon points=\"" << xy(D.point(pos[0]).x, D.point(pos[0]).y) << ' '
         << xy(D.point(pos[1]).x, D.point(pos[1]).y) << ' ' << xy(D.point(pos[2]).x, D.point(pos[2]).y) << "\"/>\n";
    os << "</g>\n";
  }

  for (const auto& l : p.loops()) {
    const bool pl = l.kind == LoopKind::pseudo_line;
    os << "<g class=\"" << to_string(l.kind) << "\" stroke=\"" << (pl ? "#b2182b" : "#08306b")
       << "\" stroke-width=\"2.5\" fill=\"none\"" << (pl ? " stroke-dasharray=\"6,3\"" : "") << ">\n";
    for (const auto& line : loop_polylines(p, l)) {
      os << "<polyline points=\"";
      for (std::size_t i = 0; i < line.size(); ++i) os << (i ? " " : "") << xy(line[i][0], line[i][1]);
      os << "\"/>\n";
    }
    os << "</g>\n";
  }

  if (opt.show_signs) {
    os << "<g stroke=\"black\" stroke-width=\"1\">\n";
    for (int i = 0; i < D.size(); ++i) {
      const LatticePoint q = D.point(i);
      std::snprintf(buf, sizeof buf, "cx=\"%.2f\" cy=\"%.2f\"", X(q.x), Y(q.y));
      os << "<circle " << buf << " r=\"" << opt.cell / 9 << "\" fill=\"" << (p.position_sign(i) ? "black" : "white")
         << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace patchwork
