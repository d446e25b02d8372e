#pragma once

// JSON formats.
//
// triangulation: {"degree": d, "triangles": [[[x,y],[x,y],[x,y]], ...], "lifting": [...]}
//                (lifting optional, in lex order), or a catalog key string.
// patchwork:     {"degree": d, "triangulation": <triangulation>, "signs": "1100 0001 ..."}
// evaluation:    {"scheme", "p", "n", "ovals", "pseudo_line", "loops": [{"kind", "segments"}],
//                 "regions": [{"id", "vertices", "is_root"}], "nesting": tree}

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "patchwork/catalog.hpp"
#include "patchwork/error.hpp"
#include "patchwork/patchwork.hpp"
#include "patchwork/signs.hpp"
#include "patchwork/triangulation.hpp"

namespace patchwork {

using json = nlohmann::json;

inline json point_json(LatticePoint p) { return json::array({p.x, p.y}); }

inline LatticePoint point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw InputError("expected a point [x, y], got " + j.dump());
  return {j[0].get<int>(), j[1].get<int>()};
}

inline json to_json(const Triangulation& t) {
  json tris = json::array();
  for (const auto& tri : t.triangles()) {
    json tj = json::array();
    for (const int i : tri) tj.push_back(point_json(t.point(i)));
    tris.push_back(tj);
  }
  json j{{"degree", t.degree()}, {"triangles", tris}};
  if (t.lifting()) j["lifting"] = *t.lifting();
  return j;
}

inline Triangulation triangulation_from_json(const json& j) {
  if (j.is_string()) return catalog(j.get<std::string>());
  if (!j.is_object()) throw InputError("triangulation must be an object or a catalog key");
  try {
    const int d = j.at("degree").get<int>();
    std::vector<std::array<LatticePoint, 3>> tris;
    for (const auto& tj : j.at("triangles")) {
      if (!tj.is_array() || tj.size() != 3) throw InputError("triangle must have three points: " + tj.dump());
      tris.push_back({point_from_json(tj[0]), point_from_json(tj[1]), point_from_json(tj[2])});
    }
    std::optional<std::vector<long long>> w;
    if (j.contains("lifting") && !j["lifting"].is_null()) w = j["lifting"].get<std::vector<long long>>();
    Triangulation t = Triangulation::from_points(d, tris, std::move(w));
    if (t.lifting() && static_cast<int>(t.lifting()->size()) != t.num_points())
      throw InputError("lifting has " + std::to_string(t.lifting()->size()) + " values, expected " +
                       std::to_string(t.num_points()));
    const auto rep = t.validate();
    if (!rep.ok()) {
      std::string msg = "invalid triangulation";
      for (const auto& p : rep.problems) msg += "; " + p;
      throw InputError(msg);
    }
    return t;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed triangulation JSON: ") + e.what());
  }
}

/// Catalog triangulations are written by key when `key` is non-empty.
inline json to_json(const Triangulation& t, const SignDistribution& s, const std::string& key = "") {
  return {{"degree", t.degree()}, {"triangulation", key.empty() ? to_json(t) : json(key)}, {"signs", format_signs(s)}};
}

struct PatchworkInput {
  Triangulation triangulation;
  SignDistribution signs;
  std::string key;  // catalog key when given by key
};

inline PatchworkInput patchwork_input_from_json(const json& j) {
  if (!j.is_object()) throw InputError("patchwork must be a JSON object");
  if (!j.contains("triangulation")) throw InputError("patchwork has no triangulation");
  if (!j.contains("signs") || !j["signs"].is_string()) throw InputError("patchwork signs must be a string");
  PatchworkInput in{triangulation_from_json(j["triangulation"]), {}, j["triangulation"].is_string() ? j["triangulation"].get<std::string>() : ""};
  if (j.contains("degree") && j["degree"] != in.triangulation.degree())
    throw InputError("degree does not match the triangulation");
  in.signs = parse_signs(in.triangulation.degree(), j["signs"].get<std::string>());
  return in;
}

inline json read_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw InputError("cannot open " + path);
  try {
    return json::parse(is);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

namespace detail {

inline std::array<double, 2> edge_midpoint(const Surface& S, int tri, int edge) {
  const auto& pos = S.triangles()[tri];
  const auto& te = S.triangle_edges()[tri];
  const std::array<std::pair<int, int>, 3> sides{{{pos[0], pos[1]}, {pos[1], pos[2]}, {pos[0], pos[2]}}};
  for (int k = 0; k < 3; ++k) {
    if (te[k] != edge) continue;
    const LatticePoint a = S.diamond().point(sides[k].first), b = S.diamond().point(sides[k].second);
    return {(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
  }
  throw Error("internal", "edge is not a side of the triangle");
}

inline json nesting_json(const NestingTree& t, int r) {
  json c = json::array();
  for (const int k : t.children[r]) c.push_back(nesting_json(t, k));
  return {{"region", r}, {"oval", t.oval_above[r] < 0 ? json(nullptr) : json(t.oval_above[r])}, {"children", c}};
}

}  // namespace detail

/// Polylines through edge midpoints in diamond coordinates, split where the
/// loop crosses the identified boundary.
inline std::vector<std::vector<std::array<double, 2>>> loop_polylines(const Patchwork& p, const Loop& loop) {
  const Surface& S = p.surface();
  std::vector<std::vector<std::array<double, 2>>> out;
  const auto& cyc = loop.dual_edge_cycle;
  const std::size_t n = cyc.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto [tri, leave] = cyc[i];
    const int enter = cyc[(i + n - 1) % n].second;
    const auto a = detail::edge_midpoint(S, tri, enter), b = detail::edge_midpoint(S, tri, leave);
    if (out.empty() || out.back().back() != a) out.push_back({a});
    out.back().push_back(b);
  }
  // Join the last polyline onto the first when the loop closes without a break.
  if (out.size() > 1 && out.back().back() == out.front().front()) {
    auto tail = std::move(out.back());
    out.pop_back();
    tail.insert(tail.end(), out.front().begin() + 1, out.front().end());
    out.front() = std::move(tail);
  }
  return out;
}

inline json evaluation_json(const Patchwork& p) {
  const auto st = p.scheme().stats();
  json loops = json::array();
  for (const auto& l : p.loops()) {
    json segs = json::array();
    for (const auto& line : loop_polylines(p, l)) {
      json lj = json::array();
      for (const auto& q : line) lj.push_back({q[0], q[1]});
      segs.push_back(lj);
    }
    loops.push_back({{"kind", to_string(l.kind)}, {"regions", l.incident_regions}, {"segments", segs}});
  }
  json regions = json::array();
  const auto& verts = p.surface().diamond().vertices();
  for (const auto& r : p.regions()) {
    json vs = json::array();
    for (const int v : r.vertices) vs.push_back(point_json(verts[v].representative));
    regions.push_back({{"id", r.id}, {"vertices", vs}, {"is_root", r.id == p.root_region()}});
  }
  return {{"degree", p.degree()},
          {"scheme", p.scheme().render()},
          {"p", st.p},
          {"n", st.n},
          {"ovals", p.num_ovals()},
          {"pseudo_line", p.num_pseudo_lines() == 1},
          {"num_loops", p.loops().size()},
          {"loops", loops},
          {"regions", regions},
          {"root_region", p.root_region()},
          {"nesting", detail::nesting_json(p.nesting_tree(), p.nesting_tree().root)}};
}

}  // namespace patchwork
