#pragma once

// Stateless request handlers of the local service. Every response is computed
// from the request body alone; the HTTP layer only forwards method, path and
// body.

#include <string>

#include <nlohmann/json.hpp>

#include "patchwork/catalog.hpp"
#include "patchwork/error.hpp"
#include "patchwork/io.hpp"
#include "patchwork/patchwork.hpp"

namespace patchwork::service {

struct Response {
  int status = 200;
  json body;
};

inline Response error_response(int status, const std::string& reason, const std::string& detail) {
  return {status, {{"error", reason}, {"detail", detail}}};
}

inline Response catalog_handler() {
  json out = json::array();
  for (const auto& name : catalog_names()) {
    const Triangulation t = catalog(name);
    out.push_back({{"name", name},
                   {"degree", t.degree()},
                   {"triangles", t.triangles().size()},
                   {"checksum", checksum(t)},
                   {"triangulation", to_json(t)}});
  }
  return {200, out};
}

/// {degree, triangulation, signs} -> evaluation.
inline Response evaluate_handler(const json& req) {
  const PatchworkInput in = patchwork_input_from_json(req);
  return {200, evaluation_json(Patchwork(in.triangulation, in.signs))};
}

namespace detail {

/// Diamond coordinates are folded back onto A by taking absolute values.
inline LatticePoint fold(LatticePoint p) { return {std::abs(p.x), std::abs(p.y)}; }

}  // namespace detail

/// {patchwork, edge: [[x,y],[x,y]]} -> {patchwork, is_bridge_flip, evaluation}.
inline Response flip_handler(const json& req) {
  if (!req.is_object() || !req.contains("patchwork") || !req.contains("edge"))
    throw InputError("flip needs 'patchwork' and 'edge'");
  const PatchworkInput in = patchwork_input_from_json(req["patchwork"]);
  const json& ej = req["edge"];
  if (!ej.is_array() || ej.size() != 2) throw InputError("edge must be a pair of points");
  const LatticePoint a = point_from_json(ej[0]), b = point_from_json(ej[1]);
  const int d = in.triangulation.degree();
  if (!in_diamond(a, d) || !in_diamond(b, d)) throw OutOfRange("edge endpoint outside the diamond");
  const Edge e = make_edge(in.triangulation.index_of(detail::fold(a)), in.triangulation.index_of(detail::fold(b)));
  try {
    const bool bridge = is_bridge_flip(in.triangulation, in.signs, e);
    const Triangulation t = in.triangulation.flip(e);
    return {200,
            {{"patchwork", to_json(t, in.signs)},
             {"is_bridge_flip", bridge},
             {"evaluation", evaluation_json(Patchwork(t, in.signs))}}};
  } catch (const NotFlippable& ex) {
    return error_response(422, "not flippable", ex.what());
  }
}

/// {patchwork, point: [x,y]} -> {patchwork, evaluation}.
inline Response toggle_handler(const json& req) {
  if (!req.is_object() || !req.contains("patchwork") || !req.contains("point"))
    throw InputError("toggle needs 'patchwork' and 'point'");
  const PatchworkInput in = patchwork_input_from_json(req["patchwork"]);
  const LatticePoint p = point_from_json(req["point"]);
  if (!in_diamond(p, in.triangulation.degree())) throw OutOfRange(to_string(p) + " lies outside the diamond");
  const SignDistribution s = in.signs.toggled(detail::fold(p));
  return {200,
          {{"patchwork", to_json(in.triangulation, s, in.key)},
           {"evaluation", evaluation_json(Patchwork(in.triangulation, s))}}};
}

/// Routes a request; library errors become 4xx responses.
inline Response handle(const std::string& method, const std::string& path, const std::string& body) {
  try {
    if (path == "/catalog") {
      if (method != "GET") return error_response(405, "method not allowed", method + " " + path);
      return catalog_handler();
    }
    if (path != "/evaluate" && path != "/flip" && path != "/toggle")
      return error_response(404, "not found", path);
    if (method != "POST") return error_response(405, "method not allowed", method + " " + path);
    json req;
    try {
      req = json::parse(body);
    } catch (const json::exception& e) {
      return error_response(400, "malformed json", e.what());
    }
    if (path == "/evaluate") return evaluate_handler(req);
    if (path == "/flip") return flip_handler(req);
    return toggle_handler(req);
  } catch (const NotFlippable& e) {
    return error_response(422, "not flippable", e.what());
  } catch (const Error& e) {
    return error_response(400, e.kind(), e.what());
  } catch (const json::exception& e) {
    return error_response(400, "input", e.what());
  }
}

}  // namespace patchwork::service
