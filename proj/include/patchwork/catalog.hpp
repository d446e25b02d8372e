#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "patchwork/catalog_data.hpp"
#include "patchwork/error.hpp"
#include "patchwork/triangulation.hpp"

namespace patchwork {

inline std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& e : catalog_data::entries) names.emplace_back(e.name);
  return names;
}

inline bool in_catalog(std::string_view name) {
  for (const auto& e : catalog_data::entries)
    if (e.name == name) return true;
  return false;
}

inline Triangulation catalog(std::string_view name) {
  for (const auto& e : catalog_data::entries) {
    if (e.name != name) continue;
    std::vector<std::array<LatticePoint, 3>> tris(e.num_triangles);
    for (int i = 0; i < e.num_triangles; ++i)
      for (int k = 0; k < 3; ++k) tris[i][k] = {e.triangles[6 * i + 2 * k], e.triangles[6 * i + 2 * k + 1]};
    std::vector<long long> w(e.lifting, e.lifting + e.num_points);
    return Triangulation::from_points(e.degree, tris, std::move(w));
  }
  throw CatalogError("unknown catalog triangulation '" + std::string(name) + "'");
}

/// FNV-1a over degree, triangle list (as stored, sorted) and lifting.
inline std::uint64_t checksum(const Triangulation& t) {
  std::uint64_t h = 1469598103934665603ull;
  const auto mix = [&](long long v) {
    for (int b = 0; b < 8; ++b) {
      h ^= static_cast<std::uint64_t>(v >> (8 * b)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(t.degree());
  for (const auto& tri : t.triangles())
    for (int v : tri) mix(v);
  if (t.lifting())
    for (long long w : *t.lifting()) mix(w);
  return h;
}

}  // namespace patchwork
