#pragma once

// Generated from data/catalog/*.json; keep both in sync (see catalog tests).

#include <array>
#include <string_view>

namespace patchwork::catalog_data {

struct Entry {
  std::string_view name;
  int degree;
  const int* triangles;  // x0 y0 x1 y1 x2 y2 per triangle
  int num_triangles;
  const long long* lifting;  // lex order
  int num_points;
};

inline constexpr int bat_triangles[] = {
    0, 5, 0, 6, 1, 5, 0, 5, 1, 4, 1, 5, 0, 4, 0, 5, 1, 4, 1, 4, 1, 5, 2, 4, 0, 4, 1, 3, 1, 4, 1, 4, 2, 3, 2, 4,
    0, 3, 0, 4, 1, 3, 1, 3, 1, 4, 2, 3, 2, 3, 2, 4, 3, 3, 0, 2, 0, 3, 1, 3, 0, 2, 1, 2, 1, 3, 1, 2, 1, 3, 2, 3,
    0, 1, 0, 2, 1, 2, 1, 2, 2, 3, 3, 3, 0, 1, 1, 2, 3, 3, 0, 1, 2, 2, 3, 3, 0, 1, 1, 1, 2, 2, 0, 1, 1, 0, 1, 1,
    1, 0, 1, 1, 2, 2, 0, 0, 0, 1, 1, 0, 1, 0, 2, 2, 3, 3, 1, 0, 2, 1, 3, 3, 2, 1, 3, 2, 3, 3, 2, 1, 3, 1, 3, 2,
    1, 0, 2, 0, 2, 1, 2, 0, 2, 1, 3, 1, 3, 2, 3, 3, 4, 2, 3, 2, 4, 1, 4, 2, 3, 1, 3, 2, 4, 1, 4, 1, 4, 2, 5, 1,
    2, 0, 3, 0, 3, 1, 3, 1, 4, 0, 4, 1, 3, 0, 3, 1, 4, 0, 4, 1, 5, 0, 5, 1, 4, 0, 4, 1, 5, 0, 5, 0, 5, 1, 6, 0,
};
inline constexpr long long bat_lifting[] = {
    4, 2, 12, 24, 37, 52, 69, 2, 1, 3, 14, 28, 44, 12, 3, 0,
    6, 21, 24, 14, 6, 0, 37, 28, 21, 52, 44, 69,
};

inline constexpr int moth_triangles[] = {
    0, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 1, 0, 1, 1, 1, 1, 2, 0, 1, 1, 2, 0, 2, 0, 2, 1, 2, 1, 3, 0, 2, 1, 3, 0, 3,
    0, 3, 1, 3, 0, 4, 0, 4, 1, 3, 0, 5, 0, 5, 1, 3, 0, 6, 0, 6, 1, 3, 1, 4, 0, 6, 1, 4, 1, 5, 1, 0, 2, 0, 2, 1,
    1, 0, 2, 1, 1, 1, 1, 1, 2, 1, 3, 2, 1, 1, 2, 2, 2, 3, 1, 1, 2, 3, 1, 2, 1, 1, 3, 2, 2, 2, 1, 2, 2, 3, 1, 3,
    1, 3, 2, 3, 1, 4, 1, 4, 2, 3, 1, 5, 1, 5, 2, 3, 2, 4, 2, 0, 3, 0, 3, 1, 2, 0, 3, 1, 2, 1, 2, 1, 3, 1, 3, 2,
    2, 2, 3, 2, 2, 3, 2, 3, 3, 2, 3, 3, 2, 3, 3, 3, 2, 4, 3, 0, 4, 0, 3, 1, 3, 1, 4, 0, 5, 0, 3, 1, 4, 1, 3, 2,
    3, 1, 5, 0, 6, 0, 3, 1, 6, 0, 4, 1, 3, 2, 4, 1, 5, 1, 3, 2, 4, 2, 3, 3, 3, 2, 5, 1, 4, 2, 4, 1, 6, 0, 5, 1,
};
inline constexpr long long moth_lifting[] = {
    24, 12, 14, 18, 23, 29, 36, 12, 1, 2, 5, 13, 22, 14, 2, 0,
    0, 10, 18, 5, 0, 1, 23, 13, 10, 29, 22, 36,
};

inline constexpr int radiant_triangles[] = {
    0, 0, 0, 1, 1, 0, 0, 1, 0, 2, 1, 2, 0, 1, 1, 0, 1, 1, 0, 1, 1, 1, 2, 2, 0, 1, 1, 2, 3, 3, 0, 1, 2, 2, 3, 3,
    0, 2, 0, 3, 1, 3, 0, 2, 1, 2, 3, 3, 0, 2, 1, 3, 3, 4, 0, 2, 2, 3, 3, 3, 0, 2, 2, 3, 3, 4, 0, 3, 0, 4, 1, 4,
    0, 3, 1, 3, 3, 4, 0, 3, 1, 4, 2, 4, 0, 3, 2, 4, 3, 4, 0, 4, 0, 5, 1, 4, 0, 5, 0, 6, 1, 5, 0, 5, 1, 4, 2, 4,
    0, 5, 1, 5, 3, 4, 0, 5, 2, 4, 3, 4, 0, 6, 0, 7, 1, 6, 0, 6, 1, 5, 3, 4, 0, 6, 1, 6, 2, 5, 0, 6, 2, 5, 3, 4,
    1, 0, 1, 1, 2, 2, 1, 0, 2, 0, 2, 1, 1, 0, 2, 1, 3, 3, 1, 0, 2, 2, 3, 3, 2, 0, 2, 1, 3, 3, 2, 0, 3, 0, 3, 1,
    2, 0, 3, 1, 4, 3, 2, 0, 3, 2, 3, 3, 2, 0, 3, 2, 4, 3, 2, 3, 3, 3, 3, 4, 3, 0, 3, 1, 4, 3, 3, 0, 4, 0, 4, 1,
    3, 0, 4, 1, 4, 2, 3, 0, 4, 2, 4, 3, 3, 2, 3, 3, 4, 3, 3, 3, 3, 4, 4, 3, 4, 0, 4, 1, 5, 0, 4, 1, 4, 2, 5, 0,
    4, 2, 4, 3, 5, 0, 4, 3, 5, 0, 5, 1, 4, 3, 5, 1, 6, 0, 4, 3, 5, 2, 6, 0, 5, 0, 5, 1, 6, 0, 5, 2, 6, 0, 6, 1,
    6, 0, 6, 1, 7, 0,
};
inline constexpr long long radiant_lifting[] = {
    4, 2, 8, 24, 47, 71, 102, 140, 2, 1, 3, 14, 34, 61, 96, 8,
    3, 0, 6, 22, 53, 24, 14, 6, 0, 11, 47, 34, 22, 11, 71, 61,
    53, 102, 96, 140,
};

inline constexpr int split_radiant_triangles[] = {
    0, 0, 0, 1, 1, 0, 0, 1, 0, 2, 1, 1, 0, 1, 1, 0, 1, 1, 0, 2, 0, 3, 1, 3, 0, 2, 1, 1, 1, 2, 0, 2, 1, 2, 2, 3,
    0, 2, 1, 3, 3, 4, 0, 2, 2, 3, 3, 4, 0, 3, 0, 4, 1, 4, 0, 3, 1, 3, 3, 4, 0, 3, 1, 4, 2, 4, 0, 3, 2, 4, 3, 4,
    0, 4, 0, 5, 1, 4, 0, 5, 0, 6, 1, 5, 0, 5, 1, 4, 2, 4, 0, 5, 1, 5, 3, 4, 0, 5, 2, 4, 3, 4, 0, 6, 0, 7, 1, 6,
    0, 6, 1, 5, 3, 4, 0, 6, 1, 6, 2, 5, 0, 6, 2, 5, 3, 4, 1, 0, 1, 1, 2, 0, 1, 1, 1, 2, 2, 3, 1, 1, 2, 0, 2, 1,
    1, 1, 2, 1, 3, 2, 1, 1, 2, 2, 3, 4, 1, 1, 2, 2, 4, 3, 1, 1, 2, 3, 3, 4, 1, 1, 3, 2, 4, 3, 2, 0, 2, 1, 3, 2,
    2, 0, 3, 0, 3, 1, 2, 0, 3, 1, 4, 3, 2, 0, 3, 2, 4, 3, 2, 2, 3, 3, 3, 4, 2, 2, 3, 3, 4, 3, 3, 0, 3, 1, 4, 3,
    3, 0, 4, 0, 4, 1, 3, 0, 4, 1, 4, 2, 3, 0, 4, 2, 4, 3, 3, 3, 3, 4, 4, 3, 4, 0, 4, 1, 5, 0, 4, 1, 4, 2, 5, 0,
    4, 2, 4, 3, 5, 0, 4, 3, 5, 0, 5, 1, 4, 3, 5, 1, 6, 0, 4, 3, 5, 2, 6, 0, 5, 0, 5, 1, 6, 0, 5, 2, 6, 0, 6, 1,
    6, 0, 6, 1, 7, 0,
};
inline constexpr long long split_radiant_lifting[] = {
    19, 9, 13, 25, 44, 64, 91, 125, 9, 0, 5, 13, 29, 52, 83, 13,
    5, 0, 3, 15, 42, 25, 13, 3, 1, 2, 44, 29, 15, 2, 64, 52,
    42, 91, 83, 125,
};

inline constexpr int frayed_radiant_triangles[] = {
    0, 0, 0, 1, 1, 0, 0, 1, 0, 2, 1, 2, 0, 1, 1, 0, 1, 1, 0, 1, 1, 1, 2, 2, 0, 1, 1, 2, 2, 2, 0, 2, 0, 3, 1, 3,
    0, 2, 1, 2, 2, 3, 0, 2, 1, 3, 3, 4, 0, 2, 2, 3, 3, 4, 0, 3, 0, 4, 1, 4, 0, 3, 1, 3, 3, 4, 0, 3, 1, 4, 2, 4,
    0, 3, 2, 4, 3, 4, 0, 4, 0, 5, 1, 4, 0, 5, 0, 6, 1, 5, 0, 5, 1, 4, 2, 4, 0, 5, 1, 5, 3, 4, 0, 5, 2, 4, 3, 4,
    0, 6, 0, 7, 1, 6, 0, 6, 1, 5, 3, 4, 0, 6, 1, 6, 2, 5, 0, 6, 2, 5, 3, 4, 1, 0, 1, 1, 2, 2, 1, 0, 2, 0, 2, 1,
    1, 0, 2, 1, 2, 2, 1, 2, 2, 2, 2, 3, 2, 0, 2, 1, 3, 2, 2, 0, 3, 0, 3, 1, 2, 0, 3, 1, 4, 3, 2, 0, 3, 2, 4, 3,
    2, 1, 2, 2, 3, 2, 2, 2, 2, 3, 3, 4, 2, 2, 3, 2, 4, 3, 2, 2, 3, 3, 3, 4, 2, 2, 3, 3, 4, 3, 3, 0, 3, 1, 4, 3,
    3, 0, 4, 0, 4, 1, 3, 0, 4, 1, 4, 2, 3, 0, 4, 2, 4, 3, 3, 3, 3, 4, 4, 3, 4, 0, 4, 1, 5, 0, 4, 1, 4, 2, 5, 0,
    4, 2, 4, 3, 5, 0, 4, 3, 5, 0, 5, 1, 4, 3, 5, 1, 6, 0, 4, 3, 5, 2, 6, 0, 5, 0, 5, 1, 6, 0, 5, 2, 6, 0, 6, 1,
    6, 0, 6, 1, 7, 0,
};
inline constexpr long long frayed_radiant_lifting[] = {
    8, 5, 7, 16, 32, 49, 73, 104, 5, 3, 3, 8, 21, 41, 69, 7,
    3, 0, 2, 11, 35, 16, 8, 2, 1, 2, 32, 21, 11, 2, 49, 41,
    35, 73, 69, 104,
};

inline constexpr int honeycomb7_triangles[] = {
    0, 0, 0, 1, 1, 0, 0, 1, 0, 2, 1, 1, 0, 1, 1, 0, 1, 1, 0, 2, 0, 3, 1, 2, 0, 2, 1, 1, 1, 2, 0, 3, 0, 4, 1, 3,
    0, 3, 1, 2, 1, 3, 0, 4, 0, 5, 1, 4, 0, 4, 1, 3, 1, 4, 0, 5, 0, 6, 1, 5, 0, 5, 1, 4, 1, 5, 0, 6, 0, 7, 1, 6,
    0, 6, 1, 5, 1, 6, 1, 0, 1, 1, 2, 0, 1, 1, 1, 2, 2, 1, 1, 1, 2, 0, 2, 1, 1, 2, 1, 3, 2, 2, 1, 2, 2, 1, 2, 2,
    1, 3, 1, 4, 2, 3, 1, 3, 2, 2, 2, 3, 1, 4, 1, 5, 2, 4, 1, 4, 2, 3, 2, 4, 1, 5, 1, 6, 2, 5, 1, 5, 2, 4, 2, 5,
    2, 0, 2, 1, 3, 0, 2, 1, 2, 2, 3, 1, 2, 1, 3, 0, 3, 1, 2, 2, 2, 3, 3, 2, 2, 2, 3, 1, 3, 2, 2, 3, 2, 4, 3, 3,
    2, 3, 3, 2, 3, 3, 2, 4, 2, 5, 3, 4, 2, 4, 3, 3, 3, 4, 3, 0, 3, 1, 4, 0, 3, 1, 3, 2, 4, 1, 3, 1, 4, 0, 4, 1,
    3, 2, 3, 3, 4, 2, 3, 2, 4, 1, 4, 2, 3, 3, 3, 4, 4, 3, 3, 3, 4, 2, 4, 3, 4, 0, 4, 1, 5, 0, 4, 1, 4, 2, 5, 1,
    4, 1, 5, 0, 5, 1, 4, 2, 4, 3, 5, 2, 4, 2, 5, 1, 5, 2, 5, 0, 5, 1, 6, 0, 5, 1, 5, 2, 6, 1, 5, 1, 6, 0, 6, 1,
    6, 0, 6, 1, 7, 0,
};
inline constexpr long long honeycomb7_lifting[] = {
    16, 10, 6, 4, 4, 6, 10, 16, 10, 5, 2, 1, 2, 5, 10, 6,
    2, 0, 0, 2, 6, 4, 1, 0, 1, 4, 4, 2, 2, 4, 6, 5,
    6, 10, 10, 16,
};

inline constexpr std::array<Entry, 6> entries = {{
    {"bat", 6, bat_triangles, 36, bat_lifting, 28},
    {"moth", 6, moth_triangles, 36, moth_lifting, 28},
    {"radiant", 7, radiant_triangles, 49, radiant_lifting, 36},
    {"split_radiant", 7, split_radiant_triangles, 49, split_radiant_lifting, 36},
    {"frayed_radiant", 7, frayed_radiant_triangles, 49, frayed_radiant_lifting, 36},
    {"honeycomb7", 7, honeycomb7_triangles, 49, honeycomb7_lifting, 36},
}};

}  // namespace patchwork::catalog_data
