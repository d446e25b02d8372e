#pragma once

// Folding conditions for lifting functions, and an exact feasibility test.
//
// For an interior edge (v, x) with apexes t, w of two unimodular triangles,
// t + w = a v + b x with a + b = 2. A lifting induces the triangulation near
// the edge iff w(t) + w(w) > a w(v) + b w(x); for a parallelogram a = b = 1.
// The condition is kept integral by scaling with |x - v|^2.

#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "patchwork/error.hpp"
#include "patchwork/triangulation.hpp"

namespace patchwork {

struct FoldingCondition {
  Edge edge;      // (v, x)
  Edge opposite;  // (t, w)
  long long scale = 1;  // c in c (w(t) + w(w)) > a w(v) + b w(x)
  long long coef_v = 1;
  long long coef_x = 1;
};

struct FoldingViolation {
  Edge edge;
  Edge opposite;
  long long lhs = 0;  // scale * (w(t) + w(w))
  long long rhs = 0;  // coef_v * w(v) + coef_x * w(x)
};

inline std::vector<FoldingCondition> folding_conditions(const Triangulation& t) {
  std::vector<FoldingCondition> out;
  for (const auto& q : t.interior_edges()) {
    const LatticePoint v = t.point(q.edge.first), x = t.point(q.edge.second);
    const LatticePoint a = t.point(q.opposite.first), w = t.point(q.opposite.second);
    const LatticePoint D = x - v;
    const LatticePoint S = a + w - v - v;  // = b * D
    const long long dd = static_cast<long long>(D.x) * D.x + static_cast<long long>(D.y) * D.y;
    const long long bb = static_cast<long long>(S.x) * D.x + static_cast<long long>(S.y) * D.y;  // b * dd
    FoldingCondition c{q.edge, q.opposite, dd, 2 * dd - bb, bb};
    const long long g = std::gcd(std::gcd(c.scale, c.coef_v), c.coef_x);
    if (g > 1) {
      c.scale /= g;
      c.coef_v /= g;
      c.coef_x /= g;
    }
    out.push_back(c);
  }
  return out;
}

inline std::vector<FoldingViolation> verify_lifting(const Triangulation& t, const std::vector<long long>& w) {
  if (static_cast<int>(w.size()) != t.num_points())
    throw InputError("lifting has " + std::to_string(w.size()) + " values, expected " + std::to_string(t.num_points()));
  std::vector<FoldingViolation> out;
  for (const auto& c : folding_conditions(t)) {
    const long long lhs = c.scale * (w[c.opposite.first] + w[c.opposite.second]);
    const long long rhs = c.coef_v * w[c.edge.first] + c.coef_x * w[c.edge.second];
    if (lhs <= rhs) out.push_back({c.edge, c.opposite, lhs, rhs});
  }
  return out;
}

inline std::vector<FoldingViolation> verify_lifting(const Triangulation& t) {
  if (!t.lifting()) throw InputError("triangulation has no lifting");
  return verify_lifting(t, *t.lifting());
}

/// "(t,w | v,x): lhs vs rhs" with lattice coordinates.
inline std::string format_violation(const Triangulation& t, const FoldingViolation& v) {
  return "(" + to_string(t.point(v.opposite.first)) + "," + to_string(t.point(v.opposite.second)) + " | " +
         to_string(t.point(v.edge.first)) + "," + to_string(t.point(v.edge.second)) + "): " + std::to_string(v.lhs) +
         " vs " + std::to_string(v.rhs);
}

namespace detail {

using Rational = boost::multiprecision::cpp_rational;

/// Phase-one simplex for { A y >= 1, y >= 0 } in exact arithmetic with
/// Bland's rule. Artificial columns are not stored: once an artificial
/// variable leaves the basis it never re-enters.
inline std::optional<std::vector<Rational>> feasible_point(const std::vector<std::vector<long long>>& A, int n) {
  const int m = static_cast<int>(A.size());
  const int cols = n + m;  // structural, then surplus
  std::vector<std::vector<Rational>> T(m, std::vector<Rational>(cols + 1));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = -1;
    T[i][cols] = 1;
    basis[i] = -1 - i;  // artificial
  }
  std::vector<Rational> obj(cols + 1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= cols; ++j) obj[j] += T[i][j];

  for (;;) {
    int enter = -1;
    for (int j = 0; j < cols; ++j)
      if (obj[j] > 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      const Rational ratio = T[i][cols] / T[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) break;  // unbounded direction cannot occur in phase one
    const Rational piv = T[leave][enter];
    for (auto& v : T[leave]) v /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      const Rational f = T[i][enter];
      for (int j = 0; j <= cols; ++j) T[i][j] -= f * T[leave][j];
    }
    if (obj[enter] != 0) {
      const Rational f = obj[enter];
      for (int j = 0; j <= cols; ++j) obj[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  if (obj[cols] > 0) return std::nullopt;
  std::vector<Rational> y(n);
  for (int i = 0; i < m; ++i)
    if (basis[i] >= 0 && basis[i] < n) y[basis[i]] = T[i][cols];
  return y;
}

}  // namespace detail

/// A nonnegative integer lifting satisfying every folding condition with
/// margin at least 1, or nothing when the triangulation is not regular.
inline std::optional<std::vector<long long>> find_lifting(const Triangulation& t) {
  const int n = t.num_points();
  std::vector<std::vector<long long>> A;
  for (const auto& c : folding_conditions(t)) {
    std::vector<long long> row(n, 0);
    row[c.opposite.first] += c.scale;
    row[c.opposite.second] += c.scale;
    row[c.edge.first] -= c.coef_v;
    row[c.edge.second] -= c.coef_x;
    A.push_back(std::move(row));
  }
  if (A.empty()) return std::vector<long long>(n, 0);
  const auto y = detail::feasible_point(A, n);
  if (!y) return std::nullopt;
  boost::multiprecision::cpp_int l = 1;
  for (const auto& v : *y) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(v));
  std::vector<long long> w(n);
  for (int i = 0; i < n; ++i) {
    const boost::multiprecision::cpp_int v = boost::multiprecision::numerator((*y)[i]) * (l / boost::multiprecision::denominator((*y)[i]));
    if (v > std::numeric_limits<long long>::max()) throw Error("internal", "lifting value overflows 64 bits");
    w[i] = static_cast<long long>(v);
  }
  return w;
}

}  // namespace patchwork
