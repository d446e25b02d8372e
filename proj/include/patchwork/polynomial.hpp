#pragma once

// The polynomial family f_t = sum (-1)^sigma(i,j) t^w(i,j) x^i y^j z^(d-i-j)
// of a patchwork on a regular triangulation.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "patchwork/error.hpp"
#include "patchwork/regularity.hpp"
#include "patchwork/signs.hpp"
#include "patchwork/triangulation.hpp"

namespace patchwork {

struct Monomial {
  int i = 0, j = 0, k = 0;  // exponents of x, y, z
  int sign = 1;              // +1 or -1
  long long t_power = 0;
};

namespace detail {

inline std::string monomial_string(const Monomial& m) {
  std::string s;
  const auto var = [&](char v, int e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += v;
    if (e > 1) s += '^' + std::to_string(e);
  };
  var('x', m.i);
  var('y', m.j);
  var('z', m.k);
  return s;
}

inline std::string join_terms(const std::vector<std::pair<int, std::string>>& terms) {
  std::string out;
  for (std::size_t n = 0; n < terms.size(); ++n) {
    const auto& [sign, body] = terms[n];
    if (n == 0) out += sign < 0 ? "-" : "";
    else out += sign < 0 ? " - " : " + ";
    out += body;
  }
  return out.empty() ? "0" : out;
}

}  // namespace detail

class Polynomial {
 public:
  Polynomial(int degree, std::vector<Monomial> terms) : d_(degree), terms_(std::move(terms)) {}

  int degree() const { return d_; }
  const std::vector<Monomial>& terms() const { return terms_; }

  /// Symbolic in t, e.g. "-t^2*x^2 + x*y - z^2".
  std::string to_string() const {
    std::vector<std::pair<int, std::string>> parts;
    for (const auto& m : terms_) {
      std::string body;
      if (m.t_power == 1) body = "t";
      else if (m.t_power != 0) body = "t^" + std::to_string(m.t_power);
      const std::string mono = detail::monomial_string(m);
      if (!body.empty() && !mono.empty()) body += '*';
      body += mono;
      if (body.empty()) body = "1";
      parts.emplace_back(m.sign, body);
    }
    return detail::join_terms(parts);
  }

  /// With t substituted by an exact positive rational.
  std::string to_string(const boost::multiprecision::cpp_rational& t) const {
    if (t <= 0) throw InputError("t must be positive");
    std::vector<std::pair<int, std::string>> parts;
    for (const auto& m : terms_) {
      boost::multiprecision::cpp_rational c = 1;
      const boost::multiprecision::cpp_rational base = m.t_power >= 0 ? t : 1 / t;
      for (long long e = 0; e < (m.t_power >= 0 ? m.t_power : -m.t_power); ++e) c *= base;
      std::string coef = c.str();
      const std::string mono = detail::monomial_string(m);
      std::string body;
      if (c == 1 && !mono.empty()) body = mono;
      else if (mono.empty()) body = coef;
      else if (coef.find('/') != std::string::npos) body = "(" + coef + ")*" + mono;
      else body = coef + "*" + mono;
      parts.emplace_back(m.sign, body);
    }
    return detail::join_terms(parts);
  }

 private:
  int d_;
  std::vector<Monomial> terms_;
};

/// "p/q" or "p" as a positive exact rational.
inline boost::multiprecision::cpp_rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    const boost::multiprecision::cpp_int p(s.substr(0, slash));
    const boost::multiprecision::cpp_int q(slash == std::string::npos ? std::string("1") : s.substr(slash + 1));
    if (p <= 0 || q <= 0) throw InputError("t must be a positive rational, got '" + s + "'");
    return boost::multiprecision::cpp_rational(p, q);
  } catch (const std::runtime_error&) {
    throw InputError("cannot parse rational '" + s + "'");
  }
}

/// The shipped lifting if it is valid, otherwise one found by linear
/// programming; NoLifting when the triangulation is not regular.
inline std::vector<long long> lifting_for_export(const Triangulation& t) {
  if (t.lifting() && verify_lifting(t).empty()) return *t.lifting();
  auto w = find_lifting(t);
  if (!w) throw NoLifting("triangulation is not regular; no lifting function exists");
  return *w;
}

inline Polynomial export_polynomial(const Triangulation& t, const SignDistribution& s) {
  if (s.degree() != t.degree()) throw InputError("sign distribution and triangulation have different degrees");
  const auto w = lifting_for_export(t);
  const int d = t.degree();
  std::vector<Monomial> terms;
  for (const LatticePoint p : lattice_points(d)) {
    const int li = lex_index(p, d);
    terms.push_back({p.x, p.y, d - p.x - p.y, s[li] ? -1 : 1, w[t.index_of(p)]});
  }
  return Polynomial(d, std::move(terms));
}

}  // namespace patchwork
