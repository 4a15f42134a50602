#pragma once

#include <map>
#include <string>

#include "quadhopf/report.hpp"
#include "quadhopf/sympl/matrix.hpp"

namespace quadhopf::hopf::detail {

inline Poly var(const Ring& r, const std::string& name) { return Poly::variable(r, name); }
inline Poly num(const Ring& r, long c) { return Poly::constant(r, c); }

inline PolyMatrix mat2(const Poly& a, const Poly& b, const Poly& c, const Poly& d) {
  PolyMatrix m(a.ring(), 2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

inline std::string describe(const std::optional<PolyMatrix::Mismatch>& w) {
  if (!w) return {};
  return "entry (" + std::to_string(w->row) + "," + std::to_string(w->col) + "): " + format(w->difference);
}

/// a == b modulo q, entry-wise.
inline Check matrix_check(std::string id, const PolyMatrix& a, const PolyMatrix& b, const Quotient& q) {
  auto w = a.first_mismatch(b, q);
  return make_check(std::move(id), !w, describe(w));
}

/// a == b as polynomials, entry-wise.
inline Check exact_check(std::string id, const PolyMatrix& a, const PolyMatrix& b) {
  Quotient none{a.ring(), {}};
  return matrix_check(std::move(id), a, b, none);
}

inline Check poly_check(std::string id, const Poly& residue) {
  return make_check(std::move(id), residue.is_zero(), residue.is_zero() ? "" : format(residue));
}

/// Substitutes the listed variables and keeps the rest.
inline Poly specialize(const Poly& p, const std::map<std::string, Poly>& values) {
  std::map<std::string, Poly> images;
  for (const auto& v : p.ring()->variables()) images.emplace(v, Poly::variable(p.ring(), v));
  for (const auto& [k, v] : values) images[k] = v;
  return substitute(p, images);
}

inline PolyMatrix specialize(const PolyMatrix& m, const std::map<std::string, Poly>& values) {
  return m.map([&values](const Poly& p) { return specialize(p, values); });
}

}  // namespace quadhopf::hopf::detail
