#pragma once

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "quadhopf/symcore/poly.hpp"

namespace doctest {
template <>
struct StringMaker<quadhopf::Poly> {
  static String convert(const quadhopf::Poly& p) { return quadhopf::format(p).c_str(); }
};
}  // namespace doctest

namespace testing {

using namespace quadhopf;

inline Poly P(const std::string& text, const Ring& r) { return parse(text, r); }

/// Random polynomial with up to `terms` terms, exponents in [0, max_exp]
/// (or [-max_exp, max_exp] for invertible variables), small coefficients.
inline Poly random_poly(std::mt19937_64& rng, const Ring& r, int terms, int max_exp) {
  std::uniform_int_distribution<int> count(0, terms);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  Poly out(r);
  int n = count(rng);
  for (int t = 0; t < n; ++t) {
    Poly m = Poly::constant(r, r->domain().div(r->domain().from_int(coeff(rng)), r->domain().from_int(den(rng))));
    if (r->domain().is_gaussian() && rng() % 3 == 0) {
      m *= Poly::constant(r, r->domain().make(0, coeff(rng)));
    }
    for (std::size_t i = 0; i < r->size(); ++i) {
      int lo = r->is_invertible(i) ? -max_exp : 0;
      int e = std::uniform_int_distribution<int>(lo, max_exp)(rng);
      if (e != 0) m *= Poly::variable(r, r->variables()[i], e);
    }
    out += m;
  }
  return out;
}

}  // namespace testing
