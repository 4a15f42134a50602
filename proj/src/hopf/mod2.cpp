#include "common.hpp"
#include "quadhopf/hopf/hopf.hpp"
#include "quadhopf/quadrics/quadric.hpp"

namespace quadhopf::hopf {

using namespace detail;

Mod2Report mod2_degenerations() {
  quadrics::QuadricId q4(4);
  Ring r = q4.ring(TermOrder::degrevlex, Domain::prime_field(2));
  Quotient q = quadrics::quotient(q4, r);
  Mod2Report out;
  out.theorem1 = theorem1_matrix(r).reduced(q);
  for (const auto& p : theorem2_row(r)) out.theorem2_row.push_back(q.reduce(p));

  Poly one = num(r, 1), zero = num(r, 0), y1 = var(r, "y1");
  PolyMatrix expected = mat2(one, zero, y1.pow(2), one);
  const char* names[2][2] = {{"theorem1.a", "theorem1.b"}, {"theorem1.c", "theorem1.d"}};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const Poly& got = out.theorem1(i, j);
      out.checks.push_back(make_check(names[i][j], got == expected(i, j), "reduces to " + format(got)));
    }
  }
  out.checks.push_back(make_check("theorem2.a'", out.theorem2_row[0].is_one(), "reduces to " + format(out.theorem2_row[0])));
  out.checks.push_back(make_check("theorem2.b'", out.theorem2_row[1].is_zero(), "reduces to " + format(out.theorem2_row[1])));
  return out;
}

}  // namespace quadhopf::hopf
