#include "common.hpp"
#include "quadhopf/bundles/idempotents.hpp"
#include "quadhopf/hopf/hopf.hpp"

namespace quadhopf::hopf {

using namespace detail;

namespace {

struct Setup {
  Ring r = make_ring({"x1", "x2", "x3", "y1", "y2", "y3"}, TermOrder::degrevlex, Domain::rationals(), {"x3"});
  Poly x1 = var(r, "x1"), x2 = var(r, "x2"), x3 = var(r, "x3");
  Poly y1 = var(r, "y1"), y2 = var(r, "y2"), y3 = var(r, "y3");
  Poly one = num(r, 1), zero = num(r, 0);
  Poly x3i = x3.pow(-1);
  // U = {x3 != 0} in Q5; V = {y3 = 0} in Q5, i.e. k[x1,x2,y1,y2,x3]/(f2).
  Quotient u{r, {x1 * y1 + x2 * y2 + x3 * y3 - one}};
  Quotient v{r, {x1 * y1 + x2 * y2 - one, y3}};

  PolyMatrix m3(std::vector<std::vector<Poly>> rows) const {
    PolyMatrix m(r, 3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
};

}  // namespace

Trivializations trivializations() {
  Setup s;
  const auto& [r, x1, x2, x3, y1, y2, y3, one, zero, x3i, u, v] = s;
  Trivializations out;

  PolyMatrix e_left = s.m3({{zero, zero, -x3}, {zero, one, zero}, {x3i, -x2 * x3i, x1}});
  PolyMatrix e_right = s.m3({{one, zero, zero}, {y2, one, zero}, {-x3i * y1, zero, one}});
  out.E = s.m3({{y1, zero, -x3}, {y2, one, zero}, {y3, -x2 * x3i, x1}});
  out.E_inv = s.m3({{x1, x2, x3},
                    {-x1 * y2, one - x2 * y2, -x3 * y2},
                    {-x3i * (one - x1 * y1), x3i * x2 * y1, y1}});

  PolyMatrix f1 = s.m3({{one, zero, (one - x3) * y1}, {zero, one, (one - x3) * y2}, {zero, zero, one}});
  PolyMatrix f2 = s.m3({{one, zero, zero}, {zero, one, zero}, {-x1, -x2, one}});
  PolyMatrix f3 = s.m3({{zero, zero, -one}, {zero, one, zero}, {one, zero, zero}});
  PolyMatrix f4 = s.m3({{one, zero, zero}, {y2, one, zero}, {-y1, zero, one}});
  out.F = s.m3({{y1, -x2 * y1 * (one - x3), -one + (one - x3) * x1 * y1},
                {y2, one - x2 * y2 * (one - x3), (one - x3) * x1 * y2},
                {zero, -x2, x1}});
  out.F_inv = s.m3({{x1, x2, x3}, {-x1 * y2, x1 * y1, -y2}, {-x2 * y2, x2 * y1, y1}});

  out.T = mat2(one - x2 * y2 * (one - x3), x1 * y2 * (one - x3), (x3i - one) * x2 * y1,
               x3i - x1 * y1 * (x3i - one));

  PolyMatrix id = PolyMatrix::identity(r, 3);
  PolyMatrix x_row = PolyMatrix::row({x1, x2, x3});
  PolyMatrix y_col = PolyMatrix::column({y1, y2, y3});
  PolyMatrix e1_row = PolyMatrix::row({one, zero, zero});
  PolyMatrix e1_col = PolyMatrix::column({one, zero, zero});
  PolyMatrix mp = bundles::universal_MP(r);
  PolyMatrix d011 = s.m3({{zero, zero, zero}, {zero, one, zero}, {zero, zero, one}});

  auto& c = out.checks;
  c.push_back(matrix_check("E.factorization", e_left * e_right, out.E, u));
  c.push_back(matrix_check("E.inverse", out.E * out.E_inv, id, u));
  c.push_back(matrix_check("E.row", x_row * out.E, e1_row, u));
  c.push_back(matrix_check("E.column", out.E_inv * y_col, e1_col, u));
  c.push_back(matrix_check("E.conjugation", out.E_inv * mp * out.E, d011, u));
  c.push_back(matrix_check("F.factorization", f1 * f2 * f3 * f4, out.F, v));
  c.push_back(matrix_check("F.inverse", out.F * out.F_inv, id, v));
  c.push_back(matrix_check("F.row", x_row * out.F, e1_row, v));
  c.push_back(matrix_check("F.column", out.F_inv * y_col, e1_col, v));
  c.push_back(matrix_check("F.conjugation", out.F_inv * mp * out.F, d011, v));

  // Over U n V both trivialize P, so E^{-1} F = diag(1, T).
  PolyMatrix transition = out.E_inv * out.F;
  PolyMatrix expected = s.m3({{one, zero, zero}, {zero, out.T(0, 0), out.T(0, 1)}, {zero, out.T(1, 0), out.T(1, 1)}});
  c.push_back(matrix_check("T.transition", transition, expected, v));

  PolyMatrix m = mat2(x1, -y2, x2, y1);
  PolyMatrix m_inv = mat2(y1, y2, -x2, x1);
  PolyMatrix commutator = mat2(one, zero, zero, x3i) * m * mat2(one, zero, zero, x3) * m_inv;
  c.push_back(matrix_check("T.commutator", out.T, commutator, v));
  c.push_back(poly_check("T.det", v.reduce(out.T.det() - one)));
  PolyMatrix id2 = PolyMatrix::identity(r, 2);
  c.push_back(exact_check("T.at_x3_1", specialize(out.T, {{"x3", one}}), id2));
  c.push_back(exact_check("T.at_base_point",
                          specialize(out.T, {{"x1", one}, {"x2", zero}, {"y1", one}, {"y2", zero}}), id2));
  return out;
}

}  // namespace quadhopf::hopf
