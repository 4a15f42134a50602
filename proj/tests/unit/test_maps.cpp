#include <doctest.h>

#include "helpers.hpp"
#include "quadhopf/hopf/hopf.hpp"
#include "quadhopf/maps/maps.hpp"
#include "quadhopf/symcore/errors.hpp"
#include "quadhopf/symcore/ideal.hpp"

using namespace quadhopf;
using namespace quadhopf::maps;
using testing::P;

namespace {

const std::vector<std::string> kClasses = {"<1>", "<2>", "<1,-1>", "<2> - <3>", "<1,1,1>"};

}  // namespace

TEST_SUITE("maps") {
  TEST_CASE("suspension of the first exotic map") {
    QuadricMorphism m = hopf::theorem1_morphism(QuadricId(4).ring());
    QuadricMorphism once = suspend_odd_target(m);
    CHECK(once.source == QuadricId(6));
    CHECK(once.target == QuadricId(5));
    CHECK(once.x_part.size() == 3);
    CHECK(format(once.x_part[2]) == "x3");
    CHECK(quadrics::verify_full(once).ok);
    QuadricMorphism twice = suspend(m, 2);
    CHECK(twice.source == QuadricId(8));
    CHECK(twice.target == QuadricId(7));
    CHECK(quadrics::verify_full(twice).ok);
    CHECK(suspend(m, 0).x_part == m.x_part);
  }

  TEST_CASE("suspension carries certificates") {
    Ring r = QuadricId(3).ring();
    QuadricMorphism row = quadrics::complete_row({P("x1^2", r), P("x2", r)}, QuadricId(3), QuadricId(3));
    QuadricMorphism s = suspend(row, 2);
    REQUIRE(s.certificate);
    CHECK(s.certificate->verify());
    CHECK(quadrics::verify_full(s).ok);
  }

  TEST_CASE("suspension of maps to even quadrics") {
    QuadricMorphism s = suspend_even_target(eta_full());
    CHECK(s.source == QuadricId(5));
    CHECK(s.target == QuadricId(4));
    CHECK(quadrics::verify_full(s).ok);
  }

  TEST_CASE("eta family") {
    for (int n = 1; n <= 4; ++n) {
      QuadricMorphism e = eta_family(n);
      CHECK(e.source == QuadricId(2 * n + 1));
      CHECK(e.target == QuadricId(2 * n));
      REQUIRE(e.certificate);
      CHECK(e.certificate->verify());
      CHECK(quadrics::verify_ideal_map(e.x_part, *e.z_part, e.source, e.target).verify());
    }
    QuadricMorphism e3 = eta_family(3);
    CHECK(format(e3.x_part[0]) == "x2*y1");
    CHECK(format(e3.x_part[1]) == "x3");
    CHECK(format(*e3.z_part) == "x1*y1");
  }

  TEST_CASE("the eta ideal read literally is not a map") {
    QuadricMorphism lit = eta_family_literal(3);
    CHECK(lit.x_part.size() == 1);
    CHECK_THROWS_AS(quadrics::verify_ideal_map(lit.x_part, *lit.z_part, lit.source, lit.target), InvalidArgument);
    // the membership the ideal would need fails as well
    Ring r = lit.ring();
    Poly fz = *lit.z_part;
    std::vector<Poly> gens = lit.x_part;
    gens.push_back(quadrics::relation(lit.source, r));
    CHECK_THROWS_AS(certify_membership(fz * (P("1", r) - fz), gens), NotInIdeal);
  }

  TEST_CASE("nu and its suspensions") {
    QuadricMorphism nu = nu_base();
    CHECK(nu.source == QuadricId(7));
    CHECK(nu.target == QuadricId(4));
    CHECK(quadrics::verify_full(nu).ok);
    for (int n = 2; n <= 3; ++n) {
      QuadricMorphism f = nu_family(n);
      CHECK(f.source == QuadricId(2 * n + 3));
      CHECK(f.target == QuadricId(2 * n));
      CHECK(quadrics::verify_ideal_map(f.x_part, *f.z_part, f.source, f.target).verify());
    }
    CHECK_THROWS_AS(nu_family(1), InvalidArgument);
  }

  TEST_CASE("GW class syntax") {
    Domain q = Domain::rationals();
    GWClass a = parse_gw_class("<1,2,-3/4> - <5> + 2h", q);
    CHECK(a.plus.size() == 3);
    CHECK(a.minus.size() == 1);
    CHECK(a.hyperbolic == 2);
    CHECK(a.rank() == 6);
    CHECK(a.describe(q) == "<1,2,-3/4> - <5> + 2h");
    CHECK(parse_gw_class("0", q).rank() == 0);
    GWClass g = parse_gw_class("<i>", Domain::gaussian());
    CHECK(g.plus[0] == Domain::gaussian().imaginary_unit());
    CHECK_THROWS_AS(parse_gw_class("<1", q), ParseError);
    CHECK_THROWS_AS(parse_gw_class("<0>", q), ParseError);
    CHECK_THROWS_AS(parse_gw_class("<1> <2>", q), ParseError);
    CHECK_THROWS_AS(parse_gw_class("<i>", q), ParseError);
  }

  TEST_CASE("binomial split") {
    for (int n = 1; n <= 12; ++n) {
      BinomSplit s = binom_split(n);
      CHECK(s.verify());
      Ring r = s.A.ring();
      Poly z = P("z", r);
      CHECK(z.pow(n) * s.A + (P("1", r) - z).pow(n) * s.B == P("1", r));
      CHECK(s.A.total_degree() <= n);
      CHECK(s.B.total_degree() <= n);
    }
    CHECK_THROWS_AS(binom_split(0), InvalidArgument);
  }

  TEST_CASE("q3 endomorphisms of the fixed classes") {
    Ring r = QuadricId(3).ring();
    Quotient q = quadrics::quotient(QuadricId(3), r);
    for (const auto& text : kClasses) {
      INFO(text);
      Q3Endo e = q3_endo(parse_gw_class(text, Domain::rationals()), r);
      CHECK(quadrics::verify_row(e.row.x_part, QuadricId(3), QuadricId(3)).verify());
      CHECK(quadrics::verify_full(e.row).ok);
      CHECK(q.is_zero(e.matrix.det() - P("1", r)));
    }
  }

  TEST_CASE("q3 generators") {
    Ring r = QuadricId(3).ring();
    Quotient q = quadrics::quotient(QuadricId(3), r);
    auto [m, inv] = q3_generator(Domain::rationals().from_int(5), r);
    CHECK(m.to_strings()[0][1] == "5*x2");
    CHECK((m * inv).reduced(q) == PolyMatrix::identity(r, 2));
    CHECK_THROWS(q3_generator(Domain::rationals().zero(), r));
  }

  TEST_CASE("q2 endomorphisms of the fixed classes") {
    Ring r = QuadricId(2).ring();
    for (const auto& text : kClasses) {
      INFO(text);
      GWClass c = parse_gw_class(text, Domain::rationals());
      if (c.rank() == 0) {
        CHECK_THROWS_AS(q2_endo(c, r), InvalidArgument);
        continue;
      }
      CHECK(q2_endo(c, r).check().ok());
    }
    CHECK(q2_endo(parse_gw_class("-<1>", Domain::rationals()), r).check().ok());
    CHECK_THROWS_AS(q2_endo(parse_gw_class("-<1,1>", Domain::rationals()), r), InvalidArgument);
  }

  TEST_CASE("q2 projectors") {
    Ring r = QuadricId(2).ring();
    for (int n : {-3, -1, 1, 2, 3, 4}) {
      INFO(n);
      CHECK(q2_projector(n, r).check().ok());
    }
    Q2Endo p1 = q2_projector(1, r);
    CHECK(p1.projector.to_strings()[0][0] == "-z^2 + 2*z");
    CHECK_THROWS_AS(q2_projector(0, r), InvalidArgument);
  }

  TEST_CASE("m_{u,v} has determinant 1 and conjugation keeps idempotents") {
    Ring r = QuadricId(2).ring();
    Quotient q = quadrics::quotient(QuadricId(2), r);
    Domain d = Domain::rationals();
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    Q2Endo p = q2_projector(2, r);
    for (int k = 0; k < 20; ++k) {
      int a = num(rng), b = num(rng);
      if (a == 0) a = 1;
      if (b == 0) b = -1;
      Scalar u = d.div(d.from_int(a), d.from_int(den(rng)));
      Scalar v = d.div(d.from_int(b), d.from_int(den(rng)));
      auto [m, inv] = q2_rank0(u, v, r);
      CHECK(q.is_zero(m.det() - P("1", r)));
      CHECK((m * inv).reduced(q) == PolyMatrix::identity(r, 2));
      Q2Endo conj{(m * p.projector * inv).reduced(q)};
      CHECK(conj.check().ok());
    }
  }

  TEST_CASE("q2 endomorphism plans") {
    Domain d = Domain::rationals();
    Q2EndoPlan plan = plan_q2_endo(parse_gw_class("<2,3>", d), d);
    CHECK(plan.projector_index == 2);
    CHECK_THROWS_AS(plan_q2_endo(parse_gw_class("<2> - <3>", d), d), InvalidArgument);
  }
}
