#include <doctest.h>

#include "helpers.hpp"
#include "quadhopf/quadrics/morphism.hpp"
#include "quadhopf/symcore/errors.hpp"

using namespace quadhopf;
using namespace quadhopf::quadrics;
using testing::P;

TEST_SUITE("quadrics") {
  TEST_CASE("quadric ids") {
    CHECK(QuadricId(3).variables() == std::vector<std::string>{"x1", "x2", "y1", "y2"});
    CHECK(QuadricId(4).variables() == std::vector<std::string>{"x1", "x2", "y1", "y2", "z"});
    CHECK(QuadricId(2).variables() == std::vector<std::string>{"x1", "y1", "z"});
    CHECK(QuadricId(5).index() == 3);
    CHECK(QuadricId(6).variable_count() == 7);
    CHECK(QuadricId(7).name() == "Q7");
    CHECK(QuadricId::odd(2) == QuadricId(3));
    CHECK(QuadricId::even(2) == QuadricId(4));
    CHECK_THROWS_AS(QuadricId(0), InvalidArgument);
  }

  TEST_CASE("relations") {
    CHECK(format(relation(QuadricId(3))) == "x1*y1 + x2*y2 - 1");
    CHECK(format(relation(QuadricId(2))) == "x1*y1 + z^2 - z");
    Ring r = QuadricId(4).ring(TermOrder::lex);
    CHECK(relation(QuadricId(4), r) == P("x1*y1 + x2*y2 - z + z^2", r));
  }

  TEST_CASE("identity and swap maps verify") {
    Ring r = QuadricId(3).ring();
    QuadricMorphism id{QuadricId(3), QuadricId(3), {P("x1", r), P("x2", r)}, {P("y1", r), P("y2", r)}, {}, {}, "identity"};
    CHECK(verify_full(id).ok);
    QuadricMorphism swap{QuadricId(3), QuadricId(3), {P("y1", r), P("x2", r)}, {P("x1", r), P("y2", r)}, {}, {}, "swap"};
    CHECK(verify_full(swap).ok);
    QuadricMorphism bad{QuadricId(3), QuadricId(3), {P("x1", r), P("x2", r)}, {P("y1", r), P("2*y2", r)}, {}, {}, ""};
    Verification v = verify_full(bad);
    CHECK_FALSE(v.ok);
    CHECK(v.witness == P("x2*y2", r));
  }

  TEST_CASE("unimodular rows") {
    Ring r = QuadricId(3).ring();
    MembershipCertificate c = verify_row({P("x1", r), P("x2", r)}, QuadricId(3), QuadricId(3));
    CHECK(c.verify());
    CHECK_THROWS_AS(verify_row({P("x1", r), P("x1*x2", r)}, QuadricId(3), QuadricId(3)), NotInIdeal);
    QuadricMorphism m = complete_row({P("x1^2", r), P("x2", r)}, QuadricId(3), QuadricId(3));
    CHECK(m.is_full());
    CHECK(verify_full(m).ok);
    REQUIRE(m.certificate);
    CHECK(m.certificate->verify());
  }

  TEST_CASE("certificates from a known completion") {
    Ring r = QuadricId(3).ring();
    std::vector<Poly> row = {P("x1", r), P("x2", r)};
    auto cert = certificate_from_completion(row, {P("y1", r), P("y2", r)}, QuadricId(3));
    REQUIRE(cert);
    CHECK(cert->verify());
    CHECK(cert->cofactors.back() == P("-1", r));
    CHECK_FALSE(certificate_from_completion(row, {P("y1", r), P("x2", r)}, QuadricId(3)));
    QuadricMorphism m{QuadricId(3), QuadricId(3), {P("x1^2", r), P("x2", r)}, {P("y1^2", r), P("2*x1*y1*y2 + x2*y2^2", r)}, {}, {}, ""};
    // from 1 = (x1 y1 + x2 y2)^2 modulo the relation
    REQUIRE(verify_full(m).ok);
    Poly r_cof = relation_cofactor(m);
    CHECK(m.x_part[0] * m.y_part[0] + m.x_part[1] * m.y_part[1] - P("1", r) == r_cof * relation(QuadricId(3), r));
  }

  TEST_CASE("maps to even quadrics given by ideals") {
    Ring r = QuadricId(3).ring();
    MembershipCertificate c = verify_ideal_map({P("x2*y1", r)}, P("x1*y1", r), QuadricId(3), QuadricId(2));
    CHECK(c.verify());
    QuadricMorphism m = complete_ideal_map({P("x2*y1", r)}, P("x1*y1", r), QuadricId(3), QuadricId(2));
    CHECK(verify_full(m).ok);
    CHECK_THROWS_AS(verify_ideal_map({P("x1 + x2", r)}, P("x1*y1", r), QuadricId(3), QuadricId(2)), NotInIdeal);
  }

  TEST_CASE("q2 endomorphisms given by projectors") {
    Ring r = QuadricId(2).ring();
    Q2Endo id{PolyMatrix::parse(r, {{"z", "x1"}, {"y1", "1 - z"}})};
    CHECK(id.check().ok());
    CHECK(id.first_column() == std::vector<Poly>{P("z", r), P("y1", r)});
    Q2Endo bad{PolyMatrix::parse(r, {{"z", "x1"}, {"y1", "z"}})};
    CHECK_FALSE(bad.check().ok());
  }

  TEST_CASE("standard maps") {
    for (const char* name : {"alpha_n", "alpha_n_iso_inverse", "phi_2n+1", "psi_2n+2"}) {
      for (int n = 1; n <= 3; ++n) {
        StandardMap m = standard_map(name, n);
        INFO(name, " n=", n, " ", m.note);
        CHECK(verify_standard_map(m).ok);
      }
    }
    StandardMap p = standard_map("p_n", 2);
    CHECK_FALSE(p.target);
    // p_n after alpha_n is the projection onto the x coordinates
    StandardMap a = standard_map("alpha_n", 2);
    for (std::size_t i = 0; i < p.images.size(); ++i) {
      CHECK(substitute(p.images[i], a.images) == Poly::variable(a.source, "x" + std::to_string(i + 1)));
    }
    CHECK_THROWS_AS(standard_map("nope", 1), InvalidArgument);
    CHECK_THROWS_AS(standard_map("phi_2n+1", 0), InvalidArgument);
  }
}
