#include <doctest.h>

#include "helpers.hpp"
#include "quadhopf/bundles/idempotents.hpp"
#include "quadhopf/bundles/jouanolou.hpp"
#include "quadhopf/io/io.hpp"
#include "quadhopf/hopf/hopf.hpp"
#include "quadhopf/maps/maps.hpp"
#include "quadhopf/symcore/errors.hpp"

using namespace quadhopf;
using namespace quadhopf::bundles;
using quadrics::QuadricId;
using testing::P;

TEST_SUITE("bundles") {
  TEST_CASE("M and N on Q4") {
    Ring r = QuadricId(4).ring();
    Quotient q = quadrics::quotient(QuadricId(4), r);
    auto [m, n] = q4_idempotents(r);
    CHECK(m + n == PolyMatrix::identity(r, m.rows()));
    CHECK(check_idempotent(m, q, P("2", r)).ok());
    CHECK(check_idempotent(n, q, P(std::to_string(m.rows() - 2), r)).ok());
  }

  TEST_CASE("eta projector") {
    Ring r = QuadricId(3).ring();
    PolyMatrix p = PolyMatrix::parse(r, {{"x1*y1", "x2*y1"}, {"x1*y2", "x2*y2"}});
    CHECK(check_idempotent(p, quadrics::quotient(QuadricId(3), r), P("1", r)).ok());
  }

  TEST_CASE("universal idempotent on Q5") {
    Ring r = QuadricId(5).ring();
    PolyMatrix mp = universal_MP(r);
    CHECK(check_idempotent(mp, quadrics::quotient(QuadricId(5), r), P("2", r)).ok());
    CHECK(format(mp(0, 0)) == "-x1*y1 + 1");
  }

  TEST_CASE("Plucker chart lands on Q4") {
    Ring r = make_ring({"a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4"});
    PluckerChart c = plucker_chart(r);
    // sum x_i y_i = z (d - z) after clearing the denominator d^2
    CHECK(c.x1 * c.y1 + c.x2 * c.y2 == c.z * (c.d - c.z));
  }

  TEST_CASE("Jouanolou relations") {
    for (int n = 1; n <= 3; ++n) {
      JouanolouRing j = jouanolou(n);
      CHECK(j.relations().size() == j.relation_count());
      CHECK(j.relations(RankCondition::trace).size() == j.relation_count(RankCondition::trace));
      CHECK(j.ring->size() == std::size_t((n + 1) * (n + 1)));
    }
    CHECK(jouanolou(1).relation_count() == 5);
    CHECK(jouanolou(2).relation_count() == 18);
    CHECK(jouanolou(3).relation_count() == 52);
    CHECK(jouanolou(3).ring->variables()[4] == "x21");
  }

  TEST_CASE("charts cover the Jouanolou device") {
    for (int n = 1; n <= 3; ++n) {
      JouanolouRing j = jouanolou(n);
      for (int i = 1; i <= n + 1; ++i) {
        INFO("n=", n, " i=", i);
        for (RankCondition rc : {RankCondition::minors, RankCondition::trace}) {
          for (const auto& c : verify_chart(j, chart(n, i), rc)) CHECK(c.ok());
        }
      }
    }
    Chart c = chart(2, 2);
    CHECK(format(c.column[1]) == "-a1*b1 - a2*b2 + 1");
    CHECK(c.row[1].is_one());
    CHECK_THROWS_AS(chart(2, 0), InvalidArgument);
    CHECK_THROWS_AS(chart(2, 4), InvalidArgument);
  }

  TEST_CASE("a non-idempotent matrix fails the chart identities") {
    JouanolouRing j = jouanolou(1);
    Chart c = chart(1, 1);
    c.embedding[0] = c.embedding[0] + P("a1", c.free_ring);
    auto checks = verify_chart(j, c);
    CHECK_FALSE(checks[0].ok());
  }

  TEST_CASE("pi_n is a morphism") {
    for (int n = 1; n <= 3; ++n) {
      CollapseMap pi = pi_n(n);
      CHECK(pi.target == QuadricId(2 * n));
      CHECK(pi.images.size() == QuadricId(2 * n).variable_count());
      auto checks = verify_pi_n(pi);
      CHECK(checks.size() == std::size_t(n + 1 + (n == 1 ? 1 : 0)));
      for (const auto& c : checks) CHECK(c.ok());
    }
    CHECK(format(pi_n(2).images.back()) == "x11 + x22");
  }

  TEST_CASE("rank 2 bundle from the first exotic map") {
    BundleIdempotent b = build_j3_bundle(ExoticMap::theorem1);
    CHECK(b.ok());
    CHECK(b.P.rows() == 3);
    CHECK(b.P.ring()->size() == 16);
    REQUIRE(b.charts.size() == 4);
    for (const auto& c : b.charts) {
      for (const char* id : {"factorization", "row_column", "idempotent", "trace", "minors"}) {
        bool found = false;
        for (const auto& k : c.checks) {
          if (k.id != id) continue;
          found = true;
          CHECK(k.status == Status::pass);
          if (std::string(id) == "idempotent") CHECK(k.detail.rfind("literal", 0) == 0);
        }
        CHECK(found);
      }
    }
    CHECK(b.provenance.size() >= 3);
    CHECK_THROWS_AS(parse_exotic_map("theorem3"), InvalidArgument);
  }

  TEST_CASE("bundle json") {
    BundleIdempotent b = build_j3_bundle(ExoticMap::theorem1, {2, 4000});
    io::Json j = io::to_json(b);
    CHECK(j.at("which") == "theorem1");
    CHECK(j.at("variables").size() == 16);
    CHECK(j.at("matrix").size() == 3);
    CHECK(j.at("charts").size() == 4);
    CHECK(j.at("ok") == true);
  }
}
