#include <doctest.h>

#include "helpers.hpp"
#include "quadhopf/hopf/hopf.hpp"
#include "quadhopf/io/io.hpp"
#include "quadhopf/symcore/errors.hpp"
#include "quadhopf/symcore/ideal.hpp"
#include "quadhopf/sympl/replay.hpp"

using namespace quadhopf;
using testing::random_poly;

namespace {

constexpr int kCases = 1000;

std::vector<Ring> rings() {
  return {make_ring({"x", "y", "z"}),
          make_ring({"x", "y", "z"}, TermOrder::lex, Domain::prime_field(101)),
          make_ring({"x", "y", "z"}, TermOrder::degrevlex, Domain::gaussian()),
          make_ring({"x", "y", "z"}, TermOrder::lex, Domain::rationals(), {"z"})};
}

std::map<std::string, Scalar> random_point(std::mt19937_64& rng, const Ring& r) {
  std::map<std::string, Scalar> pt;
  for (const auto& v : r->variables()) {
    long value = std::uniform_int_distribution<long>(1, 30)(rng);
    pt[v] = r->domain().from_int(value);
  }
  return pt;
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("ring axioms") {
    std::mt19937_64 rng(1);
    for (const Ring& r : rings()) {
      for (int k = 0; k < kCases; ++k) {
        Poly a = random_poly(rng, r, 4, 2), b = random_poly(rng, r, 4, 2), c = random_poly(rng, r, 4, 2);
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a - a).is_zero());
        REQUIRE(a * Poly::constant(r, 1) == a);
        REQUIRE(a.pow(2) == a * a);
      }
    }
  }

  TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(2);
    for (const Ring& r : rings()) {
      const Domain& d = r->domain();
      for (int k = 0; k < kCases; ++k) {
        Poly a = random_poly(rng, r, 4, 2), b = random_poly(rng, r, 4, 2);
        auto pt = random_point(rng, r);
        REQUIRE(evaluate(a * b, pt) == d.mul(evaluate(a, pt), evaluate(b, pt)));
        REQUIRE(evaluate(a - b, pt) == d.sub(evaluate(a, pt), evaluate(b, pt)));
      }
    }
  }

  TEST_CASE("format and parse round trip") {
    std::mt19937_64 rng(3);
    for (const Ring& r : rings()) {
      if (r->has_invertible()) continue;
      for (int k = 0; k < kCases; ++k) {
        Poly a = random_poly(rng, r, 6, 3);
        REQUIRE(parse(format(a), r) == a);
      }
    }
  }

  TEST_CASE("normal form is idempotent and sound") {
    std::mt19937_64 rng(4);
    for (const Ring& r : rings()) {
      for (int k = 0; k < kCases; ++k) {
        Poly p = random_poly(rng, r, 6, 3);
        std::vector<Poly> gs;
        int n = 1 + int(rng() % 3);
        while (int(gs.size()) < n) {
          Poly g = random_poly(rng, r, 3, 2);
          if (!g.is_zero()) gs.push_back(g);
        }
        Division d = divide(p, gs);
        Poly back = d.remainder;
        for (std::size_t i = 0; i < gs.size(); ++i) back += d.quotients[i] * gs[i];
        REQUIRE(back == p);
        REQUIRE(normal_form(d.remainder, gs) == d.remainder);
        if (!r->has_invertible()) {
          for (const auto& t : d.remainder.terms()) {
            for (const auto& g : gs) REQUIRE_FALSE(g.leading_monomial().divides(t.mono));
          }
        }
      }
    }
  }

  TEST_CASE("buchberger certificates are sound") {
    std::mt19937_64 rng(5);
    Ring q = make_ring({"x", "y", "z"});
    Ring f = make_ring({"x", "y", "z"}, TermOrder::lex, Domain::prime_field(31));
    for (int k = 0; k < kCases; ++k) {
      const Ring& r = k % 2 ? q : f;
      std::vector<Poly> gens;
      while (gens.size() < 2) {
        Poly g = random_poly(rng, r, 3, 2);
        if (!g.is_zero() && !g.is_constant()) gens.push_back(g);
      }
      Poly target = random_poly(rng, r, 2, 1) * gens[0] + random_poly(rng, r, 2, 1) * gens[1];
      GroebnerBasis gb = buchberger(gens);
      for (std::size_t b = 0; b < gb.basis.size(); ++b) {
        Poly combo(r);
        for (std::size_t i = 0; i < gens.size(); ++i) combo += gb.cofactors[b][i] * gens[i];
        REQUIRE(combo == gb.basis[b]);
      }
      REQUIRE(normal_form(target, gb.basis).is_zero());
      MembershipCertificate c = certify_membership(target, gens);
      Poly expanded(r);
      for (std::size_t i = 0; i < gens.size(); ++i) expanded += c.cofactors[i] * gens[i];
      REQUIRE(expanded == target);
    }
  }

  TEST_CASE("replay logs are byte-identical") {
    std::string first = io::to_json(sympl::reduction_replay()).dump();
    std::string second = io::to_json(sympl::reduction_replay()).dump();
    CHECK(first == second);
    std::string ws1 = io::to_json(hopf::weight_shift_replay()).dump();
    std::string ws2 = io::to_json(hopf::weight_shift_replay()).dump();
    CHECK(ws1 == ws2);
  }
}
