#include "quadhopf/bundles/jouanolou.hpp"

#include <atomic>
#include <thread>

#include "quadhopf/bundles/idempotents.hpp"
#include "quadhopf/hopf/hopf.hpp"
#include "quadhopf/maps/maps.hpp"
#include "quadhopf/quadrics/quadric.hpp"
#include "quadhopf/symcore/errors.hpp"

namespace quadhopf::bundles {

namespace {

std::string entry_name(int i, int j) { return "x" + std::to_string(i) + std::to_string(j); }

Poly one(const Ring& r) { return Poly::constant(r, 1); }

Check zero_check(std::string id, const Poly& p, std::string note = {}) {
  if (p.is_zero()) return make_check(std::move(id), true, std::move(note));
  return make_check(std::move(id), false, format(p));
}

std::vector<Poly> minors2(const PolyMatrix& m) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i + 1; j < m.rows(); ++j) {
      for (std::size_t k = 0; k < m.cols(); ++k) {
        for (std::size_t l = k + 1; l < m.cols(); ++l) out.push_back(m(i, k) * m(j, l) - m(i, l) * m(j, k));
      }
    }
  }
  return out;
}

Check all_zero(std::string id, const std::vector<Poly>& ps, const std::string& note) {
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (!ps[k].is_zero()) return make_check(std::move(id), false, "#" + std::to_string(k) + ": " + format(ps[k]));
  }
  return make_check(std::move(id), true, note);
}

std::size_t max_terms(const PolyMatrix& m) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) n = std::max(n, m(i, j).size());
  }
  return n;
}

}  // namespace

std::vector<Poly> JouanolouRing::relations(RankCondition rank) const {
  std::vector<Poly> out;
  PolyMatrix sq = P * P - P;
  for (std::size_t i = 0; i < sq.rows(); ++i) {
    for (std::size_t j = 0; j < sq.cols(); ++j) out.push_back(sq(i, j));
  }
  if (rank == RankCondition::minors) {
    for (auto& m : minors2(P)) out.push_back(std::move(m));
  } else {
    out.push_back(P.trace() - one(ring));
  }
  return out;
}

std::size_t JouanolouRing::relation_count(RankCondition rank) const {
  std::size_t m = n + 1;
  std::size_t pairs = m * (m - 1) / 2;
  return m * m + (rank == RankCondition::minors ? pairs * pairs : 1);
}

JouanolouRing jouanolou(int n, Domain domain) {
  if (n < 1 || n > 8) throw InvalidArgument("jouanolou needs 1 <= n <= 8");
  std::vector<std::string> names;
  for (int i = 1; i <= n + 1; ++i) {
    for (int j = 1; j <= n + 1; ++j) names.push_back(entry_name(i, j));
  }
  JouanolouRing j{n, make_ring(names, TermOrder::degrevlex, domain), {}};
  j.P = PolyMatrix(j.ring, n + 1, n + 1);
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= n; ++b) j.P(a, b) = Poly::variable(j.ring, entry_name(a + 1, b + 1));
  }
  return j;
}

Chart chart(int n, int i, Domain domain) {
  if (n < 1 || n > 8) throw InvalidArgument("chart needs 1 <= n <= 8");
  if (i < 1 || i > n + 1) {
    throw InvalidArgument("chart index " + std::to_string(i) + " out of range 1.." + std::to_string(n + 1));
  }
  std::vector<std::string> names;
  for (int k = 1; k <= n; ++k) names.push_back("a" + std::to_string(k));
  for (int k = 1; k <= n; ++k) names.push_back("b" + std::to_string(k));
  Chart c;
  c.n = n;
  c.i = i;
  c.free_ring = make_ring(names, TermOrder::degrevlex, domain);
  Poly special = one(c.free_ring);
  int k = 1;
  for (int pos = 1; pos <= n + 1; ++pos) {
    if (pos == i) {
      c.column.emplace_back(c.free_ring);
      c.row.push_back(one(c.free_ring));
      continue;
    }
    Poly a = Poly::variable(c.free_ring, "a" + std::to_string(k));
    Poly b = Poly::variable(c.free_ring, "b" + std::to_string(k));
    special -= a * b;
    c.column.push_back(a);
    c.row.push_back(b);
    ++k;
  }
  c.column[i - 1] = special;
  PolyMatrix m = c.matrix();
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= n; ++b) c.embedding.push_back(m(a, b));
  }
  return c;
}

std::vector<Check> verify_chart(const JouanolouRing& j, const Chart& c, RankCondition rank) {
  if (j.n != c.n) throw InvalidArgument("chart and Jouanolou ring have different n");
  std::vector<Check> out;
  std::vector<Poly> pulled;
  for (const auto& r : j.relations(rank)) pulled.push_back(c.pull(r));
  out.push_back(all_zero("relations", pulled, std::to_string(pulled.size()) + " relations"));
  Poly contraction = (PolyMatrix::row(c.row) * PolyMatrix::column(c.column))(0, 0) - one(c.free_ring);
  out.push_back(zero_check("row_column", contraction));
  out.push_back(zero_check("trace", c.matrix().trace() - one(c.free_ring)));
  return out;
}

CollapseMap pi_n(int n, Domain domain) {
  CollapseMap pi{n, quadrics::QuadricId::even(n), jouanolou(n, domain), {}};
  const Ring& r = pi.source.ring;
  for (int i = 1; i <= n; ++i) pi.images.push_back(Poly::variable(r, entry_name(n + 1, i)));
  for (int i = 1; i <= n; ++i) pi.images.push_back(Poly::variable(r, entry_name(i, n + 1)));
  Poly z(r);
  for (int i = 1; i <= n; ++i) z += Poly::variable(r, entry_name(i, i));
  pi.images.push_back(z);
  return pi;
}

std::vector<Check> verify_pi_n(const CollapseMap& pi) {
  const Ring& r = pi.source.ring;
  Ring target = pi.target.ring(TermOrder::degrevlex, r->domain());
  Poly pulled = substitute(quadrics::relation(pi.target, target), pi.images);
  std::vector<Check> out;
  for (int i = 1; i <= pi.n + 1; ++i) {
    Chart c = chart(pi.n, i, r->domain());
    out.push_back(zero_check("chart" + std::to_string(i), c.pull(pulled)));
  }
  if (pi.n == 1) {
    try {
      MembershipCertificate cert = certify_membership(pulled, pi.source.relations());
      out.push_back(make_check("groebner", cert.verify(), std::to_string(cert.size()) + " cofactor terms"));
    } catch (const std::exception& e) {
      out.push_back(make_check("groebner", false, e.what()));
    }
  }
  return out;
}

std::string_view to_string(ExoticMap which) { return which == ExoticMap::theorem1 ? "theorem1" : "theorem2"; }

ExoticMap parse_exotic_map(std::string_view name) {
  if (name == "theorem1") return ExoticMap::theorem1;
  if (name == "theorem2") return ExoticMap::theorem2;
  throw InvalidArgument("unknown exotic map: " + std::string(name) + " (expected theorem1 or theorem2)");
}

bool BundleIdempotent::ok() const {
  if (!all_ok(checks) || charts.empty()) return false;
  for (const auto& c : charts) {
    if (!all_ok(c.checks)) return false;
  }
  return true;
}

BundleIdempotent build_j3_bundle(ExoticMap which, const BundleOptions& options) {
  using quadrics::QuadricId;
  BundleIdempotent out;
  out.which = which;
  Ring q4 = QuadricId(4).ring();
  quadrics::QuadricMorphism m =
      which == ExoticMap::theorem1 ? hopf::theorem1_morphism(q4) : hopf::theorem2_morphism(q4);
  out.provenance.push_back(std::string(to_string(which)) + ": " + m.provenance);

  quadrics::QuadricMorphism s = maps::suspend_odd_target(m);
  out.provenance.push_back("P1-suspension Q6 -> Q5: x-part (f1, f2, x3), y-part (g1, g2, y3 r)");
  quadrics::Verification sv = quadrics::verify_full(s);
  out.checks.push_back(make_check("suspension", sv.ok, sv.ok ? "" : format(sv.witness)));

  PolyMatrix mp = universal_MP(QuadricId(5).ring());
  PolyMatrix p6 = substitute(mp, s.images());
  out.provenance.push_back("M(P) = I - y x^T pulled back to k[Q6]");
  IdempotentCheck q6 = check_idempotent(p6, quadrics::quotient(QuadricId(6), s.ring()), Poly::constant(s.ring(), 2));
  out.checks.push_back(make_check("Q6.idempotent", q6.ok(),
                                  q6.square ? format(q6.square->difference) : format(q6.trace_residue)));

  CollapseMap pi = pi_n(3);
  out.P = substitute(p6, pi.images);
  out.provenance.push_back("pi_3: J3 -> Q6");

  out.charts.resize(4);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int k = next++; k < 4; k = next++) {
      Chart c = chart(3, k + 1);
      ChartReport& rep = out.charts[k];
      rep.chart = k + 1;
      std::vector<Poly> q6_images;
      for (const auto& f : pi.images) q6_images.push_back(c.pull(f));
      std::vector<Poly> x, y;
      for (const auto& f : s.x_part) x.push_back(substitute(f, q6_images));
      for (const auto& f : s.y_part) y.push_back(substitute(f, q6_images));
      PolyMatrix p = c.pull(out.P);
      PolyMatrix id = PolyMatrix::identity(c.free_ring, 3);
      PolyMatrix outer = PolyMatrix::column(y) * PolyMatrix::row(x);
      PolyMatrix fact_diff = id - p - outer;
      bool factored = fact_diff.is_zero();
      Poly contraction = -one(c.free_ring);
      for (std::size_t i = 0; i < 3; ++i) contraction += x[i] * y[i];
      rep.checks.push_back(make_check("factorization", factored,
                                      factored ? "I - P = y x^T" : "I - P differs from y x^T"));
      rep.checks.push_back(zero_check("row_column", contraction));
      bool literal = max_terms(p) <= options.literal_limit;
      if (literal) {
        PolyMatrix sq = p * p - p;
        std::vector<Poly> entries;
        for (std::size_t i = 0; i < 3; ++i) {
          for (std::size_t j = 0; j < 3; ++j) entries.push_back(sq(i, j));
        }
        rep.checks.push_back(all_zero("idempotent", entries, "literal: 9 entries of P^2 - P"));
      } else {
        bool ok = factored && contraction.is_zero();
        rep.checks.push_back(make_check("idempotent", ok, "P^2 - P = y (x.y - 1) x^T with x.y - 1 = 0"));
      }
      rep.checks.push_back(zero_check("trace", p.trace() - Poly::constant(c.free_ring, 2)));
      if (literal) {
        rep.checks.push_back(all_zero("minors", minors2(id - p), "literal: 9 minors of I - P"));
      } else {
        rep.checks.push_back(make_check("minors", factored, "I - P = y x^T has rank 1"));
      }
    }
  };
  unsigned jobs = std::max(1u, std::min(options.jobs, 4u));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace quadhopf::bundles
