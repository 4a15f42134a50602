#include <functional>

#include "common.hpp"
#include "json.hpp"
#include "quadhopf/displays.hpp"
#include "quadhopf/hopf/hopf.hpp"
#include "quadhopf/maps/maps.hpp"
#include "quadhopf/quadrics/quadric.hpp"
#include "quadhopf/sympl/replay.hpp"
#include "quadhopf/symcore/errors.hpp"

namespace quadhopf::hopf {

using namespace detail;
using quadrics::QuadricId;

namespace {

Poly shown(std::string_view key, const Ring& r) { return parse(displays::polynomial(key), r); }

/// Runs a check body; any library error becomes a failed check.
Check guarded(const std::string& id, const std::function<Check()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return make_check(id, false, e.what());
  }
}

/// Flags a row that reduces to (1, 0): valid, but carries no information.
std::optional<Check> degenerate_row(const std::vector<Poly>& row, const Quotient& q) {
  if (row.size() == 2 && q.reduce(row[0]).is_one() && q.reduce(row[1]).is_zero()) {
    return Check{"degenerate", Status::degenerate,
                 "row reduces to (1, 0) over " + q.ring->domain().name() + "; degenerate, expected"};
  }
  return std::nullopt;
}

Check unimodular(const std::vector<Poly>& row, const CatalogOptions& opt) {
  return guarded("unimodular", [&] {
    MembershipCertificate cert = quadrics::verify_row(row, QuadricId(4), QuadricId(3), opt.groebner);
    return make_check("unimodular", cert.verify(),
                      "certificate: " + std::to_string(cert.size()) + " cofactor terms");
  });
}

Check full_morphism(const std::string& id, const QuadricMorphism& m) {
  return guarded(id, [&] {
    quadrics::Verification v = quadrics::verify_full(m);
    return make_check(id, v.ok, v.ok ? "" : format(v.witness));
  });
}

Domain entry_domain(const CatalogOptions& opt, const Domain& native) { return opt.domain ? *opt.domain : native; }

CatalogEntry theorem1_entry(const CatalogOptions& opt) {
  Domain dom = entry_domain(opt, Domain::rationals());
  Ring r = QuadricId(4).ring(opt.order, dom);
  Quotient q = quadrics::quotient(QuadricId(4), r);
  CatalogEntry e;
  e.id = "theorem1";
  e.provenance = "symplectic construction: the Sp2 matrix (a b; c d) over k[Q4] obtained by reducing U";
  PolyMatrix m = theorem1_matrix(r);
  e.matrix = m;
  e.morphism = theorem1_morphism(r);
  if (!dom.is_prime_field()) {
    bool shape = m(0, 0).total_degree() == 6 && dom.is_one(m(0, 0).constant_term());
    e.checks.push_back(make_check("shape", shape, "deg(a) = " + std::to_string(m(0, 0).total_degree())));
  }
  e.checks.push_back(poly_check("determinant", q.reduce(m.det() - num(r, 1))));
  e.checks.push_back(full_morphism("verify_full", *e.morphism));
  e.checks.push_back(guarded("certificate", [&] {
    auto cert = quadrics::certificate_from_completion(e.morphism->x_part, e.morphism->y_part, QuadricId(4));
    return make_check("certificate", cert && cert->verify());
  }));
  if (dom.kind() == DomainKind::rationals && opt.order == TermOrder::degrevlex) {
    e.checks.push_back(guarded("reduction_replay", [&] {
      sympl::ReductionReplay replay = sympl::reduction_replay();
      bool same = replay.ok && replay.final && replay.final->to_strings() == m.to_strings();
      return make_check("reduction_replay", same, replay.ok ? "" : replay.failure);
    }));
  }
  if (auto d = degenerate_row(m.row_entries(0), q)) e.checks.push_back(*d);
  return e;
}

CatalogEntry theorem2_entry(const CatalogOptions& opt) {
  Domain dom = entry_domain(opt, Domain::rationals());
  Ring r = QuadricId(4).ring(opt.order, dom);
  Quotient q = quadrics::quotient(QuadricId(4), r);
  CatalogEntry e;
  e.id = "theorem2";
  e.provenance = "weight-shifting construction: the unimodular row (a', b') over k[Q4]";
  std::vector<Poly> row = theorem2_row(r);
  auto degenerate = degenerate_row(row, q);
  e.checks.push_back(unimodular(row, opt));
  e.morphism = QuadricMorphism{QuadricId(4), QuadricId(3), row, {}, std::nullopt, std::nullopt, e.provenance};
  e.checks.push_back(guarded("pinned_completion", [&] {
    e.morphism = theorem2_morphism(r);
    quadrics::Verification v = quadrics::verify_full(*e.morphism);
    return make_check("pinned_completion", v.ok, v.ok ? "" : format(v.witness));
  }));
  if (degenerate) e.checks.push_back(*degenerate);
  return e;
}

CatalogEntry turiel_entry(const CatalogOptions& opt) {
  Domain dom = entry_domain(opt, Domain::gaussian());
  if (!dom.is_gaussian()) throw InvalidArgument("turiel has coefficients in Q(i); use the qi field");
  Ring r = QuadricId(4).ring(opt.order, dom);
  CatalogEntry e;
  e.id = "turiel";
  e.provenance = "Turiel's unimodular row (a'', b'') over k[Q4] with k = Q(i)";
  std::vector<Poly> row = turiel_row(r);
  e.morphism = QuadricMorphism{QuadricId(4), QuadricId(3), row, {}, std::nullopt, std::nullopt, e.provenance};
  e.checks.push_back(unimodular(row, opt));
  e.checks.push_back(guarded("completion", [&] {
    e.morphism = quadrics::complete_row(row, QuadricId(4), QuadricId(3), opt.groebner);
    e.morphism->provenance = e.provenance;
    quadrics::Verification v = quadrics::verify_full(*e.morphism);
    return make_check("completion", v.ok, v.ok ? "" : format(v.witness));
  }));
  return e;
}

CatalogEntry eta_entry(const CatalogOptions& opt) {
  Domain dom = entry_domain(opt, Domain::rationals());
  Ring r = QuadricId(3).ring(opt.order, dom);
  Quotient q = quadrics::quotient(QuadricId(3), r);
  CatalogEntry e;
  e.id = "eta";
  e.provenance = "Hopf map eta: the rank 1 projector (x_j y_i) on k[Q3]^2";
  Poly x1 = var(r, "x1"), x2 = var(r, "x2"), y1 = var(r, "y1"), y2 = var(r, "y2");
  PolyMatrix p = mat2(x1 * y1, x2 * y1, x1 * y2, x2 * y2);
  e.matrix = p;
  IdempotentCheck idem = check_idempotent(p, q, num(r, 1));
  e.checks.push_back(make_check("idempotent", !idem.square, describe(idem.square)));
  e.checks.push_back(poly_check("trace", idem.trace_residue));
  e.checks.push_back(guarded("full_morphism", [&] {
    e.morphism = maps::eta_full(opt.order, dom);
    return full_morphism("full_morphism", *e.morphism);
  }));
  quadrics::Q2Endo endo{p};
  auto reading = [&](const std::string& id, const std::vector<Poly>& v) {
    e.checks.push_back(guarded(id, [&] {
      auto cert = quadrics::verify_ideal_map({v[1]}, v[0], QuadricId(3), QuadricId(2), opt.groebner);
      return make_check(id, cert.verify(), "x-part " + format(v[1]) + ", f_z " + format(v[0]));
    }));
  };
  reading("reading.first_row", endo.first_row());
  reading("reading.first_column", endo.first_column());
  return e;
}

CatalogEntry nu_entry(const CatalogOptions& opt) {
  Domain dom = entry_domain(opt, Domain::rationals());
  CatalogEntry e;
  e.id = "nu";
  e.provenance = "Hopf map nu: (M1 M2, det M1) on pairs of 2x2 matrices with det M1 + det M2 = 1";
  e.morphism = maps::nu_base(opt.order, dom);
  e.morphism->provenance = e.provenance;
  e.checks.push_back(full_morphism("verify_full", *e.morphism));
  e.checks.push_back(guarded("ideal_map", [&] {
    auto cert = quadrics::verify_ideal_map(e.morphism->x_part, *e.morphism->z_part, e.morphism->source,
                                           e.morphism->target, opt.groebner);
    return make_check("ideal_map", cert.verify(), "certificate: " + std::to_string(cert.size()) + " cofactor terms");
  }));
  return e;
}

}  // namespace

PolyMatrix theorem1_matrix(const Ring& r) {
  return mat2(shown("theorem1.a", r), shown("theorem1.b", r), shown("theorem1.c", r), shown("theorem1.d", r));
}

std::vector<Poly> theorem2_row(const Ring& r) { return {shown("theorem2.a", r), shown("theorem2.b", r)}; }

std::vector<Poly> turiel_row(const Ring& r) { return {shown("turiel.a", r), shown("turiel.b", r)}; }

QuadricMorphism theorem1_morphism(const Ring& r) {
  PolyMatrix m = theorem1_matrix(r);
  return {QuadricId(4), QuadricId(3), {m(0, 0), m(0, 1)}, {m(1, 1), -m(1, 0)}, std::nullopt, std::nullopt,
          "first row of the Sp2 matrix, completed by its second row"};
}

QuadricMorphism theorem2_morphism(const Ring& r) {
  auto j = nlohmann::json::parse(pinned_theorem2_completion());
  std::vector<Poly> y;
  for (const auto& s : j.at("y_part")) y.push_back(parse(s.get<std::string>(), r));
  return {QuadricId(4), QuadricId(3), theorem2_row(r), y, std::nullopt, std::nullopt,
          "row (a', b') completed by the pinned second row of the weight-shift preimage"};
}

const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids = {"theorem1", "theorem2", "turiel", "eta", "nu"};
  return ids;
}

CatalogEntry catalog(std::string_view id, const CatalogOptions& options) {
  if (id == "theorem1") return theorem1_entry(options);
  if (id == "theorem2") return theorem2_entry(options);
  if (id == "turiel") return turiel_entry(options);
  if (id == "eta") return eta_entry(options);
  if (id == "nu") return nu_entry(options);
  throw InvalidArgument("unknown catalog id: " + std::string(id));
}

}  // namespace quadhopf::hopf
