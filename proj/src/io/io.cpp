#include "quadhopf/io/io.hpp"

#include <algorithm>
#include <cctype>

#include "quadhopf/symcore/errors.hpp"

namespace quadhopf::io {

namespace {

std::vector<Poly> parse_list(const Json& j, const Ring& r) {
  std::vector<Poly> out;
  for (const auto& s : j) out.push_back(parse(s.get<std::string>(), r));
  return out;
}

int quadric_dimension(const std::string& name) {
  if (name.size() < 2 || name[0] != 'Q') throw InvalidArgument("bad quadric name: " + name);
  try {
    return std::stoi(name.substr(1));
  } catch (const std::exception&) {
    throw InvalidArgument("bad quadric name: " + name);
  }
}

Json named_matrices(const std::vector<std::pair<std::string, PolyMatrix>>& ms) {
  Json out = Json::object();
  for (const auto& [name, m] : ms) out[name] = to_json(m);
  return out;
}

}  // namespace

Domain parse_field(std::string_view text) {
  if (text == "q") return Domain::rationals();
  if (text == "qi") return Domain::gaussian();
  if (text.substr(0, 3) == "fp:" && text.size() > 3 && text.size() <= 13) {
    std::string digits(text.substr(3));
    if (std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c) != 0; })) {
      return Domain::prime_field(std::stoull(digits));
    }
  }
  throw InvalidArgument("unknown field '" + std::string(text) + "' (expected q, qi or fp:<prime>)");
}

Json to_json(const Poly& p) { return format(p); }

Json to_json(const std::vector<Poly>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(format(p));
  return out;
}

Json to_json(const PolyMatrix& m) { return m.to_strings(); }

Json to_json(const MembershipCertificate& c) {
  return Json{{"generators", to_json(c.generators)}, {"cofactors", to_json(c.cofactors)}, {"target", to_json(c.target)}};
}

Json to_json(const Check& c) {
  Json out{{"id", c.id}, {"status", std::string(to_string(c.status))}};
  if (!c.detail.empty()) out["detail"] = c.detail;
  return out;
}

Json to_json(const std::vector<Check>& checks) {
  std::vector<Check> sorted = checks;
  std::stable_sort(sorted.begin(), sorted.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  Json out = Json::array();
  for (const auto& c : sorted) out.push_back(to_json(c));
  return out;
}

Json to_json(const quadrics::QuadricMorphism& m) {
  Json out{{"source", m.source.name()}, {"target", m.target.name()}};
  out["variables"] = m.ring()->variables();
  out["x_part"] = to_json(m.x_part);
  if (!m.y_part.empty()) out["y_part"] = to_json(m.y_part);
  if (m.z_part) out["z_part"] = to_json(*m.z_part);
  if (m.certificate) {
    out["certificate"] = Json{{"generators", to_json(m.certificate->generators)},
                              {"cofactors", to_json(m.certificate->cofactors)}};
  }
  out["provenance"] = m.provenance;
  return out;
}

quadrics::QuadricMorphism morphism_from_json(const Json& j, TermOrder order, Domain domain) {
  if (!j.is_object()) throw InvalidArgument("morphism record must be an object");
  for (const char* key : {"source", "target", "variables", "x_part"}) {
    if (!j.contains(key)) throw InvalidArgument(std::string("morphism record lacks ") + key);
  }
  try {
    quadrics::QuadricId source(quadric_dimension(j.at("source").get<std::string>()));
    quadrics::QuadricId target(quadric_dimension(j.at("target").get<std::string>()));
    Ring r = make_ring(j.at("variables").get<std::vector<std::string>>(), order, domain);
    quadrics::QuadricMorphism m{source, target, parse_list(j.at("x_part"), r), {}, std::nullopt, std::nullopt, {}};
    if (m.x_part.empty()) throw InvalidArgument("empty x_part");
    if (j.contains("y_part")) m.y_part = parse_list(j.at("y_part"), r);
    if (j.contains("z_part")) m.z_part = parse(j.at("z_part").get<std::string>(), r);
    if (j.contains("certificate")) {
      const Json& c = j.at("certificate");
      MembershipCertificate cert{parse_list(c.at("generators"), r), parse_list(c.at("cofactors"), r),
                                 Poly::constant(r, 1)};
      m.certificate = cert;
    }
    if (j.contains("provenance")) m.provenance = j.at("provenance").get<std::string>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed morphism record: ") + e.what());
  }
}

Json to_json(const hopf::CatalogEntry& e) {
  Json out{{"id", e.id}, {"provenance", e.provenance}, {"ok", e.ok()}};
  if (e.morphism) out["morphism"] = to_json(*e.morphism);
  if (e.matrix) out["matrix"] = to_json(*e.matrix);
  out["checks"] = to_json(e.checks);
  return out;
}

Json to_json(const sympl::ReductionReplay& r) {
  Json out{{"variant", r.variant == sympl::ReplayVariant::corrected ? "corrected" : "as_printed"},
           {"ok", r.ok},
           {"verbatim", r.verbatim}};
  if (!r.failure.empty()) out["failure"] = r.failure;
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json step{{"label", s.label},
              {"kind", std::string(sympl::to_string(s.kind))},
              {"payload", named_matrices(s.payload)},
              {"before_hash", s.before_hash},
              {"result_hash", s.result_hash},
              {"form_rank", s.form_rank},
              {"symplectic", s.symplectic}};
    if (s.matches_display) step["matches_display"] = *s.matches_display;
    steps.push_back(std::move(step));
  }
  out["steps"] = std::move(steps);
  if (r.final) out["final"] = to_json(*r.final);
  return out;
}

Json to_json(const hopf::Trivializations& t) {
  return Json{{"ok", t.ok()},
              {"matrices", Json{{"E", to_json(t.E)},
                                {"E_inv", to_json(t.E_inv)},
                                {"F", to_json(t.F)},
                                {"F_inv", to_json(t.F_inv)},
                                {"T", to_json(t.T)}}},
              {"checks", to_json(t.checks)}};
}

Json to_json(const hopf::WeightShiftLog& log) {
  Json out{{"ok", log.ok}};
  if (!log.failure.empty()) out["failure"] = log.failure;
  Json stages = Json::array();
  for (const auto& s : log.stages) {
    stages.push_back(Json{{"id", s.id}, {"title", s.title}, {"ok", s.ok()}, {"checks", to_json(s.checks)}});
  }
  out["stages"] = std::move(stages);
  out["matrices"] = named_matrices(log.matrices);
  if (log.preimage) {
    out["preimage"] = to_json(*log.preimage);
    out["row"] = to_json(log.preimage->row_entries(0));
  }
  return out;
}

Json to_json(const hopf::Mod2Report& r) {
  return Json{{"ok", r.ok()},
              {"theorem1", to_json(r.theorem1)},
              {"theorem2_row", to_json(r.theorem2_row)},
              {"checks", to_json(r.checks)}};
}

Json to_json(const bundles::BundleIdempotent& b) {
  Json out{{"which", std::string(bundles::to_string(b.which))}, {"ok", b.ok()}};
  out["variables"] = b.P.ring()->variables();
  out["matrix"] = to_json(b.P);
  out["provenance"] = b.provenance;
  out["checks"] = to_json(b.checks);
  Json charts = Json::array();
  for (const auto& c : b.charts) charts.push_back(Json{{"chart", c.chart}, {"checks", to_json(c.checks)}});
  out["charts"] = std::move(charts);
  return out;
}

}  // namespace quadhopf::io
