#pragma once

#include <vector>

#include <json.hpp>
#include "quadhopf/bundles/jouanolou.hpp"
#include "quadhopf/hopf/hopf.hpp"
#include "quadhopf/sympl/replay.hpp"

namespace quadhopf::io {

using Json = nlohmann::ordered_json;

/// "q", "qi" or "fp:<p>" with p prime. Throws InvalidArgument.
Domain parse_field(std::string_view text);

/// Polynomials are canonical strings; matrices are row-major string arrays.
Json to_json(const Poly& p);
Json to_json(const std::vector<Poly>& ps);
Json to_json(const PolyMatrix& m);
Json to_json(const MembershipCertificate& c);
/// {id, status, detail}; lists are sorted by id.
Json to_json(const Check& c);
Json to_json(const std::vector<Check>& checks);

/// {source, target, variables, x_part, y_part?, z_part?, certificate?, provenance}
Json to_json(const quadrics::QuadricMorphism& m);
/// Inverse of the morphism record; the source ring is rebuilt from the
/// record's variables with the given order and domain. Throws ParseError or
/// InvalidArgument on malformed records.
quadrics::QuadricMorphism morphism_from_json(const Json& j, TermOrder order = TermOrder::degrevlex,
                                             Domain domain = Domain::rationals());

Json to_json(const hopf::CatalogEntry& e);
/// {variant, ok, verbatim, failure?, steps: [{label, kind, payload, result_hash, ...}], final}
Json to_json(const sympl::ReductionReplay& r);
Json to_json(const hopf::Trivializations& t);
Json to_json(const hopf::WeightShiftLog& log);
Json to_json(const hopf::Mod2Report& r);
/// {which, variables, matrix, provenance, checks, charts: [{chart, checks}], ok}
Json to_json(const bundles::BundleIdempotent& b);

}  // namespace quadhopf::io
