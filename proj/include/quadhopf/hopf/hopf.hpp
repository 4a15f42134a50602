#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quadhopf/quadrics/morphism.hpp"
#include "quadhopf/report.hpp"

namespace quadhopf::hopf {

using quadrics::QuadricMorphism;

/// The two theorem displays parsed into a Q4 ring of the given order and domain.
PolyMatrix theorem1_matrix(const Ring& q4_ring);
std::vector<Poly> theorem2_row(const Ring& q4_ring);
std::vector<Poly> turiel_row(const Ring& q4_ring);

/// (a, b) with y-part (d, -c).
QuadricMorphism theorem1_morphism(const Ring& q4_ring);
/// (a', b') with the pinned completion (d', -c') from the weight-shift preimage.
QuadricMorphism theorem2_morphism(const Ring& q4_ring);
/// The pinned completion as stored in data/theorem2_completion.json.
std::string_view pinned_theorem2_completion();

struct CatalogOptions {
  std::optional<Domain> domain;  // empty: each entry's native domain
  TermOrder order = TermOrder::degrevlex;
  GroebnerOptions groebner;
};

struct CatalogEntry {
  std::string id;
  std::string provenance;
  std::optional<QuadricMorphism> morphism;
  std::optional<PolyMatrix> matrix;
  std::vector<Check> checks;

  bool ok() const { return all_ok(checks); }
};

/// theorem1, theorem2, turiel, eta, nu.
const std::vector<std::string>& catalog_ids();
/// Builds and verifies an entry. Throws InvalidArgument for an unknown id or
/// a domain the entry cannot live in.
CatalogEntry catalog(std::string_view id, const CatalogOptions& options = {});

struct Trivializations {
  PolyMatrix E, E_inv, F, F_inv, T;
  std::vector<Check> checks;

  bool ok() const { return all_ok(checks); }
};
/// The trivializations of the universal rank 2 bundle on Q5 over {x3 != 0}
/// and {y3 = 0}, and their transition matrix T.
Trivializations trivializations();

struct WeightShiftStage {
  std::string id;
  std::string title;
  std::vector<Check> checks;

  bool ok() const { return all_ok(checks); }
};

struct WeightShiftLog {
  std::vector<std::pair<std::string, PolyMatrix>> matrices;
  std::vector<WeightShiftStage> stages;
  std::optional<PolyMatrix> preimage;  // over k[Q4], degrevlex
  bool ok = false;
  std::string failure;  // first failing stage and its witness

  const PolyMatrix& matrix(std::string_view name) const;
};
/// Stages (i) to (ix): m', T o m', Whitehead, D(t), A(t) at x3 = -1, det,
/// psi-image test, psi-preimage, re-image.
WeightShiftLog weight_shift_replay();

struct Mod2Report {
  PolyMatrix theorem1;             // normal forms over F2
  std::vector<Poly> theorem2_row;  // normal forms over F2
  std::vector<Check> checks;

  bool ok() const { return all_ok(checks); }
};
/// Both theorem maps reduced mod 2: (1, 0; y1^2, 1) and the row (1, 0).
Mod2Report mod2_degenerations();

}  // namespace quadhopf::hopf
