#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadhopf/quadrics/quadric.hpp"
#include "quadhopf/sympl/matrix.hpp"

namespace quadhopf::quadrics {

/// A candidate map source -> target given by coordinate images in the
/// source ring. Short forms leave y_part (and z_part for odd targets) empty:
/// a unimodular row for odd targets, x-part plus f_z for even targets.
struct QuadricMorphism {
  QuadricId source{1};
  QuadricId target{1};
  std::vector<Poly> x_part;
  std::vector<Poly> y_part;
  std::optional<Poly> z_part;
  std::optional<MembershipCertificate> certificate;
  std::string provenance;

  const Ring& ring() const { return x_part.front().ring(); }
  bool is_full() const;
  /// x-part, y-part and z-part in the target's variable order.
  std::vector<Poly> images() const;
};

struct Verification {
  bool ok = false;
  Poly witness;  // normal form of the pulled-back target relation
};

/// Pulls the target relation back along the images and reduces it modulo
/// the source relation.
Verification verify_full(const QuadricMorphism& m);

/// Certificate that 1 lies in <row, source relation>. Throws NotInIdeal.
MembershipCertificate verify_row(const std::vector<Poly>& row, QuadricId source, QuadricId target,
                                 const GroebnerOptions& options = {});
/// Certificate that f_z(1 - f_z) lies in <x_part, source relation>.
MembershipCertificate verify_ideal_map(const std::vector<Poly>& x_part, const Poly& f_z, QuadricId source,
                                       QuadricId target, const GroebnerOptions& options = {});

/// Full morphism from a row: y_i are the certificate's cofactors, so that
/// sum f_i y_i = 1 + r * relation with r = -(relation cofactor).
QuadricMorphism complete_row(const std::vector<Poly>& row, QuadricId source, QuadricId target,
                             const GroebnerOptions& options = {});
/// Same, seeded with a known certificate over row ++ [relation].
QuadricMorphism complete_row(const std::vector<Poly>& row, QuadricId source, QuadricId target,
                             MembershipCertificate certificate);
/// Full morphism to an even quadric from x-part and f_z.
QuadricMorphism complete_ideal_map(const std::vector<Poly>& x_part, const Poly& f_z, QuadricId source,
                                   QuadricId target, const GroebnerOptions& options = {});

/// Certificate over row ++ [relation] for a known y-part, obtained by
/// dividing sum f_i y_i - 1 by the relation. Empty when the division leaves
/// a remainder.
std::optional<MembershipCertificate> certificate_from_completion(const std::vector<Poly>& row,
                                                                 const std::vector<Poly>& y_part,
                                                                 QuadricId source);

/// The relation cofactor r of a completed morphism: sum f_i y_i - target
/// value = r * (source relation), for odd (target value 1) and even
/// (target value f_z(1 - f_z)) targets.
Poly relation_cofactor(const QuadricMorphism& m);

/// A map to Q2 given by a 2x2 idempotent of trace 1 over k[Q2].
struct Q2Endo {
  PolyMatrix projector;

  IdempotentCheck check() const;
  std::vector<Poly> first_column() const { return projector.column_entries(0); }
  std::vector<Poly> first_row() const { return projector.row_entries(0); }
};

/// Maps with displayed coordinate formulas.
struct StandardMap {
  std::string name;
  int n = 1;
  Ring source;
  std::vector<Poly> source_relations;  // Groebner basis of the source ideal
  std::optional<QuadricId> target;     // empty for p_n, whose target is A^n
  std::vector<std::string> target_variables;
  std::vector<Poly> images;
  std::string note;
};
/// name: p_n, alpha_n, alpha_n_iso_inverse, phi_2n+1, psi_2n+2. Throws
/// InvalidArgument for an unknown name or n < 1.
StandardMap standard_map(const std::string& name, int n);
/// The target relation pulled back and reduced modulo the source relations.
Verification verify_standard_map(const StandardMap& m);

}  // namespace quadhopf::quadrics
