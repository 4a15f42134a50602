#pragma once

#include <cstdint>
#include <vector>

#include "quadhopf/symcore/poly.hpp"

namespace quadhopf {

struct Division {
  Poly remainder;
  std::vector<Poly> quotients;  // p == sum(quotients[i] * divisors[i]) + remainder
};

/// Multivariate division. The divisor used at each step is the first one (in
/// list order) whose leading monomial divides the current leading monomial.
/// Laurent inputs are handled by clearing negative exponents with a monomial
/// unit, dividing, and multiplying back.
Division divide(const Poly& p, const std::vector<Poly>& divisors);
Poly normal_form(const Poly& p, const std::vector<Poly>& divisors);
inline bool reduces_to_zero(const Poly& p, const std::vector<Poly>& divisors) {
  return normal_form(p, divisors).is_zero();
}

/// sum(cofactors[i] * generators[i]) == target, checked with add/mul only.
struct MembershipCertificate {
  std::vector<Poly> generators;
  std::vector<Poly> cofactors;
  Poly target;

  bool verify() const;
  /// Total number of terms over all cofactors.
  std::size_t size() const;
};

struct GroebnerOptions {
  std::uint64_t max_reductions = 1'000'000;
  bool track_cofactors = true;
};

struct GroebnerBasis {
  std::vector<Poly> generators;
  /// Reduced basis, monic, sorted by leading monomial descending.
  std::vector<Poly> basis;
  /// cofactors[k][i]: coefficient of generators[i] in basis[k]. Empty when
  /// cofactor tracking is off.
  std::vector<std::vector<Poly>> cofactors;
  std::uint64_t reductions = 0;

  bool is_unit() const { return basis.size() == 1 && basis[0].is_constant(); }
};

/// Buchberger with the Gebauer-Moeller pair criteria and normal selection.
/// Throws GroebnerCapExceeded when more than max_reductions S-polynomials
/// are reduced. Stops early once a nonzero constant appears.
GroebnerBasis buchberger(const std::vector<Poly>& generators, const GroebnerOptions& options = {});

/// Certificate that target lies in the ideal; throws NotInIdeal otherwise.
/// The certificate is verified before it is returned.
MembershipCertificate certify_membership(const Poly& target, const std::vector<Poly>& generators,
                                         const GroebnerOptions& options = {});
MembershipCertificate contains_one(const std::vector<Poly>& generators,
                                   const GroebnerOptions& options = {});

}  // namespace quadhopf
