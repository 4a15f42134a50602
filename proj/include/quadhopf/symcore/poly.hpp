#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "quadhopf/symcore/ring.hpp"

namespace quadhopf {

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Sparse polynomial. Terms are kept sorted strictly descending in the
/// ring's term order with no zero coefficients, so equality is structural.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Ring ring) : ring_(std::move(ring)) {}

  static Poly constant(Ring ring, const Scalar& c);
  static Poly constant(Ring ring, long c);
  static Poly variable(Ring ring, std::string_view name, int exponent = 1);
  static Poly term(Ring ring, const Monomial& m, const Scalar& c);
  /// Canonicalizes arbitrary terms: sorts, merges duplicates, drops zeros.
  static Poly from_terms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const noexcept { return ring_; }
  const Domain& domain() const { return ring_->domain(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_one() const;
  bool has_negative_exponent() const noexcept;

  /// Leading data; the polynomial must be nonzero.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Scalar& leading_coeff() const { return leading_term().coeff; }
  /// Constant coefficient (zero if absent).
  Scalar constant_term() const;
  int total_degree() const;
  /// Largest exponent of variable i occurring in any term.
  int degree_in(std::size_t i) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly scaled(const Scalar& c) const;
  Poly times_term(const Monomial& m, const Scalar& c) const;
  /// Negative k is allowed when the polynomial is a single term whose
  /// variables are all invertible (or a nonzero constant).
  Poly pow(int k) const;
  /// Divides by the leading coefficient.
  Poly monic() const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  friend class PolyBuilder;
  Ring ring_;
  std::vector<Term> terms_;
};

/// Mutable accumulator for sums of term multiples; cheaper than repeated
/// Poly additions when many small pieces are merged.
class PolyBuilder {
 public:
  explicit PolyBuilder(Ring ring);
  void add(const Monomial& m, const Scalar& c);
  void add(const Poly& p);
  void add_product(const Poly& p, const Monomial& m, const Scalar& c);
  Poly build();

 private:
  Ring ring_;
  std::vector<Term> pending_;
};

std::string format(const Poly& p);
/// Parses the canonical grammar (and general +,-,*,/const,^int,() input).
/// Throws ParseError.
Poly parse(std::string_view text, const Ring& ring);

/// Moves p into another ring that declares every variable p uses (matched
/// by name). The coefficient domain must agree.
Poly rebase(const Poly& p, const Ring& target);

/// Substitutes images for every variable occurring in p. Images are keyed by
/// source variable name and must share one target ring.
Poly substitute(const Poly& p, const std::map<std::string, Poly>& images);
/// Same, with images indexed like p.ring()->variables().
Poly substitute(const Poly& p, const std::vector<Poly>& images);

Scalar evaluate(const Poly& p, const std::map<std::string, Scalar>& point);

/// Coefficient-wise reduction of an integral rational polynomial.
Poly reduce_mod_p(const Poly& p, std::uint64_t prime);

/// FNV-1a 64 of a string, rendered as 16 hex digits.
std::string checksum(std::string_view text);

void require_same_ring(const Poly& a, const Poly& b);

}  // namespace quadhopf
