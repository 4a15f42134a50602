#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace quadhopf {

/// An exact field element. The imaginary part is only ever engaged for
/// gaussian rationals with a nonzero imaginary component, so the rational
/// and prime-field cases pay for a single mpq.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(mpq_class re) : re_(std::move(re)) {}
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)) {
    if (sgn(im) != 0) im_ = std::move(im);
  }

  const mpq_class& re() const noexcept { return re_; }
  mpq_class im() const { return im_ ? *im_ : mpq_class(0); }
  bool has_im() const noexcept { return im_.has_value(); }
  bool is_zero() const noexcept { return sgn(re_) == 0 && !im_; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.im_.has_value() != b.im_.has_value()) return false;
    if (a.re_ != b.re_) return false;
    return !a.im_ || *a.im_ == *b.im_;
  }

 private:
  friend class Domain;
  mpq_class re_;
  std::optional<mpq_class> im_;
};

enum class DomainKind { rationals, prime_field, gaussian_rationals };

/// Coefficient domain. All three kinds are fields; arithmetic is exact and
/// every result is returned in canonical form (reduced fraction, residue in
/// [0, p), gaussian a+bi with reduced a and b).
class Domain {
 public:
  static Domain rationals() { return Domain(DomainKind::rationals, 0); }
  static Domain gaussian() { return Domain(DomainKind::gaussian_rationals, 0); }
  /// Throws InvalidArgument unless p is a prime below 2^31.
  static Domain prime_field(std::uint64_t p);

  DomainKind kind() const noexcept { return kind_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  bool is_gaussian() const noexcept { return kind_ == DomainKind::gaussian_rationals; }
  bool is_prime_field() const noexcept { return kind_ == DomainKind::prime_field; }
  std::string name() const;

  Scalar zero() const { return Scalar(); }
  Scalar one() const { return Scalar(mpq_class(1)); }
  Scalar from_int(long v) const;
  Scalar from_rational(const mpq_class& v) const;
  /// a + b*i; only valid in the gaussian domain unless b == 0.
  Scalar make(const mpq_class& re, const mpq_class& im) const;
  Scalar imaginary_unit() const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Throws NotInvertible on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// acc += a * b, in place.
  void add_mul(Scalar& acc, const Scalar& a, const Scalar& b) const;
  void add_to(Scalar& acc, const Scalar& a) const;

  bool is_one(const Scalar& a) const;
  bool is_minus_one(const Scalar& a) const;
  /// Sign convention used by the formatter: the first nonzero of (re, im)
  /// is negative. Always false in a prime field.
  bool is_negative(const Scalar& a) const;

  /// Canonical coefficient text: "3", "-3/4", "(1-2i)", "(i)", "(1/2-1/3*i)".
  std::string format(const Scalar& a) const;

  friend bool operator==(const Domain& a, const Domain& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }

 private:
  Domain(DomainKind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}
  void reduce(mpq_class& v) const;
  Scalar normalized(mpq_class re, mpq_class im) const;

  DomainKind kind_;
  std::uint32_t modulus_;
};

bool is_prime(std::uint64_t n);

}  // namespace quadhopf
