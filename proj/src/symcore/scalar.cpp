#include "quadhopf/symcore/scalar.hpp"

#include "quadhopf/symcore/errors.hpp"

namespace quadhopf {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Domain Domain::prime_field(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw InvalidArgument("prime-field modulus must be a prime below 2^31, got " +
                          std::to_string(p));
  }
  return Domain(DomainKind::prime_field, static_cast<std::uint32_t>(p));
}

std::string Domain::name() const {
  switch (kind_) {
    case DomainKind::rationals:
      return "q";
    case DomainKind::gaussian_rationals:
      return "qi";
    case DomainKind::prime_field:
      return "fp:" + std::to_string(modulus_);
  }
  return "?";
}

void Domain::reduce(mpq_class& v) const {
  if (kind_ != DomainKind::prime_field) return;
  mpz_class p(modulus_);
  mpz_class num = v.get_num();
  mpz_class den = v.get_den();
  mpz_fdiv_r(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  if (den != 1) {
    mpz_fdiv_r(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    if (den == 0) throw NotInvertible("denominator divisible by the field characteristic");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = (num * inv) % p;
  }
  v = mpq_class(num);
}

Scalar Domain::normalized(mpq_class re, mpq_class im) const {
  if (sgn(im) != 0 && kind_ != DomainKind::gaussian_rationals) {
    throw InvalidArgument("imaginary unit is only available over the gaussian rationals");
  }
  reduce(re);
  Scalar s;
  s.re_ = std::move(re);
  if (sgn(im) != 0) s.im_ = std::move(im);
  return s;
}

Scalar Domain::from_int(long v) const { return normalized(mpq_class(v), mpq_class(0)); }

Scalar Domain::from_rational(const mpq_class& v) const { return normalized(v, mpq_class(0)); }

Scalar Domain::make(const mpq_class& re, const mpq_class& im) const {
  return normalized(re, im);
}

Scalar Domain::imaginary_unit() const { return normalized(mpq_class(0), mpq_class(1)); }

Scalar Domain::add(const Scalar& a, const Scalar& b) const {
  Scalar r = a;
  add_to(r, b);
  return r;
}

void Domain::add_to(Scalar& acc, const Scalar& a) const {
  acc.re_ += a.re_;
  if (kind_ == DomainKind::prime_field) {
    if (acc.re_ >= modulus_) acc.re_ -= modulus_;
    return;
  }
  if (a.im_) {
    if (acc.im_) {
      *acc.im_ += *a.im_;
      if (sgn(*acc.im_) == 0) acc.im_.reset();
    } else {
      acc.im_ = *a.im_;
    }
  }
}

Scalar Domain::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Domain::neg(const Scalar& a) const {
  Scalar r;
  if (kind_ == DomainKind::prime_field) {
    if (sgn(a.re_) != 0) r.re_ = mpq_class(modulus_) - a.re_;
    return r;
  }
  r.re_ = -a.re_;
  if (a.im_) r.im_ = -*a.im_;
  return r;
}

Scalar Domain::mul(const Scalar& a, const Scalar& b) const {
  Scalar r;
  if (!a.im_ && !b.im_) {
    r.re_ = a.re_ * b.re_;
    if (kind_ == DomainKind::prime_field) {
      mpz_class n = r.re_.get_num() % modulus_;
      r.re_ = mpq_class(n);
    }
    return r;
  }
  // (ar + ai i)(br + bi i)
  mpq_class ai = a.im(), bi = b.im();
  r.re_ = a.re_ * b.re_ - ai * bi;
  mpq_class im = a.re_ * bi + ai * b.re_;
  if (sgn(im) != 0) r.im_ = std::move(im);
  return r;
}

void Domain::add_mul(Scalar& acc, const Scalar& a, const Scalar& b) const {
  if (kind_ == DomainKind::rationals && !a.im_ && !b.im_) {
    mpq_class t = a.re_ * b.re_;
    acc.re_ += t;
    return;
  }
  add_to(acc, mul(a, b));
}

Scalar Domain::inv(const Scalar& a) const {
  if (a.is_zero()) throw NotInvertible("inverse of zero");
  if (kind_ == DomainKind::prime_field) {
    mpz_class p(modulus_), r;
    mpz_class n = a.re_.get_num();
    mpz_invert(r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    Scalar s;
    s.re_ = mpq_class(r);
    return s;
  }
  if (!a.im_) {
    Scalar s;
    s.re_ = 1 / a.re_;
    return s;
  }
  mpq_class norm = a.re_ * a.re_ + *a.im_ * *a.im_;
  return normalized(a.re_ / norm, -*a.im_ / norm);
}

bool Domain::is_one(const Scalar& a) const { return !a.im_ && a.re_ == 1; }

bool Domain::is_minus_one(const Scalar& a) const {
  if (a.im_) return false;
  if (kind_ == DomainKind::prime_field) return a.re_ == modulus_ - 1 && modulus_ != 2;
  return a.re_ == -1;
}

bool Domain::is_negative(const Scalar& a) const {
  if (kind_ == DomainKind::prime_field) return false;
  if (sgn(a.re_) != 0) return sgn(a.re_) < 0;
  return a.im_ && sgn(*a.im_) < 0;
}

std::string Domain::format(const Scalar& a) const {
  if (!a.im_) return a.re_.get_str();
  std::string out = "(";
  if (sgn(a.re_) != 0) out += a.re_.get_str();
  const mpq_class& im = *a.im_;
  if (sgn(im) < 0) {
    out += "-";
  } else if (sgn(a.re_) != 0) {
    out += "+";
  }
  mpq_class mag = abs(im);
  if (mag != 1) out += mag.get_str();
  // "1/3i" would read back as 1/(3i)
  out += mag.get_den() == 1 ? "i)" : "*i)";
  return out;
}

}  // namespace quadhopf
