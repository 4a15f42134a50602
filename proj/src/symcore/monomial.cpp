#include "quadhopf/symcore/monomial.hpp"

#include <algorithm>
#include <limits>

#include "quadhopf/symcore/errors.hpp"

namespace quadhopf {
namespace {

Monomial::Exponent checked(int e) {
  if (e > std::numeric_limits<Monomial::Exponent>::max() ||
      e < std::numeric_limits<Monomial::Exponent>::min()) {
    throw InvalidArgument("exponent out of range: " + std::to_string(e));
  }
  return static_cast<Monomial::Exponent>(e);
}

}  // namespace

void Monomial::set(std::size_t i, int e) {
  degree_ += e - exp_[i];
  exp_[i] = checked(e);
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exp_.begin(), exp_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::has_negative() const noexcept {
  return std::any_of(exp_.begin(), exp_.end(), [](Exponent e) { return e < 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exp_[i] = checked(a.exp_[i] + b.exp_[i]);
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exp_[i] = checked(a.exp_[i] - b.exp_[i]);
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

Monomial Monomial::pow(int k) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exp_[i] = checked(exp_[i] * k);
  r.degree_ = degree_ * k;
  return r;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exp_[i] > 0 && other.exp_[i] > 0) return false;
  }
  return true;
}

std::size_t Monomial::hash() const noexcept {
  // FNV-1a over the exponent bytes.
  std::uint64_t h = 14695981039346656037ull;
  for (Exponent e : exp_) {
    h ^= static_cast<std::uint16_t>(e);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace quadhopf
