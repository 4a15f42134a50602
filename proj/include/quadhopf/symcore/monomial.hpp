#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace quadhopf {

inline constexpr std::size_t kMaxVariables = 32;

/// Exponent vector aligned with RingSpec::variables. Positions beyond the
/// ring's variable count are always zero; negative entries are allowed only
/// at invertible positions (the ring enforces that, not the monomial).
class Monomial {
 public:
  using Exponent = std::int16_t;

  Monomial() = default;

  Exponent operator[](std::size_t i) const noexcept { return exp_[i]; }
  void set(std::size_t i, int e);
  int degree() const noexcept { return degree_; }
  bool is_one() const noexcept;
  bool has_negative() const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; exponents may go negative.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  Monomial pow(int k) const;

  /// Componentwise a_i <= b_i over all positions.
  bool divides(const Monomial& other) const noexcept;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& other) const noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.exp_ == b.exp_;
  }

  std::size_t hash() const noexcept;

 private:
  std::array<Exponent, kMaxVariables> exp_{};
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace quadhopf
