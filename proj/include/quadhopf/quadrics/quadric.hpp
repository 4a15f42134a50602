#pragma once

#include <string>
#include <vector>

#include "quadhopf/symcore/quotient.hpp"

namespace quadhopf::quadrics {

/// Q_d: odd d = 2n-1 is {sum x_i y_i = 1} in x1..xn,y1..yn; even d = 2n is
/// {sum x_i y_i = z(1-z)} with an extra z.
class QuadricId {
 public:
  explicit QuadricId(int dimension);
  static QuadricId odd(int n) { return QuadricId(2 * n - 1); }
  static QuadricId even(int n) { return QuadricId(2 * n); }

  int dimension() const noexcept { return dim_; }
  int index() const noexcept { return (dim_ + 1) / 2; }
  bool is_even() const noexcept { return dim_ % 2 == 0; }
  std::size_t variable_count() const { return 2 * index() + (is_even() ? 1 : 0); }
  std::string name() const { return "Q" + std::to_string(dim_); }

  /// x1..xn, y1..yn[, z]
  std::vector<std::string> variables() const;
  Ring ring(TermOrder order = TermOrder::degrevlex, Domain domain = Domain::rationals()) const;

  friend bool operator==(QuadricId a, QuadricId b) { return a.dim_ == b.dim_; }

 private:
  int dim_;
};

/// f_n = sum x_i y_i - 1 or h_n = sum x_i y_i - z + z^2, in `ring` (which
/// must declare the quadric's variables).
Poly relation(QuadricId q, const Ring& ring);
Poly relation(QuadricId q);
Quotient quotient(QuadricId q, TermOrder order = TermOrder::degrevlex,
                  Domain domain = Domain::rationals());
Quotient quotient(QuadricId q, const Ring& ring);

}  // namespace quadhopf::quadrics
