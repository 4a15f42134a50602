#pragma once

#include <vector>

#include "quadhopf/symcore/ideal.hpp"

namespace quadhopf {

/// A ring together with relations whose leading terms form a Groebner basis
/// of the ideal they generate (one quadric relation always qualifies), so
/// that normal forms are canonical representatives.
struct Quotient {
  Ring ring;
  std::vector<Poly> relations;

  Poly reduce(const Poly& p) const { return normal_form(p, relations); }
  bool is_zero(const Poly& p) const { return reduce(p).is_zero(); }
  bool equivalent(const Poly& a, const Poly& b) const { return is_zero(a - b); }
};

}  // namespace quadhopf
