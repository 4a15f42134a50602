#include "quadhopf/quadrics/quadric.hpp"

#include "quadhopf/symcore/errors.hpp"

namespace quadhopf::quadrics {

QuadricId::QuadricId(int dimension) : dim_(dimension) {
  if (dimension < 1) throw InvalidArgument("quadric dimension must be positive");
}

std::vector<std::string> QuadricId::variables() const {
  std::vector<std::string> v;
  for (int i = 1; i <= index(); ++i) v.push_back("x" + std::to_string(i));
  for (int i = 1; i <= index(); ++i) v.push_back("y" + std::to_string(i));
  if (is_even()) v.push_back("z");
  return v;
}

Ring QuadricId::ring(TermOrder order, Domain domain) const {
  return make_ring(variables(), order, domain);
}

Poly relation(QuadricId q, const Ring& ring) {
  Poly r(ring);
  for (int i = 1; i <= q.index(); ++i) {
    r += Poly::variable(ring, "x" + std::to_string(i)) * Poly::variable(ring, "y" + std::to_string(i));
  }
  if (q.is_even()) {
    Poly z = Poly::variable(ring, "z");
    r += z * z - z;
  } else {
    r -= Poly::constant(ring, 1);
  }
  return r;
}

Poly relation(QuadricId q) { return relation(q, q.ring()); }

Quotient quotient(QuadricId q, TermOrder order, Domain domain) {
  return quotient(q, q.ring(order, domain));
}

Quotient quotient(QuadricId q, const Ring& ring) { return Quotient{ring, {relation(q, ring)}}; }

}  // namespace quadhopf::quadrics
