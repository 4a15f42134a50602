#include "quadhopf/sympl/symplectic.hpp"

#include "quadhopf/bundles/idempotents.hpp"
#include "quadhopf/symcore/errors.hpp"

namespace quadhopf::sympl {

PolyMatrix hyperbolic_form(const Ring& ring, std::size_t copies) {
  PolyMatrix h = PolyMatrix::from_ints(ring, {{0, 1}, {-1, 0}});
  return block_diag(std::vector<PolyMatrix>(copies, h));
}

PolyMatrix standard_form(const Ring& ring, std::size_t n) {
  PolyMatrix zero(ring, n, n);
  PolyMatrix id = PolyMatrix::identity(ring, n);
  return block2x2(zero, id, -id, zero);
}

SymplecticCheck is_symplectic(const PolyMatrix& m, const PolyMatrix& form, const Quotient& q) {
  if (!m.is_square() || !form.is_square() || m.rows() != form.rows() || m.rows() % 2) {
    throw InvalidArgument("is_symplectic needs square matrices of equal even size");
  }
  PolyMatrix lhs = m.transpose() * form * m;
  SymplecticCheck out;
  out.witness = lhs.first_mismatch(form, q);
  out.ok = !out.witness;
  return out;
}

PolyMatrix change_basis_S(const Ring& ring) {
  static const std::size_t target[8] = {0, 2, 4, 6, 1, 3, 5, 7};
  PolyMatrix s(ring, 8, 8);
  for (std::size_t r = 0; r < 8; ++r) s(r, target[r]) = Poly::constant(ring, 1);
  return s;
}

PolyMatrix conjugate_by_S(const PolyMatrix& m) {
  PolyMatrix s = change_basis_S(m.ring());
  return s * m * s.transpose();
}

PolyMatrix elem_diag(const PolyMatrix& e, const Quotient& q) {
  if (!e.is_square()) throw InvalidArgument("elem_diag needs a square block");
  PolyMatrix inv_t = e.inverse(q).transpose();
  PolyMatrix zero(e.ring(), e.rows(), e.cols());
  return block2x2(e, zero, zero, inv_t);
}

PolyMatrix elem_shear(const PolyMatrix& c, ShearSide side) {
  if (!c.is_square()) throw InvalidArgument("elem_shear needs a square block");
  if (!(c.transpose() == c)) throw InvalidArgument("elem_shear needs a symmetric block");
  PolyMatrix id = PolyMatrix::identity(c.ring(), c.rows());
  PolyMatrix zero(c.ring(), c.rows(), c.cols());
  return side == ShearSide::upper ? block2x2(id, c, zero, id) : block2x2(id, zero, c, id);
}

PolyMatrix embed_sp(const PolyMatrix& m, std::size_t target_size) {
  if (!m.is_square() || m.rows() % 2 || target_size % 2 || target_size < m.rows()) {
    throw InvalidArgument("embed_sp needs an even square matrix and a larger even target");
  }
  PolyMatrix cur = m;
  while (cur.rows() < target_size) {
    std::size_t n = cur.rows() / 2;
    PolyMatrix next(cur.ring(), 2 * n + 2, 2 * n + 2);
    // old index i < n -> i, old n + i -> n + 1 + i
    auto place = [n](std::size_t i) { return i < n ? i : i + 1; };
    for (std::size_t i = 0; i < 2 * n; ++i) {
      for (std::size_t j = 0; j < 2 * n; ++j) next(place(i), place(j)) = cur(i, j);
    }
    next(n, n) = Poly::constant(cur.ring(), 1);
    next(2 * n + 1, 2 * n + 1) = Poly::constant(cur.ring(), 1);
    cur = std::move(next);
  }
  return cur;
}

PolyMatrix build_U(const Ring& q4_ring) {
  auto [m, n] = bundles::q4_idempotents(q4_ring);
  return block2x2(n, m, m, n);
}

}  // namespace quadhopf::sympl
