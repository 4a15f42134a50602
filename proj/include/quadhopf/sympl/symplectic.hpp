#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadhopf/sympl/matrix.hpp"

namespace quadhopf::sympl {

/// H = (0 1; -1 0) repeated along the diagonal.
PolyMatrix hyperbolic_form(const Ring& ring, std::size_t copies);
/// J_n = (0 I_n; -I_n 0).
PolyMatrix standard_form(const Ring& ring, std::size_t n);

struct SymplecticCheck {
  bool ok = false;
  std::optional<PolyMatrix::Mismatch> witness;  // entry of M^T F M - F
};

/// M^T * form * M == form modulo q.
SymplecticCheck is_symplectic(const PolyMatrix& m, const PolyMatrix& form, const Quotient& q);

/// The 8x8 permutation with S * diag(H,H,H,H) * S^T = J_4.
PolyMatrix change_basis_S(const Ring& ring);
PolyMatrix conjugate_by_S(const PolyMatrix& m);

/// (E 0; 0 E^{-T}). E must be invertible over q.
PolyMatrix elem_diag(const PolyMatrix& e, const Quotient& q);
enum class ShearSide { upper, lower };
/// (I C; 0 I) for upper, (I 0; C I) for lower. C must be symmetric.
PolyMatrix elem_shear(const PolyMatrix& c, ShearSide side);

/// Sp_{2n} -> Sp_{2n+2}: (A B; C D) -> (A 0 B 0; 0 1 0 0; C 0 D 0; 0 0 0 1),
/// repeated until the requested size is reached.
PolyMatrix embed_sp(const PolyMatrix& m, std::size_t target_size);

/// The 8x8 matrix U over k[Q4], blocks (N M; M N) from the rank 2 idempotents.
PolyMatrix build_U(const Ring& q4_ring);

}  // namespace quadhopf::sympl
