#pragma once

#include <utility>

#include "quadhopf/sympl/matrix.hpp"

namespace quadhopf::bundles {

/// The rank 2 idempotent M on Q4 and its complement N = I - M, over a ring
/// declaring x1, x2, y1, y2, z.
std::pair<PolyMatrix, PolyMatrix> q4_idempotents(const Ring& ring);

/// M(P) = I - y x^T on Q5, over a ring declaring x1..x3, y1..y3.
PolyMatrix universal_MP(const Ring& ring);

/// Plucker chart of Q4 inside Gr(2,4): numerators of z, x1, x2, y1, y2 and
/// the common denominator d = u1 + u6, over a ring declaring a1..a4, b1..b4.
struct PluckerChart {
  Poly z, x1, x2, y1, y2;
  Poly d;
  Poly u6;  // a3 b4 - a4 b3
};
PluckerChart plucker_chart(const Ring& ring);

}  // namespace quadhopf::bundles
