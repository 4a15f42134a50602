#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quadhopf/quadrics/morphism.hpp"

namespace quadhopf::maps {

using quadrics::Q2Endo;
using quadrics::QuadricId;
using quadrics::QuadricMorphism;

/// P^1-suspension of a map to an odd quadric: the row gains x_{k+1}. A full
/// input also gains y_{k+1} * r in the y-part, where sum f_i g_i =
/// 1 + r * (source relation). A certificate, when present, is carried over
/// without a new Groebner run.
QuadricMorphism suspend_odd_target(const QuadricMorphism& m);
/// P^1-suspension of a map to an even quadric: x_{k+1} is inserted after the
/// x-part; f_z is unchanged.
QuadricMorphism suspend_even_target(const QuadricMorphism& m);
/// Dispatches on the target parity.
QuadricMorphism suspend(const QuadricMorphism& m, int times = 1);

/// Ideal data for the (n-1)-fold suspension of eta, Q_{2n+1} -> Q_{2n}:
/// x-part (x2 y1, x3, ..., x_{n+1}) and f_z = x1 y1, with its certificate.
QuadricMorphism eta_family(int n, TermOrder order = TermOrder::degrevlex, Domain domain = Domain::rationals());
/// The eta projector read as a full map Q3 -> Q2: (x2 y1, x1 y2, x1 y1).
QuadricMorphism eta_full(TermOrder order = TermOrder::degrevlex, Domain domain = Domain::rationals());
/// The family's ideal taken literally, (x3, ..., x_n, x1 x2): x-part and f_z
/// as written, without any verification.
QuadricMorphism eta_family_literal(int n);

/// (M1 M2, det M1) on pairs of 2x2 matrices, Q7 -> Q4.
QuadricMorphism nu_base(TermOrder order = TermOrder::degrevlex, Domain domain = Domain::rationals());
/// (n-2)-fold suspension of nu, Q_{2n+3} -> Q_{2n}, n >= 2, in ideal form.
QuadricMorphism nu_family(int n, TermOrder order = TermOrder::degrevlex, Domain domain = Domain::rationals());

/// Formal sum <plus...> - <minus...> + hyperbolic * <1,-1>.
struct GWClass {
  std::vector<Scalar> plus;
  std::vector<Scalar> minus;
  long hyperbolic = 0;

  long rank() const { return long(plus.size()) - long(minus.size()) + 2 * hyperbolic; }
  std::string describe(const Domain& domain) const;
};
/// Parses "<1,u,-v> - <w> + 2h". Units are rationals, or gaussian
/// expressions such as "i" or "(1+2i)" in the gaussian domain. Throws
/// ParseError.
GWClass parse_gw_class(std::string_view text, const Domain& domain);

/// z^n A + (1-z)^n B = 1, from splitting (z + (1-z))^{2n}.
struct BinomSplit {
  int n = 0;
  Poly A, B;
  bool verify() const;
};
BinomSplit binom_split(int n, const Ring& ring);
BinomSplit binom_split(int n);

/// m_u = (x1, u x2; -u^{-1} y2, y1) over k[Q3], with its inverse.
std::pair<PolyMatrix, PolyMatrix> q3_generator(const Scalar& u, const Ring& q3_ring);

struct Q3Endo {
  PolyMatrix matrix;       // M_q
  QuadricMorphism row;     // first row, completed by the second row
};
/// M_q = m_{u_1} ... m_{u_r} m_{v_1}^{-1} ... m_{v_s}^{-1}, hyperbolic
/// summands folded in as <1> + <-1>.
Q3Endo q3_endo(const GWClass& q, const Ring& q3_ring);

/// m_{u,v} with bottom-right entry z + (u/v)(1 - z), and its inverse.
std::pair<PolyMatrix, PolyMatrix> q2_rank0(const Scalar& u, const Scalar& v, const Ring& q2_ring);
/// P_n for n > 0, and the x1 <-> y1 variant for n < 0.
Q2Endo q2_projector(int n, const Ring& q2_ring);

struct Q2EndoPlan {
  int projector_index = 0;                       // n of P_n
  std::vector<std::pair<Scalar, Scalar>> pairs;  // (u_i, v_i) of the m_{u,v} factors
};
/// Decomposition used by q2_endo. Throws InvalidArgument for rank 0 and
/// for negative even rank, which no P_n realizes.
Q2EndoPlan plan_q2_endo(const GWClass& q, const Domain& domain);
Q2Endo q2_endo(const GWClass& q, const Ring& q2_ring);

}  // namespace quadhopf::maps
