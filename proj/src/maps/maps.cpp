#include "quadhopf/maps/maps.hpp"

#include <algorithm>
#include <cctype>

#include "quadhopf/symcore/errors.hpp"

namespace quadhopf::maps {

namespace {

std::string idx(char prefix, int i) { return std::string(1, prefix) + std::to_string(i); }

Poly one(const Ring& r) { return Poly::constant(r, 1); }

/// Source quadric one step up, same order and domain as m's ring.
Ring suspended_ring(const QuadricMorphism& m, QuadricId up) {
  const Ring& r = m.ring();
  return up.ring(r->order(), r->domain());
}

QuadricMorphism suspend_impl(const QuadricMorphism& m, bool odd_target) {
  if (m.target.is_even() == odd_target) {
    throw InvalidArgument("suspension operator does not match the target parity of " + m.target.name());
  }
  if (m.x_part.size() != std::size_t(m.target.index())) {
    throw InvalidArgument("suspension needs the x-part of the target");
  }
  QuadricId src_up(m.source.dimension() + 2);
  QuadricId tgt_up(m.target.dimension() + 2);
  Ring ring = suspended_ring(m, src_up);
  int k = src_up.index();
  Poly xn = Poly::variable(ring, idx('x', k));
  Poly yn = Poly::variable(ring, idx('y', k));

  QuadricMorphism out;
  out.source = src_up;
  out.target = tgt_up;
  out.provenance = m.provenance.empty() ? "suspension" : "suspension of " + m.provenance;
  for (const auto& f : m.x_part) out.x_part.push_back(rebase(f, ring));
  out.x_part.push_back(xn);
  if (m.z_part) out.z_part = rebase(*m.z_part, ring);

  if (m.is_full()) {
    Poly r = rebase(quadrics::relation_cofactor(m), ring);
    for (const auto& g : m.y_part) out.y_part.push_back(rebase(g, ring));
    out.y_part.push_back(yn * r);
  }
  if (m.certificate) {
    // sum c_i f_i + c (rel' - x y) = target  =>  x gets -c y, rel' keeps c.
    const auto& old = *m.certificate;
    std::size_t n = m.x_part.size();
    MembershipCertificate cert;
    cert.target = rebase(old.target, ring);
    cert.generators = out.x_part;
    cert.generators.push_back(quadrics::relation(src_up, ring));
    for (std::size_t i = 0; i < n; ++i) cert.cofactors.push_back(rebase(old.cofactors[i], ring));
    Poly c = rebase(old.cofactors[n], ring);
    cert.cofactors.push_back(-(c * yn));
    cert.cofactors.push_back(c);
    if (!cert.verify()) throw Error("suspended certificate failed re-expansion");
    out.certificate = std::move(cert);
  }
  return out;
}

Scalar parse_unit(std::string_view text, const Domain& domain) {
  Ring scalars = make_ring({}, TermOrder::degrevlex, domain);
  Poly p = parse(text, scalars);
  if (!p.is_constant() || p.is_zero()) throw ParseError("unit must be a nonzero constant: " + std::string(text), 0);
  return p.constant_term();
}

}  // namespace

QuadricMorphism suspend_odd_target(const QuadricMorphism& m) { return suspend_impl(m, true); }
QuadricMorphism suspend_even_target(const QuadricMorphism& m) { return suspend_impl(m, false); }

QuadricMorphism suspend(const QuadricMorphism& m, int times) {
  if (times < 0) throw InvalidArgument("suspension count must be nonnegative");
  QuadricMorphism cur = m;
  for (int i = 0; i < times; ++i) cur = m.target.is_even() ? suspend_even_target(cur) : suspend_odd_target(cur);
  return cur;
}

QuadricMorphism eta_full(TermOrder order, Domain domain) {
  QuadricId src = QuadricId::odd(2);
  Ring r = src.ring(order, domain);
  auto v = [&r](const char* s) { return Poly::variable(r, s); };
  QuadricMorphism m;
  m.source = src;
  m.target = QuadricId(2);
  m.x_part = {v("x2") * v("y1")};
  m.y_part = {v("x1") * v("y2")};
  m.z_part = v("x1") * v("y1");
  m.provenance = "eta as the rank 1 projector (x_i y_j)";
  m.certificate = quadrics::verify_ideal_map(m.x_part, *m.z_part, m.source, m.target);
  return m;
}

QuadricMorphism eta_family(int n, TermOrder order, Domain domain) {
  if (n < 1) throw InvalidArgument("eta family needs n >= 1");
  QuadricMorphism base = eta_full(order, domain);
  base.y_part.clear();
  QuadricMorphism out = suspend(base, n - 1);
  out.provenance = "eta family, n = " + std::to_string(n);
  return out;
}

QuadricMorphism eta_family_literal(int n) {
  if (n < 1) throw InvalidArgument("eta family needs n >= 1");
  QuadricMorphism m;
  m.source = QuadricId::odd(n + 1);
  m.target = QuadricId::even(n);
  Ring r = m.source.ring();
  for (int i = 3; i <= n; ++i) m.x_part.push_back(Poly::variable(r, idx('x', i)));
  m.z_part = Poly::variable(r, "x1") * Poly::variable(r, "x2");
  m.provenance = "eta family ideal (x3, ..., x_n, x1 x2) as written";
  return m;
}

QuadricMorphism nu_base(TermOrder order, Domain domain) {
  QuadricId src = QuadricId::odd(4);
  Ring r = src.ring(order, domain);
  auto v = [&r](const char* s) { return Poly::variable(r, s); };
  // M1 = (x1 x2; y1 y2)-style pairing chosen so that det M1 + det M2 is the Q7 relation.
  QuadricMorphism m;
  m.source = src;
  m.target = QuadricId::even(2);
  m.x_part = {-v("x3") * v("y1") - v("x2") * v("y4"), -v("x4") * v("y1") + v("x2") * v("y3")};
  m.y_part = {-v("x4") * v("y2") - v("x1") * v("y3"), v("x3") * v("y2") - v("x1") * v("y4")};
  m.z_part = v("x3") * v("y3") + v("x4") * v("y4");
  m.provenance = "nu = (M1 M2, det M1)";
  return m;
}

QuadricMorphism nu_family(int n, TermOrder order, Domain domain) {
  if (n < 2) throw InvalidArgument("nu family needs n >= 2");
  QuadricMorphism base = nu_base(order, domain);
  base.certificate = quadrics::verify_ideal_map(base.x_part, *base.z_part, base.source, base.target);
  base.y_part.clear();
  QuadricMorphism out = suspend(base, n - 2);
  out.provenance = "nu family, n = " + std::to_string(n);
  return out;
}

std::string GWClass::describe(const Domain& domain) const {
  auto list = [&domain](const std::vector<Scalar>& us) {
    std::string s = "<";
    for (std::size_t i = 0; i < us.size(); ++i) s += (i ? "," : "") + domain.format(us[i]);
    return s + ">";
  };
  std::string out;
  if (!plus.empty()) out = list(plus);
  if (!minus.empty()) out += (out.empty() ? "-" : " - ") + list(minus);
  if (hyperbolic) {
    std::string h = (hyperbolic == 1 || hyperbolic == -1 ? "" : std::to_string(std::labs(hyperbolic))) + "h";
    out += out.empty() ? (hyperbolic < 0 ? "-" : "") + h : (hyperbolic < 0 ? " - " : " + ") + h;
  }
  return out.empty() ? "0" : out;
}

GWClass parse_gw_class(std::string_view text, const Domain& domain) {
  GWClass q;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  bool first = true;
  skip();
  if (text.substr(pos) == "0") return q;
  while (true) {
    skip();
    if (pos >= text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      throw ParseError("expected '+' or '-' between GW summands", pos);
    }
    first = false;
    if (pos < text.size() && text[pos] == '<') {
      std::size_t close = text.find('>', pos);
      if (close == std::string_view::npos) throw ParseError("unterminated '<'", pos);
      std::string_view body = text.substr(pos + 1, close - pos - 1);
      std::size_t start = 0;
      while (start <= body.size()) {
        std::size_t comma = body.find(',', start);
        std::string_view item = body.substr(start, comma == std::string_view::npos ? body.npos : comma - start);
        try {
          Scalar u = parse_unit(item, domain);
          (sign > 0 ? q.plus : q.minus).push_back(u);
        } catch (const ParseError& e) {
          throw ParseError(std::string("bad unit in GW class: ") + e.what(), pos + 1 + start);
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      pos = close + 1;
    } else {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      long k = pos > start ? std::stol(std::string(text.substr(start, pos - start))) : 1;
      if (pos >= text.size() || text[pos] != 'h') throw ParseError("expected '<' or 'h' in GW class", pos);
      ++pos;
      q.hyperbolic += sign * k;
    }
  }
  return q;
}

bool BinomSplit::verify() const {
  const Ring& r = A.ring();
  Poly z = Poly::variable(r, "z");
  return z.pow(n) * A + (one(r) - z).pow(n) * B == one(r);
}

BinomSplit binom_split(int n, const Ring& ring) {
  if (n < 1) throw InvalidArgument("binom_split needs n >= 1");
  Poly z = Poly::variable(ring, "z");
  Poly w = one(ring) - z;
  BinomSplit s{n, Poly(ring), Poly(ring)};
  mpz_class c = 1;  // C(2n, k)
  for (int k = 0; k <= 2 * n; ++k) {
    Scalar coeff = ring->domain().from_rational(mpq_class(c));
    if (k >= n) {
      s.A += (z.pow(k - n) * w.pow(2 * n - k)).scaled(coeff);
    } else {
      s.B += (z.pow(k) * w.pow(n - k)).scaled(coeff);
    }
    c = c * (2 * n - k) / (k + 1);
  }
  if (!s.verify()) throw Error("binomial split identity failed");
  return s;
}

BinomSplit binom_split(int n) { return binom_split(n, make_ring({"z"})); }

std::pair<PolyMatrix, PolyMatrix> q3_generator(const Scalar& u, const Ring& r) {
  const Domain& d = r->domain();
  if (u.is_zero()) throw InvalidArgument("m_u needs a unit");
  Scalar ui = d.inv(u);
  auto v = [&r](const char* s) { return Poly::variable(r, s); };
  PolyMatrix m(r, 2, 2), inv(r, 2, 2);
  m(0, 0) = v("x1");
  m(0, 1) = v("x2").scaled(u);
  m(1, 0) = v("y2").scaled(d.neg(ui));
  m(1, 1) = v("y1");
  inv(0, 0) = v("y1");
  inv(0, 1) = v("x2").scaled(d.neg(u));
  inv(1, 0) = v("y2").scaled(ui);
  inv(1, 1) = v("x1");
  return {m, inv};
}

Q3Endo q3_endo(const GWClass& q, const Ring& r) {
  const Domain& d = r->domain();
  std::vector<Scalar> plus = q.plus, minus = q.minus;
  for (long h = 0; h < std::labs(q.hyperbolic); ++h) {
    auto& side = q.hyperbolic > 0 ? plus : minus;
    side.push_back(d.one());
    side.push_back(d.neg(d.one()));
  }
  Quotient quot = quadrics::quotient(QuadricId::odd(2), r);
  PolyMatrix mq = PolyMatrix::identity(r, 2);
  for (const auto& u : plus) mq = (mq * q3_generator(u, r).first).reduced(quot);
  for (const auto& v : minus) mq = (mq * q3_generator(v, r).second).reduced(quot);
  std::vector<Poly> row = mq.row_entries(0);
  std::vector<Poly> y = {mq(1, 1), -mq(1, 0)};
  auto cert = quadrics::certificate_from_completion(row, y, QuadricId::odd(2));
  if (!cert) throw Error("M_q is not in SL2 modulo the Q3 relation");
  QuadricMorphism m = quadrics::complete_row(row, QuadricId::odd(2), QuadricId::odd(2), *cert);
  m.provenance = "Q3 endomorphism of class " + q.describe(d);
  return {mq, m};
}

std::pair<PolyMatrix, PolyMatrix> q2_rank0(const Scalar& u, const Scalar& v, const Ring& r) {
  const Domain& d = r->domain();
  if (u.is_zero() || v.is_zero()) throw InvalidArgument("m_{u,v} needs units");
  Poly z = Poly::variable(r, "z");
  Poly w = one(r) - z;
  Scalar diff = d.sub(u, v);
  PolyMatrix m(r, 2, 2);
  m(0, 0) = z + w.scaled(d.div(v, u));
  m(0, 1) = Poly::variable(r, "x1").scaled(d.div(diff, d.mul(u, v)));
  m(1, 0) = Poly::variable(r, "y1").scaled(diff);
  m(1, 1) = z + w.scaled(d.div(u, v));
  PolyMatrix inv(r, 2, 2);
  inv(0, 0) = m(1, 1);
  inv(0, 1) = -m(0, 1);
  inv(1, 0) = -m(1, 0);
  inv(1, 1) = m(0, 0);
  return {m, inv};
}

Q2Endo q2_projector(int n, const Ring& r) {
  if (n == 0) throw InvalidArgument("P_n needs n != 0");
  int k = n > 0 ? n : -n;
  BinomSplit s = binom_split(k, r);
  Poly z = Poly::variable(r, "z");
  Poly x = Poly::variable(r, "x1").pow(k), y = Poly::variable(r, "y1").pow(k);
  if (n < 0) std::swap(x, y);
  PolyMatrix p(r, 2, 2);
  p(0, 0) = z.pow(k) * s.A;
  p(0, 1) = x * s.A;
  p(1, 0) = y * s.B;
  p(1, 1) = (one(r) - z).pow(k) * s.B;
  return {p};
}

Q2EndoPlan plan_q2_endo(const GWClass& q, const Domain& d) {
  long n = q.rank();
  if (n == 0) throw InvalidArgument("rank 0 class has no P_n; q2_endo needs nonzero rank");
  if (n < 0 && n % 2 == 0) throw InvalidArgument("negative even rank is not realized by any P_n");
  std::vector<Scalar> plus = q.plus, minus = q.minus;
  Scalar p1 = d.one(), m1 = d.neg(d.one());
  for (long h = 0; h < std::labs(q.hyperbolic); ++h) {
    auto& side = q.hyperbolic > 0 ? plus : minus;
    side.push_back(p1);
    side.push_back(m1);
  }
  Q2EndoPlan plan;
  // Subtract the class of P_n: n/2 h (even), (n-1)/2 h + <1> (odd n > 0),
  // -(|n|-1)/2 h - <-1> (odd n < 0).
  long half = (std::labs(n) - (n % 2 ? 1 : 0)) / 2;
  auto& base_side = n > 0 ? minus : plus;
  for (long h = 0; h < half; ++h) {
    base_side.push_back(p1);
    base_side.push_back(m1);
  }
  if (n % 2) base_side.push_back(n > 0 ? p1 : m1);
  plan.projector_index = int(n);
  // Cancel equal units, then pair the rest in order.
  for (auto it = plus.begin(); it != plus.end();) {
    auto jt = std::find(minus.begin(), minus.end(), *it);
    if (jt != minus.end()) {
      minus.erase(jt);
      it = plus.erase(it);
    } else {
      ++it;
    }
  }
  if (plus.size() != minus.size()) throw Error("unbalanced GW decomposition");
  for (std::size_t i = 0; i < plus.size(); ++i) plan.pairs.emplace_back(plus[i], minus[i]);
  return plan;
}

Q2Endo q2_endo(const GWClass& q, const Ring& r) {
  Q2EndoPlan plan = plan_q2_endo(q, r->domain());
  Quotient quot = quadrics::quotient(QuadricId(2), r);
  PolyMatrix p = q2_projector(plan.projector_index, r).projector;
  for (auto it = plan.pairs.rbegin(); it != plan.pairs.rend(); ++it) {
    auto [m, inv] = q2_rank0(it->first, it->second, r);
    p = (m * p * inv).reduced(quot);
  }
  return {p};
}

}  // namespace quadhopf::maps
