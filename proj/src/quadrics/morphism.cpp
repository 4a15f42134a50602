#include "quadhopf/quadrics/morphism.hpp"

#include "quadhopf/symcore/errors.hpp"

namespace quadhopf::quadrics {

namespace {

std::vector<std::string> numbered(char prefix, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::string(1, prefix) + std::to_string(i));
  return out;
}

Poly sum_xy(const Ring& ring, int n) {
  Poly s(ring);
  for (int i = 1; i <= n; ++i) {
    s += Poly::variable(ring, "x" + std::to_string(i)) * Poly::variable(ring, "y" + std::to_string(i));
  }
  return s;
}

void require_row_shape(std::size_t length, QuadricId target, bool odd_target) {
  if (target.is_even() == odd_target) {
    throw InvalidArgument(std::string("target ") + target.name() + " must be " + (odd_target ? "odd" : "even"));
  }
  if (length != std::size_t(target.index())) {
    throw InvalidArgument("expected " + std::to_string(target.index()) + " x-coordinates for " + target.name() +
                          ", got " + std::to_string(length));
  }
}

Poly target_value(const QuadricMorphism& m) {
  const Ring& ring = m.ring();
  if (!m.target.is_even()) return Poly::constant(ring, 1);
  const Poly& fz = *m.z_part;
  return fz * (Poly::constant(ring, 1) - fz);
}

}  // namespace

bool QuadricMorphism::is_full() const {
  std::size_t n = target.index();
  return x_part.size() == n && y_part.size() == n && z_part.has_value() == target.is_even();
}

std::vector<Poly> QuadricMorphism::images() const {
  std::vector<Poly> out = x_part;
  out.insert(out.end(), y_part.begin(), y_part.end());
  if (z_part) out.push_back(*z_part);
  return out;
}

Verification verify_full(const QuadricMorphism& m) {
  if (!m.is_full()) {
    throw InvalidArgument("verify_full needs " + std::to_string(m.target.variable_count()) +
                          " coordinate images for " + m.target.name());
  }
  const Ring& ring = m.ring();
  Ring target_ring = m.target.ring(ring->order(), ring->domain());
  Poly pulled = substitute(relation(m.target, target_ring), m.images());
  Verification v;
  v.witness = normal_form(pulled, {relation(m.source, ring)});
  v.ok = v.witness.is_zero();
  return v;
}

MembershipCertificate verify_row(const std::vector<Poly>& row, QuadricId source, QuadricId target,
                                 const GroebnerOptions& options) {
  require_row_shape(row.size(), target, true);
  std::vector<Poly> gens = row;
  gens.push_back(relation(source, row.front().ring()));
  return contains_one(gens, options);
}

MembershipCertificate verify_ideal_map(const std::vector<Poly>& x_part, const Poly& f_z, QuadricId source,
                                       QuadricId target, const GroebnerOptions& options) {
  require_row_shape(x_part.size(), target, false);
  const Ring& ring = f_z.ring();
  std::vector<Poly> gens = x_part;
  gens.push_back(relation(source, ring));
  return certify_membership(f_z * (Poly::constant(ring, 1) - f_z), gens, options);
}

QuadricMorphism complete_row(const std::vector<Poly>& row, QuadricId source, QuadricId target,
                             const GroebnerOptions& options) {
  return complete_row(row, source, target, verify_row(row, source, target, options));
}

QuadricMorphism complete_row(const std::vector<Poly>& row, QuadricId source, QuadricId target,
                             MembershipCertificate certificate) {
  require_row_shape(row.size(), target, true);
  if (certificate.cofactors.size() != row.size() + 1 || !certificate.target.is_one() || !certificate.verify()) {
    throw InvalidArgument("certificate does not express 1 in terms of the row and the relation");
  }
  QuadricMorphism m{source, target, row, {}, std::nullopt, std::nullopt, {}};
  m.y_part.assign(certificate.cofactors.begin(), certificate.cofactors.begin() + row.size());
  m.certificate = std::move(certificate);
  return m;
}

QuadricMorphism complete_ideal_map(const std::vector<Poly>& x_part, const Poly& f_z, QuadricId source,
                                   QuadricId target, const GroebnerOptions& options) {
  MembershipCertificate cert = verify_ideal_map(x_part, f_z, source, target, options);
  QuadricMorphism m{source, target, x_part, {}, f_z, std::nullopt, {}};
  m.y_part.assign(cert.cofactors.begin(), cert.cofactors.begin() + x_part.size());
  m.certificate = std::move(cert);
  return m;
}

std::optional<MembershipCertificate> certificate_from_completion(const std::vector<Poly>& row,
                                                                 const std::vector<Poly>& y_part,
                                                                 QuadricId source) {
  if (row.size() != y_part.size() || row.empty()) throw InvalidArgument("row and y-part lengths differ");
  const Ring& ring = row.front().ring();
  Poly rel = relation(source, ring);
  Poly s = Poly::constant(ring, -1);
  for (std::size_t i = 0; i < row.size(); ++i) s += row[i] * y_part[i];
  Division d = divide(s, {rel});
  if (!d.remainder.is_zero()) return std::nullopt;
  MembershipCertificate cert;
  cert.generators = row;
  cert.generators.push_back(rel);
  cert.cofactors = y_part;
  cert.cofactors.push_back(-d.quotients[0]);
  cert.target = Poly::constant(ring, 1);
  if (!cert.verify()) return std::nullopt;
  return cert;
}

Poly relation_cofactor(const QuadricMorphism& m) {
  if (!m.is_full()) throw InvalidArgument("relation_cofactor needs a full morphism");
  const Ring& ring = m.ring();
  Poly s = -target_value(m);
  for (std::size_t i = 0; i < m.x_part.size(); ++i) s += m.x_part[i] * m.y_part[i];
  Division d = divide(s, {relation(m.source, ring)});
  if (!d.remainder.is_zero()) throw NotInIdeal("morphism identity does not hold modulo the source relation");
  return d.quotients[0];
}

IdempotentCheck Q2Endo::check() const {
  Quotient q = quotient(QuadricId(2), projector.ring());
  return check_idempotent(projector, q, Poly::constant(projector.ring(), 1));
}

StandardMap standard_map(const std::string& name, int n) {
  if (n < 1) throw InvalidArgument("standard maps need n >= 1");
  std::vector<std::string> xs = numbered('x', n), ys = numbered('y', n);
  auto vars = [&](std::initializer_list<std::string> extra) {
    std::vector<std::string> v = xs;
    v.insert(v.end(), ys.begin(), ys.end());
    v.insert(v.end(), extra);
    return v;
  };
  auto var = [](const Ring& r, const std::string& s) { return Poly::variable(r, s); };
  StandardMap m;
  m.name = name;
  m.n = n;
  if (name == "p_n") {
    m.source = make_ring(vars({"z"}));
    m.source_relations = {relation(QuadricId::even(n), m.source)};
    m.target_variables = xs;
    for (const auto& x : xs) m.images.push_back(var(m.source, x));
    m.note = "projection of X0 and X1's intersection onto A^n minus the origin";
  } else if (name == "alpha_n") {
    m.source = make_ring(vars({"t"}));
    m.source_relations = {relation(QuadricId::odd(n), m.source)};
    m.target = QuadricId::even(n);
    m.target_variables = m.target->variables();
    Poly t = var(m.source, "t");
    Poly tt = t * (Poly::constant(m.source, 1) - t);
    for (const auto& x : xs) m.images.push_back(var(m.source, x));
    for (const auto& y : ys) m.images.push_back(var(m.source, y) * tt);
    m.images.push_back(t);
  } else if (name == "alpha_n_iso_inverse") {
    // w stands for 1 / (z(1 - z)) on D(z(1 - z)).
    m.source = make_ring(vars({"z", "w"}));
    Poly z = var(m.source, "z");
    Poly w = var(m.source, "w");
    m.source_relations = buchberger({relation(QuadricId::even(n), m.source),
                                     w * z * (Poly::constant(m.source, 1) - z) - Poly::constant(m.source, 1)},
                                    {1'000'000, false})
                             .basis;
    m.target = QuadricId::odd(n);
    m.target_variables = vars({"t"});
    for (const auto& x : xs) m.images.push_back(var(m.source, x));
    for (const auto& y : ys) m.images.push_back(var(m.source, y) * w);
    m.images.push_back(z);
  } else if (name == "phi_2n+1") {
    m.source = make_ring(vars({"t", "u"}));
    Poly one = Poly::constant(m.source, 1);
    Poly f = relation(QuadricId::odd(n), m.source);
    Poly g = var(m.source, "t") * var(m.source, "u") - one;
    m.source_relations = {f * g};
    m.target = QuadricId::odd(n + 1);
    m.target_variables = m.target->variables();
    for (const auto& x : xs) m.images.push_back(var(m.source, x));
    m.images.push_back(var(m.source, "t"));
    for (const auto& y : ys) m.images.push_back(var(m.source, y));
    m.images.push_back(var(m.source, "u") * (one - sum_xy(m.source, n)));
    m.note = "y_{n+1} -> u(1 - sum x_i y_i) = -u f_n; the image u f_n does not preserve the relations";
  } else if (name == "psi_2n+2") {
    m.source = make_ring(vars({"z", "t", "u"}));
    Poly one = Poly::constant(m.source, 1);
    Poly z = var(m.source, "z");
    Poly h = relation(QuadricId::even(n), m.source);
    Poly g = var(m.source, "t") * var(m.source, "u") - one;
    m.source_relations = {h * g};
    m.target = QuadricId::even(n + 1);
    m.target_variables = m.target->variables();
    for (const auto& x : xs) m.images.push_back(var(m.source, x));
    m.images.push_back(var(m.source, "t"));
    for (const auto& y : ys) m.images.push_back(var(m.source, y));
    m.images.push_back(var(m.source, "u") * (z * (one - z) - sum_xy(m.source, n)));
    m.images.push_back(z);
  } else {
    throw InvalidArgument("unknown standard map " + name);
  }
  return m;
}

Verification verify_standard_map(const StandardMap& m) {
  Verification v;
  if (!m.target) {
    v.ok = true;
    v.witness = Poly(m.source);
    return v;
  }
  Ring target_ring = make_ring(m.target_variables, m.source->order(), m.source->domain());
  Poly pulled = substitute(relation(*m.target, target_ring), m.images);
  v.witness = normal_form(pulled, m.source_relations);
  v.ok = v.witness.is_zero();
  return v;
}

}  // namespace quadhopf::quadrics
