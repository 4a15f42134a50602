#include "quadhopf/symcore/ideal.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "quadhopf/symcore/errors.hpp"

namespace quadhopf {
namespace {

struct Descending {
  const RingSpec* ring;
  bool operator()(const Monomial& a, const Monomial& b) const { return ring->compare(a, b) > 0; }
};

using WorkSet = std::map<Monomial, Scalar, Descending>;

/// Smallest monomial x^N with x^N * p free of negative exponents.
Monomial clearing_monomial(const Poly& p) {
  Monomial n;
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < p.ring()->size(); ++i) {
      if (t.mono[i] < 0 && -t.mono[i] > n[i]) n.set(i, -t.mono[i]);
    }
  }
  return n;
}

Poly times_monomial(const Poly& p, const Monomial& m) {
  return p.times_term(m, p.domain().one());
}

void check_divisors(const Poly& p, const std::vector<const Poly*>& divisors) {
  for (const Poly* d : divisors) {
    if (d->is_zero()) throw InvalidArgument("division by the zero polynomial");
    require_same_ring(p, *d);
  }
}

/// Plain division; every input is a genuine polynomial (no negative
/// exponents). Quotients are filled only when `quotients` is non-null.
Poly divide_polynomial(const Poly& p, const std::vector<const Poly*>& divisors,
                       std::vector<Poly>* quotients) {
  const Ring& ring = p.ring();
  const Domain& dom = ring->domain();
  std::vector<Scalar> lc_inv;
  lc_inv.reserve(divisors.size());
  for (const Poly* d : divisors) lc_inv.push_back(dom.inv(d->leading_coeff()));

  WorkSet work(Descending{ring.get()});
  for (const auto& t : p.terms()) work.emplace_hint(work.end(), t.mono, t.coeff);

  std::vector<std::vector<Term>> qterms(quotients ? divisors.size() : 0);
  std::vector<Term> rem;
  while (!work.empty()) {
    auto head = work.begin();
    Monomial m = head->first;
    Scalar c = std::move(head->second);
    work.erase(head);
    std::size_t k = 0;
    while (k < divisors.size() && !divisors[k]->leading_monomial().divides(m)) ++k;
    if (k == divisors.size()) {
      rem.push_back({m, std::move(c)});
      continue;
    }
    const Poly& d = *divisors[k];
    Monomial q = m / d.leading_monomial();
    Scalar qc = dom.mul(c, lc_inv[k]);
    Scalar neg_qc = dom.neg(qc);
    for (std::size_t j = 1; j < d.size(); ++j) {
      const Term& t = d.terms()[j];
      Monomial target = t.mono * q;
      auto [it, inserted] = work.try_emplace(target);
      dom.add_mul(it->second, neg_qc, t.coeff);
      if (it->second.is_zero()) work.erase(it);
    }
    if (quotients) qterms[k].push_back({q, std::move(qc)});
  }
  if (quotients) {
    quotients->clear();
    for (auto& qt : qterms) quotients->push_back(Poly::from_terms(ring, std::move(qt)));
  }
  return Poly::from_terms(ring, std::move(rem));
}

Division divide_impl(const Poly& p, const std::vector<Poly>& divisors, bool want_quotients) {
  std::vector<const Poly*> ptrs;
  for (const auto& d : divisors) ptrs.push_back(&d);
  check_divisors(p, ptrs);

  bool laurent = p.has_negative_exponent() ||
                 std::any_of(divisors.begin(), divisors.end(),
                             [](const Poly& d) { return d.has_negative_exponent(); });
  Division out;
  if (!laurent) {
    out.remainder = divide_polynomial(p, ptrs, want_quotients ? &out.quotients : nullptr);
    return out;
  }

  // Divisors with negative exponents are replaced by unit multiples.
  std::vector<Poly> cleared;
  std::vector<Monomial> shifts;
  for (const auto& d : divisors) {
    shifts.push_back(clearing_monomial(d));
    cleared.push_back(times_monomial(d, shifts.back()));
  }
  std::vector<const Poly*> cptrs;
  for (const auto& d : cleared) cptrs.push_back(&d);
  Monomial n = clearing_monomial(p);
  Monomial n_inv = Monomial() / n;
  Poly rem = divide_polynomial(times_monomial(p, n), cptrs,
                               want_quotients ? &out.quotients : nullptr);
  out.remainder = times_monomial(rem, n_inv);
  for (std::size_t i = 0; i < out.quotients.size(); ++i) {
    out.quotients[i] = times_monomial(out.quotients[i], shifts[i] * n_inv);
  }
  return out;
}

}  // namespace

Division divide(const Poly& p, const std::vector<Poly>& divisors) {
  return divide_impl(p, divisors, true);
}

Poly normal_form(const Poly& p, const std::vector<Poly>& divisors) {
  return divide_impl(p, divisors, false).remainder;
}

bool MembershipCertificate::verify() const {
  if (generators.size() != cofactors.size()) return false;
  Poly sum(target.ring());
  for (std::size_t i = 0; i < generators.size(); ++i) sum += cofactors[i] * generators[i];
  return sum == target;
}

std::size_t MembershipCertificate::size() const {
  std::size_t n = 0;
  for (const auto& c : cofactors) n += c.size();
  return n;
}

// ---------------------------------------------------------------------------
// Buchberger

namespace {

struct Pair {
  std::size_t i, j;  // i < j
  Monomial lcm;
};

class Engine {
 public:
  Engine(const std::vector<Poly>& gens, const GroebnerOptions& opt)
      : gens_(gens), opt_(opt), ring_(gens.front().ring()), dom_(ring_->domain()) {}

  GroebnerBasis run() {
    GroebnerBasis out;
    out.generators = gens_;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (gens_[i].is_zero()) continue;
      std::vector<Poly> cof;
      if (opt_.track_cofactors) {
        cof.assign(gens_.size(), Poly(ring_));
        cof[i] = Poly::constant(ring_, dom_.one());
      }
      // Reduce against what is already there so the active set stays
      // inter-reduced on leading monomials.
      if (insert(gens_[i], std::move(cof))) return finish_unit(out);
    }
    while (!pairs_.empty()) {
      Pair pr = pop_pair();
      if (++reductions_ > opt_.max_reductions) {
        throw GroebnerCapExceeded("Buchberger exceeded " + std::to_string(opt_.max_reductions) +
                                  " S-polynomial reductions");
      }
      const Poly& gi = elems_[pr.i];
      const Poly& gj = elems_[pr.j];
      Monomial mi = pr.lcm / gi.leading_monomial();
      Monomial mj = pr.lcm / gj.leading_monomial();
      Scalar one = dom_.one();
      Scalar minus_one = dom_.neg(one);
      Poly s = gi.times_term(mi, one) + gj.times_term(mj, minus_one);
      std::vector<Poly> cof;
      if (opt_.track_cofactors) {
        cof.resize(gens_.size(), Poly(ring_));
        for (std::size_t k = 0; k < gens_.size(); ++k) {
          cof[k] = cofs_[pr.i][k].times_term(mi, one) + cofs_[pr.j][k].times_term(mj, minus_one);
        }
      }
      if (insert(s, std::move(cof))) return finish_unit(out);
    }
    return finish(out);
  }

 private:
  /// Reduces p, and if nonzero adds it with pair updates. Returns true when
  /// a constant was found.
  bool insert(const Poly& p, std::vector<Poly> cof) {
    std::vector<const Poly*> divisors;
    for (std::size_t k : active_) divisors.push_back(&elems_[k]);
    std::vector<Poly> quotients;
    Poly r = divisors.empty() ? p
                              : divide_polynomial(p, divisors,
                                                  opt_.track_cofactors ? &quotients : nullptr);
    if (r.is_zero()) return false;
    if (opt_.track_cofactors) {
      for (std::size_t q = 0; q < quotients.size(); ++q) {
        if (quotients[q].is_zero()) continue;
        const auto& base = cofs_[active_[q]];
        for (std::size_t k = 0; k < gens_.size(); ++k) {
          if (!base[k].is_zero()) cof[k] -= quotients[q] * base[k];
        }
      }
      Scalar inv = dom_.inv(r.leading_coeff());
      for (auto& c : cof) c = c.scaled(inv);
    }
    r = r.monic();
    elems_.push_back(std::move(r));
    cofs_.push_back(std::move(cof));
    std::size_t t = elems_.size() - 1;
    if (elems_[t].is_constant()) {
      unit_ = t;
      return true;
    }
    update(t);
    return false;
  }

  void update(std::size_t t) {
    const Monomial& lt = elems_[t].leading_monomial();
    std::vector<Pair> c;
    for (std::size_t k : active_) {
      c.push_back({k, t, Monomial::lcm(elems_[k].leading_monomial(), lt)});
    }
    std::vector<Pair> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      const Pair& p = c[a];
      bool coprime = elems_[p.i].leading_monomial().coprime(lt);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t b = a + 1; b < c.size() && !dominated; ++b) {
          dominated = c[b].lcm.divides(p.lcm);
        }
        for (std::size_t b = 0; b < d.size() && !dominated; ++b) {
          dominated = d[b].lcm.divides(p.lcm);
        }
      }
      if (!dominated) d.push_back(p);
    }
    std::vector<Pair> kept;
    for (auto& p : pairs_) {
      bool drop = lt.divides(p.lcm) &&
                  !(Monomial::lcm(elems_[p.i].leading_monomial(), lt) == p.lcm) &&
                  !(Monomial::lcm(elems_[p.j].leading_monomial(), lt) == p.lcm);
      if (!drop) kept.push_back(std::move(p));
    }
    for (auto& p : d) {
      if (!elems_[p.i].leading_monomial().coprime(lt)) kept.push_back(std::move(p));
    }
    pairs_ = std::move(kept);
    std::vector<std::size_t> next;
    for (std::size_t k : active_) {
      if (!lt.divides(elems_[k].leading_monomial())) next.push_back(k);
    }
    next.push_back(t);
    active_ = std::move(next);
  }

  Pair pop_pair() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      int by_degree = a.lcm.degree() - b.lcm.degree();
      int by_order = by_degree != 0 ? by_degree : ring_->compare(a.lcm, b.lcm);
      if (by_order < 0 || (by_order == 0 && std::tie(a.j, a.i) < std::tie(b.j, b.i))) best = k;
    }
    Pair p = std::move(pairs_[best]);
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    return p;
  }

  GroebnerBasis& finish_unit(GroebnerBasis& out) {
    out.basis = {elems_[unit_]};
    if (opt_.track_cofactors) out.cofactors = {cofs_[unit_]};
    out.reductions = reductions_;
    return out;
  }

  GroebnerBasis& finish(GroebnerBasis& out) {
    // active_ is a minimal basis; reduce each tail against the others.
    std::vector<std::size_t> order = active_;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return ring_->compare(elems_[a].leading_monomial(), elems_[b].leading_monomial()) > 0;
    });
    for (std::size_t k : order) {
      std::vector<const Poly*> others;
      std::vector<std::size_t> other_idx;
      for (std::size_t o : order) {
        if (o == k) continue;
        others.push_back(&elems_[o]);
        other_idx.push_back(o);
      }
      std::vector<Poly> quotients;
      Poly r = others.empty()
                   ? elems_[k]
                   : divide_polynomial(elems_[k], others,
                                       opt_.track_cofactors ? &quotients : nullptr);
      out.basis.push_back(r);
      if (opt_.track_cofactors) {
        std::vector<Poly> cof = cofs_[k];
        for (std::size_t q = 0; q < quotients.size(); ++q) {
          if (quotients[q].is_zero()) continue;
          for (std::size_t g = 0; g < gens_.size(); ++g) {
            if (!cofs_[other_idx[q]][g].is_zero()) cof[g] -= quotients[q] * cofs_[other_idx[q]][g];
          }
        }
        out.cofactors.push_back(std::move(cof));
      }
    }
    out.reductions = reductions_;
    return out;
  }

  const std::vector<Poly>& gens_;
  GroebnerOptions opt_;
  Ring ring_;
  Domain dom_;
  std::vector<Poly> elems_;
  std::vector<std::vector<Poly>> cofs_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
  std::uint64_t reductions_ = 0;
  std::size_t unit_ = 0;
};

}  // namespace

GroebnerBasis buchberger(const std::vector<Poly>& generators, const GroebnerOptions& options) {
  if (generators.empty()) throw InvalidArgument("buchberger needs at least one generator");
  for (const auto& g : generators) {
    require_same_ring(generators.front(), g);
    if (g.has_negative_exponent()) {
      throw InvalidArgument("buchberger expects polynomial (non-Laurent) generators");
    }
  }
  bool all_zero = std::all_of(generators.begin(), generators.end(),
                              [](const Poly& g) { return g.is_zero(); });
  if (all_zero) {
    GroebnerBasis out;
    out.generators = generators;
    return out;
  }
  return Engine(generators, options).run();
}

MembershipCertificate certify_membership(const Poly& target, const std::vector<Poly>& generators,
                                         const GroebnerOptions& options) {
  if (generators.empty()) throw InvalidArgument("membership needs at least one generator");
  // Laurent generators are replaced by unit multiples for the search.
  std::vector<Poly> cleared;
  std::vector<Monomial> shifts;
  for (const auto& g : generators) {
    shifts.push_back(clearing_monomial(g));
    cleared.push_back(times_monomial(g, shifts.back()));
  }
  MembershipCertificate cert;
  cert.generators = generators;
  cert.target = target;
  const Ring& ring = generators.front().ring();
  if (target.is_zero()) {
    cert.cofactors.assign(generators.size(), Poly(ring));
    return cert;
  }
  GroebnerOptions opt = options;
  opt.track_cofactors = true;
  GroebnerBasis gb = buchberger(cleared, opt);
  Division div = divide(target, gb.basis);
  if (!div.remainder.is_zero()) {
    throw NotInIdeal("target is not in the ideal; normal form has " +
                     std::to_string(div.remainder.size()) + " terms");
  }
  cert.cofactors.assign(generators.size(), Poly(ring));
  for (std::size_t k = 0; k < gb.basis.size(); ++k) {
    if (div.quotients[k].is_zero()) continue;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (!gb.cofactors[k][i].is_zero()) cert.cofactors[i] += div.quotients[k] * gb.cofactors[k][i];
    }
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    cert.cofactors[i] = times_monomial(cert.cofactors[i], shifts[i]);
  }
  if (!cert.verify()) throw Error("membership certificate failed re-expansion");
  return cert;
}

MembershipCertificate contains_one(const std::vector<Poly>& generators,
                                   const GroebnerOptions& options) {
  if (generators.empty()) throw InvalidArgument("membership needs at least one generator");
  Poly one = Poly::constant(generators.front().ring(), 1);
  try {
    return certify_membership(one, generators, options);
  } catch (const NotInIdeal&) {
    throw NotInIdeal("generators do not generate the unit ideal");
  }
}

}  // namespace quadhopf
