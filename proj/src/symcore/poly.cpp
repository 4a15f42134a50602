#include "quadhopf/symcore/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <unordered_map>

#include "quadhopf/symcore/errors.hpp"

namespace quadhopf {

void require_same_ring(const Poly& a, const Poly& b) {
  if (!same_ring(a.ring(), b.ring())) {
    throw RingMismatch("operands live in different rings: " +
                       (a.ring() ? a.ring()->describe() : std::string("<none>")) + " vs " +
                       (b.ring() ? b.ring()->describe() : std::string("<none>")));
  }
}

namespace {

void sort_and_merge(const RingSpec& ring, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ring.compare(a.mono, b.mono) > 0;
  });
  const Domain& dom = ring.domain();
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Scalar c = std::move(terms[i].coeff);
    while (j < terms.size() && terms[j].mono == terms[i].mono) {
      dom.add_to(c, terms[j].coeff);
      ++j;
    }
    if (!c.is_zero()) {
      terms[out].mono = terms[i].mono;
      terms[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Poly Poly::constant(Ring ring, const Scalar& c) {
  Poly p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
  return p;
}

Poly Poly::constant(Ring ring, long c) {
  Scalar s = ring->domain().from_int(c);
  return constant(std::move(ring), s);
}

Poly Poly::variable(Ring ring, std::string_view name, int exponent) {
  std::size_t i = ring->require_index(name);
  if (exponent < 0 && !ring->is_invertible(i)) {
    throw InvalidArgument("negative exponent on non-invertible variable " + std::string(name));
  }
  Monomial m;
  m.set(i, exponent);
  Scalar one = ring->domain().one();
  return term(std::move(ring), m, one);
}

Poly Poly::term(Ring ring, const Monomial& m, const Scalar& c) {
  Poly p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(Ring ring, std::vector<Term> terms) {
  Poly p(std::move(ring));
  sort_and_merge(*p.ring_, terms);
  p.terms_ = std::move(terms);
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && domain().is_one(terms_[0].coeff);
}

bool Poly::has_negative_exponent() const noexcept {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.mono.has_negative(); });
}

const Term& Poly::leading_term() const {
  if (terms_.empty()) throw InvalidArgument("leading term of the zero polynomial");
  return terms_.front();
}

Scalar Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  for (const auto& t : terms_) {
    if (t.mono.is_one()) return t.coeff;
  }
  return Scalar();
}

int Poly::total_degree() const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.mono.degree() > d) d = t.mono.degree();
    first = false;
  }
  return d;
}

int Poly::degree_in(std::size_t i) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.mono[i]);
  return d;
}

Poly Poly::operator-() const {
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, domain().neg(t.coeff)});
  return r;
}

Poly& Poly::operator+=(const Poly& other) {
  if (!ring_) ring_ = other.ring_;
  if (other.terms_.empty()) return *this;
  require_same_ring(*this, other);
  const Domain& dom = domain();
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() && j != other.terms_.end()) {
    int c = ring_->compare(i->mono, j->mono);
    if (c > 0) {
      out.push_back(std::move(*i++));
    } else if (c < 0) {
      out.push_back(*j++);
    } else {
      Scalar s = std::move(i->coeff);
      dom.add_to(s, j->coeff);
      if (!s.is_zero()) out.push_back({i->mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i != terms_.end(); ++i) out.push_back(std::move(*i));
  for (; j != other.terms_.end(); ++j) out.push_back(*j);
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (!a.ring_ || !b.ring_) return Poly(a.ring_ ? a.ring_ : b.ring_);
  require_same_ring(a, b);
  if (a.terms_.empty() || b.terms_.empty()) return Poly(a.ring_);
  if (a.terms_.size() == 1) return b.times_term(a.terms_[0].mono, a.terms_[0].coeff);
  if (b.terms_.size() == 1) return a.times_term(b.terms_[0].mono, b.terms_[0].coeff);
  const Domain& dom = a.domain();
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      Scalar& slot = acc[s.mono * t.mono];
      dom.add_mul(slot, s.coeff, t.coeff);
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) terms.push_back({m, std::move(c)});
  }
  Poly r(a.ring_);
  std::sort(terms.begin(), terms.end(), [&](const Term& x, const Term& y) {
    return r.ring_->compare(x.mono, y.mono) > 0;
  });
  r.terms_ = std::move(terms);
  return r;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, domain().mul(t.coeff, c)});
  return r;
}

Poly Poly::times_term(const Monomial& m, const Scalar& c) const {
  // Multiplication by a monomial preserves the order, so no re-sort.
  Poly r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, domain().mul(t.coeff, c)});
  return r;
}

Poly Poly::pow(int k) const {
  if (k < 0) {
    if (terms_.size() != 1) {
      throw InvalidArgument("negative power of a polynomial that is not a single term");
    }
    const Term& t = terms_[0];
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      if (t.mono[i] != 0 && !ring_->is_invertible(i)) {
        throw InvalidArgument("negative power of non-invertible variable " +
                              ring_->variables()[i]);
      }
    }
    Monomial inv_m = Monomial() / t.mono;
    Poly base = Poly::term(ring_, inv_m, domain().inv(t.coeff));
    return base.pow(-k);
  }
  Poly result = Poly::constant(ring_, domain().one());
  Poly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(domain().inv(leading_coeff()));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (!a.terms_.empty() && !same_ring(a.ring_, b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) {
      return false;
    }
  }
  return true;
}

PolyBuilder::PolyBuilder(Ring ring) : ring_(std::move(ring)) {}

void PolyBuilder::add(const Monomial& m, const Scalar& c) {
  if (!c.is_zero()) pending_.push_back({m, c});
}

void PolyBuilder::add(const Poly& p) {
  pending_.insert(pending_.end(), p.terms().begin(), p.terms().end());
}

void PolyBuilder::add_product(const Poly& p, const Monomial& m, const Scalar& c) {
  const Domain& dom = ring_->domain();
  for (const auto& t : p.terms()) pending_.push_back({t.mono * m, dom.mul(t.coeff, c)});
}

Poly PolyBuilder::build() {
  Poly p = Poly::from_terms(ring_, std::move(pending_));
  pending_.clear();
  return p;
}

// ---------------------------------------------------------------------------
// Formatting

namespace {

void append_monomial(std::string& out, const RingSpec& ring, const Monomial& m) {
  bool first = true;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    int e = m[i];
    if (e == 0) continue;
    if (!first) out += '*';
    first = false;
    out += ring.variables()[i];
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
}

}  // namespace

std::string format(const Poly& p) {
  if (p.is_zero()) return "0";
  const RingSpec& ring = *p.ring();
  const Domain& dom = ring.domain();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool negative = dom.is_negative(t.coeff);
    Scalar mag = negative ? dom.neg(t.coeff) : t.coeff;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += dom.format(mag);
      continue;
    }
    if (!dom.is_one(mag)) {
      out += dom.format(mag);
      out += '*';
    }
    append_monomial(out, ring, t.mono);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Poly run() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty input");
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc(ring_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Poly t = product();
    acc += negate ? -t : t;
    while (true) {
      if (accept('+')) {
        acc += product();
      } else if (accept('-')) {
        acc -= product();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly product() {
    Poly acc = power();
    while (true) {
      if (accept('*')) {
        acc = acc * power();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Poly d = power();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail(d.is_zero() ? "division by zero" : "division by a non-constant");
        }
        acc = acc.scaled(ring_->domain().inv(d.leading_coeff()));
      } else {
        break;
      }
    }
    return acc;
  }

  int exponent() {
    skip_ws();
    bool paren = accept('(');
    skip_ws();
    bool neg = false;
    if (accept('-')) neg = true;
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    if (pos_ - start > 6) fail("exponent too large");
    int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (paren && !accept(')')) fail("expected ')'");
    return neg ? -e : e;
  }

  Poly power() {
    std::size_t at = pos_;
    Poly base = atom();
    if (accept('^')) {
      int e = exponent();
      if (e < 0) {
        if (base.size() == 1 && !base.leading_monomial().is_one()) {
          for (std::size_t i = 0; i < ring_->size(); ++i) {
            if (base.leading_monomial()[i] != 0 && !ring_->is_invertible(i)) {
              pos_ = at;
              fail("negative exponent on non-invertible variable " + ring_->variables()[i]);
            }
          }
        } else if (!base.is_constant() || base.is_zero()) {
          pos_ = at;
          fail("negative exponent on a non-monomial");
        }
      }
      return base.pow(e);
    }
    return base;
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  bool ident_char(std::size_t at) const {
    return at < text_.size() && std::isalnum(static_cast<unsigned char>(text_[at]));
  }

  Poly number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    mpz_class n(std::string(text_.substr(start, pos_ - start)));
    const Domain& dom = ring_->domain();
    if (pos_ < text_.size() && text_[pos_] == 'i' && !ident_char(pos_ + 1) &&
        dom.is_gaussian() && !ring_->index_of("i")) {
      ++pos_;
      return Poly::constant(ring_, dom.make(0, mpq_class(n)));
    }
    if (ident_char(pos_)) fail("malformed number");
    return Poly::constant(ring_, dom.from_rational(mpq_class(n)));
  }

  Poly identifier() {
    std::size_t start = pos_;
    while (ident_char(pos_)) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (auto i = ring_->index_of(name)) {
      Monomial m;
      m.set(*i, 1);
      return Poly::term(ring_, m, ring_->domain().one());
    }
    if (name == "i" && ring_->domain().is_gaussian()) {
      return Poly::constant(ring_, ring_->domain().imaginary_unit());
    }
    pos_ = start;
    fail("unknown variable '" + name + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse(std::string_view text, const Ring& ring) {
  if (!ring) throw InvalidArgument("parse requires a ring");
  return Parser(text, ring).run();
}

// ---------------------------------------------------------------------------
// Ring changes, substitution, evaluation

Poly rebase(const Poly& p, const Ring& target) {
  if (same_ring(p.ring(), target)) return p;
  if (!(p.ring()->domain() == target->domain())) {
    throw RingMismatch("rebase cannot change the coefficient domain");
  }
  const RingSpec& src = *p.ring();
  std::vector<std::optional<std::size_t>> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) map[i] = target->index_of(src.variables()[i]);
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!map[i]) {
        throw RingMismatch("variable " + src.variables()[i] + " missing from target ring");
      }
      if (t.mono[i] < 0 && !target->is_invertible(*map[i])) {
        throw InvalidArgument("variable " + src.variables()[i] + " is not invertible in target");
      }
      m.set(*map[i], t.mono[i]);
    }
    terms.push_back({m, t.coeff});
  }
  return Poly::from_terms(target, std::move(terms));
}

Poly substitute(const Poly& p, const std::vector<Poly>& images) {
  const RingSpec& src = *p.ring();
  if (images.size() != src.size()) {
    throw InvalidArgument("substitute needs one image per source variable");
  }
  Ring target;
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (std::none_of(p.terms().begin(), p.terms().end(),
                     [&](const Term& t) { return t.mono[i] != 0; })) {
      continue;
    }
    if (!images[i].ring()) {
      throw InvalidArgument("missing image for variable " + src.variables()[i]);
    }
    if (!target) {
      target = images[i].ring();
    } else if (!same_ring(target, images[i].ring())) {
      throw RingMismatch("substitution images live in different rings");
    }
  }
  if (!target) {
    for (const auto& im : images) {
      if (im.ring()) {
        target = im.ring();
        break;
      }
    }
  }
  if (!target) throw InvalidArgument("substitute cannot infer the target ring");
  if (!(target->domain() == src.domain())) {
    throw RingMismatch("substitution cannot change the coefficient domain");
  }

  // Power caches, filled on demand, for positive and negative exponents.
  std::vector<std::vector<Poly>> pos_pow(src.size()), neg_pow(src.size());
  auto power = [&](std::size_t i, int e) -> const Poly& {
    auto& cache = e > 0 ? pos_pow[i] : neg_pow[i];
    int k = e > 0 ? e : -e;
    if (cache.empty()) cache.push_back(Poly::constant(target, target->domain().one()));
    while (static_cast<int>(cache.size()) <= k) {
      if (e > 0) {
        cache.push_back(cache.back() * images[i]);
      } else {
        if (cache.size() == 1) {
          try {
            cache.push_back(images[i].pow(-1));
          } catch (const InvalidArgument& ex) {
            throw InvalidArgument("substitution produces a negative exponent: " +
                                  std::string(ex.what()));
          }
        } else {
          cache.push_back(cache.back() * cache[1]);
        }
      }
    }
    return cache[k];
  };

  // Variables with a single-term image are folded into each term directly.
  // Terms are grouped by their exponents in the remaining variables, so each
  // distinct power product is multiplied once.
  const Domain& dom = target->domain();
  std::vector<bool> single(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    single[i] = images[i].ring() && images[i].size() == 1 &&
                std::none_of(p.terms().begin(), p.terms().end(), [&](const Term& t) { return t.mono[i] < 0; });
  }
  const Monomial unit = Poly::constant(target, 1).leading_monomial();
  std::map<std::vector<int>, std::vector<Term>> groups;
  for (const auto& t : p.terms()) {
    std::vector<int> key(src.size(), 0);
    Monomial m = unit;
    Scalar c = t.coeff;
    for (std::size_t i = 0; i < src.size(); ++i) {
      int e = t.mono[i];
      if (e == 0) continue;
      if (!single[i]) {
        key[i] = e;
        continue;
      }
      const Term& img = images[i].terms().front();
      for (int k = 0; k < e; ++k) c = dom.mul(c, img.coeff);
      m = m * img.mono.pow(e);
    }
    groups[key].push_back({m, c});
  }
  PolyBuilder out(target);
  for (auto& [key, terms] : groups) {
    Poly sum = Poly::from_terms(target, std::move(terms));
    for (std::size_t i = 0; i < src.size() && !sum.is_zero(); ++i) {
      if (key[i] != 0) sum = sum * power(i, key[i]);
    }
    out.add(sum);
  }
  return out.build();
}

Poly substitute(const Poly& p, const std::map<std::string, Poly>& images) {
  const RingSpec& src = *p.ring();
  std::vector<Poly> ordered(src.size());
  for (const auto& [name, image] : images) {
    auto i = src.index_of(name);
    if (i) ordered[*i] = image;
  }
  for (std::size_t i = 0; i < src.size(); ++i) {
    bool used = std::any_of(p.terms().begin(), p.terms().end(),
                            [&](const Term& t) { return t.mono[i] != 0; });
    if (used && !ordered[i].ring()) {
      throw InvalidArgument("missing image for variable " + src.variables()[i]);
    }
  }
  return substitute(p, ordered);
}

Scalar evaluate(const Poly& p, const std::map<std::string, Scalar>& point) {
  const RingSpec& ring = *p.ring();
  const Domain& dom = ring.domain();
  std::vector<std::optional<Scalar>> values(ring.size());
  for (const auto& [name, v] : point) {
    if (auto i = ring.index_of(name)) values[*i] = v;
  }
  Scalar sum = dom.zero();
  for (const auto& t : p.terms()) {
    Scalar prod = t.coeff;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      int e = t.mono[i];
      if (e == 0) continue;
      if (!values[i]) throw InvalidArgument("no value for variable " + ring.variables()[i]);
      Scalar base = *values[i];
      if (e < 0) {
        if (base.is_zero()) {
          throw NotInvertible("invertible variable " + ring.variables()[i] + " evaluated at 0");
        }
        base = dom.inv(base);
        e = -e;
      }
      for (int k = 0; k < e; ++k) prod = dom.mul(prod, base);
    }
    dom.add_to(sum, prod);
  }
  return sum;
}

Poly reduce_mod_p(const Poly& p, std::uint64_t prime) {
  if (p.domain().kind() != DomainKind::rationals) {
    throw InvalidArgument("reduce_mod_p expects a polynomial over the rationals");
  }
  Domain fp = Domain::prime_field(prime);
  Ring target = p.ring()->with_domain(fp);
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    if (t.coeff.re().get_den() != 1) {
      throw InvalidArgument("non-integral coefficient " + t.coeff.re().get_str());
    }
    terms.push_back({t.mono, fp.from_rational(t.coeff.re())});
  }
  return Poly::from_terms(target, std::move(terms));
}

std::string checksum(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace quadhopf
