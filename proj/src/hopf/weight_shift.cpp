#include <map>

#include "common.hpp"
#include "quadhopf/displays.hpp"
#include "quadhopf/hopf/hopf.hpp"
#include "quadhopf/quadrics/quadric.hpp"
#include "quadhopf/symcore/errors.hpp"

namespace quadhopf::hopf {

using namespace detail;

namespace {

PolyMatrix lower(const Poly& a) { return mat2(num(a.ring(), 1), num(a.ring(), 0), a, num(a.ring(), 1)); }
PolyMatrix upper(const Poly& a) { return mat2(num(a.ring(), 1), a, num(a.ring(), 0), num(a.ring(), 1)); }

struct Preimage {
  std::optional<Poly> value;
  std::string witness;
};

/// Inverse of psi: x_i -> x_i, y_i -> t(1-t) y_i, z -> t. Every term with
/// y-degree d must carry a t-coefficient divisible by (t(1-t))^d.
Preimage psi_preimage(const Poly& g, const Ring& q4) {
  const Ring& src = g.ring();
  std::size_t t_index = src->require_index("t");
  std::vector<std::size_t> y_index = {src->require_index("y1"), src->require_index("y2")};
  Ring tr = make_ring({"t"}, TermOrder::lex, src->domain());
  Poly tt = var(tr, "t");
  Poly base = tt - tt * tt;

  auto descending = [&src](const Monomial& a, const Monomial& b) { return src->compare(a, b) > 0; };
  std::map<Monomial, Poly, decltype(descending)> groups(descending);  // (x, y) monomial -> t-coefficient
  for (const auto& term : g.terms()) {
    Monomial key = term.mono;
    int te = key[t_index];
    key.set(t_index, 0);
    auto it = groups.try_emplace(key, Poly(tr)).first;
    it->second += tt.pow(te).scaled(term.coeff);
  }
  PolyBuilder out(q4);
  Poly z = var(q4, "z");
  for (const auto& [key, coeff] : groups) {
    int d = key[y_index[0]] + key[y_index[1]];
    Division div = divide(coeff, {base.pow(d)});
    if (!div.remainder.is_zero()) {
      Poly mono = Poly::term(src, key, src->domain().one());
      return {std::nullopt, "term " + format(mono) + " has t-coefficient " + format(coeff) +
                                " with remainder " + format(div.remainder) + " modulo (t - t^2)^" + std::to_string(d)};
    }
    Poly q = d == 0 ? coeff : div.quotients[0];
    Poly image = substitute(q, std::vector<Poly>{z});
    Monomial m;
    for (std::size_t i = 0; i < src->size(); ++i) {
      if (key[i] != 0) m.set(q4->require_index(src->variables()[i]), key[i]);
    }
    out.add(image.times_term(m, q4->domain().one()));
  }
  return {out.build(), {}};
}

struct Recorder {
  WeightShiftLog& log;

  WeightShiftStage& stage(std::string id, std::string title) {
    log.stages.push_back({std::move(id), std::move(title), {}});
    return log.stages.back();
  }
  void keep(std::string name, const PolyMatrix& m) { log.matrices.emplace_back(std::move(name), m); }
};

}  // namespace

const PolyMatrix& WeightShiftLog::matrix(std::string_view name) const {
  for (const auto& [n, m] : matrices) {
    if (n == name) return m;
  }
  throw InvalidArgument("no matrix named " + std::string(name) + " in the weight-shift log");
}

WeightShiftLog weight_shift_replay() {
  WeightShiftLog log;
  Recorder rec{log};

  Trivializations triv = trivializations();
  rec.keep("E", triv.E);
  rec.keep("E_inv", triv.E_inv);
  rec.keep("F", triv.F);
  rec.keep("F_inv", triv.F_inv);
  rec.keep("T", triv.T);

  // Q5 with x3 inverted; U and V as in the trivializations.
  const Ring& r = triv.T.ring();
  Poly x1 = var(r, "x1"), x2 = var(r, "x2"), x3 = var(r, "x3");
  Poly y1 = var(r, "y1"), y2 = var(r, "y2"), y3 = var(r, "y3");
  Poly one = num(r, 1), zero = num(r, 0);
  Poly f3 = x1 * y1 + x2 * y2 + x3 * y3 - one;
  Quotient q5{r, {f3}};
  Quotient v{r, {x1 * y1 + x2 * y2 - one, y3}};
  Quotient y3_ideal{r, {y3}};

  // (i) m'
  std::map<std::string, Poly> m_prime = {{"x1", x1},
                                         {"x2", x2},
                                         {"x3", x3.pow(2)},
                                         {"y1", y1 * (one + x3 * y3)},
                                         {"y2", y2 * (one + x3 * y3)},
                                         {"y3", y3.pow(2)}};
  {
    auto& st = rec.stage("i", "m' is an endomorphism of Q5 preserving U and V");
    st.checks.push_back(poly_check("m'.relation", q5.reduce(substitute(f3, m_prime))));
    st.checks.push_back(make_check("m'.U", m_prime["x3"] == x3.pow(2), "x3 -> " + format(m_prime["x3"])));
    st.checks.push_back(poly_check("m'.V", y3_ideal.reduce(m_prime["y3"])));
    st.checks.push_back(poly_check("m'.on_V", v.reduce(m_prime["y1"] - y1) + v.reduce(m_prime["y2"] - y2)));
  }

  // (ii) T o m'
  PolyMatrix m = mat2(x1, -y2, x2, y1);
  PolyMatrix m_inv = mat2(y1, y2, -x2, x1);
  PolyMatrix t_m = triv.T.map([&m_prime](const Poly& p) { return substitute(p, m_prime); }).reduced(v);
  rec.keep("T o m'", t_m);
  {
    auto& st = rec.stage("ii", "T o m' and its commutator form");
    Poly x3sq = x3.pow(2), x3sqi = x3.pow(-2);
    PolyMatrix shown = mat2(one - x2 * y2 * (one - x3sq), x1 * y2 * (one - x3sq), x2 * y1 * (x3sqi - one),
                            x3sqi - x1 * y1 * (x3sqi - one));
    PolyMatrix commutator = mat2(x3, zero, zero, x3.pow(-1)) * m * mat2(x3.pow(-1), zero, zero, x3) * m_inv;
    st.checks.push_back(matrix_check("Tm'.display", t_m, shown, v));
    st.checks.push_back(matrix_check("Tm'.commutator", t_m, commutator, v));
  }

  // (iii) Whitehead
  {
    auto& st = rec.stage("iii", "Whitehead identity for diag(x3, x3^-1)");
    Poly x3i = x3.pow(-1);
    PolyMatrix w = lower(x3i) * upper(one - x3) * lower(-one) * upper(one - x3i);
    st.checks.push_back(exact_check("whitehead", w, mat2(x3, zero, zero, x3i)));
  }

  // (iv) D(t) over Q3 x G_m x A^1
  Ring w = make_ring({"x1", "x2", "y1", "y2", "t", "x3"}, TermOrder::lex, Domain::rationals(), {"x3"});
  Poly wx1 = var(w, "x1"), wx2 = var(w, "x2"), wy1 = var(w, "y1"), wy2 = var(w, "y2");
  Poly t = var(w, "t"), wx3 = var(w, "x3"), w1 = num(w, 1), w0 = num(w, 0);
  Poly wx3i = wx3.pow(-1);
  Quotient qw{w, {wx1 * wy1 + wx2 * wy2 - w1}};
  PolyMatrix wm = mat2(wx1, -wy2, wx2, wy1);
  PolyMatrix wm_inv = mat2(wy1, wy2, -wx2, wx1);
  PolyMatrix a = lower(t * wx3i) * upper(t * (w1 - wx3)) * lower(-t) * upper(t * (w1 - wx3i));
  PolyMatrix a_inv = upper(-t * (w1 - wx3i)) * lower(t) * upper(-t * (w1 - wx3)) * lower(-t * wx3i);
  PolyMatrix d = a * wm * a_inv * wm_inv;
  rec.keep("A(t)", a);
  rec.keep("D(t)", d.reduced(qw));
  {
    auto& st = rec.stage("iv", "D(0) = I and D(1) = T o m'");
    PolyMatrix id = PolyMatrix::identity(w, 2);
    st.checks.push_back(exact_check("A.inverse", a * a_inv, id));
    st.checks.push_back(matrix_check("D(0)", specialize(d, {{"t", w0}}), id, qw));
    st.checks.push_back(matrix_check("D(1)", specialize(d, {{"t", w1}}), rebase(t_m, w), qw));
    st.checks.push_back(matrix_check("D.at_x3_1", specialize(d, {{"x3", w1}}), id, qw));
    st.checks.push_back(
        matrix_check("D.at_base_point", specialize(d, {{"x1", w1}, {"x2", w0}, {"y1", w1}, {"y2", w0}}), id, qw));
  }

  // (v) x3 = -1
  Ring g = make_ring({"x1", "x2", "y1", "y2", "t"}, TermOrder::lex);
  Poly gx1 = var(g, "x1"), gx2 = var(g, "x2"), gy1 = var(g, "y1"), gy2 = var(g, "y2");
  Poly gt = var(g, "t"), g1 = num(g, 1), g0 = num(g, 0);
  Quotient qg{g, {gx1 * gy1 + gx2 * gy2 - g1}};
  PolyMatrix gm = mat2(gx1, -gy2, gx2, gy1);
  PolyMatrix gm_inv = mat2(gy1, gy2, -gx2, gx1);
  auto at_minus_one = [&](const PolyMatrix& x) { return rebase(specialize(x, {{"x3", num(w, -1)}}), g); };
  Poly t2 = gt.pow(2), t3 = gt.pow(3), t4 = gt.pow(4);
  PolyMatrix tm = mat2(g1 - t2.scaled(g->domain().from_int(2)), (gt - t3).scaled(g->domain().from_int(4)),
                       (gt - t3).scaled(g->domain().from_int(-2)),
                       g1 - t2.scaled(g->domain().from_int(6)) + t4.scaled(g->domain().from_int(4)));
  PolyMatrix tm_inv = mat2(tm(1, 1), -tm(0, 1), -tm(1, 0), tm(0, 0));
  PolyMatrix b_factor = upper(t2.scaled(g->domain().from_int(6)) - gt.scaled(g->domain().from_int(8))) * lower(t2);
  PolyMatrix b = b_factor * b_factor;
  PolyMatrix g_t = tm * gm * tm_inv * gm_inv;
  rec.keep("G(t)", g_t.reduced(qg));
  rec.keep("B(t)", b);
  {
    auto& st = rec.stage("v", "A(t) at x3 = -1 and the endpoints of B(t)");
    PolyMatrix id = PolyMatrix::identity(g, 2);
    st.checks.push_back(exact_check("A(t).at_x3_-1", at_minus_one(a), tm));
    st.checks.push_back(exact_check("A(t)^-1.at_x3_-1", at_minus_one(a_inv), tm_inv));
    st.checks.push_back(exact_check("A(1)^-1", specialize(tm_inv, {{"t", g1}}), -id));
    // B(t) from alpha = -6, beta = -1.
    Poly alpha = num(g, -6), beta = num(g, -1);
    Poly tt = gt * (g1 - gt);
    PolyMatrix b_general = upper(alpha * tt - gt.scaled(g->domain().from_int(2))) * lower(gt + beta * tt);
    st.checks.push_back(exact_check("B(t).alpha_beta", b_general * b_general, b));
    Division q_div = divide(b(1, 0), {tt.pow(2)});
    st.checks.push_back(poly_check("B(t).q_divisible", q_div.remainder));
    st.checks.push_back(exact_check("B(1)", specialize(b, {{"t", g1}}), -id));
    st.checks.push_back(exact_check("B(0)", specialize(b, {{"t", g0}}), id));
    st.checks.push_back(matrix_check("G(t)", at_minus_one(d), g_t, qg));
  }

  // (vi)
  {
    auto& st = rec.stage("vi", "det of the t-matrix is 1");
    st.checks.push_back(poly_check("det.t-matrix", tm.det() - g1));
    st.checks.push_back(poly_check("det.B(t)", b.det() - g1));
  }

  // (vii) G'(t) in the image of psi
  Ring q4 = quadrics::QuadricId(4).ring();
  PolyMatrix g_prime = (tm * gm * b * gm_inv).reduced(qg);
  rec.keep("G'(t)", g_prime);
  PolyMatrix pre(q4, 2, 2);
  bool pre_ok = true;
  {
    auto& st = rec.stage("vii", "G'(t) lies in the image of psi");
    Poly s = b(0, 0), p = b(0, 1), q = b(1, 0), rr = b(1, 1);
    PolyMatrix xc = PolyMatrix::column({gx1, gx2}), yr = PolyMatrix::row({gy1, gy2});
    PolyMatrix yc = PolyMatrix::column({-gy2, gy1}), xr = PolyMatrix::row({-gx2, gx1});
    PolyMatrix lemma = (xc * yr).scaled(s) + (xc * xr).scaled(p) + (yc * yr).scaled(q) + (yc * xr).scaled(rr);
    st.checks.push_back(exact_check("conjugation_lemma", gm * b * gm_inv, lemma));
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        Preimage img = psi_preimage(g_prime(i, j), q4);
        std::string id = "G'(t).entry(" + std::to_string(i) + "," + std::to_string(j) + ")";
        st.checks.push_back(make_check(id, img.value.has_value(), img.witness));
        if (img.value) {
          pre(i, j) = *img.value;
        } else {
          pre_ok = false;
        }
      }
    }
    // G(t) itself is not liftable; that is what B(t) repairs.
    bool g_liftable = true;
    PolyMatrix g_red = g_t.reduced(qg);
    for (std::size_t i = 0; i < 2 && g_liftable; ++i) {
      for (std::size_t j = 0; j < 2 && g_liftable; ++j) g_liftable = psi_preimage(g_red(i, j), q4).value.has_value();
    }
    st.checks.push_back(make_check("G(t).not_in_image", !g_liftable));
  }

  // (viii) the preimage over k[Q4]
  Quotient q4q = quadrics::quotient(quadrics::QuadricId(4), q4);
  {
    auto& st = rec.stage("viii", "psi-preimage: first row is (a', b') and det = 1");
    if (pre_ok) {
      log.preimage = pre;
      rec.keep("preimage", pre);
      Poly a_shown = parse(displays::polynomial("theorem2.a"), q4);
      Poly b_shown = parse(displays::polynomial("theorem2.b"), q4);
      st.checks.push_back(make_check("row.a'", format(pre(0, 0)) == format(a_shown),
                                     format(pre(0, 0) - a_shown)));
      st.checks.push_back(make_check("row.b'", format(pre(0, 1)) == format(b_shown),
                                     format(pre(0, 1) - b_shown)));
      st.checks.push_back(poly_check("det", q4q.reduce(pre.det() - num(q4, 1))));
    } else {
      st.checks.push_back(make_check("preimage", false, "G'(t) has an entry outside the image of psi"));
    }
  }

  // (ix) psi(preimage) == G'(t)
  {
    auto& st = rec.stage("ix", "psi(preimage) equals G'(t)");
    if (pre_ok) {
      Poly tt = gt * (g1 - gt);
      std::vector<Poly> psi = {gx1, gx2, gy1 * tt, gy2 * tt, gt};
      st.checks.push_back(matrix_check("psi(preimage)", substitute(pre, psi), g_prime, qg));
    } else {
      st.checks.push_back(make_check("psi(preimage)", false, "no preimage"));
    }
  }

  log.ok = true;
  for (const auto& st : log.stages) {
    if (st.ok()) continue;
    log.ok = false;
    for (const auto& c : st.checks) {
      if (!c.ok()) {
        log.failure = "stage " + st.id + " (" + st.title + "): " + c.id + (c.detail.empty() ? "" : ": " + c.detail);
        break;
      }
    }
    break;
  }
  return log;
}

}  // namespace quadhopf::hopf
