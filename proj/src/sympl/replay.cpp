#include "quadhopf/sympl/replay.hpp"

#include <algorithm>

#include "quadhopf/displays.hpp"
#include "quadhopf/quadrics/quadric.hpp"
#include "quadhopf/symcore/errors.hpp"
#include "quadhopf/sympl/symplectic.hpp"

namespace quadhopf::sympl {

std::string_view to_string(StepKind kind) {
  switch (kind) {
    case StepKind::change_basis: return "change-basis";
    case StepKind::conjugate_diag_E: return "conjugate-diag-E";
    case StepKind::left_shear: return "left-shear";
    case StepKind::right_shear: return "right-shear";
    case StepKind::extract_sp: return "extract-sp";
  }
  return "?";
}

std::optional<PolyMatrix::Mismatch> embedded_pattern_mismatch(const PolyMatrix& m, std::size_t i,
                                                              const Quotient& q) {
  std::size_t n = m.rows() / 2;
  for (std::size_t k : {i, n + i}) {
    for (std::size_t j = 0; j < m.rows(); ++j) {
      Poly want = Poly::constant(m.ring(), j == k ? 1 : 0);
      for (auto [r, c] : {std::pair{k, j}, std::pair{j, k}}) {
        Poly diff = q.reduce(m(r, c) - want);
        if (!diff.is_zero()) return PolyMatrix::Mismatch{r, c, diff};
      }
    }
  }
  return std::nullopt;
}

namespace {

class Replayer {
 public:
  explicit Replayer(ReplayVariant variant)
      : ring_(quadrics::QuadricId::even(2).ring()), q_(quadrics::quotient(quadrics::QuadricId::even(2), ring_)) {
    out_.variant = variant;
  }

  ReductionReplay run() {
    PolyMatrix u = build_U(ring_);
    if (!compare("U", u, shown("U"))) return finish();
    if (auto w = is_symplectic(u, hyperbolic_form(ring_, 4), q_); !w.ok) {
      return fail("U is not symplectic for H+H+H+H", w.witness);
    }

    PolyMatrix cur = u;
    if (!step("M1", StepKind::change_basis, cur, conjugate_by_S(cur), {{"S", change_basis_S(ring_)}}, 4, "M1", cur)) return finish();

    PolyMatrix d1 = elem_diag(shown("E1"), q_), d2 = elem_diag(shown("E2"), q_);
    if (!step("after_E1E2", StepKind::conjugate_diag_E, cur, d1.inverse(q_) * cur * d1 * d2,
              {{"E1", shown("E1")}, {"E2", shown("E2")}}, 4, "after_E1E2", cur)) return finish();
    if (!step("after_S1", StepKind::right_shear, cur, cur * elem_shear(shown("S1"), ShearSide::upper),
              {{"S1", shown("S1")}}, 4, "after_S1", cur)) return finish();
    if (!extract("M2", cur, 3, "M2", cur)) return finish();

    PolyMatrix d3 = elem_diag(shown("E3"), q_), d4 = elem_diag(shown("E4"), q_);
    if (!step("after_E3E4", StepKind::conjugate_diag_E, cur, d3.inverse(q_) * cur * d3 * d4,
              {{"E3", shown("E3")}, {"E4", shown("E4")}}, 3, nullptr, cur)) return finish();
    if (!step("after_S2", StepKind::right_shear, cur, cur * elem_shear(shown("S2"), ShearSide::upper),
              {{"S2", shown("S2")}}, 3, nullptr, cur)) return finish();
    if (!extract("M3", cur, 2, "M3", cur)) return finish();

    if (!step("after_S3", StepKind::left_shear, cur, elem_shear(shown("S3"), ShearSide::lower) * cur,
              {{"S3", shown("S3")}}, 2, nullptr, cur)) return finish();
    if (!step("after_S4", StepKind::right_shear, cur, cur * elem_shear(shown("S4"), ShearSide::upper),
              {{"S4", shown("S4")}}, 2, nullptr, cur)) return finish();
    if (!step("M4", StepKind::conjugate_diag_E, cur, elem_diag(shown("E5"), q_) * cur * elem_diag(shown("E6"), q_),
              {{"E5", shown("E5")}, {"E6", shown("E6")}}, 2, "M4", cur)) return finish();

    PolyMatrix e7 = shown("E7"), e8 = shown("E8");
    if (out_.variant == ReplayVariant::corrected) {
      e7 = PolyMatrix::parse(ring_, {{"1", "0"}, {"-y1 - 2*y2", "1"}});
      e8 = PolyMatrix::parse(ring_, {{"1", "4*x2*z + 4*x1 - 4*x2"}, {"0", "1"}});
    }
    if (!step("N", StepKind::conjugate_diag_E, cur, elem_diag(e7, q_) * cur * elem_diag(e8, q_),
              {{"E7", e7}, {"E8", e8}}, 2, nullptr, cur)) return finish();
    for (auto [r, c, v] : {std::tuple{2, 3, 0}, std::tuple{3, 2, 0}, std::tuple{3, 3, 1}}) {
      Poly diff = q_.reduce(cur(r, c) - Poly::constant(ring_, v));
      if (!diff.is_zero()) {
        return fail("N does not have the block shape needed for S5 and S6",
                    PolyMatrix::Mismatch{std::size_t(r), std::size_t(c), diff});
      }
    }

    PolyMatrix s5(ring_, 2, 2), s6(ring_, 2, 2);
    s5(0, 1) = s5(1, 0) = -cur(0, 3);
    s5(1, 1) = -cur(1, 3);
    s6(0, 1) = s6(1, 0) = -cur(3, 0);
    s6(1, 1) = -cur(3, 1);
    if (!step("after_S5", StepKind::left_shear, cur, elem_shear(s5, ShearSide::upper) * cur,
              {{"S5", s5}}, 2, nullptr, cur)) return finish();
    if (!step("after_S6", StepKind::right_shear, cur, cur * elem_shear(s6, ShearSide::lower),
              {{"S6", s6}}, 2, nullptr, cur)) return finish();
    if (!extract("final", cur, 1, nullptr, cur)) return finish();

    PolyMatrix expected(ring_, 2, 2);
    const char* keys[4] = {"theorem1.a", "theorem1.b", "theorem1.c", "theorem1.d"};
    for (std::size_t k = 0; k < 4; ++k) expected(k / 2, k % 2) = parse(displays::polynomial(keys[k]), ring_);
    if (auto w = cur.first_mismatch(expected, q_)) {
      out_.steps.back().matches_display = false;
      return fail("final matrix differs from (a b; c d)", w);
    }
    out_.steps.back().matches_display = true;
    out_.verbatim = cur == expected;
    out_.final = cur;
    out_.ok = true;
    return finish();
  }

 private:
  PolyMatrix shown(const char* key) const { return PolyMatrix::parse(ring_, displays::matrix(key)); }

  bool compare(const std::string& what, const PolyMatrix& got, const PolyMatrix& want) {
    if (auto w = got.first_mismatch(want, q_)) {
      fail(what + " differs from its display", w);
      return false;
    }
    return true;
  }

  // Records one step. `next` receives the displayed representative when a
  // display exists and the normal form otherwise.
  bool step(std::string label, StepKind kind, const PolyMatrix& before, const PolyMatrix& result,
            std::vector<std::pair<std::string, PolyMatrix>> payload, std::size_t rank,
            const char* display, PolyMatrix& next) {
    ReductionStep s;
    s.label = std::move(label);
    s.kind = kind;
    s.payload = std::move(payload);
    s.before_hash = before.checksum();
    PolyMatrix reduced = result.reduced(q_);
    s.result_hash = reduced.checksum();
    s.form_rank = rank;
    auto sym = is_symplectic(reduced, standard_form(ring_, rank), q_);
    s.symplectic = sym.ok;
    std::optional<PolyMatrix> want;
    if (display) {
      want = shown(display);
      s.matches_display = reduced.equivalent(*want, q_);
    }
    out_.steps.push_back(s);
    if (!sym.ok) {
      fail(out_.steps.back().label + " is not symplectic for J" + std::to_string(rank), sym.witness);
      return false;
    }
    if (want && !compare(out_.steps.back().label, reduced, *want)) return false;
    next = want ? *want : reduced;
    return true;
  }

  bool extract(std::string label, const PolyMatrix& before, std::size_t index, const char* display,
               PolyMatrix& next) {
    std::size_t n = before.rows() / 2;
    if (auto w = embedded_pattern_mismatch(before, index, q_)) {
      fail("indices " + std::to_string(index) + " and " + std::to_string(n + index) +
               " do not carry the embedding pattern before " + label,
           w);
      return false;
    }
    return step(std::move(label), StepKind::extract_sp, before, before.drop({index, n + index}), {}, n - 1,
                display, next);
  }

  ReductionReplay fail(std::string what, std::optional<PolyMatrix::Mismatch> witness) {
    out_.ok = false;
    out_.failure = std::move(what);
    out_.witness = std::move(witness);
    return out_;
  }

  ReductionReplay finish() { return out_; }

  Ring ring_;
  Quotient q_;
  ReductionReplay out_;
};

}  // namespace

ReductionReplay reduction_replay(ReplayVariant variant) { return Replayer(variant).run(); }

}  // namespace quadhopf::sympl
