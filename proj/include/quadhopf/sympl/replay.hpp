#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quadhopf/sympl/matrix.hpp"

namespace quadhopf::sympl {

enum class StepKind { change_basis, conjugate_diag_E, left_shear, right_shear, extract_sp };
std::string_view to_string(StepKind kind);

struct ReductionStep {
  std::string label;
  StepKind kind;
  std::vector<std::pair<std::string, PolyMatrix>> payload;
  std::string before_hash;
  std::string result_hash;  // checksum of the normal form of the result
  std::size_t form_rank = 0;  // the result is checked against J_n with this n
  bool symplectic = false;
  std::optional<bool> matches_display;  // empty when nothing is displayed
};

/// `corrected` eliminates the two corner entries of M4 with
/// E7 = (1 0; -(y1+2y2) 1) and E8 = (1 4x2z+4x1-4x2; 0 1). `as_printed`
/// reuses E5 and E6 and is expected to fail the N block check.
enum class ReplayVariant { corrected, as_printed };

struct ReductionReplay {
  ReplayVariant variant = ReplayVariant::corrected;
  std::vector<ReductionStep> steps;
  std::optional<PolyMatrix> final;  // (a b; c d) once the replay completes
  bool ok = false;
  bool verbatim = false;  // final equals the displayed entries term by term
  std::string failure;    // first divergence, empty on success
  std::optional<PolyMatrix::Mismatch> witness;
};

/// Reduces U in Sp8(k[Q4]) to the Sp2 matrix of the first exotic map. Every
/// displayed intermediate is compared modulo h2 and the replay stops at the
/// first mismatch; it then continues from the displayed representative.
ReductionReplay reduction_replay(ReplayVariant variant = ReplayVariant::corrected);

/// Checks that indices i and n+i of a 2n x 2n matrix carry the identity
/// pattern that embed_sp inserts, modulo q.
std::optional<PolyMatrix::Mismatch> embedded_pattern_mismatch(const PolyMatrix& m, std::size_t i,
                                                              const Quotient& q);

}  // namespace quadhopf::sympl
