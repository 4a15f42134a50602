#pragma once

#include <string>
#include <vector>

#include "quadhopf/quadrics/morphism.hpp"
#include "quadhopf/report.hpp"

namespace quadhopf::bundles {

/// Which relations cut out rank 1 among idempotents: all 2x2 minors, or the
/// characteristic-0 shortcut trace(P) = 1.
enum class RankCondition { minors, trace };

/// k[J^n]: variables x_ij (1 <= i, j <= n + 1), row-major.
struct JouanolouRing {
  int n = 1;
  Ring ring;
  PolyMatrix P;  // the generic matrix (x_ij)

  /// Entries of P^2 - P, then the rank condition. Built on each call.
  std::vector<Poly> relations(RankCondition rank = RankCondition::minors) const;
  /// (n+1)^2 + C(n+1, 2)^2 for minors, (n+1)^2 + 1 for trace.
  std::size_t relation_count(RankCondition rank = RankCondition::minors) const;
};
JouanolouRing jouanolou(int n, Domain domain = Domain::rationals());

/// phi_i: A^{2n} -> J^n, P = column(a_1, .., 1 - sum a_j b_j, .., a_n) times
/// row(b_1, .., 1, .., b_n), with the special entries at position i.
struct Chart {
  int n = 1;
  int i = 1;
  Ring free_ring;                // a1..an, b1..bn
  std::vector<Poly> column;      // length n + 1
  std::vector<Poly> row;         // length n + 1
  std::vector<Poly> embedding;   // image of x_jk, row-major

  PolyMatrix matrix() const { return PolyMatrix::column(column) * PolyMatrix::row(row); }
  /// p over k[J^n] pulled back to the chart.
  Poly pull(const Poly& p) const { return substitute(p, embedding); }
  PolyMatrix pull(const PolyMatrix& m) const { return substitute(m, embedding); }
};
/// Throws InvalidArgument unless 1 <= i <= n + 1.
Chart chart(int n, int i, Domain domain = Domain::rationals());
/// Every relation pulls back to 0, and row . column = 1.
std::vector<Check> verify_chart(const JouanolouRing& j, const Chart& c, RankCondition rank = RankCondition::minors);

/// pi_n: J^n -> Q_2n, x_i -> x_(n+1)i, y_i -> x_i(n+1), z -> x_11 + .. + x_nn.
struct CollapseMap {
  int n = 1;
  quadrics::QuadricId target{2};
  JouanolouRing source;
  std::vector<Poly> images;  // in target variable order x.., y.., z
};
CollapseMap pi_n(int n, Domain domain = Domain::rationals());
/// The target relation pulled back along pi_n and then along every chart is
/// the zero polynomial. For n = 1 the membership is also certified by a
/// Groebner computation over the full relation set.
std::vector<Check> verify_pi_n(const CollapseMap& pi);

enum class ExoticMap { theorem1, theorem2 };
std::string_view to_string(ExoticMap which);
/// Throws InvalidArgument for other names.
ExoticMap parse_exotic_map(std::string_view name);

struct ChartReport {
  int chart = 0;
  std::vector<Check> checks;
};

struct BundleIdempotent {
  ExoticMap which = ExoticMap::theorem1;
  PolyMatrix P;                         // 3x3 over k[J^3]
  std::vector<std::string> provenance;  // construction chain
  std::vector<Check> checks;            // checks before the chart stage
  std::vector<ChartReport> charts;

  bool ok() const;
};

struct BundleOptions {
  unsigned jobs = 1;
  /// Entries above this many terms use the outer-product factorization for
  /// P^2 - P and the minors instead of literal products.
  std::size_t literal_limit = 4000;
};
/// J^3 -> Q6 -> Q5 -> BSL2: suspend the exotic map, pull back M(P), then
/// substitute pi_3. Checks on each of the four charts: every entry of
/// P^2 - P vanishes, trace 2, and I - P has rank 1 (all 2x2 minors vanish).
BundleIdempotent build_j3_bundle(ExoticMap which, const BundleOptions& options = {});

}  // namespace quadhopf::bundles
