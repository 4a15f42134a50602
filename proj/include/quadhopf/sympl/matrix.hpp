#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadhopf/symcore/quotient.hpp"

namespace quadhopf {

/// Dense matrix of polynomials over a single ring.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(Ring ring, std::size_t rows, std::size_t cols);

  static PolyMatrix identity(Ring ring, std::size_t n);
  static PolyMatrix from_ints(Ring ring, const std::vector<std::vector<long>>& values);
  static PolyMatrix parse(Ring ring, const std::vector<std::vector<std::string>>& entries);
  static PolyMatrix column(const std::vector<Poly>& entries);
  static PolyMatrix row(const std::vector<Poly>& entries);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Poly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Poly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::vector<Poly> row_entries(std::size_t i) const;
  std::vector<Poly> column_entries(std::size_t j) const;

  PolyMatrix transpose() const;
  PolyMatrix operator-() const;
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  PolyMatrix scaled(const Poly& c) const;

  /// Keeps the listed rows and columns (0-based, in the given order).
  PolyMatrix submatrix(const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) const;
  /// Drops the listed indices from both rows and columns.
  PolyMatrix drop(const std::vector<std::size_t>& indices) const;

  Poly trace() const;
  /// Determinant by expansion over row subsets, O(2^n n) products.
  Poly det() const;
  /// Adjugate inverse; requires det to reduce to a nonzero constant in q.
  /// Throws NotInvertible otherwise.
  PolyMatrix inverse(const Quotient& q) const;
  PolyMatrix inverse() const;

  PolyMatrix reduced(const Quotient& q) const;
  bool is_zero() const;
  /// First entry (row-major) where a and b differ modulo q.
  struct Mismatch {
    std::size_t row, col;
    Poly difference;  // normal form of a(i,j) - b(i,j)
  };
  std::optional<Mismatch> first_mismatch(const PolyMatrix& other, const Quotient& q) const;
  bool equivalent(const PolyMatrix& other, const Quotient& q) const {
    return !first_mismatch(other, q);
  }

  /// Applies p -> f(p) to every entry.
  template <typename F>
  PolyMatrix map(F&& f) const {
    PolyMatrix out;
    out.rows_ = rows_;
    out.cols_ = cols_;
    out.data_.reserve(data_.size());
    for (const auto& p : data_) out.data_.push_back(f(p));
    out.ring_ = out.data_.empty() ? ring_ : out.data_.front().ring();
    for (auto& p : out.data_) {
      if (!p.ring()) p = Poly(out.ring_);
    }
    return out;
  }

  std::vector<std::vector<std::string>> to_strings() const;
  /// FNV-1a over the canonical strings, row-major, ';'-separated.
  std::string checksum() const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  void require_shape(const PolyMatrix& other, const char* op) const;
  Ring ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Poly> data_;
};

/// Block constructors; blocks must agree on ring and compatible sizes.
PolyMatrix block_diag(const std::vector<PolyMatrix>& blocks);
PolyMatrix block2x2(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c,
                    const PolyMatrix& d);
PolyMatrix substitute(const PolyMatrix& m, const std::vector<Poly>& images);
PolyMatrix rebase(const PolyMatrix& m, const Ring& target);

struct IdempotentCheck {
  std::optional<PolyMatrix::Mismatch> square;  // first entry of P^2 - P not in q
  Poly trace_residue;                          // normal form of trace(P) - trace
  bool ok() const { return !square && trace_residue.is_zero(); }
};
/// P^2 == P and trace(P) == trace modulo q.
IdempotentCheck check_idempotent(const PolyMatrix& p, const Quotient& q, const Poly& trace);

}  // namespace quadhopf
