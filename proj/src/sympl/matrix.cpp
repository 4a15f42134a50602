#include "quadhopf/sympl/matrix.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "quadhopf/symcore/errors.hpp"

namespace quadhopf {

PolyMatrix::PolyMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, Poly(ring_)) {}

PolyMatrix PolyMatrix::identity(Ring ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::constant(ring, 1);
  return m;
}

PolyMatrix PolyMatrix::from_ints(Ring ring, const std::vector<std::vector<long>>& values) {
  std::size_t r = values.size();
  std::size_t c = r ? values[0].size() : 0;
  PolyMatrix m(ring, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (values[i].size() != c) throw InvalidArgument("ragged matrix literal");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Poly::constant(ring, values[i][j]);
  }
  return m;
}

PolyMatrix PolyMatrix::parse(Ring ring, const std::vector<std::vector<std::string>>& entries) {
  std::size_t r = entries.size();
  std::size_t c = r ? entries[0].size() : 0;
  PolyMatrix m(ring, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (entries[i].size() != c) throw InvalidArgument("ragged matrix literal");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = quadhopf::parse(entries[i][j], ring);
  }
  return m;
}

PolyMatrix PolyMatrix::column(const std::vector<Poly>& entries) {
  if (entries.empty()) throw InvalidArgument("empty column");
  PolyMatrix m(entries[0].ring(), entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
  return m;
}

PolyMatrix PolyMatrix::row(const std::vector<Poly>& entries) {
  return column(entries).transpose();
}

std::vector<Poly> PolyMatrix::row_entries(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Poly> PolyMatrix::column_entries(std::size_t j) const {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

void PolyMatrix::require_shape(const PolyMatrix& other, const char* op) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw InvalidArgument(std::string("matrix shape mismatch in ") + op);
  }
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

PolyMatrix PolyMatrix::operator-() const {
  return map([](const Poly& p) { return -p; });
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  a.require_shape(b, "+");
  PolyMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  a.require_shape(b, "-");
  PolyMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix shape mismatch in *");
  PolyMatrix out(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      PolyBuilder acc(a.ring_);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Poly& x = a(i, k);
        const Poly& y = b(k, j);
        if (x.is_zero() || y.is_zero()) continue;
        acc.add(x * y);
      }
      out(i, j) = acc.build();
    }
  }
  return out;
}

PolyMatrix PolyMatrix::scaled(const Poly& c) const {
  return map([&](const Poly& p) { return p * c; });
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows,
                                 const std::vector<std::size_t>& cols) const {
  PolyMatrix out(ring_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (rows[i] >= rows_ || cols[j] >= cols_) throw InvalidArgument("submatrix index out of range");
      out(i, j) = (*this)(rows[i], cols[j]);
    }
  }
  return out;
}

PolyMatrix PolyMatrix::drop(const std::vector<std::size_t>& indices) const {
  std::vector<std::size_t> keep_r, keep_c;
  auto dropped = [&](std::size_t i) {
    return std::find(indices.begin(), indices.end(), i) != indices.end();
  };
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!dropped(i)) keep_r.push_back(i);
  }
  for (std::size_t j = 0; j < cols_; ++j) {
    if (!dropped(j)) keep_c.push_back(j);
  }
  return submatrix(keep_r, keep_c);
}

Poly PolyMatrix::trace() const {
  if (!is_square()) throw InvalidArgument("trace of a non-square matrix");
  Poly t(ring_);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Poly PolyMatrix::det() const {
  if (!is_square()) throw InvalidArgument("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return Poly::constant(ring_, 1);
  if (n > 20) throw InvalidArgument("determinant size too large");
  // minors[S] = det(rows S, columns 0..|S|-1), built column by column.
  std::unordered_map<std::uint32_t, Poly> minors;
  minors.emplace(0u, Poly::constant(ring_, 1));
  for (std::size_t k = 0; k < n; ++k) {
    std::unordered_map<std::uint32_t, Poly> next;
    for (const auto& [set, minor] : minors) {
      if (minor.is_zero()) continue;
      for (std::size_t r = 0; r < n; ++r) {
        std::uint32_t bit = 1u << r;
        if (set & bit) continue;
        const Poly& entry = (*this)(r, k);
        if (entry.is_zero()) continue;
        std::uint32_t grown = set | bit;
        // Position of r inside the grown set decides the cofactor sign.
        int pos = std::popcount(grown & (bit - 1));
        Poly term = entry * minor;
        if ((pos + static_cast<int>(k)) % 2) term = -term;
        auto [it, inserted] = next.try_emplace(grown, Poly(ring_));
        it->second += term;
      }
    }
    minors = std::move(next);
  }
  auto it = minors.find((n == 32) ? 0xffffffffu : ((1u << n) - 1));
  return it == minors.end() ? Poly(ring_) : it->second;
}

namespace {

PolyMatrix adjugate(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  PolyMatrix adj(m.ring(), n, n);
  if (n == 1) {
    adj(0, 0) = Poly::constant(m.ring(), 1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> rows, cols;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
      }
      Poly c = m.submatrix(rows, cols).det();
      adj(i, j) = (i + j) % 2 ? -c : c;
    }
  }
  return adj;
}

}  // namespace

PolyMatrix PolyMatrix::inverse(const Quotient& q) const {
  if (!is_square()) throw InvalidArgument("inverse of a non-square matrix");
  Poly d = q.reduce(det());
  if (d.is_zero() || !d.is_constant()) {
    throw NotInvertible("determinant is not a unit constant: " + format(d));
  }
  Scalar inv = ring_->domain().inv(d.leading_coeff());
  return adjugate(*this).map([&](const Poly& p) { return q.reduce(p.scaled(inv)); });
}

PolyMatrix PolyMatrix::inverse() const {
  return inverse(Quotient{ring_, {}});
}

PolyMatrix PolyMatrix::reduced(const Quotient& q) const {
  return map([&](const Poly& p) { return q.reduce(p); });
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Poly& p) { return p.is_zero(); });
}

std::optional<PolyMatrix::Mismatch> PolyMatrix::first_mismatch(const PolyMatrix& other,
                                                               const Quotient& q) const {
  require_shape(other, "comparison");
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      Poly diff = q.reduce((*this)(i, j) - other(i, j));
      if (!diff.is_zero()) return Mismatch{i, j, diff};
    }
  }
  return std::nullopt;
}

std::vector<std::vector<std::string>> PolyMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(format((*this)(i, j)));
  }
  return out;
}

std::string PolyMatrix::checksum() const {
  std::string text;
  for (const auto& p : data_) {
    text += format(p);
    text += ';';
  }
  return quadhopf::checksum(text);
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

PolyMatrix block_diag(const std::vector<PolyMatrix>& blocks) {
  if (blocks.empty()) throw InvalidArgument("block_diag of nothing");
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  PolyMatrix out(blocks[0].ring(), r, c);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
    }
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

PolyMatrix block2x2(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c,
                    const PolyMatrix& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() ||
      b.cols() != d.cols()) {
    throw InvalidArgument("incompatible block sizes");
  }
  PolyMatrix out(a.ring(), a.rows() + c.rows(), a.cols() + b.cols());
  auto put = [&](const PolyMatrix& m, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) out(r0 + i, c0 + j) = m(i, j);
    }
  };
  put(a, 0, 0);
  put(b, 0, a.cols());
  put(c, a.rows(), 0);
  put(d, a.rows(), a.cols());
  return out;
}

PolyMatrix substitute(const PolyMatrix& m, const std::vector<Poly>& images) {
  return m.map([&](const Poly& p) { return substitute(p, images); });
}

PolyMatrix rebase(const PolyMatrix& m, const Ring& target) {
  PolyMatrix out = m.map([&](const Poly& p) { return rebase(p, target); });
  return out;
}

}  // namespace quadhopf

namespace quadhopf {

IdempotentCheck check_idempotent(const PolyMatrix& p, const Quotient& q, const Poly& trace) {
  if (!p.is_square()) throw InvalidArgument("check_idempotent needs a square matrix");
  IdempotentCheck out;
  out.square = (p * p).first_mismatch(p, q);
  out.trace_residue = q.reduce(p.trace() - trace);
  return out;
}

}  // namespace quadhopf
