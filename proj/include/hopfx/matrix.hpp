#pragma once

// Dense matrices over F_p and the row-reduction kernel everything else
// is built on. Vectors are plain std::vector<Fp>; matrices act on column
// vectors.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hopfx/error.hpp"
#include "hopfx/field.hpp"

namespace hopfx {

using Vector = std::vector<Fp>;

inline bool is_zero(std::span<const Fp> v) {
  return std::all_of(v.begin(), v.end(), [](Fp x) { return x == 0; });
}

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, 0);
  v[i] = 1;
  return v;
}

inline void axpy(const PrimeField& f, Fp a, std::span<const Fp> x,
                 std::span<Fp> y) {
  if (a == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) y[i] = f.fma(y[i], a, x[i]);
  }
}

inline Vector add(const PrimeField& f, const Vector& x, const Vector& y) {
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = f.add(x[i], y[i]);
  return r;
}

inline Vector sub(const PrimeField& f, const Vector& x, const Vector& y) {
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = f.sub(x[i], y[i]);
  return r;
}

inline Vector scale(const PrimeField& f, Fp a, Vector x) {
  for (auto& v : x) v = f.mul(a, v);
  return x;
}

inline Fp dot(const PrimeField& f, std::span<const Fp> x,
              std::span<const Fp> y) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc = (acc + std::uint64_t{x[i]} * y[i]) % f.p();
  }
  return static_cast<Fp>(acc);
}

class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(PrimeField field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Rows given as signed integers; reduced mod p.
  static Matrix from_rows(PrimeField field,
                          const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) fail(ErrorCode::DimensionMismatch, "ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = field.reduce(rows[i][j]);
    }
    return m;
  }

  static Matrix from_vectors_as_rows(PrimeField field, std::size_t cols,
                                     const std::vector<Vector>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) fail(ErrorCode::DimensionMismatch, "row length");
      std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
  }

  static Matrix from_columns(PrimeField field, std::size_t rows,
                             const std::vector<Vector>& cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) fail(ErrorCode::DimensionMismatch, "column length");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Fp& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Fp operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Fp> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Fp> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
  }
  Vector column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
  }
  void set_column(std::size_t c, std::span<const Fp> v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = v[i];
  }

  const std::vector<Fp>& data() const noexcept { return data_; }

  bool is_zero() const { return hopfx::is_zero(data_); }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vector apply(std::span<const Fp> v) const {
    if (v.size() != cols_) fail(ErrorCode::DimensionMismatch, "apply");
    Vector out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = dot(field_, row(i), v);
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i)
      data_[i] = field_.add(data_[i], o.data_[i]);
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i)
      data_[i] = field_.sub(data_[i], o.data_[i]);
    return *this;
  }
  /// this += a * o
  void add_scaled(Fp a, const Matrix& o) {
    check_same_shape(o);
    if (a == 0) return;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (o.data_[i] != 0) data_[i] = field_.fma(data_[i], a, o.data_[i]);
  }
  Matrix scaled(Fp a) const {
    Matrix m = *this;
    for (auto& x : m.data_) x = field_.mul(a, x);
    return m;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::DimensionMismatch, "matrix product");
    const auto& f = a.field_;
    const std::uint64_t p = f.p();
    const std::uint64_t pm1 = p - 1;
    // How many products p-1 squared fit in a 64-bit accumulator.
    const std::uint64_t headroom =
        pm1 == 0 ? std::numeric_limits<std::uint64_t>::max()
                 : (std::numeric_limits<std::uint64_t>::max() - pm1) / (pm1 * pm1);
    Matrix c(f, a.rows_, b.cols_);
    std::vector<std::uint64_t> acc(b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      std::uint64_t pending = 0;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const std::uint64_t x = a(i, k);
        if (x == 0) continue;
        const Fp* brow = b.data_.data() + k * b.cols_;
        for (std::size_t j = 0; j < b.cols_; ++j) acc[j] += x * brow[j];
        if (++pending >= headroom) {
          for (auto& v : acc) v %= p;
          pending = 1;
        }
      }
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = static_cast<Fp>(acc[j] % p);
    }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

  /// Lexicographic on (rows, cols, entries).
  friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

  Matrix vstack(const Matrix& below) const {
    if (below.cols_ != cols_) fail(ErrorCode::DimensionMismatch, "vstack");
    Matrix m(field_, rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(),
              m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return m;
  }

  Matrix hstack(const Matrix& right) const {
    if (right.rows_ != rows_) fail(ErrorCode::DimensionMismatch, "hstack");
    Matrix m(field_, rows_, cols_ + right.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::copy(row(i).begin(), row(i).end(), m.row(i).begin());
      std::copy(right.row(i).begin(), right.row(i).end(),
                m.row(i).begin() + static_cast<std::ptrdiff_t>(cols_));
    }
    return m;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr,
               std::size_t nc) const {
    Matrix m(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (o.rows_ != rows_ || o.cols_ != cols_ || !(o.field_ == field_))
      fail(ErrorCode::DimensionMismatch, "shape mismatch");
  }

  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Fp> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form; pivots are normalised to 1 and cleared above
/// and below. The result is the unique canonical form of the row space.
inline RrefResult rref(Matrix m) {
  const auto& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) std::swap_ranges(m.row(piv).begin(), m.row(piv).end(), m.row(r).begin());
    const Fp inv = f.inv(m(r, c));
    for (auto& x : m.row(r)) x = f.mul(x, inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      axpy(f, f.neg(m(i, c)), m.row(r), m.row(i));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), r, std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// Basis (as rows) of the right kernel {x : m x = 0}, in RREF.
inline Matrix kernel_basis(const Matrix& m) {
  const auto& f = m.field();
  auto [red, rk, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < rk; ++i) v[pivots[i]] = f.neg(red(i, free));
    basis.push_back(std::move(v));
  }
  return rref(Matrix::from_vectors_as_rows(f, m.cols(), basis)).reduced.block(
      0, 0, basis.size(), m.cols());
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.square()) fail(ErrorCode::DimensionMismatch, "inverse of non-square");
  const std::size_t n = m.rows();
  auto [red, rk, pivots] = rref(m.hstack(Matrix::identity(m.field(), n)));
  if (rk < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  return red.block(0, n, n, n);
}

inline Fp determinant(Matrix m) {
  if (!m.square()) fail(ErrorCode::DimensionMismatch, "determinant of non-square");
  const auto& f = m.field();
  Fp det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap_ranges(m.row(piv).begin(), m.row(piv).end(), m.row(c).begin());
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    const Fp inv = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      axpy(f, f.neg(f.mul(m(i, c), inv)), m.row(c), m.row(i));
    }
  }
  return det;
}

}  // namespace hopfx
