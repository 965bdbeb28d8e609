#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hopfx/error.hpp"
#include "hopfx/field.hpp"
#include "hopfx/matrix.hpp"

namespace hopfx {

/// A subspace of F_p^n held as its RREF basis. Two subspaces are equal iff
/// their bases are bit-identical, so ideal equality, orbit membership and
/// fiber grouping all reduce to comparing matrices.
class Subspace {
 public:
  Subspace(PrimeField field, std::size_t ambient)
      : field_(field), ambient_(ambient), basis_(field, 0, ambient) {}

  static Subspace zero(PrimeField field, std::size_t ambient) {
    return Subspace(field, ambient);
  }
  static Subspace whole(PrimeField field, std::size_t ambient) {
    return from_rows(Matrix::identity(field, ambient));
  }

  /// Row space of `rows`.
  static Subspace from_rows(const Matrix& rows) {
    auto [red, rk, pivots] = rref(rows);
    Subspace s(rows.field(), rows.cols());
    s.basis_ = red.block(0, 0, rk, rows.cols());
    s.pivots_ = std::move(pivots);
    return s;
  }

  static Subspace span(PrimeField field, std::size_t ambient,
                       const std::vector<Vector>& vectors) {
    return from_rows(Matrix::from_vectors_as_rows(field, ambient, vectors));
  }

  const PrimeField& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_whole() const noexcept { return dim() == ambient_; }

  /// RREF basis, one vector per row, no zero rows.
  const Matrix& basis() const noexcept { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }
  std::vector<Vector> basis_vectors() const {
    std::vector<Vector> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
    return out;
  }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// v minus its projection along the pivot coordinates; zero iff v is in
  /// the subspace. The residual vanishes on every pivot column.
  Vector residual(Vector v) const {
    check_vector(v);
    for (std::size_t r = 0; r < dim(); ++r) {
      const Fp c = v[pivots_[r]];
      if (c != 0) axpy(field_, field_.neg(c), basis_.row(r), v);
    }
    return v;
  }

  bool contains(const Vector& v) const { return hopfx::is_zero(residual(v)); }

  bool contains(const Subspace& other) const {
    check_same(other);
    for (std::size_t r = 0; r < other.dim(); ++r) {
      if (!contains(other.basis_vector(r))) return false;
    }
    return true;
  }

  /// Coordinates of v in the RREF basis, or nullopt when v is outside.
  std::optional<Vector> coordinates(const Vector& v) const {
    if (!contains(v)) return std::nullopt;
    Vector c(dim());
    for (std::size_t r = 0; r < dim(); ++r) c[r] = v[pivots_[r]];
    return c;
  }

  Vector combine(std::span<const Fp> coords) const {
    Vector v(ambient_, 0);
    for (std::size_t r = 0; r < dim(); ++r) axpy(field_, coords[r], basis_.row(r), v);
    return v;
  }

  /// Image under a linear map given as an (m x ambient) matrix.
  Subspace image(const Matrix& map) const {
    if (map.cols() != ambient_) fail(ErrorCode::DimensionMismatch, "image");
    return from_rows(basis_ * map.transpose());
  }

  friend Subspace sum(const Subspace& a, const Subspace& b) {
    a.check_same(b);
    return from_rows(a.basis_.vstack(b.basis_));
  }

  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    a.check_same(b);
    if (a.is_zero() || b.is_zero()) return zero(a.field_, a.ambient_);
    // x U = y V  <=>  [U^T | -V^T] (x, y) = 0
    const Matrix stacked = a.basis_.transpose().hstack(b.basis_.transpose().scaled(
        a.field_.neg(1)));
    const Matrix ker = kernel_basis(stacked);
    std::vector<Vector> vectors;
    for (std::size_t r = 0; r < ker.rows(); ++r) {
      auto row = ker.row(r);
      vectors.push_back(a.combine(row.first(a.dim())));
    }
    return span(a.field_, a.ambient_, vectors);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  /// Canonical order: ambient, dimension, then basis entries.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
    if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
    return a.basis_ <=> b.basis_;
  }

 private:
  void check_vector(const Vector& v) const {
    if (v.size() != ambient_) fail(ErrorCode::DimensionMismatch, "vector length");
  }
  void check_same(const Subspace& o) const {
    if (o.ambient_ != ambient_ || !(o.field_ == field_))
      fail(ErrorCode::DimensionMismatch, "subspaces live in different spaces");
  }

  PrimeField field_;
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Incrementally grown echelon basis. Used for spinning and saturation
/// where vectors arrive one at a time.
class EchelonBasis {
 public:
  EchelonBasis(PrimeField field, std::size_t ambient)
      : field_(field), ambient_(ambient) {}

  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  bool full() const noexcept { return rows_.size() == ambient_; }

  Vector reduce(Vector v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Fp c = v[pivots_[r]];
      if (c != 0) axpy(field_, field_.neg(c), rows_[r], v);
    }
    return v;
  }

  bool contains(const Vector& v) const { return hopfx::is_zero(reduce(v)); }

  /// Adds v if it is independent; returns whether the span grew.
  bool insert(const Vector& v) {
    if (v.size() != ambient_) fail(ErrorCode::DimensionMismatch, "echelon insert");
    Vector w = reduce(v);
    std::size_t piv = 0;
    while (piv < ambient_ && w[piv] == 0) ++piv;
    if (piv == ambient_) return false;
    const Fp inv = field_.inv(w[piv]);
    for (auto& x : w) x = field_.mul(x, inv);
    rows_.push_back(std::move(w));
    pivots_.push_back(piv);
    return true;
  }

  Subspace to_subspace() const { return Subspace::span(field_, ambient_, rows_); }

 private:
  PrimeField field_;
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

struct Solution {
  bool consistent = false;
  Matrix particular;  // cols(M) x cols(rhs); zero when inconsistent
  Subspace kernel;    // all x with M x = 0
};

/// Solves M X = rhs. Inconsistency is reported in the result, not thrown.
inline Solution solve(const Matrix& m, const Matrix& rhs) {
  if (m.rows() != rhs.rows()) fail(ErrorCode::DimensionMismatch, "solve");
  const auto& f = m.field();
  const std::size_t n = m.cols();
  auto [red, rk, pivots] = rref(m.hstack(rhs));
  Solution sol{false, Matrix(f, n, rhs.cols()),
               Subspace::from_rows(kernel_basis(m))};
  for (auto c : pivots) {
    if (c >= n) return sol;
  }
  for (std::size_t r = 0; r < rk; ++r) {
    for (std::size_t j = 0; j < rhs.cols(); ++j) sol.particular(pivots[r], j) = red(r, n + j);
  }
  sol.consistent = true;
  return sol;
}

}  // namespace hopfx
