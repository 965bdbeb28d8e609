#pragma once

// Finite-dimensional associative unital algebras over F_p given by
// structure constants, with ideals, quotients and centers.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hopfx/error.hpp"
#include "hopfx/field.hpp"
#include "hopfx/matrix.hpp"
#include "hopfx/subspace.hpp"

namespace hopfx {

/// e_i * e_j contains c * e_k.
struct MulEntry {
  std::size_t i = 0, j = 0, k = 0;
  Fp c = 0;
  friend auto operator<=>(const MulEntry&, const MulEntry&) = default;
};

struct Term {
  std::size_t index = 0;
  Fp coeff = 0;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse vector with indices ascending and no zero coefficients.
using SparseVector = std::vector<Term>;

inline SparseVector to_sparse(const Vector& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.push_back({i, v[i]});
  return s;
}

/// One step of the word basis: word = generator * parent.
struct WordStep {
  std::size_t generator = 0;  // basis index of the generator
  std::size_t parent = 0;     // index into the word list
};

class Algebra;
Algebra build_algebra(PrimeField field, std::size_t dim, Vector unit,
                      std::vector<MulEntry> entries,
                      std::vector<std::string> labels = {});

/// Immutable, cheaply copyable (shared state). Construct through
/// build_algebra, which verifies associativity and the unit axioms.
class Algebra {
 public:
  const PrimeField& field() const noexcept { return d_->field; }
  std::size_t dim() const noexcept { return d_->dim; }
  const std::vector<std::string>& labels() const noexcept { return d_->labels; }
  const Vector& unit() const noexcept { return d_->unit; }
  /// Canonical (sorted, merged) structure constants.
  const std::vector<MulEntry>& entries() const noexcept { return d_->entries; }

  const SparseVector& product(std::size_t i, std::size_t j) const {
    return d_->table[i * d_->dim + j];
  }

  Vector basis_element(std::size_t i) const { return unit_vector(dim(), i); }

  Vector multiply(const Vector& x, const Vector& y) const {
    check(x);
    check(y);
    const auto& f = field();
    const std::size_t n = dim();
    std::vector<std::uint64_t> acc(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j] == 0) continue;
        const std::uint64_t xy = f.mul(x[i], y[j]);
        for (const auto& t : product(i, j)) acc[t.index] = (acc[t.index] + xy * t.coeff) % f.p();
      }
    }
    Vector out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<Fp>(acc[k]);
    return out;
  }

  /// Matrix of v -> x v (columns indexed by basis).
  Matrix left_multiplication(const Vector& x) const {
    check(x);
    const auto& f = field();
    Matrix m(f, dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j)
        for (const auto& t : product(i, j)) m(t.index, j) = f.fma(m(t.index, j), x[i], t.coeff);
    }
    return m;
  }

  /// Matrix of v -> v x.
  Matrix right_multiplication(const Vector& x) const {
    check(x);
    const auto& f = field();
    Matrix m(f, dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j)
        for (const auto& t : product(j, i)) m(t.index, j) = f.fma(m(t.index, j), x[i], t.coeff);
    }
    return m;
  }

  /// Basis indices that generate the algebra, chosen greedily in basis order.
  const std::vector<std::size_t>& generators() const noexcept { return d_->generators; }

  /// Words in the generators forming a basis; word 0 is the unit.
  const std::vector<WordStep>& words() const noexcept { return d_->words; }

  /// e_i = sum_w word_coordinates()(w, i) * word_w.
  const Matrix& word_coordinates() const noexcept { return d_->word_coords; }

  bool is_commutative() const {
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i + 1; j < dim(); ++j)
        if (product(i, j) != product(j, i)) return false;
    return true;
  }

  /// Same structure constants, field and unit (labels ignored).
  bool same_structure(const Algebra& o) const {
    return d_ == o.d_ || (field() == o.field() && dim() == o.dim() &&
                          unit() == o.unit() && entries() == o.entries());
  }

  void check(const Vector& v) const {
    if (v.size() != dim()) fail(ErrorCode::DimensionMismatch, "element length");
  }

 private:
  struct Data {
    PrimeField field;
    std::size_t dim = 0;
    std::vector<std::string> labels;
    Vector unit;
    std::vector<MulEntry> entries;
    std::vector<SparseVector> table;
    std::vector<std::size_t> generators;
    std::vector<WordStep> words;
    Matrix word_coords;
  };

  explicit Algebra(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  friend Algebra build_algebra(PrimeField, std::size_t, Vector, std::vector<MulEntry>,
                               std::vector<std::string>);

  std::shared_ptr<const Data> d_;
};

namespace detail {

inline void accumulate(const PrimeField& f, const SparseVector& s, Fp scale_by,
                       std::vector<Fp>& dense) {
  for (const auto& t : s) dense[t.index] = f.fma(dense[t.index], scale_by, t.coeff);
}

}  // namespace detail

inline Algebra build_algebra(PrimeField field, std::size_t dim, Vector unit,
                             std::vector<MulEntry> entries,
                             std::vector<std::string> labels) {
  if (dim == 0) fail(ErrorCode::InvalidArgument, "zero-dimensional algebra");
  if (unit.size() != dim) fail(ErrorCode::DimensionMismatch, "unit vector length");
  for (auto& u : unit)
    if (u >= field.p()) fail(ErrorCode::InvalidArgument, "unit coefficient not reduced");
  if (labels.empty()) {
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  }
  if (labels.size() != dim) fail(ErrorCode::DimensionMismatch, "label count");

  std::sort(entries.begin(), entries.end(), [](const MulEntry& a, const MulEntry& b) {
    return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
  });
  std::vector<MulEntry> merged;
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim || e.k >= dim)
      fail(ErrorCode::InvalidArgument, "structure constant index out of range");
    if (e.c >= field.p()) fail(ErrorCode::InvalidArgument, "structure constant not reduced");
    if (!merged.empty() && merged.back().i == e.i && merged.back().j == e.j &&
        merged.back().k == e.k) {
      merged.back().c = field.add(merged.back().c, e.c);
    } else {
      merged.push_back(e);
    }
  }
  std::erase_if(merged, [](const MulEntry& e) { return e.c == 0; });

  auto data = std::make_shared<Algebra::Data>(Algebra::Data{
      field, dim, std::move(labels), std::move(unit), std::move(merged),
      std::vector<SparseVector>(dim * dim), {}, {}, Matrix(field, 0, 0)});
  for (const auto& e : data->entries) data->table[e.i * dim + e.j].push_back({e.k, e.c});

  const auto& table = data->table;
  // Exhaustive associativity: (e_i e_j) e_k == e_i (e_j e_k).
  {
    std::vector<Fp> lhs(dim), rhs(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        const auto& ij = table[i * dim + j];
        for (std::size_t k = 0; k < dim; ++k) {
          std::fill(lhs.begin(), lhs.end(), 0);
          std::fill(rhs.begin(), rhs.end(), 0);
          for (const auto& t : ij) detail::accumulate(field, table[t.index * dim + k], t.coeff, lhs);
          for (const auto& t : table[j * dim + k]) detail::accumulate(field, table[i * dim + t.index], t.coeff, rhs);
          if (lhs != rhs) {
            fail(ErrorCode::NotAssociative,
                 "(e" + std::to_string(i) + " e" + std::to_string(j) + ") e" +
                     std::to_string(k) + " != e" + std::to_string(i) + " (e" +
                     std::to_string(j) + " e" + std::to_string(k) + ")",
                 {i, j, k});
          }
        }
      }
    }
  }
  // Unit axioms on every basis element.
  {
    std::vector<Fp> left(dim), right(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      std::fill(left.begin(), left.end(), 0);
      std::fill(right.begin(), right.end(), 0);
      for (std::size_t u = 0; u < dim; ++u) {
        if (data->unit[u] == 0) continue;
        detail::accumulate(field, table[u * dim + i], data->unit[u], left);
        detail::accumulate(field, table[i * dim + u], data->unit[u], right);
      }
      if (left != unit_vector(dim, i) || right != unit_vector(dim, i)) {
        fail(ErrorCode::UnitAxiomFails, "unit does not act trivially on e" + std::to_string(i),
             {i});
      }
    }
  }

  // Greedy generating set and a word basis over it.
  {
    auto left_mul = [&](std::size_t g, const Vector& v) {
      std::vector<Fp> out(dim, 0);
      for (std::size_t j = 0; j < dim; ++j)
        if (v[j] != 0) detail::accumulate(field, table[g * dim + j], v[j], out);
      return out;
    };
    std::vector<std::size_t> gens;
    std::vector<WordStep> words;
    std::vector<Vector> word_vectors;
    auto close = [&]() {
      EchelonBasis span(field, dim);
      words.assign(1, WordStep{dim, 0});
      word_vectors.assign(1, data->unit);
      span.insert(data->unit);
      for (std::size_t w = 0; w < words.size(); ++w) {
        for (auto g : gens) {
          Vector v = left_mul(g, word_vectors[w]);
          if (span.insert(v)) {
            words.push_back({g, w});
            word_vectors.push_back(std::move(v));
          }
        }
      }
      return span;
    };
    EchelonBasis span = close();
    for (std::size_t i = 0; i < dim && !span.full(); ++i) {
      if (span.contains(unit_vector(dim, i))) continue;
      gens.push_back(i);
      span = close();
    }
    auto w_inv = inverse(Matrix::from_columns(field, dim, word_vectors));
    data->generators = std::move(gens);
    data->words = std::move(words);
    data->word_coords = std::move(*w_inv);
  }
  return Algebra(std::move(data));
}

/// Left multiplication matrices L_{e_i}, one per basis element.
inline std::vector<Matrix> regular_module(const Algebra& alg) {
  std::vector<Matrix> out;
  out.reserve(alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i) out.push_back(alg.left_multiplication(alg.basis_element(i)));
  return out;
}

/// Smallest two-sided ideal containing seed.
inline Subspace ideal_closure(const Algebra& alg, const Subspace& seed) {
  const std::size_t n = alg.dim();
  if (seed.ambient_dim() != n) fail(ErrorCode::DimensionMismatch, "ideal seed");
  EchelonBasis span(alg.field(), n);
  std::vector<Vector> queue;
  for (auto& v : seed.basis_vectors())
    if (span.insert(v)) queue.push_back(v);
  for (std::size_t q = 0; q < queue.size() && !span.full(); ++q) {
    const Vector v = queue[q];
    for (std::size_t i = 0; i < n; ++i) {
      const Vector e = alg.basis_element(i);
      for (Vector w : {alg.multiply(e, v), alg.multiply(v, e)}) {
        if (span.insert(w)) queue.push_back(std::move(w));
      }
    }
  }
  return span.to_subspace();
}

inline bool is_two_sided_ideal(const Algebra& alg, const Subspace& s) {
  return ideal_closure(alg, s) == s;
}

struct Quotient {
  Algebra algebra;
  Matrix projection;                  // (dim quotient) x (dim alg)
  std::vector<std::size_t> retained;  // basis indices kept as the quotient basis
};

/// Quotient by a proper two-sided ideal. The quotient basis is the images
/// of the standard basis vectors at the non-pivot columns of the ideal's
/// RREF, in increasing order.
inline Quotient quotient_algebra(const Algebra& alg, const Subspace& ideal) {
  const auto& f = alg.field();
  const std::size_t n = alg.dim();
  if (ideal.ambient_dim() != n) fail(ErrorCode::DimensionMismatch, "quotient ideal");
  if (ideal.contains(alg.unit())) fail(ErrorCode::ImproperIdeal, "ideal contains the unit");
  if (!is_two_sided_ideal(alg, ideal)) fail(ErrorCode::NotAnIdeal, "subspace is not a two-sided ideal");

  std::vector<bool> pivot(n, false);
  for (auto c : ideal.pivots()) pivot[c] = true;
  std::vector<std::size_t> retained;
  for (std::size_t j = 0; j < n; ++j)
    if (!pivot[j]) retained.push_back(j);
  const std::size_t q = retained.size();

  Matrix proj(f, q, n);
  for (std::size_t col = 0; col < n; ++col) {
    const Vector r = ideal.residual(unit_vector(n, col));
    for (std::size_t a = 0; a < q; ++a) proj(a, col) = r[retained[a]];
  }
  auto project = [&](const Vector& v) { return proj.apply(v); };

  std::vector<MulEntry> entries;
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      const Vector prod = project(alg.multiply(alg.basis_element(retained[a]),
                                               alg.basis_element(retained[b])));
      for (std::size_t c = 0; c < q; ++c)
        if (prod[c] != 0) entries.push_back({a, b, c, prod[c]});
    }
  }
  std::vector<std::string> labels;
  for (auto j : retained) labels.push_back(alg.labels()[j]);
  Algebra quotient = build_algebra(f, q, project(alg.unit()), std::move(entries), std::move(labels));
  return {std::move(quotient), std::move(proj), std::move(retained)};
}

/// Joint kernel of the commutator maps v -> e_i v - v e_i.
inline Subspace center(const Algebra& alg) {
  const std::size_t n = alg.dim();
  Matrix stacked(alg.field(), 0, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector e = alg.basis_element(i);
    stacked = stacked.vstack(alg.left_multiplication(e) - alg.right_multiplication(e));
  }
  return Subspace::from_rows(kernel_basis(stacked));
}

/// Contains the unit and is closed under multiplication.
inline bool is_subalgebra(const Algebra& alg, const Subspace& a) {
  if (a.ambient_dim() != alg.dim()) fail(ErrorCode::DimensionMismatch, "subalgebra ambient");
  if (!a.contains(alg.unit())) return false;
  const auto basis = a.basis_vectors();
  for (const auto& x : basis)
    for (const auto& y : basis)
      if (!a.contains(alg.multiply(x, y))) return false;
  return true;
}

inline void require_subalgebra(const Algebra& alg, const Subspace& a) {
  if (!is_subalgebra(alg, a))
    fail(ErrorCode::NotASubalgebra, "subspace is not a unital subalgebra");
}

inline bool is_central_subalgebra(const Algebra& alg, const Subspace& a) {
  require_subalgebra(alg, a);
  return center(alg).contains(a);
}

/// The subalgebra `a` as an algebra in its own right, on the RREF basis of
/// `a` (basis element r is a.basis_vector(r)).
inline Algebra subalgebra_structure(const Algebra& alg, const Subspace& a) {
  require_subalgebra(alg, a);
  const auto basis = a.basis_vectors();
  std::vector<MulEntry> entries;
  for (std::size_t r = 0; r < basis.size(); ++r) {
    for (std::size_t s = 0; s < basis.size(); ++s) {
      const Vector c = *a.coordinates(alg.multiply(basis[r], basis[s]));
      for (std::size_t t = 0; t < c.size(); ++t)
        if (c[t] != 0) entries.push_back({r, s, t, c[t]});
    }
  }
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < basis.size(); ++r) labels.push_back("a" + std::to_string(r));
  return build_algebra(alg.field(), basis.size(), *a.coordinates(alg.unit()),
                       std::move(entries), std::move(labels));
}

/// True iff the square matrix is an algebra endomorphism: it fixes the
/// unit and is multiplicative on generator x basis pairs (which suffices,
/// since generator words span). Returns the failing pair on failure.
inline std::optional<std::pair<std::size_t, std::size_t>> endomorphism_failure(
    const Algebra& alg, const Matrix& map) {
  if (map.rows() != alg.dim() || map.cols() != alg.dim())
    fail(ErrorCode::DimensionMismatch, "endomorphism shape");
  const std::size_t n = alg.dim();
  if (map.apply(alg.unit()) != alg.unit()) return std::pair{n, n};
  std::vector<Vector> images;
  for (std::size_t j = 0; j < n; ++j) images.push_back(map.column(j));
  for (auto g : alg.generators()) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector lhs = map.apply(alg.multiply(alg.basis_element(g), alg.basis_element(j)));
      if (lhs != alg.multiply(images[g], images[j])) return std::pair{g, j};
    }
  }
  return std::nullopt;
}

}  // namespace hopfx
