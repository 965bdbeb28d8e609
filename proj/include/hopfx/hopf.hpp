#pragma once

// Characters, convolution, winding maps, right coideal subalgebras, the
// group X of characters trivial on a coideal subalgebra, the adjoint
// action, and fiber quotients B / B K.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfx/algebra.hpp"
#include "hopfx/bialgebra.hpp"
#include "hopfx/error.hpp"
#include "hopfx/matrix.hpp"
#include "hopfx/repn.hpp"
#include "hopfx/subspace.hpp"

namespace hopfx {

/// A multiplicative functional onto F_p, stored by its values on the basis.
struct Character {
  Vector values;

  Fp operator()(const PrimeField& f, const Vector& x) const { return dot(f, values, x); }

  friend bool operator==(const Character&, const Character&) = default;
  friend auto operator<=>(const Character& a, const Character& b) { return a.values <=> b.values; }
};

inline bool is_character(const Algebra& alg, const Vector& values) {
  const auto& f = alg.field();
  if (values.size() != alg.dim()) return false;
  if (dot(f, values, alg.unit()) != 1) return false;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      Fp v = 0;
      for (const auto& t : alg.product(i, j)) v = f.fma(v, t.coeff, values[t.index]);
      if (v != f.mul(values[i], values[j])) return false;
    }
  }
  return true;
}

inline Character make_character(const Algebra& alg, Vector values) {
  if (!is_character(alg, values)) fail(ErrorCode::NotACharacter, "functional is not multiplicative");
  return Character{std::move(values)};
}

inline Character counit_character(const Bialgebra& b) { return Character{b.counit()}; }

/// Every character of the algebra, read off the one-dimensional
/// composition factors of the regular module; sorted by value vector.
inline std::vector<Character> enumerate_characters(const Algebra& alg,
                                                   const ChopOptions& options = {}) {
  std::vector<Character> out;
  for (const auto& rec : simples(alg, options)) {
    if (rec.module.dim() != 1) continue;
    Vector v(alg.dim());
    for (std::size_t i = 0; i < alg.dim(); ++i) v[i] = rec.module.action(i)(0, 0);
    out.push_back(make_character(alg, std::move(v)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Character> enumerate_characters(const Bialgebra& b,
                                                   const ChopOptions& options = {}) {
  return enumerate_characters(b.algebra(), options);
}

/// (chi * psi)(x) = sum chi(x_1) psi(x_2).
inline Character convolve(const Bialgebra& b, const Character& chi, const Character& psi) {
  const auto& f = b.field();
  Vector v(b.dim(), 0);
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (const auto& t : b.coproduct(i))
      v[i] = f.fma(v[i], t.coeff, f.mul(chi.values[t.left], psi.values[t.right]));
  }
  return make_character(b.algebra(), std::move(v));
}

/// chi o S, the convolution inverse.
inline Character convolution_inverse(const Bialgebra& b, const Character& chi) {
  if (!b.has_antipode()) fail(ErrorCode::NoAntipode, "convolution inverse needs an antipode");
  const Matrix& s = b.antipode();
  Vector v(b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i) v[i] = dot(b.field(), chi.values, s.column(i));
  return make_character(b.algebra(), std::move(v));
}

enum class Side { Right, Left };

/// Matrix of the right winding x -> sum chi(x_1) x_2, or the left winding
/// x -> sum x_1 chi(x_2). Verified to be an algebra endomorphism, and
/// invertible when the bialgebra carries an antipode.
inline Matrix winding(const Bialgebra& b, const Character& chi, Side side = Side::Right) {
  const auto& f = b.field();
  Matrix m(f, b.dim(), b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (const auto& t : b.coproduct(i)) {
      if (side == Side::Right) {
        m(t.right, i) = f.fma(m(t.right, i), t.coeff, chi.values[t.left]);
      } else {
        m(t.left, i) = f.fma(m(t.left, i), t.coeff, chi.values[t.right]);
      }
    }
  }
  if (auto bad = endomorphism_failure(b.algebra(), m)) {
    fail(ErrorCode::StructureCheckFailed, "winding map is not an algebra endomorphism",
         {bad->first, bad->second});
  }
  if (b.has_antipode() && rank(m) != b.dim())
    fail(ErrorCode::StructureCheckFailed, "winding map of a Hopf algebra is not invertible");
  return m;
}

/// Delta(A) in A (x) B, checked on a basis of A. A must be a unital
/// subalgebra (NotASubalgebra otherwise).
inline bool is_right_coideal(const Bialgebra& b, const Subspace& a) {
  if (a.ambient_dim() != b.dim()) fail(ErrorCode::DimensionMismatch, "coideal ambient");
  require_subalgebra(b.algebra(), a);
  for (const auto& v : a.basis_vectors()) {
    const Tensor t = b.coproduct_of(v);
    for (std::size_t k = 0; k < b.dim(); ++k)
      if (!a.contains(t.column(k))) return false;
  }
  return true;
}

/// Delta(A) in A (x) A and S(A) in A.
inline bool is_hopf_subalgebra(const Bialgebra& b, const Subspace& a) {
  if (!is_subalgebra(b.algebra(), a)) return false;
  for (const auto& v : a.basis_vectors()) {
    const Tensor t = b.coproduct_of(v);
    for (std::size_t k = 0; k < b.dim(); ++k)
      if (!a.contains(t.column(k))) return false;
    for (std::size_t j = 0; j < b.dim(); ++j)
      if (!a.contains(t.row_vector(j))) return false;
    if (b.has_antipode() && !a.contains(b.antipode_of(v))) return false;
  }
  return true;
}

struct CoidealSubalgebra {
  Subspace subspace;
  bool verified_subalgebra = false;
  bool verified_right_coideal = false;
};

inline CoidealSubalgebra make_coideal_subalgebra(const Bialgebra& b, Subspace a) {
  require_subalgebra(b.algebra(), a);
  if (!is_right_coideal(b, a)) fail(ErrorCode::NotACoideal, "Delta(A) is not inside A (x) B");
  return {std::move(a), true, true};
}

/// Values of chi on the RREF basis vectors of A.
inline Vector restrict_to(const PrimeField& f, const Subspace& a, const Character& chi) {
  Vector v(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) v[r] = dot(f, chi.values, a.basis().row(r));
  return v;
}

inline bool fixes_pointwise(const Matrix& map, const Subspace& a) {
  for (const auto& v : a.basis_vectors())
    if (map.apply(v) != v) return false;
  return true;
}

/// Characters restricting to the counit on A, closed under convolution,
/// with their multiplication table (table[i][j] = index of chi_i * chi_j).
struct CharacterGroup {
  std::vector<Character> elements;
  std::vector<std::vector<std::size_t>> table;
  std::vector<std::size_t> inverse;
  std::size_t identity = 0;

  std::size_t order() const noexcept { return elements.size(); }
  std::optional<std::size_t> index_of(const Character& c) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), c);
    if (it == elements.end() || !(*it == c)) return std::nullopt;
    return static_cast<std::size_t>(it - elements.begin());
  }
  bool is_abelian() const {
    for (std::size_t i = 0; i < order(); ++i)
      for (std::size_t j = 0; j < order(); ++j)
        if (table[i][j] != table[j][i]) return false;
    return true;
  }
};

namespace detail {

inline CharacterGroup restricted_character_group(const Bialgebra& b, const CoidealSubalgebra& a,
                                                 const std::vector<Character>& all) {
  const auto& f = b.field();
  if (!a.verified_right_coideal) fail(ErrorCode::NotACoideal, "A is not a verified right coideal");
  const Vector eps_on_a = restrict_to(f, a.subspace, counit_character(b));
  CharacterGroup x;
  for (const auto& chi : all) {
    const bool in_x = restrict_to(f, a.subspace, chi) == eps_on_a;
    // A character lies in X exactly when its right winding fixes A pointwise.
    if (in_x != fixes_pointwise(winding(b, chi, Side::Right), a.subspace))
      fail(ErrorCode::StructureCheckFailed,
           "winding/restriction correspondence fails on a coideal subalgebra");
    if (in_x) x.elements.push_back(chi);
  }
  std::sort(x.elements.begin(), x.elements.end());
  const auto eps = x.index_of(counit_character(b));
  if (!eps) fail(ErrorCode::StructureCheckFailed, "counit missing from X");
  x.identity = *eps;
  x.table.assign(x.order(), std::vector<std::size_t>(x.order()));
  for (std::size_t i = 0; i < x.order(); ++i) {
    for (std::size_t j = 0; j < x.order(); ++j) {
      auto k = x.index_of(convolve(b, x.elements[i], x.elements[j]));
      if (!k) fail(ErrorCode::StructureCheckFailed, "X is not closed under convolution");
      x.table[i][j] = *k;
    }
  }
  x.inverse.assign(x.order(), x.order());
  for (std::size_t i = 0; i < x.order(); ++i) {
    for (std::size_t j = 0; j < x.order(); ++j) {
      if (x.table[i][j] == x.identity && x.table[j][i] == x.identity) x.inverse[i] = j;
    }
    if (x.inverse[i] == x.order()) fail(ErrorCode::StructureCheckFailed, "X has an element without inverse");
  }
  return x;
}

}  // namespace detail

/// X = { chi : chi|A = counit|A } as a group under convolution. Checks
/// closure, inverses via chi o S, and that X is exactly the set of
/// characters whose winding fixes A pointwise.
inline CharacterGroup character_group_X(const Bialgebra& b, const CoidealSubalgebra& a,
                                        const ChopOptions& options = {}) {
  if (!b.has_antipode()) fail(ErrorCode::NoAntipode, "X needs an antipode");
  CharacterGroup x = detail::restricted_character_group(b, a, enumerate_characters(b, options));
  for (std::size_t i = 0; i < x.order(); ++i) {
    const Character inv = convolution_inverse(b, x.elements[i]);
    if (!(x.elements[x.inverse[i]] == inv))
      fail(ErrorCode::StructureCheckFailed, "table inverse differs from chi o S");
  }
  return x;
}

/// Same set for a bialgebra without antipode; inverses come from the
/// (finite, cancellative) multiplication table.
inline CharacterGroup character_group_X_bialgebra(const Bialgebra& b, const CoidealSubalgebra& a,
                                                  const ChopOptions& options = {}) {
  return detail::restricted_character_group(b, a, enumerate_characters(b, options));
}

/// A bimodule V: left[i] is v -> e_i . v and right[i] is v -> v . e_i.
struct Bimodule {
  std::vector<Matrix> left;
  std::vector<Matrix> right;
  std::size_t dim() const { return left.front().rows(); }
};

inline Bimodule regular_bimodule(const Algebra& alg) {
  Bimodule v;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    v.left.push_back(alg.left_multiplication(alg.basis_element(i)));
    v.right.push_back(alg.right_multiplication(alg.basis_element(i)));
  }
  return v;
}

namespace detail {

inline Matrix combine(const PrimeField& f, const std::vector<Matrix>& mats, const Vector& x) {
  Matrix m(f, mats.front().rows(), mats.front().cols());
  for (std::size_t i = 0; i < x.size(); ++i) m.add_scaled(x[i], mats[i]);
  return m;
}

}  // namespace detail

/// ad(h) v = sum h_1 . v . S(h_2), one matrix per basis element of B.
/// Checks the bimodule axioms and that ad is a left module structure.
inline std::vector<Matrix> adjoint_module(const Bialgebra& b, const Bimodule& v) {
  if (!b.has_antipode()) fail(ErrorCode::NoAntipode, "adjoint action needs an antipode");
  const auto& f = b.field();
  const auto& alg = b.algebra();
  const std::size_t n = b.dim();
  if (v.left.size() != n || v.right.size() != n)
    fail(ErrorCode::DimensionMismatch, "bimodule needs one matrix per basis element");
  const std::size_t d = v.dim();
  const Matrix id = Matrix::identity(f, d);
  if (detail::combine(f, v.left, alg.unit()) != id || detail::combine(f, v.right, alg.unit()) != id)
    fail(ErrorCode::NotABimodule, "unit does not act as the identity");
  for (auto g : alg.generators()) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector gj = alg.multiply(alg.basis_element(g), alg.basis_element(j));
      const Vector jg = alg.multiply(alg.basis_element(j), alg.basis_element(g));
      if (detail::combine(f, v.left, gj) != v.left[g] * v.left[j])
        fail(ErrorCode::NotABimodule, "left action is not multiplicative", {g, j});
      // v.(e_j e_g) = (v.e_j).e_g
      if (detail::combine(f, v.right, jg) != v.right[g] * v.right[j])
        fail(ErrorCode::NotABimodule, "right action is not multiplicative", {j, g});
    }
    for (auto h : alg.generators()) {
      if (v.left[g] * v.right[h] != v.right[h] * v.left[g])
        fail(ErrorCode::NotABimodule, "left and right actions do not commute", {g, h});
    }
  }
  const Matrix& s = b.antipode();
  std::vector<Matrix> right_of_s;
  for (std::size_t k = 0; k < n; ++k) right_of_s.push_back(detail::combine(f, v.right, s.column(k)));
  std::vector<Matrix> ad;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m(f, d, d);
    for (const auto& t : b.coproduct(i)) m.add_scaled(t.coeff, v.left[t.left] * right_of_s[t.right]);
    ad.push_back(std::move(m));
  }
  if (detail::combine(f, ad, alg.unit()) != id)
    fail(ErrorCode::StructureCheckFailed, "ad(1) is not the identity");
  for (auto g : alg.generators()) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector gj = alg.multiply(alg.basis_element(g), alg.basis_element(j));
      if (detail::combine(f, ad, gj) != ad[g] * ad[j])
        fail(ErrorCode::StructureCheckFailed, "ad is not a left module structure", {g, j});
    }
  }
  return ad;
}

/// A one-dimensional ad-submodule line space: all n with ad(h) n = chi(h) n.
struct AdEigenspace {
  Character chi;
  Subspace eigenvectors;
};

/// For each character, the joint eigenspace of the adjoint action. Every
/// one-dimensional ad-submodule lies in exactly one of these.
inline std::vector<AdEigenspace> ad_eigenspaces(const Bialgebra& b, const std::vector<Matrix>& ad,
                                                const std::vector<Character>& characters) {
  const auto& f = b.field();
  const std::size_t d = ad.front().rows();
  std::vector<AdEigenspace> out;
  for (const auto& chi : characters) {
    Matrix stacked(f, 0, d);
    for (auto g : b.algebra().generators()) {
      Matrix m = ad[g];
      for (std::size_t r = 0; r < d; ++r) m(r, r) = f.sub(m(r, r), chi.values[g]);
      stacked = stacked.vstack(m);
    }
    Subspace eig = stacked.rows() == 0 ? Subspace::whole(f, d) : Subspace::from_rows(kernel_basis(stacked));
    if (!eig.is_zero()) out.push_back({chi, std::move(eig)});
  }
  return out;
}

/// h . n == n . sigma_chi(h) for every basis element h.
inline bool adjoint_eigenvector_identity(const Bialgebra& b, const Bimodule& v, const Character& chi,
                                         const Vector& n) {
  const auto& f = b.field();
  const Matrix sigma = winding(b, chi, Side::Right);
  for (std::size_t h = 0; h < b.dim(); ++h) {
    const Vector lhs = v.left[h].apply(n);
    const Vector rhs = detail::combine(f, v.right, sigma.column(h)).apply(n);
    if (lhs != rhs) return false;
  }
  return true;
}

struct FiberQuotient {
  Subspace kernel_in_a;  // K = ker xi inside A
  Subspace ideal;        // B K
  Quotient quotient;
  bool counit_fiber = false;                   // xi == counit on A
  std::optional<Bialgebra> structure;          // induced bialgebra/Hopf data, when well defined
  std::vector<Character> x_elements;           // X, when counit_fiber
  std::vector<Matrix> induced_windings;        // quotient maps of sigma_chi, chi in X
};

/// B / B K for K the kernel of a character xi of a central subalgebra A,
/// given by its values on the RREF basis of A.
///
/// For xi = counit on A the winding maps sigma_chi (chi in X) are checked to
/// preserve B A+ and their induced maps on the quotient are returned. The
/// quotient bialgebra (and antipode) is induced only after checking that
/// B A+ is a coideal, killed by the counit, and (for the antipode) stable
/// under S.
inline FiberQuotient fiber_quotient(const Bialgebra& b, const CoidealSubalgebra& a, const Vector& xi,
                                    const ChopOptions& options = {}) {
  const auto& f = b.field();
  const auto& alg = b.algebra();
  const Subspace& sub = a.subspace;
  if (!is_central_subalgebra(alg, sub)) fail(ErrorCode::NotCentral, "A is not central in B");
  if (xi.size() != sub.dim()) fail(ErrorCode::DimensionMismatch, "xi needs one value per basis vector of A");
  // xi multiplicative on A
  {
    const auto basis = sub.basis_vectors();
    if (dot(f, xi, *sub.coordinates(alg.unit())) != 1)
      fail(ErrorCode::NotACharacter, "xi(1) != 1");
    for (std::size_t r = 0; r < basis.size(); ++r)
      for (std::size_t s = 0; s < basis.size(); ++s)
        if (dot(f, xi, *sub.coordinates(alg.multiply(basis[r], basis[s]))) != f.mul(xi[r], xi[s]))
          fail(ErrorCode::NotACharacter, "xi is not multiplicative on A");
  }
  std::vector<Vector> k_vectors;
  {
    Matrix row(f, 1, sub.dim());
    for (std::size_t r = 0; r < sub.dim(); ++r) row(0, r) = xi[r];
    const Matrix coords = kernel_basis(row);
    for (std::size_t r = 0; r < coords.rows(); ++r) k_vectors.push_back(sub.combine(coords.row(r)));
  }
  Subspace kernel_in_a = Subspace::span(f, b.dim(), k_vectors);

  std::vector<Vector> left_products, right_products;
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (const auto& k : k_vectors) {
      left_products.push_back(alg.multiply(alg.basis_element(i), k));
      right_products.push_back(alg.multiply(k, alg.basis_element(i)));
    }
  }
  Subspace bk = Subspace::span(f, b.dim(), left_products);
  if (!(bk == Subspace::span(f, b.dim(), right_products)))
    fail(ErrorCode::StructureCheckFailed, "B K differs from K B");
  if (bk.contains(alg.unit())) fail(ErrorCode::ImproperIdeal, "B K is all of B; xi does not extend");

  Quotient q = quotient_algebra(alg, bk);
  FiberQuotient out{std::move(kernel_in_a), bk, std::move(q), false, std::nullopt, {}, {}};
  out.counit_fiber = xi == restrict_to(f, sub, counit_character(b));
  if (!out.counit_fiber) return out;

  const Matrix& proj = out.quotient.projection;
  const auto& retained = out.quotient.retained;
  const std::size_t qd = retained.size();

  // Winding maps of X descend to the quotient.
  std::vector<Character> x = b.has_antipode() ? character_group_X(b, a, options).elements
                                              : character_group_X_bialgebra(b, a, options).elements;
  for (const auto& chi : x) {
    const Matrix sigma = winding(b, chi, Side::Right);
    if (!(bk.image(sigma) == bk))
      fail(ErrorCode::StructureCheckFailed, "winding by an element of X moves B A+");
    Matrix induced(f, qd, qd);
    for (std::size_t c = 0; c < qd; ++c) induced.set_column(c, proj.apply(sigma.column(retained[c])));
    out.induced_windings.push_back(std::move(induced));
  }
  out.x_elements = std::move(x);

  // Induced structure maps, when B A+ is a coideal killed by the counit.
  bool coideal = true;
  for (const auto& v : bk.basis_vectors()) {
    if (b.counit_of(v) != 0) coideal = false;
    const Tensor t = b.coproduct_of(v);
    if (!(proj * t * proj.transpose()).is_zero()) coideal = false;
    if (!coideal) break;
  }
  if (!coideal) return out;
  bool antipode_stable = b.has_antipode();
  if (antipode_stable) {
    for (const auto& v : bk.basis_vectors())
      if (!bk.contains(b.antipode_of(v))) antipode_stable = false;
  }
  std::vector<ComulEntry> comul;
  Vector counit(qd);
  for (std::size_t a_idx = 0; a_idx < qd; ++a_idx) {
    const std::size_t r = retained[a_idx];
    const Tensor t = b.coproduct_of(alg.basis_element(r));
    const Tensor pt = proj * t * proj.transpose();
    for (std::size_t j = 0; j < qd; ++j)
      for (std::size_t k = 0; k < qd; ++k)
        if (pt(j, k) != 0) comul.push_back({a_idx, j, k, pt(j, k)});
    counit[a_idx] = b.counit()[r];
  }
  std::optional<Matrix> antipode;
  if (antipode_stable) {
    Matrix s(f, qd, qd);
    for (std::size_t c = 0; c < qd; ++c) s.set_column(c, proj.apply(b.antipode().column(retained[c])));
    antipode = std::move(s);
  }
  Bialgebra induced(out.quotient.algebra, std::move(comul), std::move(counit), std::move(antipode));
  require_valid(induced);
  out.structure = std::move(induced);
  return out;
}

}  // namespace hopfx
