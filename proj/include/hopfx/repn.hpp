#pragma once

// Modules over structure-constant algebras and a MeatAxe-style chop into
// composition factors.
//
// The chop works on the action of the algebra generators only. A random
// element theta of the image algebra is drawn, an eigenvalue lambda in F_p
// of theta is found from its characteristic polynomial, and a vector of
// ker(theta - lambda) is spun up under the generators. A proper result is a
// submodule. Otherwise the same is tried on the dual (transposed) action,
// whose proper invariant subspaces give submodules as annihilators. When
// ker(theta - lambda) is one-dimensional and both spins are whole, Norton's
// criterion certifies the module irreducible.
//
// Only F_p-rational eigenvalues are used. A simple module that is not
// absolutely irreducible never certifies, and the chop reports
// BudgetExceeded instead of returning a wrong answer.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hopfx/algebra.hpp"
#include "hopfx/error.hpp"
#include "hopfx/matrix.hpp"
#include "hopfx/poly.hpp"
#include "hopfx/subspace.hpp"

namespace hopfx {

class ModuleRep {
 public:
  /// Action matrices, one per basis element of `alg`; verified to be an
  /// algebra homomorphism into End(F_p^dim).
  ModuleRep(Algebra alg, std::vector<Matrix> action)
      : alg_(std::move(alg)), action_(std::move(action)) {
    if (action_.size() != alg_.dim())
      fail(ErrorCode::DimensionMismatch, "one action matrix per basis element required");
    dim_ = action_.front().rows();
    for (const auto& m : action_) {
      if (m.rows() != dim_ || m.cols() != dim_)
        fail(ErrorCode::DimensionMismatch, "action matrices must be square of one size");
    }
    verify();
  }

  /// Builds the full action from the action of alg.generators(), using the
  /// algebra's word basis.
  static ModuleRep from_generator_action(const Algebra& alg, const std::vector<Matrix>& gens) {
    const auto& f = alg.field();
    const auto& g_idx = alg.generators();
    if (gens.size() != g_idx.size()) fail(ErrorCode::DimensionMismatch, "generator action count");
    const std::size_t d = gens.empty() ? 1 : gens.front().rows();
    const auto& words = alg.words();
    std::vector<Matrix> word_action;
    word_action.reserve(words.size());
    word_action.push_back(Matrix::identity(f, d));
    for (std::size_t w = 1; w < words.size(); ++w) {
      const auto slot = static_cast<std::size_t>(
          std::find(g_idx.begin(), g_idx.end(), words[w].generator) - g_idx.begin());
      word_action.push_back(gens[slot] * word_action[words[w].parent]);
    }
    const Matrix& coords = alg.word_coordinates();
    std::vector<Matrix> action;
    action.reserve(alg.dim());
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      Matrix m(f, d, d);
      for (std::size_t w = 0; w < words.size(); ++w) m.add_scaled(coords(w, i), word_action[w]);
      action.push_back(std::move(m));
    }
    return ModuleRep(alg, std::move(action));
  }

  static ModuleRep regular(const Algebra& alg) { return ModuleRep(alg, regular_module(alg)); }

  /// The one-dimensional module k_chi.
  static ModuleRep from_character(const Algebra& alg, const Vector& values) {
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      Matrix m(alg.field(), 1, 1);
      m(0, 0) = values.at(i);
      action.push_back(std::move(m));
    }
    return ModuleRep(alg, std::move(action));
  }

  const Algebra& algebra() const noexcept { return alg_; }
  const PrimeField& field() const noexcept { return alg_.field(); }
  std::size_t dim() const noexcept { return dim_; }
  const Matrix& action(std::size_t i) const { return action_.at(i); }
  const std::vector<Matrix>& actions() const noexcept { return action_; }

  /// Action of an arbitrary element.
  Matrix act(const Vector& x) const {
    alg_.check(x);
    Matrix m(field(), dim_, dim_);
    for (std::size_t i = 0; i < x.size(); ++i) m.add_scaled(x[i], action_[i]);
    return m;
  }

  std::vector<Matrix> generator_action() const {
    std::vector<Matrix> out;
    for (auto g : alg_.generators()) out.push_back(action_[g]);
    return out;
  }

 private:
  void verify() const {
    if (act(alg_.unit()) != Matrix::identity(field(), dim_))
      fail(ErrorCode::NotAModule, "unit does not act as the identity");
    for (auto g : alg_.generators()) {
      for (std::size_t j = 0; j < alg_.dim(); ++j) {
        const Matrix lhs = act(alg_.multiply(alg_.basis_element(g), alg_.basis_element(j)));
        if (lhs != action_[g] * action_[j]) {
          fail(ErrorCode::NotAModule, "action is not multiplicative", {g, j});
        }
      }
    }
  }

  Algebra alg_;
  std::size_t dim_ = 0;
  std::vector<Matrix> action_;
};

/// Precomposes the action with a linear map of the algebra (e.g. a winding
/// automorphism): the twisted action of e_i is action(map(e_i)).
inline ModuleRep twist(const ModuleRep& m, const Matrix& map) {
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < m.algebra().dim(); ++i) action.push_back(m.act(map.column(i)));
  return ModuleRep(m.algebra(), std::move(action));
}

/// Kernel of h -> action(h); a two-sided ideal of the algebra.
inline Subspace annihilator(const ModuleRep& m) {
  const auto& alg = m.algebra();
  const std::size_t d = m.dim();
  Matrix map(alg.field(), d * d, alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    const auto& a = m.action(i);
    for (std::size_t r = 0; r < d * d; ++r) map(r, i) = a.data()[r];
  }
  Subspace ann = Subspace::from_rows(kernel_basis(map));
  if (!is_two_sided_ideal(alg, ann))
    fail(ErrorCode::NotAnIdeal, "annihilator failed the two-sided ideal check");
  return ann;
}

/// Space of intertwiners T with T action_m(x) = action_n(x) T, as
/// (dim n * dim m)-long row-major vectors.
inline Subspace intertwiners(const ModuleRep& m, const ModuleRep& n) {
  if (!m.algebra().same_structure(n.algebra()))
    fail(ErrorCode::DifferentAlgebras, "modules over different algebras");
  const auto& f = m.field();
  const std::size_t dm = m.dim(), dn = n.dim();
  const auto& gens = m.algebra().generators();
  Matrix eqs(f, gens.size() * dn * dm, dn * dm);
  std::size_t row = 0;
  for (auto g : gens) {
    const Matrix& a = m.action(g);
    const Matrix& b = n.action(g);
    for (std::size_t r = 0; r < dn; ++r) {
      for (std::size_t c = 0; c < dm; ++c, ++row) {
        // (T A)(r, c) - (B T)(r, c)
        for (std::size_t s = 0; s < dm; ++s) eqs(row, r * dm + s) = f.add(eqs(row, r * dm + s), a(s, c));
        for (std::size_t s = 0; s < dn; ++s) eqs(row, s * dm + c) = f.sub(eqs(row, s * dm + c), b(r, s));
      }
    }
  }
  return Subspace::from_rows(kernel_basis(eqs));
}

/// For simple modules: isomorphic iff a nonzero intertwiner exists.
inline bool iso_simple(const ModuleRep& m, const ModuleRep& n) {
  if (!m.algebra().same_structure(n.algebra()))
    fail(ErrorCode::DifferentAlgebras, "modules over different algebras");
  if (m.dim() != n.dim()) return false;
  return !intertwiners(m, n).is_zero();
}

/// Smallest subspace containing `seed` and invariant under every matrix.
inline Subspace spin(const PrimeField& f, const std::vector<Vector>& seed,
                     const std::vector<Matrix>& mats, std::size_t dim) {
  EchelonBasis span(f, dim);
  std::vector<Vector> queue;
  for (const auto& v : seed)
    if (span.insert(v)) queue.push_back(v);
  for (std::size_t q = 0; q < queue.size() && !span.full(); ++q) {
    for (const auto& m : mats) {
      Vector w = m.apply(queue[q]);
      if (span.insert(w)) queue.push_back(std::move(w));
    }
  }
  return span.to_subspace();
}

struct SimpleRecord {
  ModuleRep module;
  Subspace annihilator;
  std::size_t multiplicity = 1;
};

struct ChopOptions {
  std::uint64_t seed = 0;
  std::size_t attempts_per_split = 400;
};

namespace detail {

struct SplitResult {
  enum class Kind { Irreducible, Split } kind = Kind::Irreducible;
  Subspace sub;
};

inline Vector random_vector(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
  Vector v(n);
  for (auto& x : v) x = static_cast<Fp>(rng() % f.p());
  return v;
}

inline Vector random_nonzero_in(const Matrix& rows, std::mt19937_64& rng) {
  const auto& f = rows.field();
  for (;;) {
    Vector v(rows.cols(), 0);
    for (std::size_t r = 0; r < rows.rows(); ++r) axpy(f, static_cast<Fp>(rng() % f.p()), rows.row(r), v);
    if (!is_zero(v)) return v;
  }
}

/// Orthogonal complement {v : w . v = 0 for all w in s}.
inline Subspace annihilator_of_dual(const Subspace& s) {
  return Subspace::from_rows(kernel_basis(s.basis()));
}

inline SplitResult find_split(const std::vector<Matrix>& gens, std::size_t dim,
                              std::mt19937_64& rng, std::size_t budget) {
  const auto& f = gens.front().field();
  std::vector<Matrix> transposed;
  for (const auto& g : gens) transposed.push_back(g.transpose());

  std::vector<Matrix> pool = gens;
  constexpr std::size_t max_pool = 24;
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    {
      const auto& a = pool[rng() % pool.size()];
      const auto& b = pool[rng() % pool.size()];
      if (pool.size() < max_pool) {
        pool.push_back(a * b);
      } else {
        pool[gens.size() + rng() % (max_pool - gens.size())] = a * b;
      }
    }
    Matrix theta(f, dim, dim);
    for (const auto& m : pool) theta.add_scaled(static_cast<Fp>(rng() % f.p()), m);

    for (Fp lambda : roots(f, characteristic_polynomial(theta), rng())) {
      Matrix shifted = theta;
      for (std::size_t i = 0; i < dim; ++i) shifted(i, i) = f.sub(shifted(i, i), lambda);
      const Matrix ker = kernel_basis(shifted);
      Subspace u = spin(f, {random_nonzero_in(ker, rng)}, gens, dim);
      if (u.dim() < dim) return {SplitResult::Kind::Split, std::move(u)};
      const Matrix ker_t = kernel_basis(shifted.transpose());
      Subspace w = spin(f, {random_nonzero_in(ker_t, rng)}, transposed, dim);
      if (w.dim() < dim) return {SplitResult::Kind::Split, annihilator_of_dual(w)};
      if (ker.rows() == 1) return {SplitResult::Kind::Irreducible, Subspace(f, dim)};
    }
  }
  fail(ErrorCode::BudgetExceeded,
       "no splitting or certifying element found for a module of dimension " +
           std::to_string(dim) + " after " + std::to_string(budget) +
           " attempts; a composition factor may not be absolutely irreducible over F_" +
           std::to_string(f.p()));
}

/// Action on a submodule and on the quotient, in the basis (sub rows,
/// then standard vectors at non-pivot columns).
inline std::pair<std::vector<Matrix>, std::vector<Matrix>> sub_and_quotient(
    const std::vector<Matrix>& gens, const Subspace& sub) {
  const auto& f = gens.front().field();
  const std::size_t m = sub.ambient_dim(), k = sub.dim();
  std::vector<Vector> cols = sub.basis_vectors();
  std::vector<bool> pivot(m, false);
  for (auto c : sub.pivots()) pivot[c] = true;
  for (std::size_t j = 0; j < m; ++j)
    if (!pivot[j]) cols.push_back(unit_vector(m, j));
  const Matrix t = Matrix::from_columns(f, m, cols);
  const Matrix t_inv = *inverse(t);
  std::vector<Matrix> subs, quots;
  for (const auto& g : gens) {
    const Matrix x = t_inv * g * t;
    if (!x.block(k, 0, m - k, k).is_zero())
      fail(ErrorCode::NotAModule, "split subspace is not invariant");
    subs.push_back(x.block(0, 0, k, k));
    quots.push_back(x.block(k, k, m - k, m - k));
  }
  return {std::move(subs), std::move(quots)};
}

inline void chop_into(const std::vector<Matrix>& gens, std::size_t dim, std::mt19937_64& rng,
                      std::size_t budget, std::vector<std::vector<Matrix>>& out) {
  if (dim == 1) {
    out.push_back(gens);
    return;
  }
  SplitResult r = find_split(gens, dim, rng, budget);
  if (r.kind == SplitResult::Kind::Irreducible) {
    out.push_back(gens);
    return;
  }
  auto [sub, quot] = sub_and_quotient(gens, r.sub);
  chop_into(sub, r.sub.dim(), rng, budget, out);
  chop_into(quot, dim - r.sub.dim(), rng, budget, out);
}

}  // namespace detail

/// Composition factors of m with multiplicities, one record per
/// isomorphism class, ordered by (dimension, annihilator).
inline std::vector<SimpleRecord> chop(const ModuleRep& m, const ChopOptions& options = {}) {
  const auto& alg = m.algebra();
  std::vector<std::vector<Matrix>> raw;
  std::mt19937_64 rng(options.seed);
  if (alg.generators().empty()) {
    // The algebra is F_p itself; every module is a sum of dim copies of k.
    for (std::size_t i = 0; i < m.dim(); ++i) raw.emplace_back();
  } else {
    detail::chop_into(m.generator_action(), m.dim(), rng, options.attempts_per_split, raw);
  }

  std::vector<SimpleRecord> records;
  for (const auto& gens : raw) {
    ModuleRep factor = alg.generators().empty()
                           ? ModuleRep::from_character(alg, alg.unit())
                           : ModuleRep::from_generator_action(alg, gens);
    bool merged = false;
    for (auto& rec : records) {
      if (iso_simple(rec.module, factor)) {
        ++rec.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) {
      Subspace ann = annihilator(factor);
      records.push_back({std::move(factor), std::move(ann), 1});
    }
  }
  std::stable_sort(records.begin(), records.end(), [](const SimpleRecord& a, const SimpleRecord& b) {
    if (a.module.dim() != b.module.dim()) return a.module.dim() < b.module.dim();
    return a.annihilator < b.annihilator;
  });
  return records;
}

/// All simple modules of the algebra, from the regular module (which
/// contains every simple). Multiplicities are those in the regular module.
inline std::vector<SimpleRecord> simples(const Algebra& alg, const ChopOptions& options = {}) {
  return chop(ModuleRep::regular(alg), options);
}

}  // namespace hopfx
