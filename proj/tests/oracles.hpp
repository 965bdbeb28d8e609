#pragma once

// Independent reference computations used by the tests. Nothing here calls
// the chop, character or winding code it is meant to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hopfx/hopfx.hpp"

namespace oracle {

using namespace hopfx;

inline std::string fixture(const std::string& name) { return std::string(HOPFX_FIXTURE_DIR) + "/" + name; }

inline std::uint64_t order_by_powers(std::uint64_t p, std::uint64_t x) {
  std::uint64_t y = x % p, k = 1;
  while (y != 1) {
    y = y * x % p;
    ++k;
  }
  return k;
}

/// Determinant by cofactor expansion over F_p (small matrices only).
inline Fp cofactor_det(const PrimeField& f, const std::vector<std::vector<Fp>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Fp acc = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Fp>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Fp> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    Fp term = f.mul(m[0][c], cofactor_det(f, minor));
    acc = c % 2 == 0 ? f.add(acc, term) : f.sub(acc, term);
  }
  return acc;
}

/// Every x in F_p^n, in lexicographic order, passed to `visit`.
inline void for_each_vector(std::uint64_t p, std::size_t n, const std::function<void(const Vector&)>& visit) {
  Vector v(n, 0);
  while (true) {
    visit(v);
    std::size_t i = 0;
    while (i < n && ++v[i] == p) v[i++] = 0;
    if (i == n) return;
  }
}

inline bool multiplicative(const Algebra& alg, const Vector& chi) {
  const auto& f = alg.field();
  if (dot(f, chi, alg.unit()) != 1) return false;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      Fp lhs = 0;
      for (const auto& t : alg.product(i, j)) lhs = f.fma(lhs, t.coeff, chi[t.index]);
      if (lhs != f.mul(chi[i], chi[j])) return false;
    }
  }
  return true;
}

/// Characters by backtracking over the generator images: each generator
/// is given every value in F_p, extended to words letter by letter, and
/// the survivors are checked on every basis pair.
inline std::vector<Vector> brute_force_characters(const Algebra& alg) {
  const auto& f = alg.field();
  const auto& gens = alg.generators();
  const auto& words = alg.words();
  const Matrix& coords = alg.word_coordinates();
  std::vector<Vector> out;
  std::vector<Fp> gval(gens.size(), 0);

  auto slot_of = [&](std::size_t g) {
    return static_cast<std::size_t>(std::find(gens.begin(), gens.end(), g) - gens.begin());
  };
  // Letters of each word, as generator slots.
  std::vector<std::vector<std::size_t>> letters(words.size());
  for (std::size_t w = 1; w < words.size(); ++w) {
    letters[w] = letters[words[w].parent];
    letters[w].push_back(slot_of(words[w].generator));
  }

  std::function<void(std::size_t)> assign = [&](std::size_t depth) {
    if (depth == gens.size()) {
      Vector wv(words.size());
      for (std::size_t w = 0; w < words.size(); ++w) {
        Fp v = 1;
        for (auto s : letters[w]) v = f.mul(v, gval[s]);
        wv[w] = v;
      }
      Vector chi(alg.dim(), 0);
      for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t w = 0; w < words.size(); ++w) chi[i] = f.fma(chi[i], coords(w, i), wv[w]);
      if (multiplicative(alg, chi)) out.push_back(chi);
      return;
    }
    for (Fp x = 0; x < f.p(); ++x) {
      gval[depth] = x;
      // g^2 = c g forces chi(g) in {0, c}
      const std::size_t g = gens[depth];
      bool ok = true;
      const auto& sq = alg.product(g, g);
      if (sq.size() == 1 && sq.front().index == g) ok = f.mul(x, x) == f.mul(sq.front().coeff, x);
      if (ok) assign(depth + 1);
    }
  };
  assign(0);
  std::sort(out.begin(), out.end());
  return out;
}

/// True when no proper nonzero subspace of F_p^d is invariant under
/// `gens`: every nonzero vector spins up to the whole space.
inline bool irreducible_by_search(const PrimeField& f, const std::vector<Matrix>& gens, std::size_t d) {
  bool irreducible = true;
  for_each_vector(f.p(), d, [&](const Vector& v) {
    if (!irreducible || is_zero(v)) return;
    EchelonBasis span(f, d);
    std::vector<Vector> queue{v};
    span.insert(v);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (const auto& g : gens) {
        Vector w = g.apply(queue[q]);
        if (span.insert(w)) queue.push_back(w);
      }
    }
    if (!span.full()) irreducible = false;
  });
  return irreducible;
}

/// Whether some permutation of basis indices carries one bialgebra's
/// structure tensors exactly onto the other's.
inline bool isomorphic_by_basis_permutation(const Bialgebra& x, const Bialgebra& y) {
  const std::size_t n = x.dim();
  if (n != y.dim() || x.field().p() != y.field().p() || n > 8) return false;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (x.algebra().unit()[i] != y.algebra().unit()[perm[i]]) ok = false;
      if (x.counit()[i] != y.counit()[perm[i]]) ok = false;
    }
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) {
        Vector px(n, 0), py(n, 0);
        for (const auto& t : x.algebra().product(i, j)) px[perm[t.index]] = t.coeff;
        for (const auto& t : y.algebra().product(perm[i], perm[j])) py[t.index] = t.coeff;
        ok = px == py;
      }
    }
    for (std::size_t i = 0; i < n && ok; ++i) {
      const Tensor tx = x.coproduct_of(unit_vector(n, i));
      const Tensor ty = y.coproduct_of(unit_vector(n, perm[i]));
      for (std::size_t a = 0; a < n && ok; ++a)
        for (std::size_t b = 0; b < n && ok; ++b) ok = tx(a, b) == ty(perm[a], perm[b]);
    }
    if (ok && x.has_antipode() != y.has_antipode()) ok = false;
    if (ok && x.has_antipode()) {
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = 0; j < n && ok; ++j) ok = x.antipode()(i, j) == y.antipode()(perm[i], perm[j]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// (e_i e_j) e_k == e_i (e_j e_k) from raw structure constants, which need
/// not define an associative algebra.
inline bool raw_associative_at(const AlgebraFile& file, std::size_t i, std::size_t j, std::size_t k) {
  const PrimeField f(file.p);
  const std::size_t n = file.dim;
  auto prod = [&](const Vector& x, const Vector& y) {
    Vector r(n, 0);
    for (const auto& e : file.mul) r[e.k] = f.add(r[e.k], f.mul(e.c, f.mul(x[e.i], y[e.j])));
    return r;
  };
  const Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
  return prod(prod(ei, ej), ek) == prod(ei, prod(ej, ek));
}

}  // namespace oracle
