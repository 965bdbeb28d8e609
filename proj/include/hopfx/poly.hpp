#pragma once

// Univariate polynomials over F_p, coefficients stored low degree first.
// Only what the chop needs: characteristic polynomials and their roots.

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "hopfx/field.hpp"
#include "hopfx/matrix.hpp"

namespace hopfx {

using Poly = std::vector<Fp>;

namespace poly {

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Fp eval(const PrimeField& f, const Poly& a, Fp x) {
  Fp acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = f.fma(*it, acc, x);
  return acc;
}

inline Poly mul(const PrimeField& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.fma(c[i + j], a[i], b[j]);
  }
  trim(c);
  return c;
}

inline Poly sub(const PrimeField& f, Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  trim(a);
  return a;
}

/// Remainder of a modulo a nonzero b.
inline Poly mod(const PrimeField& f, Poly a, const Poly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const Fp lead_inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    const Fp q = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(q, b[i]));
    trim(a);
  }
  return a;
}

inline Poly monic(const PrimeField& f, Poly a) {
  trim(a);
  if (a.empty()) return a;
  const Fp inv = f.inv(a.back());
  for (auto& c : a) c = f.mul(c, inv);
  return a;
}

inline Poly gcd(const PrimeField& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, std::move(a));
}

inline Poly powmod(const PrimeField& f, Poly base, std::uint64_t e, const Poly& m) {
  Poly result{1};
  base = mod(f, std::move(base), m);
  while (e > 0) {
    if (e & 1U) result = mod(f, mul(f, result, base), m);
    base = mod(f, mul(f, base, base), m);
    e >>= 1U;
  }
  return result;
}

/// Monic quotient a / b for an exact divisor b.
inline Poly divide_exact(const PrimeField& f, Poly a, const Poly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const Fp lead_inv = f.inv(b.back());
  Poly q(a.size() - db, 0);
  while (a.size() >= b.size()) {
    const Fp c = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - db;
    q[shift] = c;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    trim(a);
  }
  return q;
}

inline void split_roots(const PrimeField& f, const Poly& g, std::mt19937_64& rng,
                        std::vector<Fp>& out) {
  const std::size_t deg = g.size() - 1;
  if (deg == 0) return;
  if (deg == 1) {
    out.push_back(f.neg(f.mul(g[0], f.inv(g[1]))));
    return;
  }
  // g is a product of distinct linear factors; p is odd here.
  for (;;) {
    const Fp delta = static_cast<Fp>(rng() % f.p());
    Poly h = powmod(f, Poly{delta, 1}, (f.p() - 1) / 2, g);
    h = poly::sub(f, h, Poly{1});
    Poly d = gcd(f, g, h);
    if (d.size() > 1 && d.size() < g.size()) {
      split_roots(f, d, rng, out);
      split_roots(f, divide_exact(f, g, d), rng, out);
      return;
    }
  }
}

}  // namespace poly

/// Distinct roots of a nonzero polynomial in F_p, ascending.
inline std::vector<Fp> roots(const PrimeField& f, Poly a, std::uint64_t seed = 0) {
  poly::trim(a);
  std::vector<Fp> out;
  if (a.size() <= 1) return out;
  if (f.p() <= 4096) {
    for (Fp x = 0; x < f.p(); ++x)
      if (poly::eval(f, a, x) == 0) out.push_back(x);
    return out;
  }
  // gcd with x^p - x isolates the product of distinct linear factors.
  Poly xp = poly::powmod(f, Poly{0, 1}, f.p(), a);
  Poly g = poly::gcd(f, a, poly::sub(f, xp, Poly{0, 1}));
  std::mt19937_64 rng(seed);
  poly::split_roots(f, g, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// Characteristic polynomial det(xI - M) by reduction to Hessenberg form.
inline Poly characteristic_polynomial(Matrix h) {
  if (!h.square()) fail(ErrorCode::DimensionMismatch, "charpoly of non-square");
  const auto& f = h.field();
  const std::size_t n = h.rows();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && h(piv, m - 1) == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      std::swap_ranges(h.row(piv).begin(), h.row(piv).end(), h.row(m).begin());
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, m));
    }
    const Fp t_inv = f.inv(h(m, m - 1));
    for (std::size_t i = m + 1; i < n; ++i) {
      const Fp u = f.mul(h(i, m - 1), t_inv);
      if (u == 0) continue;
      axpy(f, f.neg(u), h.row(m), h.row(i));
      for (std::size_t r = 0; r < n; ++r) h(r, m) = f.fma(h(r, m), u, h(r, i));
    }
  }
  std::vector<Poly> p(n + 1);
  p[0] = Poly{1};
  for (std::size_t m = 1; m <= n; ++m) {
    p[m] = poly::mul(f, Poly{f.neg(h(m - 1, m - 1)), 1}, p[m - 1]);
    Fp t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = f.mul(t, h(i, i - 1));
      const Fp c = f.mul(h(i - 1, m - 1), t);
      if (c != 0) p[m] = poly::sub(f, p[m], poly::mul(f, Poly{c}, p[i - 1]));
    }
    if (p[m].size() < m + 1) p[m].resize(m + 1, 0);
  }
  poly::trim(p[n]);
  return p[n];
}

/// Evaluates the polynomial a at the square matrix m.
inline Matrix evaluate_at(const Poly& a, const Matrix& m) {
  const auto& f = m.field();
  Matrix acc(f, m.rows(), m.cols());
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) = f.add(acc(i, i), *it);
  }
  return acc;
}

}  // namespace hopfx
