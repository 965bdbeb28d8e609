#pragma once

// Arithmetic in the prime field F_p. Elements are plain residues in [0, p);
// the field object carries the modulus and performs every operation, so
// values stay cheap to store in dense matrices.

#include <cstdint>
#include <string>
#include <vector>

#include "hopfx/error.hpp"

namespace hopfx {

using Fp = std::uint32_t;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

class PrimeField {
 public:
  static constexpr std::uint64_t max_modulus = std::uint64_t{1} << 31;

  explicit PrimeField(std::uint64_t p) : p_(0) {
    if (p > max_modulus || !is_prime(p)) {
      fail(ErrorCode::NotPrime, std::to_string(p) + " is not a prime <= 2^31");
    }
    p_ = static_cast<Fp>(p);
  }

  Fp p() const noexcept { return p_; }

  Fp reduce(std::int64_t x) const noexcept {
    auto r = x % static_cast<std::int64_t>(p_);
    return static_cast<Fp>(r < 0 ? r + p_ : r);
  }
  Fp reduce_u(std::uint64_t x) const noexcept { return static_cast<Fp>(x % p_); }

  Fp add(Fp a, Fp b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Fp>(s >= p_ ? s - p_ : s);
  }
  Fp sub(Fp a, Fp b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
  Fp neg(Fp a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Fp mul(Fp a, Fp b) const noexcept {
    return static_cast<Fp>((std::uint64_t{a} * b) % p_);
  }
  // a + b*c
  Fp fma(Fp a, Fp b, Fp c) const noexcept {
    return static_cast<Fp>((std::uint64_t{a} + std::uint64_t{b} * c) % p_);
  }

  Fp pow(Fp base, std::uint64_t e) const noexcept {
    std::uint64_t result = 1 % p_, b = base % p_;
    while (e > 0) {
      if (e & 1U) result = (result * b) % p_;
      b = (b * b) % p_;
      e >>= 1U;
    }
    return static_cast<Fp>(result);
  }

  Fp inv(Fp a) const {
    if (a % p_ == 0) fail(ErrorCode::InvalidArgument, "inverse of zero");
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    return reduce(t);
  }

  Fp div(Fp a, Fp b) const { return mul(a, inv(b)); }

  /// Signed representative in (-p/2, p/2], handy for labels and reports.
  std::int64_t centered(Fp a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Fp p_;
};

/// Multiplicative order of a nonzero x.
inline std::uint64_t multiplicative_order(const PrimeField& f, Fp x) {
  if (x == 0) fail(ErrorCode::InvalidArgument, "order of zero");
  std::uint64_t order = 1;
  Fp y = x;
  while (y != 1) {
    y = f.mul(y, x);
    ++order;
  }
  return order;
}

/// Smallest residue of multiplicative order exactly m.
inline Fp find_root_of_unity(const PrimeField& f, std::uint64_t m) {
  if (m == 0) fail(ErrorCode::InvalidArgument, "order must be >= 1");
  const std::uint64_t group_order = f.p() - 1;
  if (group_order % m != 0) {
    fail(ErrorCode::NoSuchRoot, std::to_string(m) + " does not divide p-1 = " +
                                    std::to_string(group_order));
  }
  std::vector<std::uint64_t> prime_divisors;
  {
    std::uint64_t n = m;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        prime_divisors.push_back(d);
        while (n % d == 0) n /= d;
      }
    }
    if (n > 1) prime_divisors.push_back(n);
  }
  for (Fp x = 1; x < f.p(); ++x) {
    if (f.pow(x, m) != 1) continue;
    bool exact = true;
    for (auto q : prime_divisors) {
      if (f.pow(x, m / q) == 1) {
        exact = false;
        break;
      }
    }
    if (exact) return x;
  }
  fail(ErrorCode::NoSuchRoot, "no element of order " + std::to_string(m));
}

}  // namespace hopfx
