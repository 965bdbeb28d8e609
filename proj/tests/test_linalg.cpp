#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "oracles.hpp"

using namespace hopfx;

namespace {

Matrix random_matrix(const PrimeField& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Fp>(rng() % f.p());
  return m;
}

// Low-rank matrices make intersections nontrivial.
Matrix random_low_rank(const PrimeField& f, std::size_t r, std::size_t c, std::size_t k, std::mt19937_64& rng) {
  return random_matrix(f, r, k, rng) * random_matrix(f, k, c, rng);
}

}  // namespace

TEST_CASE("field arithmetic and inverses", "[field]") {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 31}) {
    const PrimeField f(p);
    for (Fp a = 1; a < p; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.neg(0) == 0);
    CHECK(f.reduce(-1) == p - 1);
  }
  CHECK_THROWS_AS(PrimeField(9), Error);
  CHECK_THROWS_AS(PrimeField(7).inv(0), Error);
}

TEST_CASE("roots of unity against the order of each residue", "[field]") {
  const PrimeField f7(7);
  CHECK(find_root_of_unity(f7, 3) == 2);
  CHECK(find_root_of_unity(f7, 1) == 1);
  try {
    find_root_of_unity(f7, 5);
    FAIL("expected NoSuchRoot");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoSuchRoot);
  }
  for (std::uint64_t p : {5, 7, 11, 13, 31}) {
    const PrimeField f(p);
    for (std::uint64_t m = 1; m < p; ++m) {
      if ((p - 1) % m != 0) continue;
      Fp expected = 0;
      for (Fp x = 1; x < p && expected == 0; ++x)
        if (oracle::order_by_powers(p, x) == m) expected = x;
      CHECK(find_root_of_unity(f, m) == expected);
      CHECK(multiplicative_order(f, expected) == m);
    }
  }
}

TEST_CASE("rref examples", "[rref]") {
  const PrimeField f(7);
  const auto r = rref(Matrix::from_rows(f, {{2, 4}, {1, 2}}));
  CHECK(r.rank == 1);
  CHECK(r.reduced == Matrix::from_rows(f, {{1, 2}, {0, 0}}));
  CHECK(r.pivots == std::vector<std::size_t>{0});

  const auto id = rref(Matrix::from_rows(f, {{0, 3}, {5, 1}}));
  CHECK(id.rank == 2);
  CHECK(id.reduced == Matrix::identity(f, 2));
}

TEST_CASE("rref is canonical for the row space", "[rref]") {
  const PrimeField f(5);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix m = random_low_rank(f, 4, 6, 1 + trial % 4, rng);
    // any invertible row operation leaves the RREF unchanged
    Matrix g = random_matrix(f, 4, 4, rng);
    while (determinant(g) == 0) g = random_matrix(f, 4, 4, rng);
    CHECK(rref(g * m).reduced == rref(m).reduced);
  }
}

TEST_CASE("determinant agrees with cofactor expansion", "[rref]") {
  const PrimeField f(7);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const Matrix m = random_matrix(f, n, n, rng);
    std::vector<std::vector<Fp>> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = m.row_vector(i);
    CHECK(determinant(m) == oracle::cofactor_det(f, rows));
    CHECK(inverse(m).has_value() == (determinant(m) != 0));
    if (auto inv = inverse(m)) CHECK(*inv * m == Matrix::identity(f, n));
  }
}

TEST_CASE("solve", "[solve]") {
  const PrimeField f(7);
  SECTION("zero matrix with nonzero right-hand side is inconsistent") {
    const auto s = solve(Matrix(f, 2, 3), Matrix::from_rows(f, {{1}, {0}}));
    CHECK_FALSE(s.consistent);
    CHECK(s.kernel.dim() == 3);
  }
  SECTION("particular solutions reproduce the right-hand side") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      const Matrix m = random_low_rank(f, 4, 5, 1 + trial % 4, rng);
      const Matrix x = random_matrix(f, 5, 2, rng);
      const Matrix rhs = m * x;
      const auto s = solve(m, rhs);
      REQUIRE(s.consistent);
      CHECK(m * s.particular == rhs);
      CHECK(s.kernel.dim() == 5 - rank(m));
      for (const auto& k : s.kernel.basis_vectors()) CHECK(is_zero(m.apply(k)));
    }
  }
}

TEST_CASE("subspace dimension formula on random pairs", "[subspace]") {
  const PrimeField f(3);
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const Subspace u = Subspace::from_rows(random_low_rank(f, 1 + rng() % n, n, 1 + rng() % n, rng));
    const Subspace w = Subspace::from_rows(random_low_rank(f, 1 + rng() % n, n, 1 + rng() % n, rng));
    const Subspace s = sum(u, w);
    const Subspace i = intersect(u, w);
    REQUIRE(s.dim() + i.dim() == u.dim() + w.dim());
    CHECK(intersect(u, u) == u);
    CHECK(u.contains(i));
    CHECK(w.contains(i));
    CHECK(s.contains(u));
    CHECK(s.contains(w));
  }
}

TEST_CASE("subspace membership and coordinates", "[subspace]") {
  const PrimeField f(7);
  const Subspace s = Subspace::span(f, 3, {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  CHECK(s.dim() == 2);
  CHECK(s.contains(Vector{1, 3, 4}));
  CHECK_FALSE(s.contains(Vector{0, 0, 1}));
  const auto c = s.coordinates(Vector{1, 3, 4});
  REQUIRE(c);
  CHECK(s.combine(*c) == Vector{1, 3, 4});
  CHECK(Subspace::zero(f, 3).is_zero());
  CHECK(Subspace::whole(f, 3).is_whole());
}

TEST_CASE("characteristic polynomial matches det(xI - M) pointwise", "[poly]") {
  const PrimeField f(11);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const Matrix m = random_matrix(f, n, n, rng);
    const Poly chi = characteristic_polynomial(m);
    REQUIRE(chi.size() == n + 1);
    CHECK(chi.back() == 1);
    for (Fp x = 0; x < f.p(); ++x) {
      std::vector<std::vector<Fp>> rows(n, std::vector<Fp>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = f.sub(i == j ? x : 0, m(i, j));
      CHECK(poly::eval(f, chi, x) == oracle::cofactor_det(f, rows));
    }
    // Cayley-Hamilton
    CHECK(evaluate_at(chi, m).is_zero());
  }
}

TEST_CASE("polynomial roots are exactly the zeros", "[poly]") {
  const PrimeField f(13);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    Poly a(1 + rng() % 6);
    for (auto& c : a) c = static_cast<Fp>(rng() % f.p());
    a.push_back(1);
    std::set<Fp> expected;
    for (Fp x = 0; x < f.p(); ++x)
      if (poly::eval(f, a, x) == 0) expected.insert(x);
    const auto found = roots(f, a, trial);
    CHECK(std::set<Fp>(found.begin(), found.end()) == expected);
    CHECK(found.size() == expected.size());
  }
}
