#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"

using namespace hopfx;

namespace {

// Matrix units e_ab, index 2a + b.
Algebra matrix_algebra_2(const PrimeField& f) {
  std::vector<MulEntry> entries;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t d = 0; d < 2; ++d) entries.push_back({2 * a + b, 2 * b + d, 2 * a + d, 1});
  return build_algebra(f, 4, {1, 0, 0, 1}, entries, {"e11", "e12", "e21", "e22"});
}

std::vector<MulEntry> cyclic_entries(std::size_t n) {
  std::vector<MulEntry> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) entries.push_back({i, j, (i + j) % n, 1});
  return entries;
}

std::vector<std::size_t> dims_of(const std::vector<SimpleRecord>& s) {
  std::vector<std::size_t> d;
  for (const auto& r : s) d.push_back(r.module.dim());
  return d;
}

}  // namespace

TEST_CASE("building C3 and M2", "[algebra]") {
  const PrimeField f(7);
  const Algebra c3 = build_algebra(f, 3, {1, 0, 0}, cyclic_entries(3), {"e", "g", "g2"});
  CHECK(c3.is_commutative());
  CHECK(c3.multiply(Vector{0, 1, 0}, Vector{0, 0, 1}) == Vector{1, 0, 0});
  CHECK(c3.same_structure(group_algebra(f, cyclic_group(3)).algebra()));

  const Algebra m2 = matrix_algebra_2(f);
  CHECK_FALSE(m2.is_commutative());
  CHECK(m2.multiply(Vector{0, 1, 0, 0}, Vector{0, 0, 1, 0}) == Vector{1, 0, 0, 0});
  CHECK(is_zero(m2.multiply(Vector{0, 0, 1, 0}, Vector{0, 0, 1, 0})));
}

TEST_CASE("a perturbed table is rejected as non-associative", "[algebra]") {
  const PrimeField f(7);
  auto entries = cyclic_entries(3);
  for (auto& e : entries)
    if (e.i == 1 && e.j == 2) e.k = 1;  // g * g^2 = g
  try {
    build_algebra(f, 3, {1, 0, 0}, entries, {});
    FAIL("expected NotAssociative");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAssociative);
    REQUIRE(e.witness().size() == 3);
  }
  CHECK_THROWS_AS(build_algebra(f, 3, {0, 1, 0}, cyclic_entries(3), {}), Error);
}

TEST_CASE("the regular representation is a homomorphism", "[algebra]") {
  for (const std::string name : {"q8", "qsl2", "usl2"}) {
    const Algebra alg = shipped_instance(name).h.algebra();
    const auto reg = regular_module(alg);
    const auto& f = alg.field();
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      for (std::size_t j = 0; j < alg.dim(); ++j) {
        Matrix lhs(f, alg.dim(), alg.dim());
        for (const auto& t : alg.product(i, j)) lhs.add_scaled(t.coeff, reg[t.index]);
        REQUIRE(lhs == reg[i] * reg[j]);
      }
    }
  }
}

TEST_CASE("ideal closure and quotients", "[algebra]") {
  SECTION("M2 is simple: any nonzero element generates everything") {
    const PrimeField f(5);
    const Algebra m2 = matrix_algebra_2(f);
    oracle::for_each_vector(5, 4, [&](const Vector& v) {
      if (is_zero(v)) return;
      REQUIRE(ideal_closure(m2, Subspace::span(f, 4, {v})).is_whole());
    });
  }
  SECTION("F5[C4] / (g^2 - 1) is F5[C2]") {
    const PrimeField f(5);
    const Algebra c4 = group_algebra(f, cyclic_group(4)).algebra();
    const Subspace ideal = ideal_closure(c4, Subspace::span(f, 4, {{f.neg(1), 0, 1, 0}}));
    CHECK(ideal.dim() == 2);
    CHECK(is_two_sided_ideal(c4, ideal));
    const Quotient q = quotient_algebra(c4, ideal);
    CHECK(q.retained == std::vector<std::size_t>{2, 3});
    CHECK(q.algebra.same_structure(group_algebra(f, cyclic_group(2)).algebra()));
    // the projection is an algebra map
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        CHECK(q.projection.apply(c4.multiply(c4.basis_element(i), c4.basis_element(j))) ==
              q.algebra.multiply(q.projection.column(i), q.projection.column(j)));
  }
  SECTION("the unit generates an improper ideal") {
    const PrimeField f(7);
    const Algebra c3 = group_algebra(f, cyclic_group(3)).algebra();
    const Subspace everything = ideal_closure(c3, Subspace::span(f, 3, {c3.unit()}));
    CHECK_THROWS_AS(quotient_algebra(c3, everything), Error);
  }
}

TEST_CASE("centers against exhaustive search", "[algebra]") {
  const PrimeField f(7);
  const Algebra m2 = matrix_algebra_2(f);
  std::size_t commuting = 0;
  oracle::for_each_vector(7, 4, [&](const Vector& v) {
    bool central = true;
    for (std::size_t i = 0; i < 4 && central; ++i)
      central = m2.multiply(v, m2.basis_element(i)) == m2.multiply(m2.basis_element(i), v);
    if (central) ++commuting;
  });
  CHECK(commuting == 7);
  const Subspace z = center(m2);
  CHECK(z.dim() == 1);
  CHECK(z.contains(m2.unit()));

  const auto q8 = quaternion_group();
  CHECK(center(group_algebra(f, q8).algebra()).dim() == 5);  // class sums
  CHECK(center(group_algebra(f, symmetric_group_3()).algebra()).dim() == 3);
}

TEST_CASE("simples of small group algebras and M2", "[repn]") {
  const PrimeField f(7);
  SECTION("F7[C3]") {
    const auto s = simples(group_algebra(f, cyclic_group(3)).algebra());
    CHECK(dims_of(s) == std::vector<std::size_t>{1, 1, 1});
    for (const auto& r : s) CHECK(r.multiplicity == 1);
  }
  SECTION("F7[S3]") {
    const auto s = simples(group_algebra(f, symmetric_group_3()).algebra());
    CHECK(dims_of(s) == std::vector<std::size_t>{1, 1, 2});
    CHECK(s[2].multiplicity == 2);
  }
  SECTION("M2") {
    const auto s = simples(matrix_algebra_2(f));
    CHECK(dims_of(s) == std::vector<std::size_t>{2});
    CHECK(s[0].multiplicity == 2);
    CHECK(s[0].annihilator.is_zero());
  }
  SECTION("F2[C2] is local") {
    const PrimeField f2(2);
    const auto s = simples(group_algebra(f2, cyclic_group(2)).algebra());
    CHECK(dims_of(s) == std::vector<std::size_t>{1});
    CHECK(s[0].multiplicity == 2);
  }
}

TEST_CASE("the three-dimensional u(sl2) module from highest weight data", "[repn]") {
  const auto file = small_quantum_sl2_presentation(3, 7);
  const auto ex = extract_bialgebra(file.presentation, *file.structure);
  const Algebra& alg = ex.bialgebra.algebra();
  const PrimeField f(7);
  const Fp q = 2, qi = f.inv(q);
  auto bracket = [&](std::uint64_t n) {
    return f.div(f.sub(f.pow(q, n), f.pow(qi, n)), f.sub(q, qi));
  };
  // v0, v1, v2 with K v_i = q^(2-2i) v_i, F v_i = v_(i+1), E v_i = [i][3-i] v_(i-1)
  Matrix mf(f, 3, 3), mk(f, 3, 3), me(f, 3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    mk(i, i) = f.mul(f.pow(q, 2), f.pow(qi, 2 * i));
    if (i + 1 < 3) mf(i + 1, i) = 1;
    if (i > 0) me(i - 1, i) = f.mul(bracket(i), bracket(3 - i));
  }
  const std::vector<Matrix> gens = {mf, mk, me};  // F, K, E
  std::vector<Matrix> action;
  for (const auto& w : ex.basis) {
    Matrix m = Matrix::identity(f, 3);
    for (auto g : w) m = m * gens[g];
    action.push_back(m);
  }
  const ModuleRep v(alg, action);  // throws NotAModule on a wrong relation
  CHECK(oracle::irreducible_by_search(f, gens, 3));

  const auto s = simples(alg);
  CHECK(dims_of(s) == std::vector<std::size_t>{1, 2, 3});
  CHECK(iso_simple(s.back().module, v));
  CHECK_FALSE(iso_simple(s.front().module, s.back().module));
}

TEST_CASE("a non-module is rejected", "[repn]") {
  const PrimeField f(7);
  const Algebra c3 = group_algebra(f, cyclic_group(3)).algebra();
  Matrix g(f, 1, 1);
  g(0, 0) = 3;  // 3^3 = 6 in F7, not 1
  try {
    ModuleRep::from_generator_action(c3, {g});
    FAIL("expected NotAModule");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAModule);
  }
}

TEST_CASE("twisting one-dimensional modules by windings", "[repn]") {
  const auto inst = shipped_instance("qsl2");
  const auto& b = inst.h;
  const auto& f = b.field();
  const auto chars = enumerate_characters(b);
  REQUIRE(chars.size() == 3);
  for (const auto& chi : chars) {
    const auto k_chi = ModuleRep::from_character(b.algebra(), chi.values);
    for (const auto& psi : chars) {
      const Matrix sigma = winding(b, psi);
      const auto twisted = twist(k_chi, sigma);
      // chi o sigma_psi computed straight from the matrix
      Vector values(b.dim(), 0);
      for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) values[i] = f.fma(values[i], chi.values[j], sigma(j, i));
      CHECK(iso_simple(twisted, ModuleRep::from_character(b.algebra(), values)));
      CHECK(iso_simple(twisted, k_chi) == (psi == counit_character(b)));
    }
  }
}

TEST_CASE("simples on every shipped instance", "[repn]") {
  for (const auto& name : shipped_instance_names()) {
    DYNAMIC_SECTION(name) {
      const auto inst = shipped_instance(name);
      const Algebra& alg = inst.h.algebra();
      const auto& f = alg.field();
      const auto s0 = simples(alg, {0});

      // composition factors of the regular module account for its dimension
      std::size_t total = 0;
      for (const auto& r : s0) total += r.multiplicity * r.module.dim();
      CHECK(total == alg.dim());

      // each simple is absolutely irreducible: its annihilator has codimension d^2
      for (const auto& r : s0) CHECK(alg.dim() - r.annihilator.dim() == r.module.dim() * r.module.dim());

      // independent irreducibility certificates for the small ones
      for (const auto& r : s0)
        if (r.module.dim() > 1 && r.module.dim() <= 3)
          CHECK(oracle::irreducible_by_search(f, r.module.generator_action(), r.module.dim()));

      // Wedderburn for the semisimple group algebras
      if (inst.warnings.empty() && inst.provenance.family == "group") {
        std::size_t sq = 0;
        for (const auto& r : s0) {
          sq += r.module.dim() * r.module.dim();
          CHECK(r.multiplicity == r.module.dim());
        }
        CHECK(sq == alg.dim());
      }

      // pairwise non-isomorphic, and the result does not depend on the seed
      for (std::size_t i = 0; i < s0.size(); ++i)
        for (std::size_t j = i + 1; j < s0.size(); ++j) CHECK_FALSE(iso_simple(s0[i].module, s0[j].module));
      for (std::uint64_t seed : {1, 2}) {
        const auto s = simples(alg, {seed});
        REQUIRE(s.size() == s0.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
          CHECK(s[i].annihilator == s0[i].annihilator);
          CHECK(s[i].multiplicity == s0[i].multiplicity);
          CHECK(iso_simple(s[i].module, s0[i].module));
        }
      }
    }
  }
}
