#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace hopfx;

namespace {

const std::vector<std::string> kHopfInstances = {"c3", "c4", "q8", "s3c2", "qsl2", "usl2"};

Vector restriction(const PrimeField& f, const Subspace& a, const Vector& chi) {
  Vector v;
  for (const auto& row : a.basis_vectors()) v.push_back(dot(f, chi, row));
  return v;
}

std::size_t index_of_word(const Presentation& pres, const std::vector<Word>& basis, const std::string& text) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (pres.to_string(basis[i]) == text) return i;
  FAIL("word not in basis: " << text);
  return 0;
}

}  // namespace

TEST_CASE("characters agree with the backtracking oracle", "[characters]") {
  for (const auto& name : shipped_instance_names()) {
    const auto inst = shipped_instance(name);
    if (inst.h.dim() > 30) continue;
    DYNAMIC_SECTION(name) {
      std::vector<Vector> via_chop;
      for (const auto& c : enumerate_characters(inst.h)) via_chop.push_back(c.values);
      CHECK(via_chop == oracle::brute_force_characters(inst.h.algebra()));
      if (inst.expected && inst.expected->characters) CHECK(via_chop.size() == *inst.expected->characters);
    }
  }
}

TEST_CASE("is_character rejects non-multiplicative functionals", "[characters]") {
  const auto inst = shipped_instance("c3");
  CHECK(is_character(inst.h.algebra(), Vector{1, 1, 1}));
  CHECK(is_character(inst.h.algebra(), Vector{1, 2, 4}));
  CHECK_FALSE(is_character(inst.h.algebra(), Vector{1, 2, 2}));
  CHECK_THROWS_AS(make_character(inst.h.algebra(), Vector{0, 1, 1}), Error);
}

TEST_CASE("convolution of characters", "[characters]") {
  for (const auto& name : kHopfInstances) {
    DYNAMIC_SECTION(name) {
      const auto inst = shipped_instance(name);
      const auto& b = inst.h;
      const auto chars = enumerate_characters(b);
      const Character eps = counit_character(b);
      REQUIRE(std::find(chars.begin(), chars.end(), eps) != chars.end());
      for (const auto& chi : chars) {
        CHECK(convolve(b, chi, eps) == chi);
        CHECK(convolve(b, eps, chi) == chi);
        CHECK(convolve(b, chi, convolution_inverse(b, chi)) == eps);
        for (const auto& psi : chars) {
          const auto prod = convolve(b, chi, psi);
          CHECK(std::find(chars.begin(), chars.end(), prod) != chars.end());
          for (const auto& phi : chars) CHECK(convolve(b, prod, phi) == convolve(b, chi, convolve(b, psi, phi)));
        }
      }
    }
  }
}

TEST_CASE("winding maps compose by convolution", "[winding]") {
  for (const auto& name : kHopfInstances) {
    DYNAMIC_SECTION(name) {
      const auto inst = shipped_instance(name);
      const auto& b = inst.h;
      const auto& f = b.field();
      const auto chars = enumerate_characters(b);
      const Vector eps_on_a = restriction(f, inst.a.subspace, b.counit());
      for (const auto& chi : chars) {
        const Matrix s_chi = winding(b, chi);
        for (const auto& chi2 : chars) {
          // sigma_chi o sigma_chi' = sigma_(chi' * chi)
          CHECK(s_chi * winding(b, chi2) == winding(b, convolve(b, chi2, chi)));
          CHECK(winding(b, chi, Side::Left) * winding(b, chi2, Side::Left) ==
                winding(b, convolve(b, chi, chi2), Side::Left));
        }
        // fixes A pointwise exactly when chi restricts to the counit on A
        const bool in_x = restriction(f, inst.a.subspace, chi.values) == eps_on_a;
        CHECK(fixes_pointwise(s_chi, inst.a.subspace) == in_x);
      }
      CHECK(winding(b, counit_character(b)) == Matrix::identity(f, b.dim()));
    }
  }
}

TEST_CASE("the character group X", "[winding]") {
  SECTION("Q8 over its center: X is the Klein four-group") {
    const auto inst = shipped_instance("q8");
    const auto x = character_group_X(inst.h, inst.a);
    REQUIRE(x.order() == 4);
    CHECK(x.is_abelian());
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(x.table[i][i] == x.identity);
      CHECK(x.inverse[i] == i);
    }
    CHECK(x.elements[x.identity] == counit_character(inst.h));
  }
  SECTION("A = H leaves only the counit") {
    const auto inst = shipped_instance("q8");
    const auto whole = make_coideal_subalgebra(inst.h, Subspace::whole(inst.h.field(), inst.h.dim()));
    const auto x = character_group_X(inst.h, whole);
    REQUIRE(x.order() == 1);
    CHECK(x.elements[0] == counit_character(inst.h));
  }
  SECTION("qsl2 kernel: X is cyclic of order 3") {
    const auto inst = shipped_instance("qsl2");
    const auto x = character_group_X(inst.h, inst.a);
    REQUIRE(x.order() == 3);
    for (std::size_t i = 0; i < 3; ++i)
      if (i != x.identity) CHECK(x.table[i][i] != x.identity);
  }
  SECTION("qm2 kernel without antipode") {
    const auto inst = shipped_instance("qm2");
    CHECK_THROWS_AS(character_group_X(inst.h, inst.a), Error);
    const auto x = character_group_X_bialgebra(inst.h, inst.a);
    CHECK(x.order() == 9);
    CHECK(x.is_abelian());
  }
}

TEST_CASE("right coideal checks", "[coideal]") {
  const auto file = small_quantum_sl2_presentation(3, 7);
  const auto ex = extract_bialgebra(file.presentation, *file.structure);
  const auto& b = ex.bialgebra;
  const auto& f = b.field();
  const std::size_t one = index_of_word(file.presentation, ex.basis, "1");
  const std::size_t k = index_of_word(file.presentation, ex.basis, "K");
  const std::size_t e = index_of_word(file.presentation, ex.basis, "E");
  const std::size_t ke = index_of_word(file.presentation, ex.basis, "K*E");

  auto code_of = [&](const Subspace& a) {
    try {
      is_right_coideal(b, a);
    } catch (const Error& err) {
      return err.code();
    }
    return ErrorCode::InvalidArgument;
  };
  // span{1, K + E} is not closed under products; span{K} misses the unit
  Vector k_plus_e = unit_vector(b.dim(), k);
  k_plus_e[e] = 1;
  CHECK(code_of(Subspace::span(f, b.dim(), {unit_vector(b.dim(), one), k_plus_e})) == ErrorCode::NotASubalgebra);
  CHECK(code_of(Subspace::span(f, b.dim(), {unit_vector(b.dim(), k)})) == ErrorCode::NotASubalgebra);

  // span{1, K, K^2, E, KE, K^2E, ...}: the Borel part is a right coideal subalgebra
  std::vector<Vector> borel;
  for (std::size_t i = 0; i < ex.basis.size(); ++i)
    if (std::count(ex.basis[i].begin(), ex.basis[i].end(), 0u) == 0) borel.push_back(unit_vector(b.dim(), i));
  const Subspace bo = Subspace::span(f, b.dim(), borel);
  CHECK(bo.dim() == 9);
  CHECK(bo.contains(unit_vector(b.dim(), ke)));
  CHECK(is_right_coideal(b, bo));
  CHECK(is_hopf_subalgebra(b, bo));
  CHECK_NOTHROW(make_coideal_subalgebra(b, bo));

  // span{1, E, E^2} is a subalgebra, but Delta(E) = E (x) 1 + K (x) E leaves it
  const std::size_t e2 = index_of_word(file.presentation, ex.basis, "E^2");
  const Subspace powers_of_e = Subspace::span(
      f, b.dim(), {unit_vector(b.dim(), one), unit_vector(b.dim(), e), unit_vector(b.dim(), e2)});
  REQUIRE(is_subalgebra(b.algebra(), powers_of_e));
  CHECK_FALSE(is_right_coideal(b, powers_of_e));

  // group-likes: F7[Z] inside F7[Q8], and the whole algebra
  const auto q8 = shipped_instance("q8");
  CHECK(is_right_coideal(q8.h, q8.a.subspace));
  CHECK(is_right_coideal(q8.h, Subspace::whole(q8.h.field(), 8)));
}

TEST_CASE("adjoint action on the regular bimodule", "[adjoint]") {
  for (const auto& name : kHopfInstances) {
    DYNAMIC_SECTION(name) {
      const auto inst = shipped_instance(name);
      const auto& b = inst.h;
      const auto& f = b.field();
      const Bimodule reg = regular_bimodule(b.algebra());
      const auto ad = adjoint_module(b, reg);
      // ad(h) 1 = eps(h) 1
      for (std::size_t h = 0; h < b.dim(); ++h)
        CHECK(ad[h].apply(b.algebra().unit()) == scale(f, b.counit()[h], b.algebra().unit()));
      // central elements are ad-invariant
      for (const auto& z : center(b.algebra()).basis_vectors())
        for (std::size_t h = 0; h < b.dim(); ++h) CHECK(ad[h].apply(z) == scale(f, b.counit()[h], z));

      const auto chars = enumerate_characters(b);
      const auto eig = ad_eigenspaces(b, ad, chars);
      REQUIRE_FALSE(eig.empty());
      for (const auto& space : eig) {
        for (const auto& n : space.eigenvectors.basis_vectors()) {
          for (std::size_t h = 0; h < b.dim(); ++h)
            REQUIRE(ad[h].apply(n) == scale(f, space.chi.values[h], n));
          CHECK(adjoint_eigenvector_identity(b, reg, space.chi, n));
        }
      }
    }
  }
}

TEST_CASE("a broken bimodule is rejected", "[adjoint]") {
  const auto inst = shipped_instance("s3c2");
  Bimodule v = regular_bimodule(inst.h.algebra());
  std::swap(v.left, v.right);  // right multiplication is not a left action of a nonabelian algebra
  CHECK_THROWS_AS(adjoint_module(inst.h, v), Error);
}

TEST_CASE("fiber quotients of Q8 over its center", "[fiber]") {
  const auto inst = shipped_instance("q8");
  const auto& f = inst.h.field();
  REQUIRE(inst.a.subspace.dim() == 2);

  SECTION("over the counit: the group algebra of Q8 / Z") {
    const auto fq = fiber_quotient(inst.h, inst.a, restriction(f, inst.a.subspace, inst.h.counit()));
    CHECK(fq.counit_fiber);
    REQUIRE(fq.structure);
    CHECK(fq.quotient.algebra.dim() == 4);
    CHECK(fq.x_elements.size() == 4);
    CHECK(fq.induced_windings.size() == 4);
    const auto g = quaternion_group();
    const auto qg = quotient_group(g, parse_subgroup(g, "center"));
    CHECK(oracle::isomorphic_by_basis_permutation(*fq.structure, group_algebra(f, qg.group)));
    CHECK(oracle::isomorphic_by_basis_permutation(
        *fq.structure, group_algebra(f, direct_product(cyclic_group(2, "a"), cyclic_group(2, "b")))));
    CHECK(verify_structure(*fq.structure).all_passed());
  }
  SECTION("over z -> -1: one two-dimensional simple") {
    Vector xi = {1, 1};
    // A has RREF basis e_1 (the identity) and e_(-1)
    const Vector z = inst.a.subspace.basis_vector(1);
    xi[1] = z[1] == 1 ? f.neg(1) : 1;
    const auto fq = fiber_quotient(inst.h, inst.a, xi);
    CHECK_FALSE(fq.counit_fiber);
    CHECK(fq.quotient.algebra.dim() == 4);
    const auto s = simples(fq.quotient.algebra);
    REQUIRE(s.size() == 1);
    CHECK(s[0].module.dim() == 2);
  }
  SECTION("a non-character is rejected") {
    CHECK_THROWS_AS(fiber_quotient(inst.h, inst.a, Vector{1, 2}), Error);
  }
}

TEST_CASE("fiber quotients need a central subalgebra", "[fiber]") {
  const PrimeField f(7);
  const auto g = symmetric_group_3();
  const Bialgebra b = group_algebra(f, g);
  // the subgroup generated by (12) is a Hopf subalgebra but not central
  const auto sub = parse_subgroup(g, "(),(12)");
  std::vector<Vector> span;
  for (auto x : sub) span.push_back(unit_vector(6, x));
  const auto a = make_coideal_subalgebra(b, Subspace::span(f, 6, span));
  try {
    fiber_quotient(b, a, Vector{1, 1});
    FAIL("expected NotCentral");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCentral);
  }
}
