#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"

using namespace hopfx;

namespace {

WordPoly poly_of(const PresentationFile& file, const std::string& text) {
  // "c1 w1 c2 w2 ...", words written as in the text format
  WordPoly p;
  std::istringstream in(text);
  std::string coeff, word;
  const auto& pres = file.presentation;
  while (in >> coeff >> word) {
    Word w;
    if (word != "1") {
      std::istringstream ws(word);
      for (std::string g; std::getline(ws, g, '*');) w.push_back(*pres.generator_index(g));
    }
    add_term(pres.field(), p, w, pres.field().reduce(std::stoll(coeff)));
  }
  return p;
}

WordPoly random_poly(const Presentation& pres, std::mt19937_64& rng) {
  WordPoly p;
  const std::size_t terms = 1 + rng() % 3;
  for (std::size_t t = 0; t < terms; ++t) {
    Word w(rng() % 7);
    for (auto& x : w) x = static_cast<std::uint32_t>(rng() % pres.generators().size());
    add_term(pres.field(), p, w, static_cast<Fp>(1 + rng() % (pres.field().p() - 1)));
  }
  return p;
}

PresentationFile load_pres(const std::string& name) {
  return parse_presentation(read_file(oracle::fixture(name)));
}

}  // namespace

TEST_CASE("normal forms in u(sl2)", "[rewrite]") {
  const auto file = small_quantum_sl2_presentation(3, 7);
  const auto& pres = file.presentation;
  // q = 2, q^-2 = 2, 1 / (q - q^-1) = 3
  CHECK(normalize(pres, poly_of(file, "1 K*F")) == poly_of(file, "2 F*K"));
  CHECK(normalize(pres, poly_of(file, "1 E*K")) == poly_of(file, "2 K*E"));
  CHECK(normalize(pres, poly_of(file, "1 E*F")) == poly_of(file, "1 F*E 3 K 4 K*K"));
  CHECK(normalize(pres, poly_of(file, "1 K*K*K")) == poly_of(file, "1 1"));
  CHECK(normalize(pres, poly_of(file, "1 E*E*E")).empty());
  CHECK(normalize(pres, poly_of(file, "1 K*F 5 F*K")).empty());
}

TEST_CASE("normal forms in the qsl2 kernel", "[rewrite]") {
  const auto file = quantum_sl2_presentation(3, 7);
  const auto& pres = file.presentation;
  // q' = 4
  CHECK(normalize(pres, poly_of(file, "1 b*a")) == poly_of(file, "4 a*b"));
  CHECK(normalize(pres, poly_of(file, "1 c*b*a")) == poly_of(file, "2 a*b*c"));
  CHECK(normalize(pres, poly_of(file, "1 a*a*a*b")) == poly_of(file, "1 b"));
}

TEST_CASE("strategies agree on random inputs", "[rewrite]") {
  const std::vector<PresentationFile> files = {quantum_sl2_presentation(3, 7), small_quantum_sl2_presentation(3, 7),
                                               quantum_m2_presentation(3, 7), load_pres("quantum_plane_t3_p7.pres")};
  std::mt19937_64 rng(17);
  for (const auto& file : files) {
    Normalizer left(file.presentation, Strategy::Leftmost);
    Normalizer right(file.presentation, Strategy::Rightmost);
    for (int i = 0; i < 500; ++i) {
      const WordPoly p = random_poly(file.presentation, rng);
      const WordPoly nl = left.normalize(p);
      REQUIRE(nl == right.normalize(p));
      for (const auto& [w, c] : nl) CHECK(left.is_irreducible(w));
      CHECK(left.normalize(nl) == nl);
    }
  }
}

TEST_CASE("normal forms respect multiplication", "[rewrite]") {
  const auto file = small_quantum_sl2_presentation(3, 7);
  const auto& pres = file.presentation;
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const WordPoly x = random_poly(pres, rng), y = random_poly(pres, rng);
    CHECK(normalize(pres, multiply(pres.field(), x, y)) ==
          normalize(pres, multiply(pres.field(), normalize(pres, x), normalize(pres, y))));
  }
}

TEST_CASE("confluence and bases", "[rewrite]") {
  SECTION("quantum plane") {
    const auto file = load_pres("quantum_plane_t3_p7.pres");
    const auto report = complete_check(file.presentation);
    CHECK(report.confluent());
    CHECK(report.pairs_checked > 0);
    const auto basis = enumerate_basis(file.presentation);
    CHECK(basis.size() == 9);
    CHECK(basis.front().empty());
  }
  SECTION("the shipped families") {
    CHECK(enumerate_basis(quantum_sl2_presentation(3, 7).presentation).size() == 27);
    CHECK(enumerate_basis(small_quantum_sl2_presentation(3, 7).presentation).size() == 27);
    CHECK(enumerate_basis(quantum_m2_presentation(3, 7).presentation).size() == 81);
    CHECK(enumerate_basis(quantum_sl2_presentation(5, 11).presentation).size() == 125);
  }
  SECTION("an unresolvable overlap") {
    const auto file = load_pres("clash.pres");
    const auto report = complete_check(file.presentation);
    REQUIRE_FALSE(report.confluent());
    const auto& u = report.unresolved.front();
    CHECK(file.presentation.to_string(u.overlap) == "c*b*a");
    CHECK(normalize(file.presentation, u.via_a) != normalize(file.presentation, u.via_b));
    try {
      require_confluent(file.presentation);
      FAIL("expected NotConfluent");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotConfluent);
    }
  }
}

TEST_CASE("presentation errors", "[rewrite]") {
  const PrimeField f(7);
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  const Word xx{0, 0};
  const std::vector<Rule> duplicate = {Rule{xx, WordPoly{}}, Rule{xx, WordPoly{{Word{}, 1}}}};
  CHECK(code_of([&] { Presentation(f, {"x"}, duplicate, 4); }) == ErrorCode::DuplicateRule);
  const std::vector<Rule> growing = {Rule{Word{0}, WordPoly{{xx, 1}}}};
  CHECK(code_of([&] { Presentation(f, {"x"}, growing, 4); }) == ErrorCode::NotTerminating);
  const std::vector<Rule> commuting = {Rule{Word{1, 0}, WordPoly{{Word{0, 1}, 1}}}};
  CHECK(code_of([&] { enumerate_basis(Presentation(f, {"x", "y"}, commuting, 8)); }) == ErrorCode::InfiniteBasis);
  CHECK(code_of([&] { parse_presentation("field 7\ngenerators x\nx*z -> 1\n"); }) == ErrorCode::ParseError);
  CHECK_THROWS_AS(parse_presentation("field 8\ngenerators x\n"), Error);
}

TEST_CASE("family parameters are validated", "[corpus]") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code_of([] { quantum_sl2_kernel(2, 7); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { quantum_sl2_kernel(3, 5); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { quantum_m2_kernel(4, 13); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { small_quantum_sl2(3, 9); }) == ErrorCode::BadParameters);
  CHECK_NOTHROW(quantum_sl2_kernel(5, 11));
}

TEST_CASE("shipped presentation fixtures match the builders", "[corpus]") {
  const std::vector<std::pair<std::string, PresentationFile>> cases = {
      {"qsl2_l3_p7.pres", quantum_sl2_presentation(3, 7)},
      {"usl2_l3_p7.pres", small_quantum_sl2_presentation(3, 7)},
      {"qm2_t3_p7.pres", quantum_m2_presentation(3, 7)},
  };
  for (const auto& [name, built] : cases) {
    const std::string text = read_file(oracle::fixture(name));
    const auto parsed = parse_presentation(text);
    CHECK(format_presentation(parsed.presentation, parsed.structure) ==
          format_presentation(built.presentation, built.structure));
    CHECK(format_presentation(parsed.presentation, parsed.structure) == text);
  }
}

TEST_CASE("extraction rejects a broken coproduct", "[corpus]") {
  auto file = small_quantum_sl2_presentation(3, 7);
  const std::uint32_t K = 1, E = 2;
  REQUIRE(file.structure->comul[E].erase({{K}, {E}}) == 1);
  try {
    extract_bialgebra(file.presentation, *file.structure);
    FAIL("expected StructureCheckFailed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StructureCheckFailed);
  }
}

TEST_CASE("extracted bases are the irreducible words", "[corpus]") {
  const auto file = quantum_sl2_presentation(3, 7);
  const auto ex = extract_bialgebra(file.presentation, *file.structure);
  CHECK(ex.basis == enumerate_basis(file.presentation));
  CHECK(ex.bialgebra.dim() == 27);
  CHECK(ex.bialgebra.has_antipode());
  CHECK(verify_structure(ex.bialgebra).all_passed());
  // the structure constants are normal forms of word products
  const auto& alg = ex.bialgebra.algebra();
  Normalizer nf(file.presentation);
  for (std::size_t i = 0; i < 27; ++i) {
    for (std::size_t j = 0; j < 27; ++j) {
      const WordPoly prod = nf.normalize({{concat(ex.basis[i], ex.basis[j]), 1}});
      Vector v(27, 0);
      for (const auto& [w, c] : prod)
        v[static_cast<std::size_t>(std::find(ex.basis.begin(), ex.basis.end(), w) - ex.basis.begin())] = c;
      REQUIRE(alg.multiply(alg.basis_element(i), alg.basis_element(j)) == v);
    }
  }
}

TEST_CASE("groups", "[groups]") {
  const auto q8 = quaternion_group();
  CHECK(q8.order() == 8);
  CHECK_FALSE(q8.is_abelian());
  CHECK(q8.center().size() == 2);
  const auto s3c2 = builtin_group("s3c2");
  CHECK(s3c2.order() == 12);
  CHECK(s3c2.center().size() == 2);
  CHECK(builtin_group("c2c2").is_abelian());
  CHECK_THROWS_AS(GroupTable({{0, 1}, {0, 1}}), Error);
  CHECK_THROWS_AS(builtin_group("a5"), Error);

  const auto qz = quotient_group(q8, q8.center());
  CHECK(qz.group.order() == 4);
  CHECK(qz.group.is_abelian());
  for (std::size_t x = 0; x < 4; ++x) CHECK(qz.group.mul(x, x) == qz.group.identity());
  const auto s3 = symmetric_group_3();
  CHECK_THROWS_AS(quotient_group(s3, parse_subgroup(s3, "(),(12)")), Error);
}

TEST_CASE("group algebra pairs", "[corpus]") {
  const PrimeField f(7);
  SECTION("non-central or non-subgroup Z is rejected") {
    const auto s3 = symmetric_group_3();
    CHECK_THROWS_AS(group_algebra_pair(f, s3, parse_subgroup(s3, "(),(12)")), Error);
    CHECK_THROWS_AS(group_algebra_pair(f, quaternion_group(), parse_subgroup(quaternion_group(), "1,i")), Error);
  }
  SECTION("p dividing |G| is allowed with a warning") {
    const auto inst = group_algebra_pair(PrimeField(3), cyclic_group(3), {0});
    CHECK(inst.warnings.size() == 1);
  }
  SECTION("H / H Z+ is the group algebra of G / Z") {
    for (const std::string name : {"c4", "q8", "s3c2"}) {
      const auto inst = builtin_group_pair(name);
      const auto g = builtin_group(name);
      std::vector<std::size_t> z;
      for (std::size_t x = 0; x < g.order(); ++x)
        if (inst.a.subspace.contains(unit_vector(g.order(), x))) z.push_back(x);
      CHECK(z.size() == inst.a.subspace.dim());
      const auto gz = quotient_group(g, z);
      Vector eps_on_a;
      for (const auto& row : inst.a.subspace.basis_vectors()) eps_on_a.push_back(dot(inst.h.field(), inst.h.counit(), row));
      const auto fq = fiber_quotient(inst.h, inst.a, eps_on_a);
      REQUIRE(fq.structure);
      CHECK(oracle::isomorphic_by_basis_permutation(*fq.structure, group_algebra(inst.h.field(), gz.group)));
    }
  }
}

TEST_CASE("shipped instances", "[corpus]") {
  const std::map<std::string, std::size_t> dims = {{"c3", 3},    {"c4", 4},    {"q8", 8},  {"s3c2", 12},
                                                   {"qsl2", 27}, {"usl2", 27}, {"qm2", 81}};
  for (const auto& name : shipped_instance_names()) {
    const auto inst = shipped_instance(name);
    CHECK(inst.name == name);
    CHECK(inst.h.dim() == dims.at(name));
    CHECK(verify_structure(inst.h).all_passed());
    CHECK(inst.h.has_antipode() == (name != "qm2"));
    CHECK(inst.a.verified_subalgebra);
    CHECK(inst.a.verified_right_coideal);
    CHECK(is_central_subalgebra(inst.h.algebra(), inst.a.subspace));
    REQUIRE(inst.expected);
  }
  CHECK_THROWS_AS(shipped_instance("nope"), Error);
}
