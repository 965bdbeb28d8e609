#pragma once

// Builders for the example families: group-algebra pairs, the quantum SL2
// Frobenius kernel, the small quantum group u(sl2), and the kernel of the
// quantum 2x2 matrices.
//
// Conventions for the rewriting families (q a primitive root of unity of
// the given odd order, q' = q^-1):
//
//   qsl2 kernel   generators a < b < c
//                 ba -> q' ab, ca -> q' ac, cb -> bc, a^l -> 1, b^l -> 0, c^l -> 0
//                 d := a^(l-1) (1 + q bc), which is a^-1 (1 + q bc)
//                 Delta a = a(x)a + b(x)c, Delta b = a(x)b + b(x)d, Delta c = c(x)a + d(x)c
//                 S a = d, S b = -q' b, S c = -q c
//
//   u(sl2)        generators F < K < E with K of weight 0
//                 KF -> q^-2 FK, EK -> q^-2 KE, EF -> FE + (K - K^(l-1)) / (q - q')
//                 K^l -> 1, E^l -> 0, F^l -> 0
//                 Delta E = E(x)1 + K(x)E, Delta F = F(x)K^-1 + 1(x)F, Delta K = K(x)K
//                 S E = -K^-1 E, S F = -F K, S K = K^-1
//
//   qm2 kernel    generators a < b < c < d
//                 ba -> q' ab, ca -> q' ac, db -> q' bd, dc -> q' cd, cb -> bc,
//                 da -> ad - (q - q') bc, a^t -> 1, b^t -> 0, c^t -> 0, d^t -> 1
//                 Delta is the matrix coproduct; no antipode.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfx/bialgebra.hpp"
#include "hopfx/error.hpp"
#include "hopfx/field.hpp"
#include "hopfx/groups.hpp"
#include "hopfx/hopf.hpp"
#include "hopfx/rewrite.hpp"

namespace hopfx {

struct Provenance {
  std::string family;
  std::map<std::string, std::string> params;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Known answers for a shipped instance. `source` says where the numbers
/// come from: "derived" (independent computation) or "paper".
struct Expectation {
  std::string source;
  std::optional<std::size_t> characters;
  std::optional<std::size_t> x_order;
  std::optional<std::vector<std::size_t>> fiber_simple_dims;
  std::optional<std::vector<std::size_t>> fiber_sizes;
  std::optional<std::vector<std::size_t>> orbit_sizes;
  std::optional<bool> cond_i, cond_ii, cond_iii;
  friend bool operator==(const Expectation&, const Expectation&) = default;
};

struct CorpusInstance {
  std::string name;
  Bialgebra h;
  CoidealSubalgebra a;
  Provenance provenance;
  std::optional<Expectation> expected;
  bool two_sided = false;  // orbits use left and right windings
  std::vector<std::string> warnings;
};

namespace detail {

inline CorpusInstance finish_instance(std::string name, Bialgebra h, Subspace a, Provenance prov) {
  require_valid(h);
  CoidealSubalgebra coideal = make_coideal_subalgebra(h, std::move(a));
  if (!is_central_subalgebra(h.algebra(), coideal.subspace))
    fail(ErrorCode::NotCentral, "A is not central in H");
  return {std::move(name), std::move(h), std::move(coideal), std::move(prov), std::nullopt, false, {}};
}

inline Subspace scalars(const Bialgebra& h) {
  return Subspace::span(h.field(), h.dim(), {h.algebra().unit()});
}

inline void check_root_parameters(std::uint64_t order, std::uint64_t p, const char* name) {
  const std::string n(name);
  if (order % 2 == 0) fail(ErrorCode::BadParameters, n + " must be odd");
  if (order < 3) fail(ErrorCode::BadParameters, n + " must be at least 3");
  if (!is_prime(p)) fail(ErrorCode::BadParameters, "p must be prime");
  if ((p - 1) % order != 0) fail(ErrorCode::BadParameters, n + " must divide p - 1");
}

inline Word power(std::uint32_t g, std::size_t e) { return Word(e, g); }

}  // namespace detail

inline CorpusInstance group_algebra_pair(const PrimeField& f, const GroupTable& g,
                                         const std::vector<std::size_t>& z, std::string name = "group") {
  if (!g.is_subgroup(z)) fail(ErrorCode::NotASubgroup, "Z is not a subgroup");
  const auto center = g.center();
  for (auto x : z)
    if (std::find(center.begin(), center.end(), x) == center.end())
      fail(ErrorCode::NotCentral, "Z is not central", {x});
  Bialgebra h = group_algebra(f, g);
  std::vector<Vector> span;
  for (auto x : z) span.push_back(unit_vector(g.order(), x));
  Subspace a = Subspace::span(f, g.order(), span);
  std::string zs;
  for (auto x : z) zs += (zs.empty() ? "" : ",") + g.names()[x];
  Provenance prov{"group", {{"p", std::to_string(f.p())}, {"order", std::to_string(g.order())}, {"Z", zs}}};
  auto inst = detail::finish_instance(std::move(name), std::move(h), std::move(a), std::move(prov));
  if (g.order() % f.p() == 0)
    inst.warnings.push_back("p divides |G|: the group algebra is not semisimple");
  return inst;
}

/// Presentation and generator data of the qsl2 kernel.
inline PresentationFile quantum_sl2_presentation(std::uint64_t ell, std::uint64_t p) {
  detail::check_root_parameters(ell, p, "ell");
  const PrimeField f(p);
  const Fp q = find_root_of_unity(f, ell);
  const Fp qi = f.inv(q);
  const std::uint32_t a = 0, b = 1, c = 2;
  std::vector<Rule> rules = {
      {{b, a}, {{{a, b}, qi}}},
      {{c, a}, {{{a, c}, qi}}},
      {{c, b}, {{{b, c}, 1}}},
      {detail::power(a, ell), {{{}, 1}}},
      {detail::power(b, ell), {}},
      {detail::power(c, ell), {}},
  };
  Presentation pres(f, {"a", "b", "c"}, std::move(rules), 6 * ell);
  // d = a^(l-1) + q a^(l-1) b c
  const Word al = detail::power(a, ell - 1);
  WordPoly d{{al, 1}};
  add_term(f, d, concat(al, {b, c}), q);
  GeneratorData data;
  data.comul.resize(3);
  data.comul[a] = {{{{a}, {a}}, 1}, {{{b}, {c}}, 1}};
  data.comul[b] = {{{{a}, {b}}, 1}};
  data.comul[c] = {{{{c}, {a}}, 1}};
  for (const auto& [w, coeff] : d) {
    data.comul[b][{{b}, w}] = coeff;
    data.comul[c][{w, {c}}] = coeff;
  }
  data.counit = {1, 0, 0};
  data.antipode = std::vector<WordPoly>{d, {{{b}, f.neg(qi)}}, {{{c}, f.neg(q)}}};
  return {std::move(pres), std::move(data)};
}

inline PresentationFile small_quantum_sl2_presentation(std::uint64_t ell, std::uint64_t p) {
  detail::check_root_parameters(ell, p, "ell");
  const PrimeField f(p);
  const Fp q = find_root_of_unity(f, ell);
  const Fp qi = f.inv(q);
  const Fp qi2 = f.mul(qi, qi);
  const Fp bracket = f.inv(f.sub(q, qi));
  const std::uint32_t F = 0, K = 1, E = 2;
  const Word kinv = detail::power(K, ell - 1);
  WordPoly ef{{{F, E}, 1}};
  add_term(f, ef, {K}, bracket);
  add_term(f, ef, kinv, f.neg(bracket));
  std::vector<Rule> rules = {
      {{K, F}, {{{F, K}, qi2}}},
      {{E, K}, {{{K, E}, qi2}}},
      {{E, F}, ef},
      {detail::power(K, ell), {{{}, 1}}},
      {detail::power(E, ell), {}},
      {detail::power(F, ell), {}},
  };
  Presentation pres(f, {"F", "K", "E"}, std::move(rules), 4 * ell * ell, {1, 0, 1});
  GeneratorData data;
  data.comul.resize(3);
  data.comul[E] = {{{{E}, {}}, 1}, {{{K}, {E}}, 1}};
  data.comul[F] = {{{{F}, kinv}, 1}, {{{}, {F}}, 1}};
  data.comul[K] = {{{{K}, {K}}, 1}};
  data.counit = {0, 1, 0};
  data.antipode = std::vector<WordPoly>{
      {{{F, K}, f.neg(1)}}, {{kinv, 1}}, {{concat(kinv, {E}), f.neg(1)}}};
  return {std::move(pres), std::move(data)};
}

inline PresentationFile quantum_m2_presentation(std::uint64_t t, std::uint64_t p) {
  detail::check_root_parameters(t, p, "t");
  const PrimeField f(p);
  const Fp q = find_root_of_unity(f, t);
  const Fp qi = f.inv(q);
  const std::uint32_t a = 0, b = 1, c = 2, d = 3;
  std::vector<Rule> rules = {
      {{b, a}, {{{a, b}, qi}}},
      {{c, a}, {{{a, c}, qi}}},
      {{d, b}, {{{b, d}, qi}}},
      {{d, c}, {{{c, d}, qi}}},
      {{c, b}, {{{b, c}, 1}}},
      {{d, a}, {{{a, d}, 1}, {{b, c}, f.neg(f.sub(q, qi))}}},
      {detail::power(a, t), {{{}, 1}}},
      {detail::power(b, t), {}},
      {detail::power(c, t), {}},
      {detail::power(d, t), {{{}, 1}}},
  };
  std::erase_if(rules[5].rhs, [](const auto& kv) { return kv.second == 0; });
  Presentation pres(f, {"a", "b", "c", "d"}, std::move(rules), 8 * t);
  GeneratorData data;
  data.comul = {
      {{{{a}, {a}}, 1}, {{{b}, {c}}, 1}},
      {{{{a}, {b}}, 1}, {{{b}, {d}}, 1}},
      {{{{c}, {a}}, 1}, {{{d}, {c}}, 1}},
      {{{{c}, {b}}, 1}, {{{d}, {d}}, 1}},
  };
  data.counit = {1, 0, 0, 1};
  return {std::move(pres), std::move(data)};
}

inline CorpusInstance instance_from_presentation(std::string name, const PresentationFile& file,
                                                 Provenance prov) {
  if (!file.structure) fail(ErrorCode::InvalidArgument, "presentation carries no structure maps");
  ExtractedBialgebra ex = extract_bialgebra(file.presentation, *file.structure);
  Subspace a = detail::scalars(ex.bialgebra);
  return detail::finish_instance(std::move(name), std::move(ex.bialgebra), std::move(a), std::move(prov));
}

inline CorpusInstance quantum_sl2_kernel(std::uint64_t ell, std::uint64_t p) {
  auto inst = instance_from_presentation("qsl2", quantum_sl2_presentation(ell, p),
                                         {"qsl2", {{"ell", std::to_string(ell)}, {"p", std::to_string(p)}}});
  if (ell == 3 && p == 7) {
    Expectation e{"derived"};
    e.characters = 3;
    e.x_order = 3;
    e.fiber_simple_dims = std::vector<std::size_t>{1, 1, 1};
    e.orbit_sizes = std::vector<std::size_t>{3};
    e.cond_i = true;
    e.cond_ii = true;
    inst.expected = e;
  }
  return inst;
}

inline CorpusInstance small_quantum_sl2(std::uint64_t ell, std::uint64_t p) {
  auto inst = instance_from_presentation("usl2", small_quantum_sl2_presentation(ell, p),
                                         {"usl2", {{"ell", std::to_string(ell)}, {"p", std::to_string(p)}}});
  if (ell == 3 && p == 7) {
    Expectation e{"paper"};
    e.characters = 1;
    e.x_order = 1;
    e.fiber_simple_dims = std::vector<std::size_t>{1, 2, 3};
    e.cond_i = false;
    e.cond_ii = false;
    inst.expected = e;
  }
  return inst;
}

inline CorpusInstance quantum_m2_kernel(std::uint64_t t, std::uint64_t p) {
  auto inst = instance_from_presentation("qm2", quantum_m2_presentation(t, p),
                                         {"qm2", {{"t", std::to_string(t)}, {"p", std::to_string(p)}}});
  inst.two_sided = true;
  if (t == 3 && p == 7) {
    Expectation e{"paper"};
    e.characters = 9;
    e.x_order = 9;
    e.orbit_sizes = std::vector<std::size_t>{9};
    e.cond_iii = true;
    inst.expected = e;
  }
  return inst;
}

/// The group pairs shipped as fixtures, with their expectations.
inline CorpusInstance builtin_group_pair(const std::string& name) {
  Expectation e{"derived"};
  CorpusInstance inst = [&] {
    if (name == "c3") {
      e.characters = 3;
      e.x_order = 3;
      e.fiber_simple_dims = std::vector<std::size_t>{1, 1, 1};
      e.fiber_sizes = std::vector<std::size_t>{3};
      e.orbit_sizes = std::vector<std::size_t>{3};
      e.cond_i = e.cond_ii = e.cond_iii = true;
      const auto g = builtin_group("c3");
      return group_algebra_pair(PrimeField(7), g, parse_subgroup(g, "trivial"), "c3");
    }
    if (name == "c4") {
      e.characters = 4;
      e.x_order = 2;
      e.fiber_simple_dims = std::vector<std::size_t>{1, 1};
      e.fiber_sizes = std::vector<std::size_t>{2, 2};
      e.orbit_sizes = std::vector<std::size_t>{2, 2};
      e.cond_i = e.cond_ii = e.cond_iii = true;
      const auto g = builtin_group("c4");
      return group_algebra_pair(PrimeField(5), g, parse_subgroup(g, "e,g^2"), "c4");
    }
    if (name == "q8") {
      e.characters = 4;
      e.x_order = 4;
      e.fiber_simple_dims = std::vector<std::size_t>{1, 1, 1, 1};
      e.fiber_sizes = std::vector<std::size_t>{4, 1};
      e.orbit_sizes = std::vector<std::size_t>{4, 1};
      e.cond_i = e.cond_ii = e.cond_iii = true;
      const auto g = builtin_group("q8");
      return group_algebra_pair(PrimeField(7), g, parse_subgroup(g, "center"), "q8");
    }
    if (name == "s3c2") {
      e.characters = 4;
      e.x_order = 2;
      e.fiber_simple_dims = std::vector<std::size_t>{1, 1, 2};
      e.fiber_sizes = std::vector<std::size_t>{3, 3};
      e.orbit_sizes = std::vector<std::size_t>{2, 1, 2, 1};
      e.cond_i = e.cond_ii = e.cond_iii = false;
      const auto g = builtin_group("s3c2");
      return group_algebra_pair(PrimeField(7), g, parse_subgroup(g, "center"), "s3c2");
    }
    fail(ErrorCode::InvalidArgument, "no shipped pair named '" + name + "'");
  }();
  inst.expected = e;
  return inst;
}

/// Names of the seven shipped instances.
inline const std::vector<std::string>& shipped_instance_names() {
  static const std::vector<std::string> names = {"c3", "c4", "q8", "s3c2", "qsl2", "usl2", "qm2"};
  return names;
}

inline CorpusInstance shipped_instance(const std::string& name) {
  if (name == "qsl2") return quantum_sl2_kernel(3, 7);
  if (name == "usl2") return small_quantum_sl2(3, 7);
  if (name == "qm2") return quantum_m2_kernel(3, 7);
  return builtin_group_pair(name);
}

}  // namespace hopfx
