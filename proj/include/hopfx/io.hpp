#pragma once

// JSON interchange: algebra files (canonical, byte-stable) and reports.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hopfx/bialgebra.hpp"
#include "hopfx/corpus.hpp"
#include "hopfx/error.hpp"
#include "hopfx/hopf.hpp"
#include "hopfx/repn.hpp"
#include "hopfx/specmap.hpp"

namespace hopfx {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolName = "hopfx";
inline constexpr const char* kToolVersion = "0.1.0";

struct AntipodeEntry {
  std::size_t i = 0, j = 0;  // S(e_j) has coefficient c on e_i
  Fp c = 0;
  friend bool operator==(const AntipodeEntry&, const AntipodeEntry&) = default;
};

struct AlgebraFile {
  std::string name;
  Fp p = 0;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  Vector unit;
  std::vector<MulEntry> mul;
  std::vector<ComulEntry> comul;
  Vector counit;
  std::optional<std::vector<AntipodeEntry>> antipode;
  std::optional<std::vector<Vector>> subalgebra_a;
  Provenance provenance;
  bool two_sided = false;
  std::optional<Expectation> expected;
};

inline std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string digest_hex(const std::string& bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
  return std::string("fnv1a64:") + buf;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
}

inline AlgebraFile to_file(const CorpusInstance& inst) {
  const Bialgebra& h = inst.h;
  const Algebra& alg = h.algebra();
  AlgebraFile f;
  f.name = inst.name;
  f.p = h.field().p();
  f.dim = h.dim();
  f.basis = alg.labels();
  f.unit = alg.unit();
  f.mul = alg.entries();
  f.comul = h.comul_entries();
  f.counit = h.counit();
  if (h.has_antipode()) {
    std::vector<AntipodeEntry> s;
    const Matrix& m = h.antipode();
    for (std::size_t j = 0; j < h.dim(); ++j)
      for (std::size_t i = 0; i < h.dim(); ++i)
        if (m(i, j) != 0) s.push_back({i, j, m(i, j)});
    std::sort(s.begin(), s.end(), [](const AntipodeEntry& x, const AntipodeEntry& y) {
      return std::tie(x.i, x.j) < std::tie(y.i, y.j);
    });
    f.antipode = std::move(s);
  }
  f.subalgebra_a = inst.a.subspace.basis_vectors();
  f.provenance = inst.provenance;
  f.two_sided = inst.two_sided;
  f.expected = inst.expected;
  return f;
}

/// Bialgebra data without any axiom check beyond associativity and unit
/// (which the algebra constructor enforces).
inline Bialgebra bialgebra_of(const AlgebraFile& file) {
  const PrimeField f(file.p);
  Algebra alg = build_algebra(f, file.dim, file.unit, file.mul, file.basis);
  std::optional<Matrix> s;
  if (file.antipode) {
    Matrix m(f, file.dim, file.dim);
    for (const auto& e : *file.antipode) m(e.i, e.j) = f.add(m(e.i, e.j), e.c);
    s = std::move(m);
  }
  return Bialgebra(std::move(alg), file.comul, file.counit, std::move(s));
}

/// Full instance: structure checked, A verified (defaults to the scalars).
inline CorpusInstance to_instance(const AlgebraFile& file) {
  Bialgebra h = bialgebra_of(file);
  require_valid(h);
  Subspace a = file.subalgebra_a ? Subspace::span(h.field(), h.dim(), *file.subalgebra_a)
                                 : Subspace::span(h.field(), h.dim(), {h.algebra().unit()});
  CoidealSubalgebra coideal = make_coideal_subalgebra(h, std::move(a));
  if (!is_central_subalgebra(h.algebra(), coideal.subspace)) fail(ErrorCode::NotCentral, "A is not central");
  return {file.name, std::move(h), std::move(coideal), file.provenance, file.expected, file.two_sided, {}};
}

namespace detail {

inline json expectation_json(const Expectation& e) {
  json j = json::object();
  j["source"] = e.source;
  if (e.characters) j["characters"] = *e.characters;
  if (e.x_order) j["x_order"] = *e.x_order;
  if (e.fiber_simple_dims) j["fiber_simple_dims"] = *e.fiber_simple_dims;
  if (e.fiber_sizes) j["fiber_sizes"] = *e.fiber_sizes;
  if (e.orbit_sizes) j["orbit_sizes"] = *e.orbit_sizes;
  if (e.cond_i) j["cond_i"] = *e.cond_i;
  if (e.cond_ii) j["cond_ii"] = *e.cond_ii;
  if (e.cond_iii) j["cond_iii"] = *e.cond_iii;
  return j;
}

template <typename T>
std::optional<T> opt(const json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return j.at(key).get<T>();
}

inline Expectation expectation_from(const json& j) {
  Expectation e;
  e.source = j.at("source").get<std::string>();
  e.characters = opt<std::size_t>(j, "characters");
  e.x_order = opt<std::size_t>(j, "x_order");
  e.fiber_simple_dims = opt<std::vector<std::size_t>>(j, "fiber_simple_dims");
  e.fiber_sizes = opt<std::vector<std::size_t>>(j, "fiber_sizes");
  e.orbit_sizes = opt<std::vector<std::size_t>>(j, "orbit_sizes");
  e.cond_i = opt<bool>(j, "cond_i");
  e.cond_ii = opt<bool>(j, "cond_ii");
  e.cond_iii = opt<bool>(j, "cond_iii");
  return e;
}

template <typename Rows>
void write_rows(std::ostringstream& out, const char* key, const Rows& rows, bool last) {
  out << "  \"" << key << "\": [";
  if (rows.empty()) {
    out << "]";
  } else {
    out << "\n";
    for (std::size_t r = 0; r < rows.size(); ++r)
      out << "    " << json(rows[r]).dump() << (r + 1 < rows.size() ? ",\n" : "\n");
    out << "  ]";
  }
  out << (last ? "\n" : ",\n");
}

}  // namespace detail

/// Canonical text: fixed key order, one tensor entry per line, sorted entries.
inline std::string serialize(const AlgebraFile& file) {
  std::ostringstream out;
  auto line = [&](const char* key, const json& value) {
    out << "  \"" << key << "\": " << value.dump() << ",\n";
  };
  out << "{\n";
  line("schema", kSchemaVersion);
  line("name", file.name);
  line("field", json{{"p", file.p}});
  line("dim", file.dim);
  line("basis", file.basis);
  line("unit", file.unit);
  std::vector<std::vector<std::uint64_t>> mul, comul, anti;
  for (const auto& e : file.mul) mul.push_back({e.i, e.j, e.k, e.c});
  for (const auto& e : file.comul) comul.push_back({e.i, e.j, e.k, e.c});
  std::sort(mul.begin(), mul.end());
  std::sort(comul.begin(), comul.end());
  detail::write_rows(out, "mul", mul, false);
  detail::write_rows(out, "comul", comul, false);
  line("counit", file.counit);
  if (file.antipode) {
    for (const auto& e : *file.antipode) anti.push_back({e.i, e.j, e.c});
    std::sort(anti.begin(), anti.end());
    detail::write_rows(out, "antipode", anti, false);
  }
  if (file.subalgebra_a) {
    out << "  \"subalgebra_A\": {\n";
    std::ostringstream inner;
    detail::write_rows(inner, "basis_vectors", *file.subalgebra_a, true);
    std::string s = inner.str();
    // indent the nested block by two more spaces
    std::string indented;
    std::istringstream lines(s);
    for (std::string l; std::getline(lines, l);) indented += "  " + l + "\n";
    out << indented << "  },\n";
  }
  json prov = json::object();
  prov["family"] = file.provenance.family;
  prov["params"] = file.provenance.params;
  prov["winding"] = file.two_sided ? "two_sided" : "right";
  if (file.expected) {
    line("provenance", prov);
    out << "  \"expected\": " << detail::expectation_json(*file.expected).dump() << "\n";
  } else {
    out << "  \"provenance\": " << prov.dump() << "\n";
  }
  out << "}\n";
  return out.str();
}

inline AlgebraFile parse_algebra_file(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  try {
    if (j.at("schema").get<int>() != kSchemaVersion) fail(ErrorCode::ParseError, "unsupported schema version");
    AlgebraFile f;
    f.name = j.value("name", std::string{});
    const std::uint64_t p = j.at("field").at("p").get<std::uint64_t>();
    if (!is_prime(p) || p > (1ULL << 31)) fail(ErrorCode::ParseError, "field.p must be a prime below 2^31");
    f.p = static_cast<Fp>(p);
    f.dim = j.at("dim").get<std::size_t>();
    f.basis = j.at("basis").get<std::vector<std::string>>();
    auto coeff = [&](std::uint64_t c) {
      if (c >= p) fail(ErrorCode::ParseError, "coefficient " + std::to_string(c) + " not in [0, p)");
      return static_cast<Fp>(c);
    };
    auto index = [&](std::uint64_t i) {
      if (i >= f.dim) fail(ErrorCode::ParseError, "basis index " + std::to_string(i) + " out of range");
      return static_cast<std::size_t>(i);
    };
    auto vec = [&](const json& a) {
      Vector v;
      for (const auto& x : a) v.push_back(coeff(x.get<std::uint64_t>()));
      if (v.size() != f.dim) fail(ErrorCode::ParseError, "vector of wrong length");
      return v;
    };
    if (f.basis.size() != f.dim) fail(ErrorCode::ParseError, "basis labels do not match dim");
    f.unit = vec(j.at("unit"));
    for (const auto& e : j.at("mul")) {
      const auto r = e.get<std::vector<std::uint64_t>>();
      if (r.size() != 4) fail(ErrorCode::ParseError, "mul entries are [i,j,k,c]");
      f.mul.push_back({index(r[0]), index(r[1]), index(r[2]), coeff(r[3])});
    }
    for (const auto& e : j.at("comul")) {
      const auto r = e.get<std::vector<std::uint64_t>>();
      if (r.size() != 4) fail(ErrorCode::ParseError, "comul entries are [i,j,k,c]");
      f.comul.push_back({index(r[0]), index(r[1]), index(r[2]), coeff(r[3])});
    }
    f.counit = vec(j.at("counit"));
    if (j.contains("antipode")) {
      std::vector<AntipodeEntry> s;
      for (const auto& e : j.at("antipode")) {
        const auto r = e.get<std::vector<std::uint64_t>>();
        if (r.size() != 3) fail(ErrorCode::ParseError, "antipode entries are [i,j,c]");
        s.push_back({index(r[0]), index(r[1]), coeff(r[2])});
      }
      f.antipode = std::move(s);
    }
    if (j.contains("subalgebra_A")) {
      std::vector<Vector> rows;
      for (const auto& v : j.at("subalgebra_A").at("basis_vectors")) rows.push_back(vec(v));
      f.subalgebra_a = std::move(rows);
    }
    if (j.contains("provenance")) {
      const auto& pr = j.at("provenance");
      f.provenance.family = pr.value("family", std::string{});
      if (pr.contains("params")) f.provenance.params = pr.at("params").get<std::map<std::string, std::string>>();
      const std::string w = pr.value("winding", std::string("right"));
      if (w != "right" && w != "two_sided") fail(ErrorCode::ParseError, "winding must be right or two_sided");
      f.two_sided = w == "two_sided";
    }
    if (j.contains("expected")) f.expected = detail::expectation_from(j.at("expected"));
    return f;
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("malformed algebra file: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Report payloads

inline json to_json(const AxiomReport& r) {
  json axioms = json::array();
  for (const auto& a : r.axioms) axioms.push_back({{"name", a.name}, {"passed", a.passed}, {"witness", a.witness}});
  return {{"all_passed", r.all_passed()}, {"axioms", axioms}};
}

inline json to_json(const std::vector<Character>& chars) {
  json list = json::array();
  for (const auto& c : chars) list.push_back(c.values);
  return {{"count", chars.size()}, {"characters", list}};
}

inline json to_json(const std::vector<SimpleRecord>& simples) {
  json list = json::array();
  std::vector<std::size_t> dims;
  for (const auto& s : simples) {
    list.push_back({{"dim", s.module.dim()}, {"multiplicity", s.multiplicity},
                    {"annihilator_dim", s.annihilator.dim()}});
    dims.push_back(s.module.dim());
  }
  return {{"count", simples.size()}, {"dims", dims}, {"simples", list}};
}

inline json to_json(const Verdict& v) {
  auto cond = [](const std::optional<bool>& c) { return c ? json(*c) : json("n/a"); };
  json j = {
      {"mode", v.mode},
      {"experiment", v.experiment},
      {"cond_i", cond(v.cond_i)},
      {"cond_ii", cond(v.cond_ii)},
      {"cond_iii", cond(v.cond_iii)},
      {"cond_iv", cond(v.cond_iv)},
      {"agree", v.agree},
      {"x_order", v.x_order},
      {"fiber_simple_dims", v.fiber_simple_dims},
      {"fiber_orbit_sizes", v.fiber_orbit_sizes},
  };
  if (!v.prim_dims.empty() || v.mode != "local") {
    j["prim_dims"] = v.prim_dims;
    j["fiber_blocks"] = v.fiber_blocks;
    j["orbit_blocks"] = v.orbit_blocks;
    j["orbits_refine_fibers"] = v.orbits_refine_fibers;
  }
  json w = json::object();
  std::vector<std::size_t> big;
  for (auto d : v.fiber_simple_dims)
    if (d > 1) big.push_back(d);
  if (!big.empty()) w["fiber_simples_above_dim_1"] = big;
  if (v.mismatched_fiber) w["fiber_not_single_orbit"] = {{"fiber", *v.mismatched_fiber}, {"orbit_sizes", v.mismatched_orbit_sizes}};
  j["witnesses"] = w;
  return j;
}

inline json report(const std::string& command, const std::string& input_bytes, std::uint64_t seed, json results) {
  return {{"schema", kSchemaVersion}, {"tool", kToolName},       {"version", kToolVersion},
          {"command", command},       {"input_digest", digest_hex(input_bytes)},
          {"seed", seed},             {"results", std::move(results)}};
}

}  // namespace hopfx
