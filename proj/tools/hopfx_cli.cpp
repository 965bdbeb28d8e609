// Command-line front end: build corpus instances, check axioms, list
// characters and simples, and run the fiber/orbit verification.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hopfx/hopfx.hpp"

namespace {

using hopfx::json;

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

Level log_level() {
  const char* env = std::getenv("HOPFX_LOG_LEVEL");
  const std::string v = env ? env : "warn";
  if (v == "error") return Level::Error;
  if (v == "info") return Level::Info;
  if (v == "debug") return Level::Debug;
  return Level::Warn;
}

void log(Level level, const std::string& msg) {
  static const Level threshold = log_level();
  if (level > threshold) return;
  static const char* names[] = {"error", "warn", "info", "debug"};
  std::cerr << "hopfx: " << names[static_cast<int>(level)] << ": " << msg << "\n";
}

struct Common {
  std::string input;
  std::string report_path;
  std::uint64_t seed = 0;
  bool timing = false;
};

// Thrown for problems with the input rather than the mathematics.
struct InputError {
  std::string message;
};

void emit(const Common& c, json r, std::chrono::steady_clock::time_point start) {
  if (c.timing)
    r["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  const std::string text = r.dump(2) + "\n";
  if (c.report_path.empty()) {
    std::cout << text;
  } else {
    hopfx::write_file(c.report_path, text);
    log(Level::Info, "report written to " + c.report_path);
  }
}

std::string load(const std::string& path) {
  try {
    return hopfx::read_file(path);
  } catch (const hopfx::Error& e) {
    throw InputError{e.what()};
  }
}

hopfx::AlgebraFile parse(const std::string& bytes) {
  try {
    return hopfx::parse_algebra_file(bytes);
  } catch (const hopfx::Error& e) {
    throw InputError{e.what()};
  }
}

int run_corpus(const std::string& family, const std::string& shipped, const std::string& group,
               const std::string& central, std::uint64_t p, std::uint64_t ell, std::uint64_t t,
               const std::string& output, bool presentation) {
  if (presentation) {
    std::optional<hopfx::PresentationFile> pf;
    if (family == "qsl2") pf = hopfx::quantum_sl2_presentation(ell, p);
    else if (family == "usl2") pf = hopfx::small_quantum_sl2_presentation(ell, p);
    else if (family == "qm2") pf = hopfx::quantum_m2_presentation(t, p);
    else throw InputError{"--presentation needs family qsl2, usl2 or qm2"};
    const std::string text = hopfx::format_presentation(pf->presentation, pf->structure);
    if (output.empty()) std::cout << text;
    else hopfx::write_file(output, text);
    return 0;
  }
  std::optional<hopfx::CorpusInstance> inst;
  if (!shipped.empty()) {
    inst = hopfx::shipped_instance(shipped);
  } else if (family == "group") {
    if (group.empty()) throw InputError{"--group is required for the group family"};
    hopfx::GroupTable g = [&] {
      if (group.ends_with(".json")) {
        const json j = json::parse(load(group));
        std::vector<std::string> names;
        if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
        return hopfx::GroupTable(j.at("cayley").get<std::vector<std::vector<std::size_t>>>(), names);
      }
      return hopfx::builtin_group(group);
    }();
    inst = hopfx::group_algebra_pair(hopfx::PrimeField(p), g, hopfx::parse_subgroup(g, central), group);
  } else if (family == "qsl2") {
    inst = hopfx::quantum_sl2_kernel(ell, p);
  } else if (family == "usl2") {
    inst = hopfx::small_quantum_sl2(ell, p);
  } else if (family == "qm2") {
    inst = hopfx::quantum_m2_kernel(t, p);
  } else {
    throw InputError{"unknown family '" + family + "'"};
  }
  for (const auto& w : inst->warnings) log(Level::Warn, w);
  const std::string text = hopfx::serialize(hopfx::to_file(*inst));
  if (output.empty()) {
    std::cout << text;
  } else {
    hopfx::write_file(output, text);
    log(Level::Info, "wrote " + output + " (dim " + std::to_string(inst->h.dim()) + ")");
  }
  return 0;
}

int run_axioms(const Common& c) {
  const auto start = std::chrono::steady_clock::now();
  const std::string bytes = load(c.input);
  const auto file = parse(bytes);
  json results;
  int code = 0;
  try {
    const hopfx::Bialgebra b = hopfx::bialgebra_of(file);
    const auto rep = hopfx::verify_structure(b);
    results = hopfx::to_json(rep);
    if (const auto* bad = rep.first_failure()) {
      code = 1;
      std::string where;
      for (auto w : bad->witness) where += (where.empty() ? "" : ",") + std::to_string(w);
      log(Level::Error, "axiom " + bad->name + " fails at (" + where + ")");
    }
  } catch (const hopfx::Error& e) {
    if (e.code() != hopfx::ErrorCode::NotAssociative && e.code() != hopfx::ErrorCode::UnitAxiomFails) throw;
    const std::string name = e.code() == hopfx::ErrorCode::NotAssociative ? "associativity" : "unit";
    results = {{"all_passed", false},
               {"axioms", json::array({{{"name", name}, {"passed", false}, {"witness", e.witness()}}})}};
    log(Level::Error, e.what());
    code = 1;
  }
  emit(c, hopfx::report("axioms", bytes, c.seed, results), start);
  return code;
}

int run_characters(const Common& c) {
  const auto start = std::chrono::steady_clock::now();
  const std::string bytes = load(c.input);
  const auto file = parse(bytes);
  const hopfx::Bialgebra b = hopfx::bialgebra_of(file);
  const auto chars = hopfx::enumerate_characters(b, hopfx::ChopOptions{c.seed});
  emit(c, hopfx::report("characters", bytes, c.seed, hopfx::to_json(chars)), start);
  return 0;
}

int run_simples(const Common& c) {
  const auto start = std::chrono::steady_clock::now();
  const std::string bytes = load(c.input);
  const auto file = parse(bytes);
  const hopfx::Bialgebra b = hopfx::bialgebra_of(file);
  const auto s = hopfx::simples(b.algebra(), hopfx::ChopOptions{c.seed});
  emit(c, hopfx::report("simples", bytes, c.seed, hopfx::to_json(s)), start);
  return 0;
}

int run_verify(const Common& c, const std::string& mode) {
  const auto start = std::chrono::steady_clock::now();
  const std::string bytes = load(c.input);
  const auto file = parse(bytes);
  if (mode != "local" && mode != "global") throw InputError{"--mode must be local or global"};
  std::optional<hopfx::CorpusInstance> inst;
  try {
    inst = hopfx::to_instance(file);
  } catch (const hopfx::Error& e) {
    throw InputError{e.what()};
  }
  const auto v = hopfx::verify_theorem(*inst, mode == "local" ? hopfx::VerifyMode::Local : hopfx::VerifyMode::Global,
                                       hopfx::ChopOptions{c.seed});
  if (v.experiment) log(Level::Info, "no antipode: reporting the two-sided winding experiment");
  emit(c, hopfx::report("verify", bytes, c.seed, hopfx::to_json(v)), start);
  if (!v.agree) {
    log(Level::Error, "conditions disagree");
    return 1;
  }
  return 0;
}

int run_rewrite(const Common& c, const std::string& output) {
  const auto start = std::chrono::steady_clock::now();
  const std::string bytes = load(c.input);
  std::optional<hopfx::PresentationFile> pf;
  try {
    pf = hopfx::parse_presentation(bytes);
  } catch (const hopfx::Error& e) {
    throw InputError{e.what()};
  }
  const auto& pres = pf->presentation;
  const auto conf = hopfx::complete_check(pres);
  json unresolved = json::array();
  for (const auto& u : conf.unresolved)
    unresolved.push_back({{"rules", {u.rule_a, u.rule_b}},
                          {"overlap", pres.to_string(u.overlap)},
                          {"via_first", hopfx::format_poly(pres, u.via_a)},
                          {"via_second", hopfx::format_poly(pres, u.via_b)}});
  json results = {{"pairs_checked", conf.pairs_checked}, {"confluent", conf.confluent()}, {"unresolved", unresolved}};
  int code = conf.confluent() ? 0 : 1;
  if (conf.confluent()) {
    const auto basis = hopfx::enumerate_basis(pres);
    results["basis_size"] = basis.size();
    if (pf->structure) {
      try {
        const auto ex = hopfx::extract_bialgebra(pres, *pf->structure);
        results["structure"] = hopfx::to_json(hopfx::verify_structure(ex.bialgebra));
        if (!output.empty()) {
          hopfx::CorpusInstance inst{c.input, ex.bialgebra,
                                     hopfx::make_coideal_subalgebra(
                                         ex.bialgebra, hopfx::Subspace::span(ex.bialgebra.field(), ex.bialgebra.dim(),
                                                                             {ex.bialgebra.algebra().unit()})),
                                     {"presentation", {}}, std::nullopt, !ex.bialgebra.has_antipode(), {}};
          hopfx::write_file(output, hopfx::serialize(hopfx::to_file(inst)));
        }
      } catch (const hopfx::Error& e) {
        if (e.code() != hopfx::ErrorCode::StructureCheckFailed) throw;
        results["structure"] = {{"all_passed", false}, {"error", e.what()}, {"witness", e.witness()}};
        log(Level::Error, e.what());
        code = 1;
      }
    }
  }
  emit(c, hopfx::report("rewrite", bytes, c.seed, results), start);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-dimensional Hopf algebra toolkit: axioms, characters, simples, fiber/orbit verification"};
  app.require_subcommand(1);
  Common common;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("-i,--input", common.input, "input file");
    if (needs_input) in->required();
    sub->add_option("--seed", common.seed, "seed for all randomized steps")->default_val(0);
    sub->add_option("-r,--report", common.report_path, "write the report here instead of stdout");
    sub->add_flag("--timing", common.timing, "include wall-clock timing in the report");
  };

  std::string family, shipped, group, central = "center", output, mode = "global";
  std::uint64_t p = 7, ell = 3, t = 3;
  bool presentation = false;

  auto* corpus = app.add_subcommand("corpus", "build a corpus instance and write it as an algebra file");
  corpus->add_option("--family", family, "group, qsl2, usl2 or qm2");
  corpus->add_option("--shipped", shipped, "one of c3, c4, q8, s3c2, qsl2, usl2, qm2 (with expectations)");
  corpus->add_option("--group", group, "built-in group name or a Cayley-table JSON file");
  corpus->add_option("--central-subgroup", central, "center, trivial, all, or element list")->default_val("center");
  corpus->add_option("--p", p, "prime")->default_val(7);
  corpus->add_option("--ell", ell, "root-of-unity order for qsl2/usl2")->default_val(3);
  corpus->add_option("--t", t, "root-of-unity order for qm2")->default_val(3);
  corpus->add_option("-o,--output", output, "output path (stdout if omitted)");
  corpus->add_flag("--presentation", presentation, "write the rewriting presentation instead of the algebra file");

  auto* axioms = app.add_subcommand("axioms", "check the bialgebra and Hopf axioms");
  add_common(axioms, true);
  auto* characters = app.add_subcommand("characters", "list all characters");
  add_common(characters, true);
  auto* simples = app.add_subcommand("simples", "list the simple modules");
  add_common(simples, true);
  auto* verify = app.add_subcommand("verify", "compare fibers over A with X-orbits");
  add_common(verify, true);
  verify->add_option("--mode", mode, "local or global")->default_val("global");
  auto* rewrite = app.add_subcommand("rewrite", "certify a presentation file and extract its structure");
  add_common(rewrite, true);
  rewrite->add_option("-o,--output", output, "write the extracted algebra file here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*corpus) return run_corpus(family, shipped, group, central, p, ell, t, output, presentation);
    if (*axioms) return run_axioms(common);
    if (*characters) return run_characters(common);
    if (*simples) return run_simples(common);
    if (*verify) return run_verify(common, mode);
    if (*rewrite) return run_rewrite(common, output);
  } catch (const InputError& e) {
    log(Level::Error, e.message);
    return 2;
  } catch (const hopfx::Error& e) {
    log(Level::Error, e.what());
    switch (e.code()) {
      case hopfx::ErrorCode::StructureCheckFailed:
      case hopfx::ErrorCode::NotAPermutation:
        return 1;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    log(Level::Error, e.what());
    return 2;
  }
  return 2;
}
