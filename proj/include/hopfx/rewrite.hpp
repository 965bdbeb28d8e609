#pragma once

// Bounded noncommutative rewriting: normal forms modulo a curated rule
// set, critical-pair confluence certification, basis enumeration, and
// extraction of bialgebra structure constants from generator data.
//
// Words are ordered by (total weight, length, lexicographic by generator
// index). The order is compatible with concatenation, so a rule whose
// right side is smaller than its leading word always shrinks the word it
// is applied to.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hopfx/algebra.hpp"
#include "hopfx/bialgebra.hpp"
#include "hopfx/error.hpp"
#include "hopfx/field.hpp"
#include "hopfx/matrix.hpp"

namespace hopfx {

using Word = std::vector<std::uint32_t>;
using WordPoly = std::map<Word, Fp>;
using TensorPoly = std::map<std::pair<Word, Word>, Fp>;

struct Rule {
  Word lead;
  WordPoly rhs;
};

inline void add_term(const PrimeField& f, WordPoly& p, const Word& w, Fp c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(w, c);
  if (!inserted) {
    it->second = f.add(it->second, c);
    if (it->second == 0) p.erase(it);
  }
}

inline void add_scaled(const PrimeField& f, WordPoly& acc, const WordPoly& p, Fp c) {
  if (c == 0) return;
  for (const auto& [w, v] : p) add_term(f, acc, w, f.mul(c, v));
}

inline Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

inline WordPoly multiply(const PrimeField& f, const WordPoly& x, const WordPoly& y) {
  WordPoly out;
  for (const auto& [u, a] : x)
    for (const auto& [v, b] : y) add_term(f, out, concat(u, v), f.mul(a, b));
  return out;
}

class Presentation {
 public:
  Presentation(PrimeField field, std::vector<std::string> generators, std::vector<Rule> rules,
               std::size_t word_bound, std::vector<unsigned> weights = {})
      : field_(field),
        generators_(std::move(generators)),
        rules_(std::move(rules)),
        bound_(word_bound),
        weights_(std::move(weights)) {
    if (weights_.empty()) weights_.assign(generators_.size(), 1);
    if (weights_.size() != generators_.size())
      fail(ErrorCode::DimensionMismatch, "one weight per generator");
    for (std::size_t i = 0; i < generators_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (generators_[i] == generators_[j])
          fail(ErrorCode::InvalidArgument, "duplicate generator " + generators_[i]);
    for (std::size_t r = 0; r < rules_.size(); ++r) {
      const Rule& rule = rules_[r];
      if (rule.lead.empty()) fail(ErrorCode::InvalidArgument, "rule with empty leading word");
      check_word(rule.lead);
      for (std::size_t s = 0; s < r; ++s) {
        if (rules_[s].lead == rule.lead)
          fail(ErrorCode::DuplicateRule, "two rules share the leading word " + to_string(rule.lead),
               {s, r});
      }
      for (const auto& [w, c] : rule.rhs) {
        check_word(w);
        if (c == 0 || c >= field_.p()) fail(ErrorCode::InvalidArgument, "rule coefficient not reduced");
        if (compare(w, rule.lead) != std::strong_ordering::less)
          fail(ErrorCode::NotTerminating,
               "rule " + to_string(rule.lead) + " -> ... has a right side word " + to_string(w) +
                   " that is not smaller",
               {r});
      }
    }
  }

  const PrimeField& field() const noexcept { return field_; }
  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  std::size_t word_bound() const noexcept { return bound_; }
  const std::vector<unsigned>& weights() const noexcept { return weights_; }

  std::uint64_t weight(const Word& w) const {
    std::uint64_t s = 0;
    for (auto g : w) s += weights_[g];
    return s;
  }

  std::strong_ordering compare(const Word& a, const Word& b) const {
    if (auto c = weight(a) <=> weight(b); c != 0) return c;
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a <=> b;
  }

  std::optional<std::uint32_t> generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
      if (generators_[i] == name) return static_cast<std::uint32_t>(i);
    return std::nullopt;
  }

  /// "1" for the empty word, else factors like a^2*b.
  std::string to_string(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      if (!out.empty()) out += '*';
      out += w[i] < generators_.size() ? generators_[w[i]] : "?";
      if (j - i > 1) out += '^' + std::to_string(j - i);
      i = j;
    }
    return out;
  }

 private:
  void check_word(const Word& w) const {
    for (auto g : w)
      if (g >= generators_.size()) fail(ErrorCode::InvalidArgument, "generator index out of range");
  }

  PrimeField field_;
  std::vector<std::string> generators_;
  std::vector<Rule> rules_;
  std::size_t bound_;
  std::vector<unsigned> weights_;
};

/// Which redex a single rewriting step picks: the one starting furthest
/// left, or the one ending furthest right.
enum class Strategy { Leftmost, Rightmost };

/// Memoized normal forms for one presentation and one strategy.
class Normalizer {
 public:
  explicit Normalizer(const Presentation& pres, Strategy strategy = Strategy::Leftmost,
                      std::uint64_t fuel = 50'000'000)
      : pres_(&pres), strategy_(strategy), fuel_(fuel) {}

  const Presentation& presentation() const noexcept { return *pres_; }

  struct Match {
    std::size_t rule;
    std::size_t pos;
  };

  std::optional<Match> find_match(const Word& w) const {
    std::optional<Match> best;
    const auto& rules = pres_->rules();
    for (std::size_t r = 0; r < rules.size(); ++r) {
      const Word& lead = rules[r].lead;
      if (lead.size() > w.size()) continue;
      for (std::size_t pos = 0; pos + lead.size() <= w.size(); ++pos) {
        if (!std::equal(lead.begin(), lead.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) continue;
        if (!best || better({r, pos}, *best)) best = Match{r, pos};
      }
    }
    return best;
  }

  bool is_irreducible(const Word& w) const { return !find_match(w); }

  const WordPoly& normalize_word(const Word& w) {
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    if (w.size() > pres_->word_bound())
      fail(ErrorCode::BoundExceeded, "word " + pres_->to_string(w) + " exceeds the word bound");
    WordPoly result;
    if (auto m = find_match(w)) {
      if (steps_++ >= fuel_) fail(ErrorCode::NotTerminating, "rewriting fuel exhausted");
      const Rule& rule = pres_->rules()[m->rule];
      const Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(m->pos));
      const Word suffix(w.begin() + static_cast<std::ptrdiff_t>(m->pos + rule.lead.size()), w.end());
      for (const auto& [r, c] : rule.rhs) {
        Word next = concat(concat(prefix, r), suffix);
        const WordPoly& nf = normalize_word(next);
        add_scaled(pres_->field(), result, nf, c);
      }
    } else {
      result.emplace(w, 1);
    }
    return cache_.emplace(w, std::move(result)).first->second;
  }

  WordPoly normalize(const WordPoly& p) {
    WordPoly out;
    for (const auto& [w, c] : p) add_scaled(pres_->field(), out, normalize_word(w), c);
    return out;
  }

  std::uint64_t steps() const noexcept { return steps_; }

 private:
  bool better(const Match& a, const Match& b) const {
    const auto& rules = pres_->rules();
    const std::size_t a_len = rules[a.rule].lead.size(), b_len = rules[b.rule].lead.size();
    if (strategy_ == Strategy::Leftmost) {
      if (a.pos != b.pos) return a.pos < b.pos;
      return a_len < b_len;
    }
    const std::size_t a_end = a.pos + a_len, b_end = b.pos + b_len;
    if (a_end != b_end) return a_end > b_end;
    return a_len < b_len;
  }

  const Presentation* pres_;
  Strategy strategy_;
  std::uint64_t fuel_;
  std::uint64_t steps_ = 0;
  std::map<Word, WordPoly> cache_;
};

inline WordPoly normalize(const Presentation& pres, const WordPoly& p,
                          Strategy strategy = Strategy::Leftmost) {
  Normalizer n(pres, strategy);
  return n.normalize(p);
}

struct UnresolvedPair {
  std::size_t rule_a = 0, rule_b = 0;
  Word overlap;
  WordPoly via_a, via_b;
};

struct ConfluenceReport {
  std::size_t pairs_checked = 0;
  std::vector<UnresolvedPair> unresolved;
  bool confluent() const noexcept { return unresolved.empty(); }
};

/// Resolves every overlap and inclusion ambiguity between two rules.
inline ConfluenceReport complete_check(const Presentation& pres) {
  const auto& f = pres.field();
  const auto& rules = pres.rules();
  Normalizer nf(pres);
  ConfluenceReport report;

  auto rewrite_at = [&](const Word& w, std::size_t r, std::size_t pos) {
    const Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    const Word suffix(w.begin() + static_cast<std::ptrdiff_t>(pos + rules[r].lead.size()), w.end());
    WordPoly out;
    for (const auto& [m, c] : rules[r].rhs) add_term(f, out, concat(concat(prefix, m), suffix), c);
    return nf.normalize(out);
  };
  auto resolve = [&](std::size_t a, std::size_t pos_a, std::size_t b, std::size_t pos_b, const Word& w) {
    ++report.pairs_checked;
    WordPoly x = rewrite_at(w, a, pos_a);
    WordPoly y = rewrite_at(w, b, pos_b);
    if (x != y) report.unresolved.push_back({a, b, w, std::move(x), std::move(y)});
  };

  for (std::size_t a = 0; a < rules.size(); ++a) {
    const Word& la = rules[a].lead;
    for (std::size_t b = 0; b < rules.size(); ++b) {
      const Word& lb = rules[b].lead;
      // suffix of la == prefix of lb, both proper
      for (std::size_t k = 1; k < la.size() && k < lb.size(); ++k) {
        if (!std::equal(la.end() - static_cast<std::ptrdiff_t>(k), la.end(), lb.begin())) continue;
        Word w = la;
        w.insert(w.end(), lb.begin() + static_cast<std::ptrdiff_t>(k), lb.end());
        resolve(a, 0, b, la.size() - k, w);
      }
      // lb strictly inside la
      if (a != b && lb.size() <= la.size()) {
        for (std::size_t pos = 0; pos + lb.size() <= la.size(); ++pos) {
          if (std::equal(lb.begin(), lb.end(), la.begin() + static_cast<std::ptrdiff_t>(pos)))
            resolve(a, 0, b, pos, la);
        }
      }
    }
  }
  return report;
}

inline void require_confluent(const Presentation& pres) {
  const auto report = complete_check(pres);
  if (!report.confluent()) {
    const auto& u = report.unresolved.front();
    fail(ErrorCode::NotConfluent,
         "ambiguity on " + pres.to_string(u.overlap) + " does not resolve",
         {u.rule_a, u.rule_b});
  }
}

/// All irreducible words, in presentation order (the empty word first).
/// Irreducible words are closed under taking prefixes, so they are grown
/// one letter at a time.
inline std::vector<Word> enumerate_basis(const Presentation& pres) {
  const std::size_t ngen = pres.generators().size();
  for (std::uint32_t g = 0; g < ngen; ++g) {
    bool has_power = false;
    for (const auto& r : pres.rules())
      has_power = has_power || std::all_of(r.lead.begin(), r.lead.end(), [g](auto x) { return x == g; });
    if (!has_power)
      fail(ErrorCode::InfiniteBasis, "no power rule for generator " + pres.generators()[g], {g});
  }
  require_confluent(pres);
  Normalizer nf(pres);
  std::vector<Word> out{Word{}};
  std::vector<Word> frontier{Word{}};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      for (std::uint32_t g = 0; g < ngen; ++g) {
        Word x = w;
        x.push_back(g);
        if (!nf.is_irreducible(x)) continue;
        if (x.size() > pres.word_bound())
          fail(ErrorCode::BoundExceeded, "irreducible words outgrow the word bound");
        next.push_back(std::move(x));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(),
            [&](const Word& a, const Word& b) { return pres.compare(a, b) == std::strong_ordering::less; });
  return out;
}

/// Generator images of the structure maps, as polynomials in the
/// generators (normalized on extraction).
struct GeneratorData {
  std::vector<TensorPoly> comul;
  std::vector<Fp> counit;
  std::optional<std::vector<WordPoly>> antipode;
};

struct ExtractedBialgebra {
  std::vector<Word> basis;
  Bialgebra bialgebra;
};

/// Structure constants on the irreducible-word basis. Delta and the counit
/// are extended multiplicatively and S anti-multiplicatively from the
/// generators; the result must pass verify_structure.
inline ExtractedBialgebra extract_bialgebra(const Presentation& pres, const GeneratorData& data) {
  const auto& f = pres.field();
  const std::size_t ngen = pres.generators().size();
  if (data.comul.size() != ngen || data.counit.size() != ngen ||
      (data.antipode && data.antipode->size() != ngen))
    fail(ErrorCode::DimensionMismatch, "structure data needs one image per generator");

  std::vector<Word> basis = enumerate_basis(pres);
  const std::size_t n = basis.size();
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(basis[i], i);

  Normalizer nf(pres);
  auto to_vector = [&](const WordPoly& p) {
    Vector v(n, 0);
    for (const auto& [w, c] : nf.normalize(p)) v[index.at(w)] = c;
    return v;
  };

  std::vector<MulEntry> mul;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [w, c] : nf.normalize_word(concat(basis[i], basis[j])))
        mul.push_back({i, j, index.at(w), c});
    }
  }
  std::vector<std::string> labels;
  for (const auto& w : basis) labels.push_back(pres.to_string(w));
  Algebra alg = build_algebra(f, n, unit_vector(n, 0), std::move(mul), labels);

  std::vector<std::vector<TensorTerm>> gen_comul(ngen);
  std::vector<Vector> gen_antipode;
  for (std::size_t g = 0; g < ngen; ++g) {
    Tensor t(f, n, n);
    for (const auto& [pair, c] : data.comul[g]) {
      const Vector l = to_vector(WordPoly{{pair.first, 1}});
      const Vector r = to_vector(WordPoly{{pair.second, 1}});
      t.add_scaled(c, outer(f, l, r));
    }
    gen_comul[g] = tensor_terms(t);
    if (data.antipode) gen_antipode.push_back(to_vector((*data.antipode)[g]));
  }

  // basis[i] = g * basis[parent]; the suffix of an irreducible word is irreducible.
  std::vector<Tensor> comul(n, Tensor(f, n, n));
  Vector counit(n, 0);
  Matrix antipode(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Word& w = basis[i];
    if (w.empty()) {
      comul[i](0, 0) = 1;
      counit[i] = 1;
      antipode(0, i) = 1;
      continue;
    }
    const std::uint32_t g = w.front();
    const std::size_t parent = index.at(Word(w.begin() + 1, w.end()));
    comul[i] = tensor_multiply(alg, gen_comul[g], tensor_terms(comul[parent]));
    counit[i] = f.mul(data.counit[g], counit[parent]);
    if (data.antipode)
      antipode.set_column(i, alg.multiply(antipode.column(parent), gen_antipode[g]));
  }
  std::vector<ComulEntry> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : tensor_terms(comul[i])) entries.push_back({i, t.left, t.right, t.coeff});

  std::optional<Matrix> s;
  if (data.antipode) s = std::move(antipode);
  Bialgebra b(std::move(alg), std::move(entries), std::move(counit), std::move(s));
  require_valid(b);
  return {std::move(basis), std::move(b)};
}

// ---------------------------------------------------------------------------
// Text format
//
//   # comment
//   field 7
//   generators a b c
//   weights 1 1 1            (optional)
//   bound 12
//   b*a -> 4 a*b
//   a^3 -> 1
//   b^3 -> 0
//   delta a = a (x) a + b (x) c
//   counit a = 1
//   antipode a = a^2 + 2 a^2*b*c
//
// Words are generator names joined by '*', with ^n for powers; "1" is the
// empty word. A term is an optional integer coefficient followed by a
// word; terms are joined by + or -.

struct PresentationFile {
  Presentation presentation;
  std::optional<GeneratorData> structure;
};

namespace detail {

inline std::vector<std::string> tokenize_poly(const std::string& s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (ch == '+' || ch == '-') {
      out.emplace_back(1, ch);
      ++i;
    } else if (s.compare(i, 3, "(x)") == 0) {
      out.emplace_back("(x)");
      i += 3;
    } else {
      std::size_t j = i;
      while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != '+' &&
             s[j] != '-' && s.compare(j, 3, "(x)") != 0)
        ++j;
      out.push_back(s.substr(i, j - i));
      i = j;
    }
  }
  return out;
}

inline bool is_integer(const std::string& t) {
  return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

inline Word parse_word(const std::vector<std::string>& gens, const std::string& text) {
  if (text == "1") return {};
  Word w;
  std::stringstream ss(text);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    std::string name = factor;
    std::size_t power = 1;
    if (auto caret = factor.find('^'); caret != std::string::npos) {
      name = factor.substr(0, caret);
      const std::string e = factor.substr(caret + 1);
      if (!is_integer(e)) fail(ErrorCode::ParseError, "bad exponent in " + text);
      power = std::stoul(e);
    }
    auto it = std::find(gens.begin(), gens.end(), name);
    if (it == gens.end()) fail(ErrorCode::ParseError, "unknown generator '" + name + "'");
    w.insert(w.end(), power, static_cast<std::uint32_t>(it - gens.begin()));
  }
  return w;
}

/// Parses a signed sum of terms; each term is [coeff] word or [coeff] word (x) word.
template <typename Sink>
inline void parse_terms(const PrimeField& f, const std::string& text, bool tensor, Sink&& sink,
                        const std::vector<std::string>& gens) {
  const auto tokens = tokenize_poly(text);
  if (tokens.size() == 1 && tokens[0] == "0") return;
  std::size_t i = 0;
  bool first = true;
  while (i < tokens.size()) {
    bool negative = false;
    if (tokens[i] == "+" || tokens[i] == "-") {
      negative = tokens[i] == "-";
      ++i;
    } else if (!first) {
      fail(ErrorCode::ParseError, "expected + or - in '" + text + "'");
    }
    first = false;
    if (i >= tokens.size()) fail(ErrorCode::ParseError, "dangling sign in '" + text + "'");
    std::int64_t coeff = 1;
    bool have_coeff = false;
    if (is_integer(tokens[i])) {
      // In "1 (x) w" the leading 1 is the empty word.
      const bool is_word = tensor && tokens[i] == "1" && i + 1 < tokens.size() && tokens[i + 1] == "(x)";
      if (!is_word) {
        coeff = std::stoll(tokens[i]);
        have_coeff = true;
        ++i;
      }
    }
    Word left, right;
    const bool word_next = i < tokens.size() && tokens[i] != "+" && tokens[i] != "-" && tokens[i] != "(x)";
    if (word_next) {
      left = parse_word(gens, tokens[i++]);
    } else if (!have_coeff || tensor) {
      fail(ErrorCode::ParseError, "expected a word in '" + text + "'");
    }
    if (tensor) {
      if (i + 1 >= tokens.size() || tokens[i] != "(x)")
        fail(ErrorCode::ParseError, "expected '(x) word' in '" + text + "'");
      right = parse_word(gens, tokens[i + 1]);
      i += 2;
    }
    const Fp c = f.reduce(negative ? -coeff : coeff);
    sink(std::move(left), std::move(right), c);
  }
}

}  // namespace detail

inline PresentationFile parse_presentation(const std::string& text) {
  std::optional<PrimeField> field;
  std::vector<std::string> gens;
  std::vector<unsigned> weights;
  std::size_t bound = 0;
  std::vector<std::pair<std::string, std::string>> rule_lines;
  std::vector<std::pair<std::string, std::string>> delta_lines, counit_lines, antipode_lines;

  std::stringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string{};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::stringstream ls(line);
    std::string head;
    ls >> head;
    std::string rest;
    std::getline(ls, rest);
    rest = trim(rest);
    auto split_eq = [&](const std::string& s) {
      const auto eq = s.find('=');
      if (eq == std::string::npos)
        fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected '='");
      return std::make_pair(trim(s.substr(0, eq)), trim(s.substr(eq + 1)));
    };
    if (head == "field") {
      field = PrimeField(std::stoull(rest));
    } else if (head == "generators") {
      std::stringstream gs(rest);
      for (std::string g; gs >> g;) gens.push_back(g);
    } else if (head == "weights") {
      std::stringstream ws(rest);
      for (unsigned w; ws >> w;) weights.push_back(w);
    } else if (head == "bound") {
      bound = std::stoull(rest);
    } else if (head == "delta") {
      delta_lines.push_back(split_eq(rest));
    } else if (head == "counit") {
      counit_lines.push_back(split_eq(rest));
    } else if (head == "antipode") {
      antipode_lines.push_back(split_eq(rest));
    } else {
      const auto arrow = line.find("->");
      if (arrow == std::string::npos)
        fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": unrecognized line");
      rule_lines.emplace_back(trim(line.substr(0, arrow)), trim(line.substr(arrow + 2)));
    }
  }
  if (!field) fail(ErrorCode::ParseError, "missing 'field' line");
  if (gens.empty()) fail(ErrorCode::ParseError, "missing 'generators' line");
  if (bound == 0) fail(ErrorCode::ParseError, "missing 'bound' line");
  const PrimeField& f = *field;

  std::vector<Rule> rules;
  for (const auto& [lhs, rhs] : rule_lines) {
    Rule r{detail::parse_word(gens, lhs), {}};
    detail::parse_terms(f, rhs, false, [&](Word w, Word, Fp c) { add_term(f, r.rhs, w, c); }, gens);
    rules.push_back(std::move(r));
  }
  Presentation pres(f, gens, std::move(rules), bound, std::move(weights));

  if (delta_lines.empty() && counit_lines.empty() && antipode_lines.empty()) return {std::move(pres), std::nullopt};
  GeneratorData data;
  data.comul.resize(gens.size());
  data.counit.assign(gens.size(), 0);
  std::vector<bool> seen_delta(gens.size(), false), seen_counit(gens.size(), false);
  auto gen_of = [&](const std::string& name) {
    auto g = pres.generator_index(name);
    if (!g) fail(ErrorCode::ParseError, "unknown generator '" + name + "'");
    return *g;
  };
  for (const auto& [name, rhs] : delta_lines) {
    const auto g = gen_of(name);
    seen_delta[g] = true;
    detail::parse_terms(f, rhs, true, [&](Word l, Word r, Fp c) {
      if (c == 0) return;
      auto [it, ins] = data.comul[g].try_emplace({l, r}, c);
      if (!ins) it->second = f.add(it->second, c);
    }, gens);
  }
  for (const auto& [name, rhs] : counit_lines) {
    const auto g = gen_of(name);
    seen_counit[g] = true;
    detail::parse_terms(f, rhs, false, [&](Word w, Word, Fp c) {
      if (!w.empty()) fail(ErrorCode::ParseError, "counit values must be scalars");
      data.counit[g] = f.add(data.counit[g], c);
    }, gens);
  }
  if (!antipode_lines.empty()) {
    data.antipode.emplace(gens.size());
    std::vector<bool> seen(gens.size(), false);
    for (const auto& [name, rhs] : antipode_lines) {
      const auto g = gen_of(name);
      seen[g] = true;
      detail::parse_terms(f, rhs, false, [&](Word w, Word, Fp c) { add_term(f, (*data.antipode)[g], w, c); }, gens);
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
      fail(ErrorCode::ParseError, "antipode must be given on every generator");
  }
  if (std::find(seen_delta.begin(), seen_delta.end(), false) != seen_delta.end() ||
      std::find(seen_counit.begin(), seen_counit.end(), false) != seen_counit.end())
    fail(ErrorCode::ParseError, "delta and counit must be given on every generator");
  return {std::move(pres), std::move(data)};
}

namespace detail {

inline std::string format_coeff_term(const Presentation& pres, Fp c, const std::string& word, bool first) {
  const auto& f = pres.field();
  const std::int64_t v = f.centered(c);
  std::string out = first ? (v < 0 ? "-" : "") : (v < 0 ? " - " : " + ");
  const std::int64_t mag = v < 0 ? -v : v;
  if (mag != 1 || word == "1") {
    out += std::to_string(mag);
    if (word != "1") out += ' ';
  }
  if (word != "1") out += word;
  return out;
}

}  // namespace detail

inline std::string format_poly(const Presentation& pres, const WordPoly& p) {
  if (p.empty()) return "0";
  std::vector<std::pair<Word, Fp>> terms(p.begin(), p.end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    return pres.compare(a.first, b.first) == std::strong_ordering::greater;
  });
  std::string out;
  for (const auto& [w, c] : terms) out += detail::format_coeff_term(pres, c, pres.to_string(w), out.empty());
  return out;
}

inline std::string format_tensor(const Presentation& pres, const TensorPoly& t) {
  if (t.empty()) return "0";
  std::string out;
  for (const auto& [pair, c] : t)
    out += detail::format_coeff_term(pres, c, pres.to_string(pair.first) + " (x) " + pres.to_string(pair.second),
                                     out.empty());
  return out;
}

inline std::string format_presentation(const Presentation& pres,
                                       const std::optional<GeneratorData>& structure = std::nullopt) {
  std::ostringstream out;
  out << "field " << pres.field().p() << '\n';
  out << "generators";
  for (const auto& g : pres.generators()) out << ' ' << g;
  out << '\n';
  if (std::any_of(pres.weights().begin(), pres.weights().end(), [](unsigned w) { return w != 1; })) {
    out << "weights";
    for (auto w : pres.weights()) out << ' ' << w;
    out << '\n';
  }
  out << "bound " << pres.word_bound() << '\n';
  for (const auto& r : pres.rules()) out << pres.to_string(r.lead) << " -> " << format_poly(pres, r.rhs) << '\n';
  if (structure) {
    const auto& gens = pres.generators();
    for (std::size_t g = 0; g < gens.size(); ++g)
      out << "delta " << gens[g] << " = " << format_tensor(pres, structure->comul[g]) << '\n';
    for (std::size_t g = 0; g < gens.size(); ++g)
      out << "counit " << gens[g] << " = " << pres.field().centered(structure->counit[g]) << '\n';
    if (structure->antipode)
      for (std::size_t g = 0; g < gens.size(); ++g)
        out << "antipode " << gens[g] << " = " << format_poly(pres, (*structure->antipode)[g]) << '\n';
  }
  return out.str();
}

}  // namespace hopfx
