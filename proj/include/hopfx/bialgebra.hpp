#pragma once

// Bialgebra and Hopf structure data as explicit linear maps, and the
// axiom checker every builder and file loader runs.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hopfx/algebra.hpp"
#include "hopfx/error.hpp"
#include "hopfx/matrix.hpp"

namespace hopfx {

/// Delta(e_i) contains c * e_j (x) e_k.
struct ComulEntry {
  std::size_t i = 0, j = 0, k = 0;
  Fp c = 0;
  friend auto operator<=>(const ComulEntry&, const ComulEntry&) = default;
};

struct TensorTerm {
  std::size_t left = 0, right = 0;
  Fp coeff = 0;
};

/// Elements of B (x) B are n x n matrices: entry (j, k) is the coefficient
/// of e_j (x) e_k.
using Tensor = Matrix;

inline std::vector<TensorTerm> tensor_terms(const Tensor& t) {
  std::vector<TensorTerm> out;
  for (std::size_t j = 0; j < t.rows(); ++j)
    for (std::size_t k = 0; k < t.cols(); ++k)
      if (t(j, k) != 0) out.push_back({j, k, t(j, k)});
  return out;
}

/// Product in the tensor square: (x (x) y)(u (x) v) = xu (x) yv.
inline Tensor tensor_multiply(const Algebra& alg, const std::vector<TensorTerm>& x,
                              const std::vector<TensorTerm>& y) {
  const auto& f = alg.field();
  Tensor out(f, alg.dim(), alg.dim());
  for (const auto& a : x) {
    for (const auto& b : y) {
      const Fp scale_by = f.mul(a.coeff, b.coeff);
      const auto& left = alg.product(a.left, b.left);
      const auto& right = alg.product(a.right, b.right);
      for (const auto& l : left) {
        const Fp lc = f.mul(scale_by, l.coeff);
        for (const auto& r : right) out(l.index, r.index) = f.fma(out(l.index, r.index), lc, r.coeff);
      }
    }
  }
  return out;
}

inline Tensor outer(const PrimeField& f, const Vector& x, const Vector& y) {
  Tensor t(f, x.size(), y.size());
  for (std::size_t j = 0; j < x.size(); ++j)
    if (x[j] != 0)
      for (std::size_t k = 0; k < y.size(); ++k) t(j, k) = f.mul(x[j], y[k]);
  return t;
}

class Bialgebra {
 public:
  /// Structure data only; run verify_structure before trusting it.
  Bialgebra(Algebra alg, std::vector<ComulEntry> comul, Vector counit,
            std::optional<Matrix> antipode = std::nullopt)
      : alg_(std::move(alg)), counit_(std::move(counit)), antipode_(std::move(antipode)) {
    const auto& f = alg_.field();
    const std::size_t n = alg_.dim();
    if (counit_.size() != n) fail(ErrorCode::DimensionMismatch, "counit length");
    if (antipode_ && (antipode_->rows() != n || antipode_->cols() != n))
      fail(ErrorCode::DimensionMismatch, "antipode shape");
    std::sort(comul.begin(), comul.end());
    for (const auto& e : comul) {
      if (e.i >= n || e.j >= n || e.k >= n)
        fail(ErrorCode::InvalidArgument, "comultiplication index out of range");
      if (e.c >= f.p()) fail(ErrorCode::InvalidArgument, "comultiplication coefficient not reduced");
      if (!entries_.empty() && entries_.back().i == e.i && entries_.back().j == e.j &&
          entries_.back().k == e.k) {
        entries_.back().c = f.add(entries_.back().c, e.c);
      } else {
        entries_.push_back(e);
      }
    }
    std::erase_if(entries_, [](const ComulEntry& e) { return e.c == 0; });
    comul_.resize(n);
    for (const auto& e : entries_) comul_[e.i].push_back({e.j, e.k, e.c});
  }

  const Algebra& algebra() const noexcept { return alg_; }
  const PrimeField& field() const noexcept { return alg_.field(); }
  std::size_t dim() const noexcept { return alg_.dim(); }

  const std::vector<ComulEntry>& comul_entries() const noexcept { return entries_; }
  const std::vector<TensorTerm>& coproduct(std::size_t i) const { return comul_.at(i); }
  const Vector& counit() const noexcept { return counit_; }
  bool has_antipode() const noexcept { return antipode_.has_value(); }
  const Matrix& antipode() const {
    if (!antipode_) fail(ErrorCode::NoAntipode, "bialgebra has no antipode");
    return *antipode_;
  }
  const std::optional<Matrix>& antipode_if_any() const noexcept { return antipode_; }

  Tensor coproduct_of(const Vector& x) const {
    alg_.check(x);
    const auto& f = field();
    Tensor t(f, dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i] == 0) continue;
      for (const auto& term : comul_[i]) t(term.left, term.right) = f.fma(t(term.left, term.right), x[i], term.coeff);
    }
    return t;
  }

  Fp counit_of(const Vector& x) const { return dot(field(), counit_, x); }

  Vector antipode_of(const Vector& x) const { return antipode().apply(x); }

 private:
  Algebra alg_;
  std::vector<ComulEntry> entries_;
  std::vector<std::vector<TensorTerm>> comul_;
  Vector counit_;
  std::optional<Matrix> antipode_;
};

struct AxiomResult {
  std::string name;
  bool passed = true;
  std::vector<std::size_t> witness;  // basis index, or (generator, index) pair
};

struct AxiomReport {
  std::vector<AxiomResult> axioms;

  bool all_passed() const {
    return std::all_of(axioms.begin(), axioms.end(), [](const auto& a) { return a.passed; });
  }
  const AxiomResult* first_failure() const {
    for (const auto& a : axioms)
      if (!a.passed) return &a;
    return nullptr;
  }
  const AxiomResult& at(const std::string& name) const {
    for (const auto& a : axioms)
      if (a.name == name) return a;
    fail(ErrorCode::InvalidArgument, "no axiom named " + name);
  }
};

namespace axiom {
inline constexpr const char* coassociativity = "coassociativity";
inline constexpr const char* left_counit = "left_counit";
inline constexpr const char* right_counit = "right_counit";
inline constexpr const char* comul_unit = "comul_unit";
inline constexpr const char* comul_multiplicative = "comul_multiplicative";
inline constexpr const char* counit_unit = "counit_unit";
inline constexpr const char* counit_multiplicative = "counit_multiplicative";
inline constexpr const char* antipode_left = "antipode_left";
inline constexpr const char* antipode_right = "antipode_right";
}  // namespace axiom

namespace detail {

inline bool coassociative_at(const Bialgebra& b, std::size_t i) {
  const auto& f = b.field();
  const std::size_t n = b.dim();
  std::vector<Fp> lhs(n * n * n, 0), rhs(n * n * n, 0);
  for (const auto& t : b.coproduct(i)) {
    // (Delta (x) id): Delta(e_j) (x) e_k
    for (const auto& s : b.coproduct(t.left)) {
      auto& slot = lhs[(s.left * n + s.right) * n + t.right];
      slot = f.fma(slot, t.coeff, s.coeff);
    }
    // (id (x) Delta): e_j (x) Delta(e_k)
    for (const auto& s : b.coproduct(t.right)) {
      auto& slot = rhs[(t.left * n + s.left) * n + s.right];
      slot = f.fma(slot, t.coeff, s.coeff);
    }
  }
  return lhs == rhs;
}

inline bool counit_law_at(const Bialgebra& b, std::size_t i, bool left) {
  const auto& f = b.field();
  Vector v(b.dim(), 0);
  for (const auto& t : b.coproduct(i)) {
    const std::size_t keep = left ? t.right : t.left;
    const std::size_t drop = left ? t.left : t.right;
    v[keep] = f.fma(v[keep], t.coeff, b.counit()[drop]);
  }
  return v == unit_vector(b.dim(), i);
}

inline bool comul_multiplicative_at(const Bialgebra& b, std::size_t g, std::size_t j) {
  const auto& alg = b.algebra();
  const Tensor lhs = b.coproduct_of(alg.multiply(alg.basis_element(g), alg.basis_element(j)));
  return lhs == tensor_multiply(alg, b.coproduct(g), b.coproduct(j));
}

inline bool antipode_at(const Bialgebra& b, std::size_t i, bool left) {
  const auto& f = b.field();
  const auto& alg = b.algebra();
  const Matrix& s = b.antipode();
  Vector acc(b.dim(), 0);
  for (const auto& t : b.coproduct(i)) {
    const Vector prod = left ? alg.multiply(s.column(t.left), alg.basis_element(t.right))
                             : alg.multiply(alg.basis_element(t.left), s.column(t.right));
    axpy(f, t.coeff, prod, acc);
  }
  return acc == scale(f, b.counit()[i], alg.unit());
}

}  // namespace detail

/// Checks every structural axiom and reports the first failing witness of
/// each. Delta-multiplicativity is checked on generator x basis pairs
/// together with Delta(1) = 1 (x) 1, which is equivalent to checking all
/// pairs because generator words span the algebra.
inline AxiomReport verify_structure(const Bialgebra& b) {
  const auto& f = b.field();
  const auto& alg = b.algebra();
  const std::size_t n = b.dim();
  AxiomReport report;
  auto per_index = [&](const char* name, auto&& holds) {
    AxiomResult r{name, true, {}};
    for (std::size_t i = 0; i < n; ++i) {
      if (!holds(i)) {
        r.passed = false;
        r.witness = {i};
        break;
      }
    }
    report.axioms.push_back(std::move(r));
  };

  per_index(axiom::coassociativity, [&](std::size_t i) { return detail::coassociative_at(b, i); });
  per_index(axiom::left_counit, [&](std::size_t i) { return detail::counit_law_at(b, i, true); });
  per_index(axiom::right_counit, [&](std::size_t i) { return detail::counit_law_at(b, i, false); });

  report.axioms.push_back({axiom::comul_unit,
                           b.coproduct_of(alg.unit()) == outer(f, alg.unit(), alg.unit()),
                           {}});
  {
    AxiomResult r{axiom::comul_multiplicative, true, {}};
    for (auto g : alg.generators()) {
      for (std::size_t j = 0; j < n && r.passed; ++j) {
        if (!detail::comul_multiplicative_at(b, g, j)) {
          r.passed = false;
          r.witness = {g, j};
        }
      }
      if (!r.passed) break;
    }
    report.axioms.push_back(std::move(r));
  }

  report.axioms.push_back({axiom::counit_unit, b.counit_of(alg.unit()) == 1, {}});
  {
    AxiomResult r{axiom::counit_multiplicative, true, {}};
    for (std::size_t i = 0; i < n && r.passed; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Fp lhs = 0;
        for (const auto& t : alg.product(i, j)) lhs = f.fma(lhs, t.coeff, b.counit()[t.index]);
        if (lhs != f.mul(b.counit()[i], b.counit()[j])) {
          r.passed = false;
          r.witness = {i, j};
          break;
        }
      }
    }
    report.axioms.push_back(std::move(r));
  }

  if (b.has_antipode()) {
    per_index(axiom::antipode_left, [&](std::size_t i) { return detail::antipode_at(b, i, true); });
    per_index(axiom::antipode_right, [&](std::size_t i) { return detail::antipode_at(b, i, false); });
  }
  return report;
}

/// Re-evaluates a single axiom at a reported witness; true when it holds.
inline bool axiom_holds_at(const Bialgebra& b, const std::string& name,
                           const std::vector<std::size_t>& witness) {
  const auto& alg = b.algebra();
  if (name == axiom::coassociativity) return detail::coassociative_at(b, witness.at(0));
  if (name == axiom::left_counit) return detail::counit_law_at(b, witness.at(0), true);
  if (name == axiom::right_counit) return detail::counit_law_at(b, witness.at(0), false);
  if (name == axiom::comul_multiplicative)
    return detail::comul_multiplicative_at(b, witness.at(0), witness.at(1));
  if (name == axiom::antipode_left) return detail::antipode_at(b, witness.at(0), true);
  if (name == axiom::antipode_right) return detail::antipode_at(b, witness.at(0), false);
  if (name == axiom::counit_multiplicative) {
    const auto& f = b.field();
    Fp lhs = 0;
    for (const auto& t : alg.product(witness.at(0), witness.at(1)))
      lhs = f.fma(lhs, t.coeff, b.counit()[t.index]);
    return lhs == f.mul(b.counit()[witness[0]], b.counit()[witness[1]]);
  }
  if (name == axiom::comul_unit)
    return b.coproduct_of(alg.unit()) == outer(b.field(), alg.unit(), alg.unit());
  if (name == axiom::counit_unit) return b.counit_of(alg.unit()) == 1;
  fail(ErrorCode::InvalidArgument, "unknown axiom " + name);
}

/// verify_structure, escalating the first failure to StructureCheckFailed.
inline void require_valid(const Bialgebra& b) {
  const AxiomReport report = verify_structure(b);
  if (const auto* bad = report.first_failure()) {
    std::string where;
    for (auto w : bad->witness) where += (where.empty() ? "" : ",") + std::to_string(w);
    fail(ErrorCode::StructureCheckFailed, bad->name + " fails at (" + where + ")", bad->witness);
  }
}

}  // namespace hopfx
