#pragma once

// Primitive ideals, contraction to A, fiber and X-orbit partitions, and the
// verdicts comparing them.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfx/algebra.hpp"
#include "hopfx/bialgebra.hpp"
#include "hopfx/corpus.hpp"
#include "hopfx/error.hpp"
#include "hopfx/hopf.hpp"
#include "hopfx/repn.hpp"
#include "hopfx/subspace.hpp"

namespace hopfx {

struct PrimItem {
  Subspace annihilator;
  std::size_t simple_dim = 0;
  std::optional<Character> character;
};

/// Annihilators of the simple modules, ordered by (dimension, annihilator).
inline std::vector<PrimItem> prim_enumerate(const Algebra& alg, const ChopOptions& options = {}) {
  std::vector<PrimItem> out;
  for (const auto& rec : simples(alg, options)) {
    PrimItem item{rec.annihilator, rec.module.dim(), std::nullopt};
    if (rec.module.dim() == 1) {
      Vector v(alg.dim());
      for (std::size_t i = 0; i < alg.dim(); ++i) v[i] = rec.module.action(i)(0, 0);
      item.character = Character{std::move(v)};
    }
    out.push_back(std::move(item));
  }
  std::sort(out.begin(), out.end(), [](const PrimItem& a, const PrimItem& b) {
    if (a.simple_dim != b.simple_dim) return a.simple_dim < b.simple_dim;
    return a.annihilator < b.annihilator;
  });
  return out;
}

inline Subspace contract(const PrimItem& p, const CoidealSubalgebra& a) {
  return intersect(p.annihilator, a.subspace);
}

/// Whether A / (A cap P) is a field, for commutative A: the Frobenius map
/// x -> x^p is F_p-linear there, the quotient is reduced iff some power of
/// it is injective, and a reduced quotient is a field iff Frobenius fixes
/// only the prime field.
inline bool is_maximal_in_A(const Algebra& alg, const CoidealSubalgebra& a, const Subspace& contraction) {
  const auto& f = alg.field();
  const Algebra sub = subalgebra_structure(alg, a.subspace);
  if (!sub.is_commutative()) fail(ErrorCode::InvalidArgument, "diagnostic needs commutative A");
  std::vector<Vector> coords;
  for (const auto& v : contraction.basis_vectors()) coords.push_back(*a.subspace.coordinates(v));
  const Subspace ideal = Subspace::span(f, sub.dim(), coords);
  if (ideal.contains(sub.unit())) return false;
  const Quotient q = quotient_algebra(sub, ideal);
  const Algebra& qa = q.algebra;
  const std::size_t n = qa.dim();
  auto power = [&](Vector x, std::uint64_t e) {
    Vector r = qa.unit();
    while (e > 0) {
      if (e & 1U) r = qa.multiply(r, x);
      x = qa.multiply(x, x);
      e >>= 1U;
    }
    return r;
  };
  Matrix frob(f, n, n);
  for (std::size_t i = 0; i < n; ++i) frob.set_column(i, power(qa.basis_element(i), f.p()));
  Matrix iter = Matrix::identity(f, n);
  for (std::size_t k = 0; k < n; ++k) iter = iter * frob;
  if (rank(iter) != n) return false;
  Matrix fixed = frob - Matrix::identity(f, n);
  return n - rank(fixed) == 1;
}

/// A partition of prim indices into blocks.
struct Partition {
  std::vector<std::vector<std::size_t>> blocks;

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> s;
    for (const auto& b : blocks) s.push_back(b.size());
    return s;
  }
  std::optional<std::size_t> block_of(std::size_t i) const {
    for (std::size_t b = 0; b < blocks.size(); ++b)
      if (std::find(blocks[b].begin(), blocks[b].end(), i) != blocks[b].end()) return b;
    return std::nullopt;
  }
  /// Same blocks regardless of order.
  friend bool same_partition(const Partition& x, const Partition& y) {
    auto norm = [](std::vector<std::vector<std::size_t>> b) {
      for (auto& v : b) std::sort(v.begin(), v.end());
      std::sort(b.begin(), b.end());
      return b;
    };
    return norm(x.blocks) == norm(y.blocks);
  }
};

struct FiberPartition : Partition {
  std::vector<Subspace> labels;  // contraction per block
};

struct OrbitPartition : Partition {
  std::vector<std::size_t> representatives;  // least index per block
};

/// Groups prims by contraction; blocks in order of first appearance.
inline FiberPartition fibers(const std::vector<PrimItem>& prims, const CoidealSubalgebra& a) {
  FiberPartition out;
  for (std::size_t i = 0; i < prims.size(); ++i) {
    Subspace c = contract(prims[i], a);
    auto it = std::find(out.labels.begin(), out.labels.end(), c);
    if (it == out.labels.end()) {
      out.labels.push_back(std::move(c));
      out.blocks.push_back({i});
    } else {
      out.blocks[static_cast<std::size_t>(it - out.labels.begin())].push_back(i);
    }
  }
  return out;
}

/// The permutation P -> sigma(P) induced on prims by one winding map.
inline std::vector<std::size_t> induced_permutation(const std::vector<PrimItem>& prims, const Matrix& sigma) {
  std::vector<std::size_t> perm;
  std::vector<bool> hit(prims.size(), false);
  for (std::size_t i = 0; i < prims.size(); ++i) {
    const Subspace image = prims[i].annihilator.image(sigma);
    std::size_t j = prims.size();
    for (std::size_t k = 0; k < prims.size() && j == prims.size(); ++k)
      if (prims[k].annihilator == image) j = k;
    if (j == prims.size()) fail(ErrorCode::NotAPermutation, "winding image matches no primitive ideal", {i});
    if (hit[j]) fail(ErrorCode::NotAPermutation, "winding identifies two primitive ideals", {i, j});
    hit[j] = true;
    perm.push_back(j);
  }
  return perm;
}

/// Orbits of the group generated by the given winding maps.
inline OrbitPartition orbits(const std::vector<PrimItem>& prims, const std::vector<Matrix>& windings) {
  std::vector<std::size_t> parent(prims.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& sigma : windings) {
    const auto perm = induced_permutation(prims, sigma);
    for (std::size_t i = 0; i < perm.size(); ++i) {
      const std::size_t x = find(i), y = find(perm[i]);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  }
  OrbitPartition out;
  for (std::size_t i = 0; i < prims.size(); ++i) {
    const std::size_t r = find(i);
    auto it = std::find(out.representatives.begin(), out.representatives.end(), r);
    if (it == out.representatives.end()) {
      out.representatives.push_back(r);
      out.blocks.push_back({i});
    } else {
      out.blocks[static_cast<std::size_t>(it - out.representatives.begin())].push_back(i);
    }
  }
  return out;
}

/// Every fiber block is a union of orbit blocks.
inline bool orbits_refine_fibers(const FiberPartition& fib, const OrbitPartition& orb) {
  for (const auto& ob : orb.blocks) {
    const auto b = fib.block_of(ob.front());
    for (auto i : ob)
      if (fib.block_of(i) != b) return false;
  }
  return true;
}

enum class VerifyMode { Local, Global };

inline const char* to_string(VerifyMode m) { return m == VerifyMode::Local ? "local" : "global"; }

struct Verdict {
  std::string mode;          // local, global, or experiment
  bool experiment = false;   // no antipode: outside the theorem's hypotheses
  std::optional<bool> cond_i, cond_ii, cond_iii, cond_iv;
  bool agree = true;

  std::size_t x_order = 0;
  std::vector<std::size_t> fiber_simple_dims;          // simples of H / H A+
  std::vector<std::size_t> fiber_orbit_sizes;          // their orbits under X
  std::vector<std::size_t> prim_dims;                  // global: simples of H
  std::vector<std::vector<std::size_t>> fiber_blocks;  // global
  std::vector<std::vector<std::size_t>> orbit_blocks;  // global
  bool orbits_refine_fibers = true;
  // First fiber block that is not a single orbit, with the orbits inside it.
  std::optional<std::size_t> mismatched_fiber;
  std::vector<std::size_t> mismatched_orbit_sizes;
};

namespace detail {

inline void compute_agree(Verdict& v) {
  std::vector<bool> vals;
  for (const auto& c : {v.cond_i, v.cond_ii, v.cond_iii, v.cond_iv})
    if (c) vals.push_back(*c);
  v.agree = std::adjacent_find(vals.begin(), vals.end(), std::not_equal_to<>()) == vals.end();
}

inline std::vector<Matrix> winding_maps(const Bialgebra& b, const std::vector<Character>& chars, bool two_sided) {
  std::vector<Matrix> maps;
  for (const auto& chi : chars) {
    maps.push_back(winding(b, chi, Side::Right));
    if (two_sided) maps.push_back(winding(b, chi, Side::Left));
  }
  return maps;
}

/// cond_i and cond_ii on the fiber algebra H / H A+.
inline void local_conditions(const CorpusInstance& inst, const ChopOptions& options, Verdict& v) {
  const Bialgebra& h = inst.h;
  const auto& f = h.field();
  const FiberQuotient fq = fiber_quotient(h, inst.a, restrict_to(f, inst.a.subspace, counit_character(h)), options);
  if (!fq.structure) fail(ErrorCode::StructureCheckFailed, "H / H A+ did not inherit a bialgebra structure");
  const Bialgebra& hq = *fq.structure;
  v.x_order = fq.x_elements.size();

  // Characters of the quotient are exactly the elements of X pulled back.
  const auto quotient_chars = enumerate_characters(hq, options);
  if (quotient_chars.size() != fq.x_elements.size())
    fail(ErrorCode::StructureCheckFailed, "characters of H / H A+ do not match X");
  std::vector<Character> pulled;
  for (const auto& c : quotient_chars) {
    Vector vals(h.dim());
    for (std::size_t i = 0; i < h.dim(); ++i) vals[i] = dot(f, c.values, fq.quotient.projection.column(i));
    pulled.push_back(Character{std::move(vals)});
  }
  std::sort(pulled.begin(), pulled.end());
  if (pulled != fq.x_elements) fail(ErrorCode::StructureCheckFailed, "characters of H / H A+ do not match X");
  // The quotient's own windings agree with the windings induced from H.
  for (std::size_t i = 0; i < fq.x_elements.size(); ++i) {
    const Character& chi = fq.x_elements[i];
    auto it = std::find(pulled.begin(), pulled.end(), chi);
    const Character& own = quotient_chars[static_cast<std::size_t>(it - pulled.begin())];
    if (winding(hq, own, Side::Right) != fq.induced_windings[i])
      fail(ErrorCode::StructureCheckFailed, "induced winding differs from the quotient winding");
  }

  const auto prims = prim_enumerate(hq.algebra(), options);
  for (const auto& p : prims) v.fiber_simple_dims.push_back(p.simple_dim);
  const auto orb = orbits(prims, winding_maps(hq, quotient_chars, inst.two_sided));
  v.fiber_orbit_sizes = orb.sizes();
  v.cond_i = std::all_of(prims.begin(), prims.end(), [](const PrimItem& p) { return p.simple_dim == 1; });
  v.cond_ii = orb.blocks.size() == 1;
}

}  // namespace detail

/// Runs the comparison for one instance. Without an antipode the instance
/// is treated as an experiment: X is all characters trivial on A, orbits
/// use the windings configured on the instance, and only the fiber/orbit
/// comparison on prim H is reported.
inline Verdict verify_theorem(const CorpusInstance& inst, VerifyMode mode, const ChopOptions& options = {}) {
  Verdict v;
  const Bialgebra& h = inst.h;
  const bool hopf = h.has_antipode();
  v.mode = hopf ? to_string(mode) : "experiment";
  v.experiment = !hopf;

  if (hopf) detail::local_conditions(inst, options, v);
  if (hopf && mode == VerifyMode::Local) {
    detail::compute_agree(v);
    return v;
  }

  const auto prims = prim_enumerate(h.algebra(), options);
  for (const auto& p : prims) v.prim_dims.push_back(p.simple_dim);
  const CharacterGroup x = hopf ? character_group_X(h, inst.a, options)
                                : character_group_X_bialgebra(h, inst.a, options);
  if (hopf && x.order() != v.x_order) fail(ErrorCode::StructureCheckFailed, "X differs between local and global");
  v.x_order = x.order();
  const auto maps = detail::winding_maps(h, x.elements, inst.two_sided);
  const FiberPartition fib = fibers(prims, inst.a);
  const OrbitPartition orb = orbits(prims, maps);
  v.fiber_blocks = fib.blocks;
  v.orbit_blocks = orb.blocks;

  // Windings by elements of X fix A pointwise, so they preserve contractions.
  for (const auto& sigma : maps) {
    const auto perm = induced_permutation(prims, sigma);
    for (std::size_t i = 0; i < prims.size(); ++i)
      if (!(contract(prims[perm[i]], inst.a) == contract(prims[i], inst.a)))
        fail(ErrorCode::StructureCheckFailed, "winding changes a contraction", {i});
  }
  v.orbits_refine_fibers = orbits_refine_fibers(fib, orb);
  if (hopf && !v.orbits_refine_fibers) fail(ErrorCode::StructureCheckFailed, "orbits do not refine fibers");

  for (std::size_t b = 0; b < fib.blocks.size() && !v.mismatched_fiber; ++b) {
    std::vector<std::size_t> sizes;
    for (const auto& ob : orb.blocks)
      if (fib.block_of(ob.front()) == b) sizes.push_back(ob.size());
    if (sizes.size() != 1) {
      v.mismatched_fiber = b;
      v.mismatched_orbit_sizes = sizes;
    }
  }
  v.cond_iii = same_partition(fib, orb);
  if (hopf) {
    v.cond_iv = v.cond_iii;
    // The fiber over A+ is prim of H / H A+.
    const Subspace aplus = intersect(inst.a.subspace, Subspace::from_rows(kernel_basis([&] {
                                       Matrix row(h.field(), 1, h.dim());
                                       for (std::size_t i = 0; i < h.dim(); ++i) row(0, i) = h.counit()[i];
                                       return row;
                                     }())));
    std::vector<std::size_t> dims;
    for (std::size_t b = 0; b < fib.blocks.size(); ++b)
      if (fib.labels[b] == aplus)
        for (auto i : fib.blocks[b]) dims.push_back(prims[i].simple_dim);
    if (dims != v.fiber_simple_dims)
      fail(ErrorCode::StructureCheckFailed, "fiber over A+ differs from prim of H / H A+");
  }
  detail::compute_agree(v);
  return v;
}

struct XiOutcome {
  Vector xi;                        // values on the basis of A
  bool extends = false;             // some simple of H restricts to xi
  std::vector<std::size_t> simple_dims;
  bool all_one_dimensional = false;
  bool extends_to_character = false;
  std::optional<bool> winding_transport;  // sigma_chi(H K) == H A+ for a character chi over xi
};

struct RemarkReport {
  std::vector<XiOutcome> outcomes;  // counit first
  bool counit_verdict = false;
  bool all_equal = false;           // every extending xi has the counit's verdict
  bool consistent = false;          // hypothesis for some xi implies the counit verdict
};

/// For each character xi of A, whether all simples of H / H ker(xi) are
/// one dimensional. A must be a Hopf subalgebra.
inline RemarkReport remark_2_10_check(const CorpusInstance& inst, const ChopOptions& options = {}) {
  const Bialgebra& h = inst.h;
  const auto& f = h.field();
  if (!is_hopf_subalgebra(h, inst.a.subspace)) fail(ErrorCode::NotAHopfSubalgebra, "A is not a Hopf subalgebra");
  const Algebra a_alg = subalgebra_structure(h.algebra(), inst.a.subspace);
  std::vector<Character> xis = enumerate_characters(a_alg, options);
  const Vector eps = restrict_to(f, inst.a.subspace, counit_character(h));
  std::stable_partition(xis.begin(), xis.end(), [&](const Character& c) { return c.values == eps; });
  const auto h_chars = enumerate_characters(h, options);
  const FiberQuotient base = fiber_quotient(h, inst.a, eps, options);

  RemarkReport report;
  for (const auto& xi : xis) {
    XiOutcome o{xi.values};
    try {
      const FiberQuotient fq = fiber_quotient(h, inst.a, xi.values, options);
      o.extends = true;
      for (const auto& rec : simples(fq.quotient.algebra, options)) o.simple_dims.push_back(rec.module.dim());
      o.all_one_dimensional = std::all_of(o.simple_dims.begin(), o.simple_dims.end(), [](auto d) { return d == 1; });
      for (const auto& chi : h_chars) {
        if (restrict_to(f, inst.a.subspace, chi) != xi.values) continue;
        o.extends_to_character = true;
        o.winding_transport = fq.ideal.image(winding(h, chi, Side::Right)) == base.ideal;
        break;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ImproperIdeal) throw;
    }
    report.outcomes.push_back(std::move(o));
  }
  report.counit_verdict = report.outcomes.front().all_one_dimensional;
  report.all_equal = std::all_of(report.outcomes.begin(), report.outcomes.end(), [&](const XiOutcome& o) {
    return !o.extends || o.all_one_dimensional == report.counit_verdict;
  });
  const bool hypothesis = std::any_of(report.outcomes.begin(), report.outcomes.end(),
                                      [](const XiOutcome& o) { return o.extends && o.all_one_dimensional; });
  report.consistent = !hypothesis || report.counit_verdict;
  return report;
}

}  // namespace hopfx
