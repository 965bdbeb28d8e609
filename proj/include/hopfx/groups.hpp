#pragma once

// Finite groups by Cayley table, the handful of built-in small groups, and
// group algebras with their group-like Hopf structure.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hopfx/algebra.hpp"
#include "hopfx/bialgebra.hpp"
#include "hopfx/error.hpp"
#include "hopfx/field.hpp"

namespace hopfx {

class GroupTable {
 public:
  /// cayley[i][j] is the index of g_i g_j. Axioms are checked exhaustively.
  explicit GroupTable(std::vector<std::vector<std::size_t>> cayley, std::vector<std::string> names = {})
      : cayley_(std::move(cayley)), names_(std::move(names)) {
    const std::size_t n = cayley_.size();
    if (n == 0) fail(ErrorCode::NotAGroup, "empty table");
    for (const auto& row : cayley_) {
      if (row.size() != n) fail(ErrorCode::NotAGroup, "table is not square");
      for (auto x : row)
        if (x >= n) fail(ErrorCode::NotAGroup, "table entry out of range");
    }
    if (names_.empty())
      for (std::size_t i = 0; i < n; ++i) names_.push_back("g" + std::to_string(i));
    if (names_.size() != n) fail(ErrorCode::DimensionMismatch, "one name per element");
    std::size_t id = n;
    for (std::size_t e = 0; e < n && id == n; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) ok = cayley_[e][x] == x && cayley_[x][e] == x;
      if (ok) id = e;
    }
    if (id == n) fail(ErrorCode::NotAGroup, "no identity element");
    identity_ = id;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (cayley_[cayley_[x][y]][z] != cayley_[x][cayley_[y][z]])
            fail(ErrorCode::NotAGroup, "table is not associative", {x, y, z});
    inverse_.assign(n, n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y)
        if (cayley_[x][y] == id && cayley_[y][x] == id) inverse_[x] = y;
      if (inverse_[x] == n) fail(ErrorCode::NotAGroup, "element without inverse", {x});
    }
  }

  std::size_t order() const noexcept { return cayley_.size(); }
  std::size_t mul(std::size_t x, std::size_t y) const { return cayley_[x][y]; }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t inverse(std::size_t x) const { return inverse_[x]; }
  const std::vector<std::vector<std::size_t>>& cayley() const noexcept { return cayley_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  bool is_abelian() const {
    for (std::size_t x = 0; x < order(); ++x)
      for (std::size_t y = 0; y < order(); ++y)
        if (mul(x, y) != mul(y, x)) return false;
    return true;
  }

  std::vector<std::size_t> center() const {
    std::vector<std::size_t> z;
    for (std::size_t x = 0; x < order(); ++x) {
      bool central = true;
      for (std::size_t y = 0; y < order() && central; ++y) central = mul(x, y) == mul(y, x);
      if (central) z.push_back(x);
    }
    return z;
  }

  bool is_subgroup(const std::vector<std::size_t>& s) const {
    if (s.empty() || std::find(s.begin(), s.end(), identity_) == s.end()) return false;
    for (auto x : s) {
      if (x >= order()) return false;
      for (auto y : s)
        if (std::find(s.begin(), s.end(), mul(x, inverse(y))) == s.end()) return false;
    }
    return true;
  }

  friend bool operator==(const GroupTable& a, const GroupTable& b) { return a.cayley_ == b.cayley_; }

 private:
  std::vector<std::vector<std::size_t>> cayley_;
  std::vector<std::string> names_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

inline GroupTable cyclic_group(std::size_t n, const std::string& gen = "g") {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    names.push_back(i == 0 ? "e" : i == 1 ? gen : gen + "^" + std::to_string(i));
  }
  return GroupTable(std::move(t), std::move(names));
}

/// Element (x, y) has index x * |H| + y.
inline GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const std::size_t n = g.order() * h.order();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t ax = a / h.order(), ay = a % h.order();
    names.push_back("(" + g.names()[ax] + "," + h.names()[ay] + ")");
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t bx = b / h.order(), by = b % h.order();
      t[a][b] = g.mul(ax, bx) * h.order() + h.mul(ay, by);
    }
  }
  return GroupTable(std::move(t), std::move(names));
}

/// Symmetric group on three letters, elements as images of (0 1 2).
inline GroupTable symmetric_group_3() {
  const std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1},
                                                 {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  const std::vector<std::string> names = {"()", "(12)", "(23)", "(13)", "(123)", "(132)"};
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      // (pi * pj)(x) = pi(pj(x))
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[static_cast<std::size_t>(x)] = perms[i][static_cast<std::size_t>(perms[j][static_cast<std::size_t>(x)])];
      t[i][j] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return GroupTable(std::move(t), names);
}

/// Quaternion group: indices 0..7 are 1, -1, i, -i, j, -j, k, -k.
inline GroupTable quaternion_group() {
  // unit products on {1, i, j, k} as (sign, unit)
  const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 8; ++b) {
      const std::size_t ua = a / 2, ub = b / 2;
      int s = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * sign[ua][ub];
      t[a][b] = static_cast<std::size_t>(unit[ua][ub]) * 2 + (s < 0 ? 1 : 0);
    }
  }
  return GroupTable(std::move(t), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

inline const std::vector<std::string>& builtin_group_names() {
  static const std::vector<std::string> names = {"c3", "c4", "q8", "s3", "s3c2", "c2c2"};
  return names;
}

inline GroupTable builtin_group(const std::string& name) {
  if (name == "c3") return cyclic_group(3);
  if (name == "c4") return cyclic_group(4);
  if (name == "q8") return quaternion_group();
  if (name == "s3") return symmetric_group_3();
  if (name == "s3c2") return direct_product(symmetric_group_3(), cyclic_group(2, "t"));
  if (name == "c2c2") return direct_product(cyclic_group(2, "x"), cyclic_group(2, "y"));
  fail(ErrorCode::InvalidArgument, "unknown group '" + name + "'");
}

/// "center", "trivial", "all", or a comma-separated list of element
/// names or indices.
inline std::vector<std::size_t> parse_subgroup(const GroupTable& g, const std::string& spec) {
  std::vector<std::size_t> out;
  if (spec == "center") {
    out = g.center();
  } else if (spec == "trivial") {
    out = {g.identity()};
  } else if (spec == "all") {
    for (std::size_t i = 0; i < g.order(); ++i) out.push_back(i);
  } else {
    std::stringstream ss(spec);
    for (std::string item; std::getline(ss, item, ',');) {
      auto it = std::find(g.names().begin(), g.names().end(), item);
      if (it != g.names().end()) {
        out.push_back(static_cast<std::size_t>(it - g.names().begin()));
      } else if (!item.empty() && std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c) != 0; })) {
        out.push_back(std::stoul(item));
      } else {
        fail(ErrorCode::InvalidArgument, "unknown group element '" + item + "'");
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct QuotientGroup {
  GroupTable group;
  std::vector<std::size_t> coset_of;  // element -> coset index
};

/// G / N for a normal subgroup N; cosets ordered by their least element.
inline QuotientGroup quotient_group(const GroupTable& g, const std::vector<std::size_t>& n) {
  if (!g.is_subgroup(n)) fail(ErrorCode::NotASubgroup, "not a subgroup");
  for (std::size_t x = 0; x < g.order(); ++x)
    for (auto y : n)
      if (std::find(n.begin(), n.end(), g.mul(g.mul(x, y), g.inverse(x))) == n.end())
        fail(ErrorCode::NotASubgroup, "subgroup is not normal");
  std::vector<std::size_t> coset(g.order(), g.order());
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (coset[x] != g.order()) continue;
    for (auto y : n) coset[g.mul(x, y)] = reps.size();
    reps.push_back(x);
  }
  std::vector<std::vector<std::size_t>> t(reps.size(), std::vector<std::size_t>(reps.size()));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < reps.size(); ++a) {
    names.push_back(g.names()[reps[a]] + "N");
    for (std::size_t b = 0; b < reps.size(); ++b) t[a][b] = coset[g.mul(reps[a], reps[b])];
  }
  return {GroupTable(std::move(t), std::move(names)), std::move(coset)};
}

/// F_p[G] with Delta(g) = g (x) g, counit 1 and S(g) = g^-1.
inline Bialgebra group_algebra(const PrimeField& f, const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<MulEntry> mul;
  std::vector<ComulEntry> comul;
  Matrix s(f, n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) mul.push_back({x, y, g.mul(x, y), 1});
    comul.push_back({x, x, x, 1});
    s(g.inverse(x), x) = 1;
  }
  Algebra alg = build_algebra(f, n, unit_vector(n, g.identity()), std::move(mul), g.names());
  return Bialgebra(std::move(alg), std::move(comul), Vector(n, 1), std::move(s));
}

}  // namespace hopfx
