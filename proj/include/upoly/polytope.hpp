#pragma once

// The unipotent polytope of (beta, P) and its lattice points.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "upoly/errors.hpp"
#include "upoly/posets.hpp"
#include "upoly/qarith.hpp"

namespace upoly {

inline constexpr unsigned long long kDefaultBudget = 10'000'000ULL;

/// Nonnegative integer filling of the strict upper triangle of an l x l grid.
/// Cells outside the polytope's shape are kept at zero by construction of the
/// enumerators; membership is checked by UnipotentPolytope::contains.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(int l) : l_(l), v_(static_cast<std::size_t>(l) * static_cast<std::size_t>(l), 0) {}

  int size() const noexcept { return l_; }

  int operator()(int i, int j) const {
    if (i < 1 || j < 1 || i > l_ || j > l_) return 0;
    return v_[idx(i, j)];
  }

  void set(int i, int j, int value) {
    if (i < 1 || j > l_ || i >= j) {
      throw ValidationError("tableau cell (" + std::to_string(i) + "," + std::to_string(j) +
                            ") is outside the staircase of size " + std::to_string(l_));
    }
    if (value < 0) throw ValidationError("tableau entries must be nonnegative");
    v_[idx(i, j)] = value;
  }

  bool is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](int x) { return x == 0; });
  }

  /// Nonzero cells in (row, col) order.
  std::vector<Cell> support() const {
    std::vector<Cell> out;
    for (int i = 1; i <= l_; ++i)
      for (int j = i + 1; j <= l_; ++j)
        if ((*this)(i, j) != 0) out.push_back({i, j});
    return out;
  }

  /// Semicolon-joined "i,j:v" entries for the nonzero cells; "0" when empty.
  std::string to_text() const {
    std::string s;
    for (const Cell& c : support()) {
      if (!s.empty()) s += ';';
      s += std::to_string(c.row) + "," + std::to_string(c.col) + ":" + std::to_string((*this)(c.row, c.col));
    }
    return s.empty() ? "0" : s;
  }

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau& a, const Tableau& b) {
    if (auto c = a.l_ <=> b.l_; c != 0) return c;
    return a.v_ <=> b.v_;
  }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(l_) + static_cast<std::size_t>(j - 1);
  }

  int l_ = 0;
  std::vector<int> v_;
};

/// Parses the text form produced by Tableau::to_text.
inline Tableau parse_tableau(const std::string& text, int l) {
  Tableau t(l);
  if (text == "0" || text.empty()) return t;
  std::vector<Cell> seen;
  std::stringstream ss(text);
  std::string entry;
  while (std::getline(ss, entry, ';')) {
    int i = 0;
    int j = 0;
    long long v = 0;
    char comma = 0;
    char colon = 0;
    std::istringstream es(entry);
    if (!(es >> i >> comma >> j >> colon >> v) || comma != ',' || colon != ':' || !(es >> std::ws).eof()) {
      throw ValidationError("malformed tableau entry '" + entry + "'");
    }
    if (v < 0 || v > std::numeric_limits<int>::max()) {
      throw ValidationError("tableau value out of range in '" + entry + "'");
    }
    if (std::find(seen.begin(), seen.end(), Cell{i, j}) != seen.end()) {
      throw ValidationError("duplicate tableau cell in '" + entry + "'");
    }
    seen.push_back({i, j});
    t.set(i, j, static_cast<int>(v));
  }
  return t;
}

/// The polytope of nonnegative fillings of F_P whose row and column sums at
/// each block j are bounded by beta_j.
class UnipotentPolytope {
 public:
  UnipotentPolytope(Composition beta, Poset poset) : beta_(std::move(beta)), poset_(std::move(poset)) {
    if (beta_.length() != poset_.size()) {
      throw ValidationError("poset on " + std::to_string(poset_.size()) + " elements does not match composition " +
                            beta_.to_string());
    }
    require_normal(poset_);
    cells_ = poset_.cells();
  }

  const Composition& beta() const noexcept { return beta_; }
  const Poset& poset() const noexcept { return poset_; }
  const std::vector<Cell>& cells() const noexcept { return cells_; }
  int length() const noexcept { return beta_.length(); }

  bool in_shape(int i, int j) const { return poset_.less(i, j); }

  /// Membership for a rational point given on exactly the cells of F_P.
  bool contains(const std::map<Cell, ExactScalar>& point) const {
    if (point.size() != cells_.size()) {
      throw ValidationError("point is not defined on exactly the cells of the shape");
    }
    for (const auto& [c, _] : point)
      if (!in_shape(c.row, c.col)) {
        throw ValidationError("point has a coordinate outside the shape at (" + std::to_string(c.row) + "," +
                              std::to_string(c.col) + ")");
      }
    const int l = length();
    std::vector<ExactScalar> row(static_cast<std::size_t>(l) + 1);
    std::vector<ExactScalar> col(static_cast<std::size_t>(l) + 1);
    for (const auto& [c, x] : point) {
      if (x < 0) return false;
      row[static_cast<std::size_t>(c.row)] += x;
      col[static_cast<std::size_t>(c.col)] += x;
    }
    for (int j = 1; j <= l; ++j) {
      if (row[static_cast<std::size_t>(j)] > beta_[j] || col[static_cast<std::size_t>(j)] > beta_[j]) return false;
    }
    return true;
  }

  /// Membership for an integer tableau; nonzero entries off the shape fail.
  bool contains(const Tableau& t) const {
    if (t.size() != length()) return false;
    for (const Cell& c : t.support())
      if (!in_shape(c.row, c.col)) return false;
    for (int j = 1; j <= length(); ++j) {
      long row = 0;
      long col = 0;
      for (int k = 1; k <= length(); ++k) {
        row += t(j, k);
        col += t(k, j);
      }
      if (row > beta_[j] || col > beta_[j]) return false;
    }
    return true;
  }

  void require_member(const Tableau& t) const {
    if (!contains(t)) {
      throw ValidationError("tableau " + t.to_text() + " is not a lattice point of the polytope for beta " +
                            beta_.to_string() + ", P " + poset_.to_string());
    }
  }

  /// prod over cells of (min(beta_i, beta_j) + 1), saturating.
  unsigned long long box_bound() const {
    unsigned long long b = 1;
    for (const Cell& c : cells_) {
      const auto f = static_cast<unsigned long long>(std::min(beta_[c.row], beta_[c.col]) + 1);
      if (b > std::numeric_limits<unsigned long long>::max() / f) return std::numeric_limits<unsigned long long>::max();
      b *= f;
    }
    return b;
  }

 private:
  Composition beta_;
  Poset poset_;
  std::vector<Cell> cells_;
};

/// Calls `visit` on every lattice point in lexicographic order over the cells
/// sorted by (row, col). Throws BudgetExceeded once more than `budget` search
/// nodes have been expanded.
inline void for_each_lattice_point(const UnipotentPolytope& poly, const std::function<void(const Tableau&)>& visit,
                                   unsigned long long budget = kDefaultBudget) {
  const auto& cells = poly.cells();
  const int l = poly.length();
  std::vector<int> row_left(static_cast<std::size_t>(l) + 1);
  std::vector<int> col_left(static_cast<std::size_t>(l) + 1);
  for (int j = 1; j <= l; ++j) {
    row_left[static_cast<std::size_t>(j)] = poly.beta()[j];
    col_left[static_cast<std::size_t>(j)] = poly.beta()[j];
  }
  Tableau t(l);
  unsigned long long nodes = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (++nodes > budget) {
      throw BudgetExceeded("lattice point enumeration exceeded budget of " + std::to_string(budget) +
                               " nodes; box bound is " + std::to_string(poly.box_bound()),
                           poly.box_bound());
    }
    if (k == cells.size()) {
      visit(t);
      return;
    }
    const auto r = static_cast<std::size_t>(cells[k].row);
    const auto c = static_cast<std::size_t>(cells[k].col);
    const int top = std::min(row_left[r], col_left[c]);
    for (int v = 0; v <= top; ++v) {
      t.set(cells[k].row, cells[k].col, v);
      row_left[r] -= v;
      col_left[c] -= v;
      rec(k + 1);
      row_left[r] += v;
      col_left[c] += v;
    }
    t.set(cells[k].row, cells[k].col, 0);
  };
  rec(0);
}

inline std::vector<Tableau> enumerate_lattice_points(const UnipotentPolytope& poly,
                                                     unsigned long long budget = kDefaultBudget) {
  std::vector<Tableau> out;
  for_each_lattice_point(poly, [&](const Tableau& t) { out.push_back(t); }, budget);
  return out;
}

inline Composition dilate(const Composition& beta, int t) {
  if (t < 1) throw ValidationError("dilation factor must be at least 1");
  std::vector<int> parts = beta.parts();
  for (int& p : parts) p *= t;
  return Composition(parts);
}

/// Number of lattice points of the polytope for (t * beta, P).
inline ExactScalar count_lattice_points(const UnipotentPolytope& poly, int t = 1,
                                        unsigned long long budget = kDefaultBudget) {
  UnipotentPolytope scaled(dilate(poly.beta(), t), poly.poset());
  Integer n = 0;
  for_each_lattice_point(scaled, [&](const Tableau&) { ++n; }, budget);
  return ExactScalar(n);
}

}  // namespace upoly
