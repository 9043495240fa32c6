#pragma once

// Orders on block indices {1..l}: compositions, strict subposets of the chain,
// normality, Ferrers shapes, Dyck words, interval posets, and the expansion of
// a block poset to the matrix coordinates it controls.

#include <algorithm>
#include <compare>
#include <functional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "upoly/errors.hpp"

namespace upoly {

/// A matrix or shape coordinate, 1-based.
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Ordered block sizes beta = (beta_1, ..., beta_l).
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    starts_.clear();
    starts_.reserve(parts_.size() + 1);
    int at = 1;
    for (int p : parts_) {
      if (p < 1) {
        throw ValidationError("composition parts must be positive, got " + std::to_string(p));
      }
      starts_.push_back(at);
      at += p;
    }
    starts_.push_back(at);
    n_ = at - 1;
  }

  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int total() const noexcept { return n_; }
  const std::vector<int>& parts() const noexcept { return parts_; }
  /// beta_j for 1 <= j <= l.
  int operator[](int j) const { return parts_.at(static_cast<std::size_t>(j - 1)); }

  /// First matrix index of block j.
  int first(int j) const { return starts_.at(static_cast<std::size_t>(j - 1)); }
  /// Last matrix index of block j.
  int last(int j) const { return starts_.at(static_cast<std::size_t>(j)) - 1; }

  /// Block containing matrix index r.
  int block_of(int r) const {
    if (r < 1 || r > n_) throw ValidationError("index out of range: " + std::to_string(r));
    auto it = std::upper_bound(starts_.begin(), starts_.end(), r);
    return static_cast<int>(it - starts_.begin());
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      s += (i ? "," : "") + std::to_string(parts_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  std::vector<int> starts_{1};
  int n_ = 0;
};

/// All compositions of n, in lexicographic order of parts.
inline std::vector<Composition> enumerate_compositions(int n) {
  std::vector<Composition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = 1; p <= left; ++p) {
      cur.push_back(p);
      rec(left - p);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

/// Strict partial order on {1..n} refining the natural chain, stored as a
/// dense, transitively closed table.
class Poset {
 public:
  Poset() = default;
  explicit Poset(int n) : n_(n), rel_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false) {
    if (n < 0) throw ValidationError("poset size must be nonnegative");
  }

  static Poset chain(int n) {
    Poset p(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) p.set(i, j);
    return p;
  }

  static Poset empty(int n) { return Poset(n); }

  /// Builds a poset from relation pairs. With `close` the transitive closure
  /// is taken; otherwise a non-transitive relation is rejected.
  static Poset from_pairs(int n, const std::vector<std::pair<int, int>>& pairs, bool close = false) {
    Poset p(n);
    for (auto [i, j] : pairs) {
      if (i < 1 || j > n || i >= j) {
        throw ValidationError("relation " + std::to_string(i) + "<" + std::to_string(j) +
                              " does not refine the chain on 1.." + std::to_string(n));
      }
      p.set(i, j);
    }
    Poset closed = p;
    closed.close_transitively();
    if (!close && !(closed == p)) {
      throw ValidationError("relation is not transitive: " + p.missing_for_transitivity());
    }
    return closed;
  }

  int size() const noexcept { return n_; }

  /// i <_P j.
  bool less(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) return false;
    return rel_[idx(i, j)];
  }
  /// i <=_P j.
  bool leq(int i, int j) const { return i == j || less(i, j); }

  /// Relation pairs in (row, col) order; the Ferrers cell set for normal P.
  std::vector<Cell> cells() const {
    std::vector<Cell> out;
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j)
        if (less(i, j)) out.push_back({i, j});
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (const Cell& c : cells()) {
      s += (first ? "" : ",") + std::to_string(c.row) + "<" + std::to_string(c.col);
      first = false;
    }
    return s + "}";
  }

  friend bool operator==(const Poset& a, const Poset& b) { return a.n_ == b.n_ && a.rel_ == b.rel_; }

  friend bool operator<(const Poset& a, const Poset& b) {
    return std::tie(a.n_, a.rel_) < std::tie(b.n_, b.rel_);
  }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j - 1);
  }
  void set(int i, int j) { rel_[idx(i, j)] = true; }

  void close_transitively() {
    for (int k = 1; k <= n_; ++k)
      for (int i = 1; i <= n_; ++i)
        if (less(i, k))
          for (int j = 1; j <= n_; ++j)
            if (less(k, j)) set(i, j);
  }

  std::string missing_for_transitivity() const {
    for (int i = 1; i <= n_; ++i)
      for (int k = 1; k <= n_; ++k)
        for (int j = 1; j <= n_; ++j)
          if (less(i, k) && less(k, j) && !less(i, j)) {
            return std::to_string(i) + "<" + std::to_string(k) + " and " + std::to_string(k) + "<" +
                   std::to_string(j) + " without " + std::to_string(i) + "<" + std::to_string(j);
          }
    return "";
  }

  int n_ = 0;
  std::vector<bool> rel_;
};

/// True iff j < k in P forces i < k for every i < j and j < l for every l > k.
inline bool is_normal(const Poset& p) {
  const int n = p.size();
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) {
      if (!p.less(j, k)) continue;
      for (int i = 1; i < j; ++i)
        if (!p.less(i, k)) return false;
      for (int l = k + 1; l <= n; ++l)
        if (!p.less(j, l)) return false;
    }
  return true;
}

inline void require_normal(const Poset& p) {
  if (!is_normal(p)) throw ValidationError("poset " + p.to_string() + " is not normal in the chain");
}

/// Ferrers cell set F_P.
inline std::vector<Cell> ferrers_of(const Poset& p) {
  require_normal(p);
  return p.cells();
}

/// Row lengths r_i = |{k : i <_P k}| of the Ferrers shape.
inline std::vector<int> row_lengths(const Poset& p) {
  std::vector<int> r(static_cast<std::size_t>(p.size()), 0);
  for (const Cell& c : p.cells()) ++r[static_cast<std::size_t>(c.row - 1)];
  return r;
}

/// Normal poset with the given right-justified row lengths.
inline Poset poset_of_row_lengths(const std::vector<int>& r) {
  const int n = static_cast<int>(r.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i) {
    const int len = r[static_cast<std::size_t>(i - 1)];
    if (len < 0 || len > n - i) {
      throw ValidationError("row " + std::to_string(i) + " of length " + std::to_string(len) +
                            " leaves the staircase");
    }
    if (i > 1 && len > r[static_cast<std::size_t>(i - 2)]) {
      throw ValidationError("row lengths must be non-increasing at row " + std::to_string(i));
    }
    for (int k = n - len + 1; k <= n; ++k) pairs.emplace_back(i, k);
  }
  return Poset::from_pairs(n, pairs);
}

/// Inverse of ferrers_of: rejects cell sets that are not sub-Ferrers shapes of
/// the staircase on {1..n}.
inline Poset poset_of_ferrers(int n, std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end()) {
    throw ValidationError("duplicate cell in Ferrers shape");
  }
  std::vector<int> r(static_cast<std::size_t>(n), 0);
  for (const Cell& c : cells) {
    if (c.row < 1 || c.col > n || c.row >= c.col) {
      throw ValidationError("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                            ") is outside the staircase");
    }
    ++r[static_cast<std::size_t>(c.row - 1)];
  }
  Poset p = poset_of_row_lengths(r);
  if (p.cells() != cells) throw ValidationError("cell set is not right-justified");
  return p;
}

/// Dyck word of a normal poset: 'U' and 'D' steps, where the number of U
/// steps before the i-th D is l - r_i.
inline std::string dyck_of(const Poset& p) {
  require_normal(p);
  const int n = p.size();
  const std::vector<int> r = row_lengths(p);
  std::string w;
  int ups = 0;
  for (int i = 1; i <= n; ++i) {
    const int x = n - r[static_cast<std::size_t>(i - 1)];
    for (; ups < x; ++ups) w += 'U';
    w += 'D';
  }
  return w;
}

inline Poset poset_of_dyck(const std::string& w) {
  if (w.size() % 2 != 0) throw ValidationError("Dyck word has odd length");
  const int n = static_cast<int>(w.size() / 2);
  std::vector<int> r;
  int ups = 0;
  int downs = 0;
  for (char ch : w) {
    if (ch == 'U') {
      ++ups;
    } else if (ch == 'D') {
      ++downs;
      if (downs > ups) throw ValidationError("Dyck word dips below the axis: " + w);
      r.push_back(n - ups);
    } else {
      throw ValidationError(std::string("bad Dyck step '") + ch + "'");
    }
  }
  if (ups != n) throw ValidationError("Dyck word is unbalanced: " + w);
  return poset_of_row_lengths(r);
}

/// All normal subposets of the chain on {1..n}, ordered lexicographically by
/// row-length vector.
inline std::vector<Poset> enumerate_normal_subposets(int n, int cap = 10) {
  if (n < 0) throw ValidationError("negative poset size");
  if (n > cap) {
    throw BudgetExceeded("normal subposet enumeration: l = " + std::to_string(n) + " exceeds cap " +
                             std::to_string(cap),
                         static_cast<unsigned long long>(n));
  }
  std::vector<Poset> out;
  std::vector<int> r(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int bound) {
    if (i > n) {
      out.push_back(poset_of_row_lengths(r));
      return;
    }
    for (int len = 0; len <= std::min(bound, n - i); ++len) {
      r[static_cast<std::size_t>(i - 1)] = len;
      rec(i + 1, len);
    }
  };
  rec(1, n);
  return out;
}

/// Strict interval poset: the pairs i <_P j, ordered by (j,k) <= (i,l) iff
/// i <=_P j <_P k <=_P l.
class IntervalPoset {
 public:
  explicit IntervalPoset(const Poset& p) : p_(p), elems_(p.cells()) {}

  const std::vector<Cell>& elements() const noexcept { return elems_; }

  bool precedes(const Cell& a, const Cell& b) const {
    return p_.less(a.row, a.col) && p_.less(b.row, b.col) && p_.leq(b.row, a.row) && p_.leq(a.col, b.col);
  }

  /// Whether `subset` is closed upward in this poset.
  bool is_upward_closed(const std::vector<Cell>& subset) const {
    auto in = [&](const Cell& c) { return std::find(subset.begin(), subset.end(), c) != subset.end(); };
    for (const Cell& a : subset) {
      if (!p_.less(a.row, a.col)) return false;
      for (const Cell& b : elems_)
        if (precedes(a, b) && !in(b)) return false;
    }
    return true;
  }

 private:
  Poset p_;
  std::vector<Cell> elems_;
};

inline IntervalPoset strict_interval_poset(const Poset& p) { return IntervalPoset(p); }

/// Parabolic poset of beta on {1..N}: a < b iff block(a) < block(b).
inline Poset bdry_inverse(const Composition& beta) {
  const int n = beta.total();
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (beta.block_of(a) < beta.block_of(b)) pairs.emplace_back(a, b);
  return Poset::from_pairs(n, pairs);
}

/// Block sizes of a parabolic poset.
inline Composition bdry(const Poset& p) {
  std::vector<int> parts;
  int run = 0;
  for (int a = 1; a <= p.size(); ++a) {
    ++run;
    if (a == p.size() || p.less(a, a + 1)) {
      parts.push_back(run);
      run = 0;
    }
  }
  Composition beta(parts);
  if (!(bdry_inverse(beta) == p)) throw ValidationError("poset " + p.to_string() + " is not parabolic");
  return beta;
}

/// fat_beta(P): a < b on {1..N} iff block(a) <_P block(b).
inline Poset fat(const Composition& beta, const Poset& p) {
  if (beta.length() != p.size()) {
    throw ValidationError("poset on " + std::to_string(p.size()) + " elements does not match composition " +
                          beta.to_string());
  }
  const int n = beta.total();
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (p.less(beta.block_of(a), beta.block_of(b))) pairs.emplace_back(a, b);
  return Poset::from_pairs(n, pairs);
}

/// Matrix coordinates allowed to be nonzero in ut_(beta,P), in (row, col) order.
inline std::vector<Cell> support_cells(const Composition& beta, const Poset& p) {
  return fat(beta, p).cells();
}

}  // namespace upoly
