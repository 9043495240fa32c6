#pragma once

// Closed-form supercharacter values, degrees, superclass sizes, character
// tables, superclass representatives and the kernel correspondence.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "upoly/polytope.hpp"
#include "upoly/qarith.hpp"
#include "upoly/stats.hpp"

namespace upoly {

/// Number of m x n matrices of rank l over F_q, zero when out of range.
inline ExactScalar rank_count(long m, long n, long l, long q) {
  if (m < 0 || n < 0 || l < 0 || l > std::min(m, n)) return ExactScalar(0);
  return gl_order(l, q) * q_binomial(m, l, q) * q_binomial(n, l, q);
}

/// Two-block line character chi^{(l)}_{(m,n)} at the rank-j representative.
inline ExactScalar line_char(long m, long n, long l, long j, long q) {
  if (j == 0) return rank_count(m, n, l, q);
  if (j < 0 || l < 0 || j > std::min(m, n) || l > std::min(m, n)) return ExactScalar(0);
  ExactScalar s = 0;
  for (long a = 0; a <= l; ++a) {
    const long b = l - a;
    ExactScalar term = q_power(q, b * j + a * (a - 1) / 2);
    term *= q_binomial(j, a, q) * rank_count(m - j, n - j, b, q);
    s += (a % 2 == 0) ? term : -term;
  }
  return s;
}

namespace detail {
inline ExactScalar prefactor(const UnipotentPolytope& poly, const Tableau& lambda, long nst, long q) {
  return q_power(q, dim_left(poly, lambda) + dim_right(poly, lambda) - nst - crossings(poly, lambda));
}
}  // namespace detail

/// chi^lambda(u_mu), asserted to be an integer.
inline ExactScalar char_value(const UnipotentPolytope& poly, const Tableau& lambda, const Tableau& mu, long q) {
  poly.require_member(lambda);
  poly.require_member(mu);
  ExactScalar v = detail::prefactor(poly, lambda, nestings(poly, lambda, mu), q);
  for (const Cell& c : poly.cells()) {
    if (v == 0) break;
    auto [m, n] = loc(poly, lambda, mu, c.row, c.col);
    v *= line_char(m, n, lambda(c.row, c.col), mu(c.row, c.col), q);
  }
  if (!is_integral(v)) {
    throw VerificationFailure("character value " + v.str() + " at lambda " + lambda.to_text() + ", mu " +
                              mu.to_text() + " is not an integer");
  }
  return v;
}

/// chi^lambda(1) by the product formula for the dual orbit size.
inline ExactScalar degree(const UnipotentPolytope& poly, const Tableau& lambda, long q) {
  poly.require_member(lambda);
  const int n = poly.length();
  ExactScalar v = detail::prefactor(poly, lambda, 0, q);
  for (const Cell& c : poly.cells()) {
    const int j = c.row;
    const int l = c.col;
    const int x = lambda(j, l);
    long row = poly.beta()[j];
    long col = poly.beta()[l];
    for (int m = l + 1; m <= n; ++m) row -= lambda(j, m);
    for (int i = 1; i < j; ++i) col -= lambda(i, l);
    v *= gl_order(x, q) * q_binomial(row, x, q) * q_binomial(col, x, q);
  }
  return v;
}

/// Number of x in ut_(beta,P) carrying the superclass label mu. Counts the
/// block rows from the bottom: within row block a, each column block b in
/// increasing order contributes the ways to place a rank mu_ab piece given the
/// pivots already used by earlier columns in this row and by lower rows.
inline ExactScalar superclass_size(const UnipotentPolytope& poly, const Tableau& mu, long q) {
  poly.require_member(mu);
  const int n = poly.length();
  const Composition& beta = poly.beta();
  ExactScalar v = 1;
  for (int a = 1; a <= n; ++a) {
    long used_rows = 0;
    for (int b = a + 1; b <= n; ++b) {
      if (!poly.in_shape(a, b)) continue;
      long used_cols = 0;
      for (int a2 = a + 1; a2 < b; ++a2) used_cols += mu(a2, b);
      const long free_rows = beta[a] - used_rows;
      v *= q_power(q, used_rows * beta[b]);
      v *= q_power(q, used_cols * free_rows);
      v *= rank_count(free_rows, beta[b] - used_cols, mu(a, b), q);
      used_rows += mu(a, b);
    }
  }
  return v;
}

/// log_q of the group order: the number of free matrix coordinates.
inline long group_exponent(const UnipotentPolytope& poly) {
  long e = 0;
  for (const Cell& c : poly.cells()) e += static_cast<long>(poly.beta()[c.row]) * poly.beta()[c.col];
  return e;
}

struct CharTable {
  Composition beta;
  Poset poset;
  long q = 2;
  std::vector<Tableau> index;
  std::vector<ExactScalar> degrees;
  std::vector<ExactScalar> class_sizes;
  /// values[r][c] = chi^{index[r]}(u_{index[c]}).
  std::vector<std::vector<ExactScalar>> values;

  std::size_t position(const Tableau& t) const {
    auto it = std::find(index.begin(), index.end(), t);
    if (it == index.end()) throw ValidationError("tableau " + t.to_text() + " is not in the table index");
    return static_cast<std::size_t>(it - index.begin());
  }
};

inline CharTable char_table(const UnipotentPolytope& poly, long q, unsigned long long budget = kDefaultBudget) {
  CharTable t;
  t.beta = poly.beta();
  t.poset = poly.poset();
  t.q = q;
  t.index = enumerate_lattice_points(poly, budget);
  const std::size_t k = t.index.size();
  if (k > 0 && k * k > budget) {
    throw BudgetExceeded("character table with " + std::to_string(k) + " rows exceeds budget " + std::to_string(budget),
                         static_cast<unsigned long long>(k) * k);
  }
  t.values.assign(k, std::vector<ExactScalar>(k));
  for (std::size_t r = 0; r < k; ++r) {
    t.degrees.push_back(degree(poly, t.index[r], q));
    t.class_sizes.push_back(superclass_size(poly, t.index[r], q));
    for (std::size_t c = 0; c < k; ++c) t.values[r][c] = char_value(poly, t.index[r], t.index[c], q);
  }
  return t;
}

/// <chi^nu, chi^mu> = |G|^{-1} sum over superclasses of size * value * value.
inline ExactScalar inner_product(const CharTable& t, std::size_t nu, std::size_t mu) {
  const UnipotentPolytope poly(t.beta, t.poset);
  ExactScalar s = 0;
  for (std::size_t c = 0; c < t.index.size(); ++c) s += t.class_sizes[c] * t.values.at(nu)[c] * t.values.at(mu)[c];
  return s / q_power(t.q, group_exponent(poly));
}

inline ExactScalar inner_product(const CharTable& t, const Tableau& nu, const Tableau& mu) {
  return inner_product(t, t.position(nu), t.position(mu));
}

/// Character value for beta = (1^N) by the set-partition style formula.
inline ExactScalar bn_char_value(const UnipotentPolytope& poly, const Tableau& lambda, const Tableau& mu, long q) {
  for (int p : poly.beta().parts())
    if (p != 1) throw ValidationError("bn_char_value requires beta = (1^N), got " + poly.beta().to_string());
  poly.require_member(lambda);
  poly.require_member(mu);
  const int n = poly.length();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (lambda(i, k) * mu(i, j) != 0 || lambda(i, k) * mu(j, k) != 0) return ExactScalar(0);
  ExactScalar v = detail::prefactor(poly, lambda, nestings(poly, lambda, mu), q);
  v *= ExactScalar(boost::multiprecision::pow(Integer(q - 1), static_cast<unsigned>(size_of(lambda))));
  v /= ExactScalar(boost::multiprecision::pow(Integer(1 - q), static_cast<unsigned>(size_of(intersect(lambda, mu)))));
  return v;
}

/// chi^lambda(u_mu) deg(chi^{Ext lambda}) = chi^{Ext lambda}(u_{Ext mu}) deg(chi^lambda),
/// comparing (beta, P) against (beta, chain).
inline bool normalized_restriction_check(const UnipotentPolytope& poly, const Tableau& lambda, const Tableau& mu,
                                         long q) {
  const UnipotentPolytope full(poly.beta(), Poset::chain(poly.length()));
  const Tableau el = extend(poly, lambda);
  const Tableau em = extend(poly, mu);
  return char_value(poly, lambda, mu, q) * degree(full, el, q) == char_value(full, el, em, q) * degree(poly, lambda, q);
}

/// Positions of the ones of a 0/1 matrix, in (row, col) order.
using Pattern = std::vector<Cell>;

/// Rook placement e_mu. In row block i the rows for target k are the mu_ik
/// rows ending at beta_i - sum_{i<j<k} mu_ij; in column block k the columns
/// for source i start after those of the sources i < i' < k. Each piece is an
/// anti-diagonal.
inline Pattern superclass_representative(const UnipotentPolytope& poly, const Tableau& mu) {
  poly.require_member(mu);
  const Composition& beta = poly.beta();
  const int n = poly.length();
  Pattern out;
  for (int i = 1; i <= n; ++i)
    for (int k = i + 1; k <= n; ++k) {
      const int m = mu(i, k);
      if (m == 0) continue;
      int row_end = beta[i];
      for (int j = i + 1; j < k; ++j) row_end -= mu(i, j);
      int col_start = 1;
      for (int i2 = i + 1; i2 < k; ++i2) col_start += mu(i2, k);
      const int r0 = beta.first(i) + row_end - m;
      const int c0 = beta.first(k) + col_start - 1;
      for (int t = 0; t < m; ++t) out.push_back({r0 + t, c0 + m - 1 - t});
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// Rank-j representative of the two-block line group: w_j in rows
/// m-j+1..m and columns m+1..m+j.
inline Pattern line_representative(int m, int n, int j) {
  if (j < 0 || j > std::min(m, n)) {
    throw ValidationError("line representative rank " + std::to_string(j) + " out of range for " +
                          std::to_string(m) + "x" + std::to_string(n));
  }
  Pattern out;
  for (int t = 1; t <= j; ++t) out.push_back({m - j + t, m + j + 1 - t});
  std::sort(out.begin(), out.end());
  return out;
}

/// P^A: j < k iff lambda_il = 0 for all i <= j < k <= l and every lambda in A.
inline Poset kernel_poset(const Composition& beta, const std::vector<Tableau>& a) {
  const int n = beta.length();
  const UnipotentPolytope full(beta, Poset::chain(n));
  for (const Tableau& t : a) full.require_member(t);
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) {
      bool ok = true;
      for (const Tableau& t : a)
        for (int i = 1; i <= j && ok; ++i)
          for (int l = k; l <= n && ok; ++l)
            if (t(i, l) != 0) ok = false;
      if (ok) pairs.emplace_back(j, k);
    }
  return Poset::from_pairs(n, pairs);
}

/// Indicator tableau of the maximal intervals missing from P.
inline Tableau kernel_generator(const Poset& p) {
  const int n = p.size();
  Tableau t(n);
  for (int i = 1; i <= n; ++i)
    for (int l = i + 1; l <= n; ++l) {
      if (p.less(i, l)) continue;
      bool maximal = true;
      for (int i2 = 1; i2 <= i && maximal; ++i2)
        for (int l2 = l; l2 <= n && maximal; ++l2)
          if ((i2 != i || l2 != l) && !p.less(i2, l2)) maximal = false;
      if (maximal) t.set(i, l, 1);
    }
  return t;
}

/// The posets P^A reached from the canonical generator sets {kernel_generator(P)}.
inline std::vector<Poset> kernel_subgroup_family(const Composition& beta, int cap = 10) {
  std::set<Poset> family;
  for (const Poset& p : enumerate_normal_subposets(beta.length(), cap)) {
    family.insert(kernel_poset(beta, {kernel_generator(p)}));
  }
  return {family.begin(), family.end()};
}

}  // namespace upoly
