#pragma once

// Tableau statistics: size, left and right dimensions, crossings, nestings,
// intersection, extension and the local line parameters loc.
//
// Inner chain relations (the strict order on block indices) are written i < j;
// relations of the poset P are tested with P.less.

#include <utility>

#include "upoly/polytope.hpp"

namespace upoly {

/// |lambda|: the sum of all entries.
inline long size_of(const Tableau& t) {
  long s = 0;
  for (const Cell& c : t.support()) s += t(c.row, c.col);
  return s;
}

/// Sum over i <_P j < k of lambda_ik * beta_j.
inline long dim_left(const UnipotentPolytope& poly, const Tableau& lambda) {
  const Poset& p = poly.poset();
  const int l = poly.length();
  long s = 0;
  for (int i = 1; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j) {
      if (!p.less(i, j)) continue;
      for (int k = j + 1; k <= l; ++k) s += static_cast<long>(lambda(i, k)) * poly.beta()[j];
    }
  return s;
}

/// Sum over i < j <_P k of lambda_ik * beta_j.
inline long dim_right(const UnipotentPolytope& poly, const Tableau& lambda) {
  const Poset& p = poly.poset();
  const int l = poly.length();
  long s = 0;
  for (int j = 1; j <= l; ++j)
    for (int k = j + 1; k <= l; ++k) {
      if (!p.less(j, k)) continue;
      for (int i = 1; i < j; ++i) s += static_cast<long>(lambda(i, k)) * poly.beta()[j];
    }
  return s;
}

/// Sum over i < j <_P k < l of lambda_ik * lambda_jl.
inline long crossings(const UnipotentPolytope& poly, const Tableau& lambda) {
  const Poset& p = poly.poset();
  const int n = poly.length();
  long s = 0;
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) {
      if (!p.less(j, k)) continue;
      for (int i = 1; i < j; ++i)
        for (int l = k + 1; l <= n; ++l) s += static_cast<long>(lambda(i, k)) * lambda(j, l);
    }
  return s;
}

/// Nestings of mu in lambda: sum over i < j <_P k < l of lambda_il * mu_jk.
inline long nestings(const UnipotentPolytope& poly, const Tableau& lambda, const Tableau& mu) {
  if (lambda.size() != mu.size() || lambda.size() != poly.length()) {
    throw ValidationError("nestings: tableaux live on different shapes");
  }
  const Poset& p = poly.poset();
  const int n = poly.length();
  long s = 0;
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) {
      if (!p.less(j, k) || mu(j, k) == 0) continue;
      for (int i = 1; i < j; ++i)
        for (int l = k + 1; l <= n; ++l) s += static_cast<long>(lambda(i, l)) * mu(j, k);
    }
  return s;
}

/// Entrywise product.
inline Tableau intersect(const Tableau& lambda, const Tableau& mu) {
  if (lambda.size() != mu.size()) throw ValidationError("intersect: tableaux live on different shapes");
  Tableau out(lambda.size());
  for (const Cell& c : lambda.support()) out.set(c.row, c.col, lambda(c.row, c.col) * mu(c.row, c.col));
  return out;
}

/// Zero-padding of a tableau on (beta, P) onto the full staircase of the chain.
inline Tableau extend(const UnipotentPolytope& poly, const Tableau& lambda) {
  poly.require_member(lambda);
  return lambda;
}

/// Restriction of a tableau on the staircase back to the cells of `poly`.
inline Tableau restrict_to(const UnipotentPolytope& poly, const Tableau& lambda) {
  Tableau out(poly.length());
  for (const Cell& c : poly.cells()) out.set(c.row, c.col, lambda(c.row, c.col));
  return out;
}

/// Local line parameters at the cell (j, l).
inline std::pair<int, int> loc(const UnipotentPolytope& poly, const Tableau& lambda, const Tableau& mu, int j, int l) {
  if (!poly.in_shape(j, l)) {
    throw ValidationError("loc: cell (" + std::to_string(j) + "," + std::to_string(l) + ") is not in the shape");
  }
  const int n = poly.length();
  int m = poly.beta()[j];
  int w = poly.beta()[l];
  for (int k = j + 1; k < l; ++k) {
    m -= mu(j, k);
    w -= mu(k, l);
  }
  for (int t = l + 1; t <= n; ++t) m -= lambda(j, t);
  for (int i = 1; i < j; ++i) w -= lambda(i, l);
  return {m, w};
}

}  // namespace upoly
