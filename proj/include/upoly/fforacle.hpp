#pragma once

// Brute-force finite field oracle. Everything here works directly with
// matrices over a prime field and shares no formulas with chars.hpp.
//
// Functionals on ut_(beta,P) are stored as matrices Y on the support cells,
// pairing with x by <Y, x> = sum Y_ij x_ij. The transpose Z = Y^T is lower
// triangular and the group acts on it by matrix multiplication, so the left
// action is Y -> proj(Y g^T) and the right action is Y -> proj(g^T Y).

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "upoly/chars.hpp"
#include "upoly/polytope.hpp"
#include "upoly/qarith.hpp"

namespace upoly {

inline constexpr unsigned long long kOracleBudget = 1ULL << 24;

inline bool is_prime(long q) {
  if (q < 2) return false;
  for (long d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

inline void require_prime(long q) {
  if (!is_prime(q)) throw ValidationError("the oracle needs a prime field, got q = " + std::to_string(q));
}

/// Dense matrix over F_q, 1-based accessors, residues in [0, q).
class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(int rows, int cols, int q)
      : rows_(rows), cols_(cols), q_(q), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {}

  static FqMatrix identity(int n, int q) {
    FqMatrix m(n, n, q);
    for (int i = 1; i <= n; ++i) m.set(i, i, 1);
    return m;
  }

  static FqMatrix from_pattern(int n, int q, const Pattern& p) {
    FqMatrix m(n, n, q);
    for (const Cell& c : p) m.set(c.row, c.col, 1);
    return m;
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  int modulus() const noexcept { return q_; }

  int operator()(int r, int c) const { return a_[idx(r, c)]; }
  void set(int r, int c, long v) { a_[idx(r, c)] = static_cast<int>(((v % q_) + q_) % q_); }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](int x) { return x == 0; });
  }

  /// Rank of the submatrix on rows r0..r1 and columns c0..c1 (empty ranges give 0).
  int rank(int r0, int r1, int c0, int c1) const {
    if (r0 > r1 || c0 > c1) return 0;
    const int h = r1 - r0 + 1;
    const int w = c1 - c0 + 1;
    std::vector<long> m(static_cast<std::size_t>(h) * static_cast<std::size_t>(w));
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < w; ++j) m[static_cast<std::size_t>(i * w + j)] = (*this)(r0 + i, c0 + j);
    auto at = [&](int i, int j) -> long& { return m[static_cast<std::size_t>(i * w + j)]; };
    int rk = 0;
    for (int col = 0; col < w && rk < h; ++col) {
      int piv = -1;
      for (int i = rk; i < h; ++i)
        if (at(i, col) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      for (int j = 0; j < w; ++j) std::swap(at(piv, j), at(rk, j));
      const long inv = inverse(at(rk, col));
      for (int j = 0; j < w; ++j) at(rk, j) = at(rk, j) * inv % q_;
      for (int i = 0; i < h; ++i) {
        if (i == rk || at(i, col) == 0) continue;
        const long f = at(i, col);
        for (int j = 0; j < w; ++j) at(i, j) = ((at(i, j) - f * at(rk, j)) % q_ + q_) % q_;
      }
      ++rk;
    }
    return rk;
  }

  int rank() const { return rank(1, rows_, 1, cols_); }

  friend FqMatrix operator*(const FqMatrix& x, const FqMatrix& y) {
    if (x.cols_ != y.rows_ || x.q_ != y.q_) throw ValidationError("FqMatrix: shape or field mismatch");
    FqMatrix z(x.rows_, y.cols_, x.q_);
    for (int i = 1; i <= x.rows_; ++i)
      for (int j = 1; j <= y.cols_; ++j) {
        long s = 0;
        for (int k = 1; k <= x.cols_; ++k) s += static_cast<long>(x(i, k)) * y(k, j);
        z.set(i, j, s);
      }
    return z;
  }

  FqMatrix transpose() const {
    FqMatrix t(cols_, rows_, q_);
    for (int i = 1; i <= rows_; ++i)
      for (int j = 1; j <= cols_; ++j) t.set(j, i, (*this)(i, j));
    return t;
  }

  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;
  friend auto operator<=>(const FqMatrix&, const FqMatrix&) = default;

 private:
  std::size_t idx(int r, int c) const {
    if (r < 1 || c < 1 || r > rows_ || c > cols_) throw ValidationError("FqMatrix index out of range");
    return static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c - 1);
  }

  long inverse(long a) const {
    long r = 1;
    long b = a;
    for (long e = q_ - 2; e > 0; e >>= 1) {
      if (e & 1) r = r * b % q_;
      b = b * b % q_;
    }
    return r;
  }

  int rows_ = 0;
  int cols_ = 0;
  int q_ = 2;
  std::vector<int> a_;
};

namespace detail {
inline void require_on_support(const FqMatrix& x, const UnipotentPolytope& poly) {
  const Composition& beta = poly.beta();
  for (int r = 1; r <= x.rows(); ++r)
    for (int c = 1; c <= x.cols(); ++c)
      if (x(r, c) != 0 && !poly.in_shape(beta.block_of(r), beta.block_of(c))) {
        throw ValidationError("matrix entry (" + std::to_string(r) + "," + std::to_string(c) +
                              ") lies outside the support of ut(beta,P)");
      }
}

inline void require_square(const FqMatrix& x, const UnipotentPolytope& poly) {
  const int n = poly.beta().total();
  if (x.rows() != n || x.cols() != n) throw ValidationError("matrix size does not match composition");
}
}  // namespace detail

/// Superclass label of Id + x from block corner ranks r(a,b) = rank of the
/// rows of blocks a..l against the columns of blocks 1..b.
inline Tableau block_label(const FqMatrix& x, const UnipotentPolytope& poly, bool strict = true) {
  detail::require_square(x, poly);
  if (strict) detail::require_on_support(x, poly);
  const Composition& beta = poly.beta();
  const int l = poly.length();
  const int n = beta.total();
  auto r = [&](int a, int b) {
    if (a > l || b < 1) return 0;
    return x.rank(beta.first(a), n, 1, beta.last(b));
  };
  Tableau t(l);
  for (int a = 1; a <= l; ++a)
    for (int b = a + 1; b <= l; ++b) {
      const int v = r(a, b) - r(a + 1, b) - r(a, b - 1) + r(a + 1, b - 1);
      if (v != 0) t.set(a, b, v);
    }
  return t;
}

/// Element-level rook label: corner ranks of rows i..N against columns 1..j,
/// by inclusion-exclusion, aggregated over block pairs.
inline Tableau rook_label(const FqMatrix& x, const UnipotentPolytope& poly) {
  detail::require_square(x, poly);
  const Composition& beta = poly.beta();
  const int n = beta.total();
  auto r = [&](int i, int j) {
    if (i > n || j < 1) return 0;
    return x.rank(i, n, 1, j);
  };
  Tableau t(poly.length());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int v = r(i, j) - r(i + 1, j) - r(i, j - 1) + r(i + 1, j - 1);
      if (v == 0) continue;
      const int a = beta.block_of(i);
      const int b = beta.block_of(j);
      if (a >= b) throw ValidationError("rook label found a pivot on or below the block diagonal");
      t.set(a, b, t(a, b) + v);
    }
  return t;
}

/// Orbit label of a functional from mirrored corner ranks s(a,b) = rank of
/// the rows of blocks 1..a against the columns of blocks b..l. Only cells of
/// F_P are read: their corner regions lie inside the support, so the ranks
/// survive the projection in the group action.
inline Tableau dual_label(const FqMatrix& y, const UnipotentPolytope& poly) {
  detail::require_square(y, poly);
  detail::require_on_support(y, poly);
  const Composition& beta = poly.beta();
  const int l = poly.length();
  const int n = beta.total();
  auto s = [&](int a, int b) {
    if (a < 1 || b > l) return 0;
    return y.rank(1, beta.last(a), beta.first(b), n);
  };
  Tableau t(l);
  for (const Cell& c : poly.cells()) {
    const int v = s(c.row, c.col) - s(c.row - 1, c.col) - s(c.row, c.col + 1) + s(c.row - 1, c.col + 1);
    if (v != 0) t.set(c.row, c.col, v);
  }
  return t;
}

/// Visits every matrix supported on support_cells(beta, P) over F_q.
inline void for_each_support_matrix(const UnipotentPolytope& poly, long q,
                                    const std::function<void(const FqMatrix&)>& visit,
                                    unsigned long long budget = kOracleBudget) {
  require_prime(q);
  const std::vector<Cell> cells = support_cells(poly.beta(), poly.poset());
  unsigned long long total = 1;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (total > budget / static_cast<unsigned long long>(q)) {
      throw BudgetExceeded("oracle scan of q^" + std::to_string(cells.size()) + " matrices exceeds budget " +
                               std::to_string(budget),
                           budget + 1);
    }
    total *= static_cast<unsigned long long>(q);
  }
  const int n = poly.beta().total();
  FqMatrix m(n, n, static_cast<int>(q));
  std::vector<int> digits(cells.size(), 0);
  for (unsigned long long step = 0; step < total; ++step) {
    visit(m);
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (++digits[k] < q) {
        m.set(cells[k].row, cells[k].col, digits[k]);
        break;
      }
      digits[k] = 0;
      m.set(cells[k].row, cells[k].col, 0);
    }
  }
}

/// All functionals Y on the support with dual_label(Y) = lambda.
inline std::vector<FqMatrix> enumerate_dual_fiber(const UnipotentPolytope& poly, const Tableau& lambda, long q,
                                                  unsigned long long budget = kOracleBudget) {
  poly.require_member(lambda);
  std::vector<FqMatrix> out;
  for_each_support_matrix(
      poly, q,
      [&](const FqMatrix& y) {
        if (dual_label(y, poly) == lambda) out.push_back(y);
      },
      budget);
  return out;
}

/// <Y, x> mod q.
inline long pairing(const FqMatrix& y, const FqMatrix& x) {
  long s = 0;
  for (int r = 1; r <= y.rows(); ++r)
    for (int c = 1; c <= y.cols(); ++c) s += static_cast<long>(y(r, c)) * x(r, c);
  return s % y.modulus();
}

/// Character table computed by summing roots of unity over every functional.
struct OracleTable {
  std::vector<Tableau> index;
  std::vector<std::vector<ExactScalar>> values;
  std::vector<ExactScalar> class_sizes;
  std::vector<ExactScalar> fiber_sizes;
};

inline OracleTable oracle_char_table(const UnipotentPolytope& poly, long q,
                                     unsigned long long budget = kOracleBudget) {
  require_prime(q);
  OracleTable t;
  t.index = enumerate_lattice_points(poly);
  const std::size_t k = t.index.size();
  std::map<Tableau, std::size_t> pos;
  for (std::size_t i = 0; i < k; ++i) pos.emplace(t.index[i], i);
  const int n = poly.beta().total();
  std::vector<FqMatrix> reps;
  for (const Tableau& mu : t.index) {
    reps.push_back(FqMatrix::from_pattern(n, static_cast<int>(q), superclass_representative(poly, mu)));
  }
  // counts[lambda][mu][t] = #{Y in fiber(lambda) : <Y, e_mu> = t}
  std::vector<std::vector<std::vector<Integer>>> counts(
      k, std::vector<std::vector<Integer>>(k, std::vector<Integer>(static_cast<std::size_t>(q))));
  std::vector<Integer> fibers(k);
  std::vector<Integer> classes(k);
  for_each_support_matrix(
      poly, q,
      [&](const FqMatrix& y) {
        const auto it = pos.find(dual_label(y, poly));
        if (it == pos.end()) throw VerificationFailure("dual label outside the polytope");
        const std::size_t l = it->second;
        ++fibers[l];
        for (std::size_t c = 0; c < k; ++c) ++counts[l][c][static_cast<std::size_t>(pairing(y, reps[c]))];
        const auto jt = pos.find(block_label(y, poly));
        if (jt == pos.end()) throw VerificationFailure("superclass label outside the polytope");
        ++classes[jt->second];
      },
      budget);
  t.values.assign(k, std::vector<ExactScalar>(k));
  for (std::size_t r = 0; r < k; ++r) {
    t.fiber_sizes.push_back(ExactScalar(fibers[r]));
    t.class_sizes.push_back(ExactScalar(classes[r]));
    for (std::size_t c = 0; c < k; ++c) {
      t.values[r][c] = ExactScalar(CyclotomicInt::from_histogram(static_cast<int>(q), counts[r][c]).to_integer());
    }
  }
  return t;
}

/// Sum over the lambda-fiber of zeta^{<Y, e_mu>}.
inline ExactScalar oracle_char_value(const UnipotentPolytope& poly, const Tableau& lambda, const Tableau& mu, long q,
                                     unsigned long long budget = kOracleBudget) {
  require_prime(q);
  poly.require_member(lambda);
  const FqMatrix rep =
      FqMatrix::from_pattern(poly.beta().total(), static_cast<int>(q), superclass_representative(poly, mu));
  std::vector<Integer> hist(static_cast<std::size_t>(q));
  for_each_support_matrix(
      poly, q,
      [&](const FqMatrix& y) {
        if (dual_label(y, poly) == lambda) ++hist[static_cast<std::size_t>(pairing(y, rep))];
      },
      budget);
  return ExactScalar(CyclotomicInt::from_histogram(static_cast<int>(q), hist).to_integer());
}

/// #{x on the support : block_label(x) = mu}.
inline ExactScalar oracle_superclass_size(const UnipotentPolytope& poly, const Tableau& mu, long q,
                                          unsigned long long budget = kOracleBudget) {
  poly.require_member(mu);
  Integer n = 0;
  for_each_support_matrix(
      poly, q,
      [&](const FqMatrix& x) {
        if (block_label(x, poly) == mu) ++n;
      },
      budget);
  return ExactScalar(n);
}

enum class Side { left, right, two_sided };
enum class Acting { unipotent, parabolic };
enum class Space { functionals, algebra };

namespace detail {
/// Generator g = Id + s e_rc (r == c allowed, giving a diagonal scaling by 1 + s).
struct Generator {
  int r;
  int c;
  int s;
};

inline std::vector<Generator> generators(const Composition& beta, Acting acting, int q) {
  std::vector<Generator> out;
  const int n = beta.total();
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) {
      const int br = beta.block_of(r);
      const int bc = beta.block_of(c);
      const bool radical = br < bc;
      const bool levi = acting == Acting::parabolic && br == bc;
      if (!radical && !levi) continue;
      for (int s = 1; s < q; ++s) {
        if (r == c && s == q - 1) continue;
        out.push_back({r, c, s});
      }
    }
  return out;
}

inline void project(FqMatrix& m, const UnipotentPolytope& poly) {
  const Composition& beta = poly.beta();
  for (int r = 1; r <= m.rows(); ++r)
    for (int c = 1; c <= m.cols(); ++c)
      if (m(r, c) != 0 && !poly.in_shape(beta.block_of(r), beta.block_of(c))) m.set(r, c, 0);
}

/// Columns: col r += s * col c. Rows: row c += s * row r (or with roles swapped).
inline FqMatrix add_col(const FqMatrix& m, int dst, int src, int s) {
  FqMatrix out = m;
  for (int i = 1; i <= m.rows(); ++i) out.set(i, dst, m(i, dst) + static_cast<long>(s) * m(i, src));
  return out;
}
inline FqMatrix add_row(const FqMatrix& m, int dst, int src, int s) {
  FqMatrix out = m;
  for (int j = 1; j <= m.cols(); ++j) out.set(dst, j, m(dst, j) + static_cast<long>(s) * m(src, j));
  return out;
}
}  // namespace detail

/// Orbit of `seed` under the chosen group and side, by breadth-first closure
/// over generators. For functionals the left action is Y -> proj(Y g^T) and
/// the right action Y -> proj(g^T Y); for algebra elements x -> g x and x -> x g.
inline std::set<FqMatrix> orbit_closure(const FqMatrix& seed, Side side, const UnipotentPolytope& poly,
                                        Acting acting = Acting::unipotent, Space space = Space::functionals,
                                        unsigned long long budget = kOracleBudget) {
  detail::require_square(seed, poly);
  const auto gens = detail::generators(poly.beta(), acting, seed.modulus());
  std::set<FqMatrix> seen{seed};
  std::vector<FqMatrix> frontier{seed};
  const bool do_left = side != Side::right;
  const bool do_right = side != Side::left;
  while (!frontier.empty()) {
    std::vector<FqMatrix> next;
    for (const FqMatrix& m : frontier) {
      auto push = [&](FqMatrix v) {
        if (space == Space::functionals) detail::project(v, poly);
        if (seen.insert(v).second) {
          if (seen.size() > budget) {
            throw BudgetExceeded("orbit closure exceeded budget " + std::to_string(budget), budget);
          }
          next.push_back(std::move(v));
        }
      };
      for (const auto& g : gens) {
        if (space == Space::functionals) {
          if (do_left) push(detail::add_col(m, g.r, g.c, g.s));
          if (do_right) push(detail::add_row(m, g.c, g.r, g.s));
        } else {
          if (do_left) push(detail::add_row(m, g.r, g.c, g.s));
          if (do_right) push(detail::add_col(m, g.c, g.r, g.s));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

/// The functional matrix of a pattern.
inline FqMatrix functional_of(const UnipotentPolytope& poly, const Tableau& lambda, int q) {
  return FqMatrix::from_pattern(poly.beta().total(), q, superclass_representative(poly, lambda));
}

}  // namespace upoly
