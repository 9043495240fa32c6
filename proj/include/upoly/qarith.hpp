#pragma once

// Exact arithmetic kernel: q-integers, q-factorials, Gaussian binomials,
// general linear group orders and cyclotomic integers Z[zeta_p].
//
// All values are exact. Integer results are still returned as ExactScalar so
// that formula code composes without conversions.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "upoly/errors.hpp"

namespace upoly {

using Integer = boost::multiprecision::cpp_int;
using ExactScalar = boost::multiprecision::cpp_rational;

inline bool is_integral(const ExactScalar& x) {
  return boost::multiprecision::denominator(x) == 1;
}

/// Numerator of an integral scalar; throws if `x` is not an integer.
inline Integer to_integer(const ExactScalar& x) {
  if (!is_integral(x)) {
    throw VerificationFailure("expected an integer, got " + x.str());
  }
  return boost::multiprecision::numerator(x);
}

inline std::string to_string(const ExactScalar& x) { return x.str(); }

namespace detail {
inline void require_base(long q) {
  if (q < 2) throw ValidationError("q must be at least 2, got " + std::to_string(q));
}
}  // namespace detail

/// q^e for e >= 0.
inline Integer q_power_int(long q, long e) {
  if (e < 0) throw ValidationError("negative exponent in q_power_int");
  Integer r = 1;
  Integer b = q;
  auto n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1U) r *= b;
    b *= b;
    n >>= 1U;
  }
  return r;
}

/// q^e for any integer e.
inline ExactScalar q_power(long q, long e) {
  detail::require_base(q);
  if (e >= 0) return ExactScalar(q_power_int(q, e));
  return ExactScalar(Integer(1), q_power_int(q, -e));
}

/// Ordinary binomial coefficient, 0 outside 0 <= k <= n.
inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// [n] = 1 + q + ... + q^{n-1}.
inline ExactScalar q_int(long n, long q) {
  detail::require_base(q);
  if (n < 0) throw ValidationError("q_int: n must be nonnegative");
  return ExactScalar((q_power_int(q, n) - 1) / (q - 1));
}

/// [n]! = [n][n-1]...[1], with [0]! = 1.
inline ExactScalar q_factorial(long n, long q) {
  detail::require_base(q);
  if (n < 0) throw ValidationError("q_factorial: n must be nonnegative");
  Integer r = 1;
  for (long k = 1; k <= n; ++k) r *= (q_power_int(q, k) - 1) / (q - 1);
  return ExactScalar(r);
}

/// Gaussian binomial [n choose k]_q. Zero whenever k < 0, k > n or n < 0.
inline ExactScalar q_binomial(long n, long k, long q) {
  detail::require_base(q);
  if (n < 0 || k < 0 || k > n) return ExactScalar(0);
  k = std::min(k, n - k);
  // Product form prod_{i<k} (q^{n-i} - 1) / (q^{i+1} - 1), exact at every step.
  Integer num = 1;
  Integer den = 1;
  for (long i = 0; i < k; ++i) {
    num *= q_power_int(q, n - i) - 1;
    den *= q_power_int(q, i + 1) - 1;
  }
  return ExactScalar(num / den);
}

/// |GL_n(F_q)| = prod_{i=0}^{n-1} (q^n - q^i); |GL_0| = 1.
inline ExactScalar gl_order(long n, long q) {
  detail::require_base(q);
  if (n < 0) throw ValidationError("gl_order: n must be nonnegative");
  const Integer qn = q_power_int(q, n);
  Integer r = 1;
  for (long i = 0; i < n; ++i) r *= qn - q_power_int(q, i);
  return ExactScalar(r);
}

/// Number of inversions of a permutation.
inline long inversions(const std::vector<int>& w) {
  long c = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++c;
  return c;
}

/// Sum of q^{inv(w)} over S_n by explicit enumeration. Test oracle for
/// q_factorial; refuses n above `cap`.
inline ExactScalar inv_generating_function(long n, long q, long cap = 8) {
  detail::require_base(q);
  if (n < 0) throw ValidationError("inv_generating_function: n must be nonnegative");
  if (n > cap) {
    throw BudgetExceeded("inv_generating_function: n = " + std::to_string(n) +
                             " exceeds enumeration cap " + std::to_string(cap),
                         static_cast<unsigned long long>(n));
  }
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  Integer total = 0;
  do {
    total += q_power_int(q, inversions(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return ExactScalar(total);
}

/// Element of Z[zeta_p], p prime, stored in the power basis
/// {1, zeta, ..., zeta^{p-2}} after reduction modulo the p-th cyclotomic
/// polynomial. Equality is coefficientwise and therefore exact.
class CyclotomicInt {
 public:
  explicit CyclotomicInt(int p) : p_(p), c_(static_cast<std::size_t>(p - 1)) {
    if (p < 2) throw ValidationError("CyclotomicInt: p must be prime");
  }

  static CyclotomicInt from_integer(int p, const Integer& n) {
    CyclotomicInt z(p);
    z.c_[0] = n;
    return z;
  }

  /// zeta^t, t taken modulo p.
  static CyclotomicInt zeta_power(int p, long t) {
    CyclotomicInt z(p);
    const long e = ((t % p) + p) % p;
    if (e == p - 1) {
      for (auto& x : z.c_) x = -1;
    } else {
      z.c_[static_cast<std::size_t>(e)] = 1;
    }
    return z;
  }

  /// Sum_t counts[t] * zeta^t for a histogram indexed by residues mod p.
  static CyclotomicInt from_histogram(int p, const std::vector<Integer>& counts) {
    CyclotomicInt z(p);
    for (std::size_t t = 0; t < counts.size(); ++t) {
      z.add_zeta_power(static_cast<long>(t), counts[t]);
    }
    return z;
  }

  void add_zeta_power(long t, const Integer& mult) {
    const long e = ((t % p_) + p_) % p_;
    if (e == p_ - 1) {
      for (auto& x : c_) x -= mult;
    } else {
      c_[static_cast<std::size_t>(e)] += mult;
    }
  }

  int prime() const noexcept { return p_; }
  const std::vector<Integer>& coefficients() const noexcept { return c_; }

  bool is_rational_integer() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](const Integer& x) { return x == 0; });
  }

  Integer to_integer() const {
    if (!is_rational_integer()) {
      throw VerificationFailure("cyclotomic value is not a rational integer");
    }
    return c_[0];
  }

  CyclotomicInt& operator+=(const CyclotomicInt& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  CyclotomicInt& operator-=(const CyclotomicInt& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }

  friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
    a.check_same(b);
    const auto p = static_cast<std::size_t>(a.p_);
    std::vector<Integer> full(p);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) full[(i + j) % p] += a.c_[i] * b.c_[j];
    }
    CyclotomicInt r(a.p_);
    for (std::size_t i = 0; i + 1 < p; ++i) r.c_[i] = full[i] - full[p - 1];
    return r;
  }

  friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }

  friend std::ostream& operator<<(std::ostream& os, const CyclotomicInt& z) {
    os << '[';
    for (std::size_t i = 0; i < z.c_.size(); ++i) os << (i ? "," : "") << z.c_[i];
    return os << "]_" << z.p_;
  }

 private:
  void check_same(const CyclotomicInt& o) const {
    if (o.p_ != p_) throw ValidationError("CyclotomicInt: mismatched primes");
  }

  int p_;
  std::vector<Integer> c_;
};

}  // namespace upoly
