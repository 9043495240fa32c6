#include <gtest/gtest.h>

#include <numeric>
#include <vector>

#include "upoly/qarith.hpp"

using namespace upoly;

namespace {

// Invertible n x n matrices over F_q by exhaustive search (n <= 2).
long brute_gl(int n, int q) {
  long count = 0;
  const int cells = n * n;
  long total = 1;
  for (int i = 0; i < cells; ++i) total *= q;
  for (long code = 0; code < total; ++code) {
    std::vector<int> a(static_cast<std::size_t>(cells));
    long c = code;
    for (int i = 0; i < cells; ++i, c /= q) a[static_cast<std::size_t>(i)] = static_cast<int>(c % q);
    long det = n == 1 ? a[0] : static_cast<long>(a[0]) * a[3] - static_cast<long>(a[1]) * a[2];
    if (((det % q) + q) % q != 0) ++count;
  }
  return count;
}

}  // namespace

TEST(QInt, SmallValues) {
  EXPECT_EQ(q_int(0, 5), 0);
  EXPECT_EQ(q_int(1, 5), 1);
  EXPECT_EQ(q_int(3, 2), 7);
  EXPECT_EQ(q_int(4, 3), 40);
}

TEST(QFactorial, SmallValues) {
  EXPECT_EQ(q_factorial(0, 2), 1);
  EXPECT_EQ(q_factorial(2, 2), 3);
  EXPECT_EQ(q_factorial(3, 2), 21);
}

TEST(QBinomial, ValuesAndConventions) {
  EXPECT_EQ(q_binomial(2, 1, 2), 3);
  for (long n = 0; n <= 5; ++n) EXPECT_EQ(q_binomial(n, 0, 3), 1);
  EXPECT_EQ(q_binomial(1, 2, 3), 0);
  EXPECT_EQ(q_binomial(3, -1, 2), 0);
  EXPECT_EQ(q_binomial(-2, 0, 2), 0);
  EXPECT_EQ(q_binomial(4, 2, 2), 35);
}

TEST(QBinomial, MatchesFactorialQuotient) {
  for (long q : {2L, 3L, 4L})
    for (long n = 0; n <= 7; ++n)
      for (long k = 0; k <= n; ++k)
        EXPECT_EQ(q_binomial(n, k, q), q_factorial(n, q) / (q_factorial(k, q) * q_factorial(n - k, q)));
}

TEST(QBinomial, SubsetWeightSums) {
  for (long q : {2L, 3L})
    for (int n = 0; n <= 6; ++n)
      for (int k = 0; k <= n; ++k) {
        ExactScalar up = 0;
        ExactScalar down = 0;
        for (unsigned mask = 0; mask < (1U << n); ++mask) {
          if (__builtin_popcount(mask) != k) continue;
          long wu = 0;
          long wd = 0;
          for (int a = 1; a <= n; ++a)
            if (mask & (1U << (a - 1))) {
              wu += n - a;
              wd += a - 1;
            }
          up += q_power(q, wu);
          down += q_power(q, wd);
        }
        const ExactScalar want = q_power(q, static_cast<long>(k) * (k - 1) / 2) * q_binomial(n, k, q);
        EXPECT_EQ(up, want) << "n=" << n << " k=" << k << " q=" << q;
        EXPECT_EQ(down, want) << "n=" << n << " k=" << k << " q=" << q;
      }
}

TEST(GlOrder, SmallValues) {
  EXPECT_EQ(gl_order(0, 2), 1);
  EXPECT_EQ(gl_order(1, 3), 2);
  EXPECT_EQ(gl_order(2, 2), 6);
  EXPECT_EQ(gl_order(2, 2), brute_gl(2, 2));
  EXPECT_EQ(gl_order(2, 3), brute_gl(2, 3));
  EXPECT_EQ(gl_order(1, 5), brute_gl(1, 5));
}

TEST(GlOrder, FactorialForm) {
  for (long q : {2L, 3L})
    for (long n = 0; n <= 5; ++n)
      EXPECT_EQ(gl_order(n, q),
                q_power(q, n * (n - 1) / 2) * q_factorial(n, q) * ExactScalar(q_power_int(q - 1, n)));
}

TEST(InversionSum, SmallValues) {
  EXPECT_EQ(inv_generating_function(0, 2), 1);
  EXPECT_EQ(inv_generating_function(2, 2), 3);
  EXPECT_EQ(inv_generating_function(3, 2), 21);
}

TEST(InversionSum, EqualsQFactorial) {
  for (long q : {2L, 3L})
    for (long n = 0; n <= 6; ++n) EXPECT_EQ(inv_generating_function(n, q), q_factorial(n, q));
}

TEST(InversionSum, CapIsEnforced) {
  EXPECT_THROW(inv_generating_function(9, 2), BudgetExceeded);
  EXPECT_NO_THROW(inv_generating_function(4, 2, 4));
  EXPECT_THROW(inv_generating_function(5, 2, 4), BudgetExceeded);
}

TEST(InversionSum, Palindromic) {
  for (long q : {2L, 3L})
    for (int n = 0; n <= 6; ++n) {
      std::vector<int> w(static_cast<std::size_t>(n));
      std::iota(w.begin(), w.end(), 1);
      ExactScalar s = 0;
      do {
        s += q_power(q, -inversions(w));
      } while (std::next_permutation(w.begin(), w.end()));
      EXPECT_EQ(s, q_power(q, -static_cast<long>(n) * (n - 1) / 2) * q_factorial(n, q));
    }
}

TEST(QArith, RejectsSmallBase) {
  EXPECT_THROW(q_int(2, 1), ValidationError);
  EXPECT_THROW(q_binomial(2, 1, 0), ValidationError);
}

TEST(QArith, IntegralityHelpers) {
  EXPECT_TRUE(is_integral(ExactScalar(6, 3)));
  EXPECT_FALSE(is_integral(ExactScalar(1, 2)));
  EXPECT_EQ(to_integer(ExactScalar(-8, 4)), -2);
  EXPECT_THROW(to_integer(ExactScalar(1, 3)), VerificationFailure);
}

TEST(Cyclotomic, RootRelations) {
  for (int p : {2, 3, 5}) {
    EXPECT_EQ(CyclotomicInt::zeta_power(p, p), CyclotomicInt::from_integer(p, 1));
    CyclotomicInt s(p);
    for (int t = 0; t < p; ++t) s += CyclotomicInt::zeta_power(p, t);
    EXPECT_EQ(s, CyclotomicInt(p));
    CyclotomicInt z = CyclotomicInt::zeta_power(p, 1);
    CyclotomicInt acc = CyclotomicInt::from_integer(p, 1);
    for (int t = 0; t < p; ++t) acc = acc * z;
    EXPECT_EQ(acc, CyclotomicInt::from_integer(p, 1));
  }
}

TEST(Cyclotomic, HistogramsAndIntegrality) {
  // Sum over nonzero t of zeta^t is -1.
  for (int p : {2, 3, 5}) {
    std::vector<Integer> h(static_cast<std::size_t>(p), 1);
    h[0] = 0;
    const CyclotomicInt z = CyclotomicInt::from_histogram(p, h);
    ASSERT_TRUE(z.is_rational_integer());
    EXPECT_EQ(z.to_integer(), -1);
  }
  const CyclotomicInt z = CyclotomicInt::zeta_power(3, 1);
  EXPECT_FALSE(z.is_rational_integer());
  EXPECT_THROW(z.to_integer(), VerificationFailure);
  EXPECT_EQ(CyclotomicInt::zeta_power(3, -1), CyclotomicInt::zeta_power(3, 2));
}

TEST(Cyclotomic, MismatchedPrimes) {
  EXPECT_THROW(CyclotomicInt(2) + CyclotomicInt(3), ValidationError);
}
