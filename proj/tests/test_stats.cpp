#include <gtest/gtest.h>

#include "upoly/stats.hpp"

using namespace upoly;

namespace {

struct Worked {
  UnipotentPolytope poly;
  Tableau lambda;
  Tableau mu;
};

// Shape: 1,2 < 3,4,5,6 and 3 < 4,5,6.
Worked worked() {
  const Poset p = Poset::from_pairs(
      6, {{1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}});
  UnipotentPolytope poly(Composition({3, 6, 3, 4, 5, 1}), p);
  Tableau lambda = parse_tableau("1,3:2;1,5:1;2,5:1;2,6:1;3,5:1", 6);
  Tableau mu = parse_tableau("1,4:1;1,6:1;2,3:1;2,5:2;3,4:1;3,5:2", 6);
  return {poly, lambda, mu};
}

}  // namespace

TEST(Worked, AllStatisticsAtOnce) {
  const auto w = worked();
  ASSERT_TRUE(w.poly.contains(w.lambda));
  ASSERT_TRUE(w.poly.contains(w.mu));
  EXPECT_EQ(size_of(w.lambda), 6);
  EXPECT_EQ(dim_left(w.poly, w.lambda), 30);
  EXPECT_EQ(dim_right(w.poly, w.lambda), 27);
  EXPECT_EQ(crossings(w.poly, w.lambda), 5);
  EXPECT_EQ(nestings(w.poly, w.lambda, w.mu), 6);
  EXPECT_EQ(loc(w.poly, w.lambda, w.mu, 2, 5), std::make_pair(4, 2));
}

TEST(Size, Examples) {
  EXPECT_EQ(size_of(Tableau(3)), 0);
  Tableau t(2);
  t.set(1, 2, 3);
  EXPECT_EQ(size_of(t), 3);
}

TEST(Dimensions, SmallCases) {
  const UnipotentPolytope two(Composition({1, 1}), Poset::chain(2));
  Tableau t(2);
  t.set(1, 2, 1);
  EXPECT_EQ(dim_left(two, t), 0);
  EXPECT_EQ(dim_right(two, t), 0);
  EXPECT_EQ(dim_left(two, Tableau(2)), 0);
  EXPECT_EQ(crossings(two, t), 0);

  const UnipotentPolytope three(Composition({1, 1, 1}), Poset::chain(3));
  Tableau u(3);
  u.set(1, 3, 1);
  EXPECT_EQ(dim_left(three, u), 1);
  EXPECT_EQ(dim_right(three, u), 1);

  // 1 < 2, 1 < 3 only: the middle block sits to the right of 1 but not
  // below 3.
  const UnipotentPolytope vee(Composition({1, 1, 1}), Poset::from_pairs(3, {{1, 2}, {1, 3}}));
  EXPECT_EQ(dim_left(vee, u), 1);
  EXPECT_EQ(dim_right(vee, u), 0);
}

TEST(Dimensions, LeftEqualsRightOnTheChain) {
  for (int n = 1; n <= 5; ++n)
    for (const Composition& beta : enumerate_compositions(n)) {
      const UnipotentPolytope poly(beta, Poset::chain(beta.length()));
      for (const Tableau& t : enumerate_lattice_points(poly)) EXPECT_EQ(dim_left(poly, t), dim_right(poly, t));
    }
}

TEST(Statistics, NonNegative) {
  for (int n = 1; n <= 5; ++n)
    for (const Composition& beta : enumerate_compositions(n))
      for (const Poset& p : enumerate_normal_subposets(beta.length())) {
        const UnipotentPolytope poly(beta, p);
        const auto pts = enumerate_lattice_points(poly);
        for (const Tableau& l : pts) {
          EXPECT_GE(dim_left(poly, l), 0);
          EXPECT_GE(dim_right(poly, l), 0);
          EXPECT_GE(crossings(poly, l), 0);
          for (const Tableau& m : pts) EXPECT_GE(nestings(poly, l, m), 0);
        }
      }
}

TEST(Nestings, ZeroAndAdditive) {
  const auto w = worked();
  EXPECT_EQ(nestings(w.poly, w.lambda, Tableau(6)), 0);
  EXPECT_EQ(nestings(w.poly, Tableau(6), w.mu), 0);
  // Split mu into two pieces and add the nesting counts.
  const Tableau a = parse_tableau("1,4:1;2,3:1;3,4:1", 6);
  const Tableau b = parse_tableau("1,6:1;2,5:2;3,5:2", 6);
  EXPECT_EQ(nestings(w.poly, w.lambda, a) + nestings(w.poly, w.lambda, b), nestings(w.poly, w.lambda, w.mu));
  const Tableau c = parse_tableau("1,3:2;1,5:1", 6);
  const Tableau d = parse_tableau("2,5:1;2,6:1;3,5:1", 6);
  EXPECT_EQ(nestings(w.poly, c, w.mu) + nestings(w.poly, d, w.mu), nestings(w.poly, w.lambda, w.mu));
}

TEST(Intersect, Examples) {
  const auto w = worked();
  EXPECT_TRUE(intersect(w.lambda, Tableau(6)).is_zero());
  const Tableau x = parse_tableau("1,2:1;1,3:1", 3);
  const Tableau y = parse_tableau("1,2:1;2,3:1", 3);
  EXPECT_EQ(intersect(x, y), parse_tableau("1,2:1", 3));
  EXPECT_EQ(intersect(x, x), x);
  EXPECT_EQ(intersect(w.lambda, w.mu), parse_tableau("2,5:2;3,5:2", 6));
  EXPECT_THROW(intersect(x, Tableau(4)), ValidationError);
}

TEST(Extend, PadsAndRestricts) {
  const UnipotentPolytope poly(Composition({1, 1, 1}), Poset::from_pairs(3, {{1, 3}}));
  const UnipotentPolytope full(Composition({1, 1, 1}), Poset::chain(3));
  EXPECT_TRUE(extend(poly, Tableau(3)).is_zero());
  const Tableau t = parse_tableau("1,3:1", 3);
  const Tableau e = extend(poly, t);
  EXPECT_TRUE(full.contains(e));
  EXPECT_EQ(e.support(), t.support());
  EXPECT_EQ(restrict_to(poly, e), t);
  EXPECT_THROW(extend(poly, parse_tableau("1,2:1", 3)), ValidationError);
}

TEST(Loc, Examples) {
  const UnipotentPolytope poly(Composition({2, 3, 4}), Poset::chain(3));
  EXPECT_EQ(loc(poly, Tableau(3), Tableau(3), 1, 3), std::make_pair(2, 4));
  const UnipotentPolytope three(Composition({1, 1, 1}), Poset::chain(3));
  EXPECT_EQ(loc(three, parse_tableau("1,3:1", 3), parse_tableau("1,2:1", 3), 1, 3), std::make_pair(0, 1));
  const UnipotentPolytope vee(Composition({1, 1, 1}), Poset::from_pairs(3, {{1, 3}}));
  EXPECT_THROW(loc(vee, Tableau(3), Tableau(3), 1, 2), ValidationError);
}
