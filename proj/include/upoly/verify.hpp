#pragma once

// Named invariant suites shared by the command line tool and the tests.

#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "upoly/chars.hpp"
#include "upoly/fforacle.hpp"

namespace upoly {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
  bool ok() const {
    for (const Check& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const Check* first_failure() const {
    for (const Check& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }
};

/// <chi^nu, chi^mu> = delta * degree(nu) over the whole table, plus the
/// degree sum.
inline Report verify_orthogonality(const UnipotentPolytope& poly, long q) {
  Report rep;
  const CharTable t = char_table(poly, q);
  const std::size_t k = t.index.size();
  std::string bad;
  for (std::size_t a = 0; a < k && bad.empty(); ++a)
    for (std::size_t b = 0; b < k && bad.empty(); ++b) {
      const ExactScalar got = inner_product(t, a, b);
      const ExactScalar want = a == b ? t.degrees[a] : ExactScalar(0);
      if (got != want) {
        bad = "<" + t.index[a].to_text() + ", " + t.index[b].to_text() + "> = " + got.str() + ", expected " +
              want.str();
      }
    }
  rep.add("orthogonality of " + std::to_string(k) + " supercharacters", bad.empty(), bad);
  ExactScalar deg_sum = 0;
  ExactScalar cls_sum = 0;
  for (std::size_t a = 0; a < k; ++a) {
    deg_sum += t.degrees[a];
    cls_sum += t.class_sizes[a];
  }
  const ExactScalar order = q_power(q, group_exponent(poly));
  rep.add("degree sum equals |G|", deg_sum == order, deg_sum.str() + " vs " + order.str());
  rep.add("class sizes sum to |G|", cls_sum == order, cls_sum.str() + " vs " + order.str());
  std::string zero;
  for (std::size_t a = 0; a < k && zero.empty(); ++a)
    if (t.values[a][0] != t.degrees[a]) zero = "lambda " + t.index[a].to_text();
  rep.add("value at the identity equals the degree", zero.empty(), zero);
  return rep;
}

/// Formula table against the brute-force finite field table.
inline Report verify_oracle(const UnipotentPolytope& poly, long q, unsigned long long budget = kOracleBudget) {
  Report rep;
  const CharTable t = char_table(poly, q);
  const OracleTable o = oracle_char_table(poly, q, budget);
  const std::size_t k = t.index.size();
  std::string bad;
  for (std::size_t a = 0; a < k && bad.empty(); ++a)
    for (std::size_t b = 0; b < k && bad.empty(); ++b)
      if (t.values[a][b] != o.values[a][b]) {
        bad = "chi^" + t.index[a].to_text() + "(u_" + t.index[b].to_text() + "): formula " + t.values[a][b].str() +
              ", oracle " + o.values[a][b].str();
      }
  rep.add(std::to_string(k) + "x" + std::to_string(k) + " table matches the oracle", bad.empty(), bad);
  std::string cls;
  std::string deg;
  for (std::size_t a = 0; a < k; ++a) {
    if (cls.empty() && t.class_sizes[a] != o.class_sizes[a]) {
      cls = "mu " + t.index[a].to_text() + ": formula " + t.class_sizes[a].str() + ", oracle " + o.class_sizes[a].str();
    }
    if (deg.empty() && t.degrees[a] != o.fiber_sizes[a]) {
      deg = "lambda " + t.index[a].to_text() + ": formula " + t.degrees[a].str() + ", oracle " +
            o.fiber_sizes[a].str();
    }
  }
  rep.add("superclass sizes match fiber counts", cls.empty(), cls);
  rep.add("degrees match dual fiber counts", deg.empty(), deg);
  std::string lab;
  for (const Tableau& mu : t.index) {
    const FqMatrix e = functional_of(poly, mu, static_cast<int>(q));
    if (block_label(e, poly) != mu || dual_label(e, poly) != mu) {
      lab = "representative of " + mu.to_text();
      break;
    }
  }
  rep.add("representatives carry their own labels", lab.empty(), lab);
  return rep;
}

/// Orbit measurements for the statistics: for the representative of each
/// lambda, q^{dim_L}, q^{dim_R} and q^{crs} are the sizes of its left orbit,
/// right orbit and their intersection under UT_beta, and |lambda| is its rank.
inline Report verify_stats(const UnipotentPolytope& poly, long q) {
  Report rep;
  for (const Tableau& lambda : enumerate_lattice_points(poly)) {
    const FqMatrix y = functional_of(poly, lambda, static_cast<int>(q));
    const auto left = orbit_closure(y, Side::left, poly);
    const auto right = orbit_closure(y, Side::right, poly);
    long common = 0;
    for (const FqMatrix& m : left) common += static_cast<long>(right.count(m));
    const ExactScalar l_size = ExactScalar(static_cast<long>(left.size()));
    const ExactScalar r_size = ExactScalar(static_cast<long>(right.size()));
    const std::string tag = "lambda " + lambda.to_text();
    rep.add(tag + ": |lambda| = rank", y.rank() == size_of(lambda),
            "rank " + std::to_string(y.rank()) + ", size " + std::to_string(size_of(lambda)));
    rep.add(tag + ": left orbit", l_size == q_power(q, dim_left(poly, lambda)),
            std::to_string(left.size()) + " vs q^" + std::to_string(dim_left(poly, lambda)));
    rep.add(tag + ": right orbit", r_size == q_power(q, dim_right(poly, lambda)),
            std::to_string(right.size()) + " vs q^" + std::to_string(dim_right(poly, lambda)));
    rep.add(tag + ": intersection", ExactScalar(common) == q_power(q, crossings(poly, lambda)),
            std::to_string(common) + " vs q^" + std::to_string(crossings(poly, lambda)));
  }
  return rep;
}

inline Report verify_kernels(const Composition& beta) {
  Report rep;
  const auto family = kernel_subgroup_family(beta);
  const auto all = enumerate_normal_subposets(beta.length());
  const std::set<Poset> a(family.begin(), family.end());
  const std::set<Poset> b(all.begin(), all.end());
  rep.add("kernel family equals the normal subposets (" + std::to_string(b.size()) + ")", a == b,
          std::to_string(a.size()) + " kernels found");
  std::string bad;
  for (const Poset& p : all)
    if (!(kernel_poset(beta, {kernel_generator(p)}) == p)) {
      bad = p.to_string();
      break;
    }
  rep.add("each normal subposet is the kernel of its generator", bad.empty(), bad);
  rep.add("empty set gives the chain", kernel_poset(beta, {}) == Poset::chain(beta.length()));
  return rep;
}

inline Report verify_bijections(int l) {
  Report rep;
  const auto posets = enumerate_normal_subposets(l);
  std::vector<long long> cat{1};
  for (int n = 1; n <= l; ++n) {
    long long c = 0;
    for (int i = 0; i < n; ++i) c += cat[static_cast<std::size_t>(i)] * cat[static_cast<std::size_t>(n - 1 - i)];
    cat.push_back(c);
  }
  rep.add("normal subposets counted by Catalan(" + std::to_string(l) + ")",
          static_cast<long long>(posets.size()) == cat.back(),
          std::to_string(posets.size()) + " vs " + std::to_string(cat.back()));
  std::string bad;
  for (const Poset& p : posets) {
    if (!(poset_of_ferrers(l, ferrers_of(p)) == p) || !(poset_of_dyck(dyck_of(p)) == p)) {
      bad = p.to_string();
      break;
    }
  }
  rep.add("Ferrers and Dyck round trips", bad.empty(), bad);
  return rep;
}

}  // namespace upoly
