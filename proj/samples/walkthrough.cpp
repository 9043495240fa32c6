// Tour of the library on a small example: lattice points, statistics, the
// character table, and a cross-check against the finite field oracle.

#include <iostream>

#include "upoly/upoly.hpp"

int main() {
  using namespace upoly;

  const UnipotentPolytope poly(Composition({2, 1, 1}), Poset::from_pairs(3, {{1, 2}, {1, 3}}));
  std::cout << "beta " << poly.beta().to_string() << ", P " << poly.poset().to_string() << '\n';
  std::cout << "Dyck word " << dyck_of(poly.poset()) << '\n';

  const auto points = enumerate_lattice_points(poly);
  std::cout << points.size() << " lattice points\n";
  for (const Tableau& t : points) {
    std::cout << "  " << t.to_text() << "  |t|=" << size_of(t) << " dimL=" << dim_left(poly, t)
              << " dimR=" << dim_right(poly, t) << " crs=" << crossings(poly, t) << '\n';
  }

  const long q = 3;
  const CharTable table = char_table(poly, q);
  std::cout << "\ncharacter table at q = " << q << ":\n";
  write_csv(std::cout, table);

  const OracleTable oracle = oracle_char_table(poly, q);
  const bool same = oracle.values == table.values && oracle.class_sizes == table.class_sizes;
  std::cout << "\noracle agreement: " << (same ? "yes" : "NO") << '\n';

  const Report rep = verify_orthogonality(poly, q);
  for (const Check& c : rep.checks) std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << '\n';
  return same && rep.ok() ? 0 : 1;
}
