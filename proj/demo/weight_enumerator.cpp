// Harmonic higher weight enumerators of a small binary code and of its dual,
// the latter obtained both by the MacWilliams transform and directly.

#include <iostream>

#include "hwe/hwe.hpp"

int main() {
  using namespace hwe;
  const LinearCode c = parse_code("q=2\nn=5\nk=2\n1 1 1 0 0\n0 0 0 1 1\n");
  const LinearCode cd = dual(c);

  // f = {1} - {5}, an element of Harm_1(5).
  const auto f = HarmonicFunction::from(make_subset_function(5, 1, {{0b00001, 1}, {0b10000, -1}}));

  std::vector<HomogeneousPoly> zs;
  for (long r = 0; r <= 2; ++r) {
    zs.push_back(higher_Z(c, f, r));
    std::cout << "Z^(" << r << ")(C)      = " << format_poly(zs.back()) << "\n";
  }
  std::cout << "Z^(2)(C-perp) = " << format_poly(macwilliams_higher(zs, 5, 2, 1, 2, 2)) << "  (MacWilliams)\n";
  std::cout << "Z^(2)(C-perp) = " << format_poly(higher_Z(cd, f, 2)) << "  (direct)\n";
  std::cout << "Z^(2)(C-perp) = " << format_poly(greene_higher_rhs(cd, f, 2)) << "  (Tutte polynomial)\n";
}
