// Orbits of Aut(A) on lines of H^2(A) over F_2 compared with isomorphism classes.
#include <iostream>

#include "nilext.hpp"

int main() {
  using namespace nilext;
  using F2 = PrimeField<2>;
  const Catalog& cat = Catalog::builtin();
  for (const char* id : {"CD3_01", "CD3_02", "CD3_03"}) {
    auto a = cat.instantiate<F2>(id, {});
    auto census = orbit_census_fp(a);
    std::cout << id << ": " << census.total_lines << " lines, |Aut| = " << census.group_order << "\n";
    for (const auto& [cls, k] : census.orbits_by_class)
      std::cout << "  " << to_string(cls) << ": " << census.lines_by_class[cls] << " lines in " << k << " orbits\n";
    auto cons = census_consistency(a);
    std::cout << "  isomorphism classes of U1 extensions: " << cons.iso_classes << "\n";
  }
}
