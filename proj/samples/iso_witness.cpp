// Explicit isomorphism between two members of a one-parameter family.
#include <iostream>

#include "nilext.hpp"

int main() {
  using namespace nilext;
  const Catalog& cat = Catalog::builtin();
  auto a = cat.instantiate<Cyclotomic12>("N4_31", {{"alpha", Cyclotomic12(1)}});
  auto b = cat.instantiate<Cyclotomic12>("N4_31", {{"alpha", Cyclotomic12(-1)}});
  Verdict v = iso_search(a, b);
  std::cout << a.label() << ": " << a.table_str() << "\n";
  std::cout << b.label() << ": " << b.table_str() << "\n";
  std::cout << v.str() << "\n";
  if (v.witness) std::cout << "verified: " << (verify_isomorphism(a, b, *v.witness) ? "yes" : "no") << "\n";

  auto c = cat.instantiate<Cyclotomic12>("N4_18", {});
  auto d = cat.instantiate<Cyclotomic12>("N4_17", {});
  std::cout << "N4_17 vs N4_18: " << iso_search(d, c).str() << "\n";
}
