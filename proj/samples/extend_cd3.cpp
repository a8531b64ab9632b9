// Second cohomology of a 3-dimensional CD-algebra and one of its central extensions.
#include <iostream>

#include "nilext.hpp"

int main() {
  using namespace nilext;
  const Catalog& cat = Catalog::builtin();
  auto base = cat.instantiate<Rational>("CD3_01", {});
  auto names = cat.named_nablas<Rational>("CD3_01", {});
  auto cb = cohomology(base, &names);
  std::cout << base.label() << ": " << base.table_str() << "\n";
  std::cout << "dim B2 = " << cb.b2.dim() << ", dim H2 = " << cb.h2_dim() << "\n";
  for (std::size_t k = 0; k < cb.h2_dim(); ++k)
    std::cout << "  " << cb.labels[k] << " = " << form_str(cb.h2_reps[k]) << (cb.cd_flags[k] ? "  (cd)" : "") << "\n";

  auto theta = parse_form<Rational>("D(1,3)", base.dim());
  std::cout << "line class: " << to_string(classify_line(base, theta)) << "\n";
  auto ext = central_extension(base, theta);
  std::cout << "extension: " << ext.table_str() << "\n";
  std::cout << "equals N4_17: " << (ext == cat.instantiate<Rational>("N4_17", {}) ? "yes" : "no") << "\n";
}
