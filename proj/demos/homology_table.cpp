// Prints a first-homology table across the presentation builders.

#include <iostream>
#include <string>

#include "braidframe/framed.hpp"
#include "braidframe/surface.hpp"

using namespace braidframe;

namespace {

void row(const GroupPresentation& p) {
  const H1Invariants h = p.h1();
  std::string value = "Z^" + std::to_string(h.free_rank);
  for (const Int& t : h.torsion) value += " + Z/" + t.str();
  std::cout << p.name() << "\t" << p.generators().size() << " gen\t"
            << p.relators().size() << " rel\t" << value << "\n";
}

}  // namespace

int main() {
  for (int n = 1; n <= 3; ++n) row(pure_presentation(2, 1, n));
  for (int n = 1; n <= 3; ++n) row(closed_pure_presentation(2, n));
  for (int n = 1; n <= 2; ++n) row(fp_closed_presentation(2, n));
  row(fp_closed_presentation(3, 1));
  row(fp_boundary_presentation(2, 1, 2));
  for (int n = 1; n <= 2; ++n) row(fb_tilde_closed_presentation(2, n));
  for (int n = 1; n <= 2; ++n) row(torus_pure_presentation(n));
  for (int n = 1; n <= 2; ++n) row(torus_fp_presentation(n));
  row(torus_fp_tilde_presentation(1));
  row(torus_quotient_presentation(1));
  return 0;
}
