// Walks through framed element arithmetic on a genus-2 surface with one
// boundary component: framings add componentwise over the pure group, and
// ride the strand permutation over the full group.

#include <iostream>

#include "braidframe/framed.hpp"
#include "braidframe/parse.hpp"

using namespace braidframe;

namespace {

void show_fp(const char* label, const FramedPureElement& e) {
  std::cout << label << " = framing(";
  for (size_t k = 0; k < e.framing.size(); ++k)
    std::cout << (k ? "," : "") << e.framing[k];
  std::cout << ") word " << format_word(e.pure) << "\n";
}

void show_fb(const char* label, const FramedFullElement& e) {
  std::cout << label << " = framing(";
  for (size_t k = 0; k < e.framing.size(); ++k)
    std::cout << (k ? "," : "") << e.framing[k];
  std::cout << ") word " << format_word(e.braid) << " perm "
            << e.perm.cycle_string() << "\n";
}

}  // namespace

int main() {
  const Alphabet pure = Alphabet::pure(2, 1, 2);
  const FramedPureElement u{{1, 0}, parse_word("A[1,5]", pure)};
  const FramedPureElement v{{0, 2}, parse_word("A[2,5]", pure)};
  show_fp("u", u);
  show_fp("v", v);
  show_fp("u v", fp_multiply(u, v));
  show_fp("u v u^-1", fp_multiply(fp_multiply(u, v), fp_invert(u)));

  std::cout << "\n";

  const Alphabet braid = Alphabet::surface_braid(2, 1, 2);
  const FramedFullElement x = fb_element({1, 0}, parse_word("sigma[1]", braid));
  const FramedFullElement y = fb_element({2, 5}, parse_word("sigma[1]^-1", braid));
  show_fb("x", x);
  show_fb("y", y);
  show_fb("x x", fb_multiply(x, x));
  show_fb("x y", fb_multiply(x, y));
  show_fb("x^-1", fb_invert(x));
  show_fb("x x^-1", fb_multiply(x, fb_invert(x)));
  return 0;
}
