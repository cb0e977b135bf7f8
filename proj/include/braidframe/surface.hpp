#pragma once
// Presentation builders for surface pure braid groups on genus-g surfaces,
// with or without boundary, plus the strand-forgetting maps between them.
//
// Relator words are always (left side) * (right side)^-1 of the printed
// relation, instantiated in documented enumeration order: families first
// (PR1, PR2, PR3, PR4, ER1, ER2, then TR / QR1 / QR2 where applicable),
// index tuples lexicographically within each family.

#include <set>
#include <string>

#include "presentation.hpp"

namespace braidframe {

namespace detail {

// The band relation families are shared verbatim between the A-letter pure
// groups and the B-letter framed groups; only the letter family differs.
inline void add_band_relators(GroupPresentation& p, Family fam) {
  const Alphabet& alpha = p.alphabet();
  const int g2 = 2 * alpha.g;
  const int fp = alpha.first_puncture();
  const int last = alpha.last_index();
  const auto gen = [&](int i, int j, int e = 1) {
    return Word::generator(alpha, {fam, i, j}, e);
  };
  const auto conj = [&](const Word& inner, int i, int j) {
    return inner.conjugated_by(gen(i, j));
  };

  // (PR1)  A_{i,j}^-1 A_{r,s} A_{i,j} = A_{r,s}
  for (int i = 1; i <= last; ++i)
    for (int j = std::max(i + 1, fp); j <= last; ++j)
      for (int r = 1; r <= last; ++r)
        for (int s = std::max(r + 1, fp); s <= last; ++s) {
          const bool disjoint = j < r;
          const bool nested = r + 1 < i && j < s;
          const bool adjacent =
              i == r + 1 && j < s && ((r % 2 == 0 && r < g2) || r > g2);
          if (!(disjoint || nested || adjacent)) continue;
          p.add_relator("PR1", {i, j, r, s}, conj(gen(r, s), i, j) * gen(r, s, -1));
        }

  // (PR2)  A_{i,j}^-1 A_{j,s} A_{i,j} = A_{i,s} A_{j,s} A_{i,s}^-1
  for (int i = 1; i < last; ++i)
    for (int j = std::max(i + 1, fp); j <= last; ++j)
      for (int s = j + 1; s <= last; ++s)
        p.add_relator("PR2", {i, j, s},
                      conj(gen(j, s), i, j) *
                          (gen(i, s) * gen(j, s) * gen(i, s, -1)).inverse());

  // (PR3)  A_{i,j}^-1 A_{i,s} A_{i,j} = A_{i,s} A_{j,s} A_{i,s} A_{j,s}^-1 A_{i,s}^-1
  for (int i = 1; i < last; ++i)
    for (int j = std::max(i + 1, fp); j <= last; ++j)
      for (int s = j + 1; s <= last; ++s)
        p.add_relator("PR3", {i, j, s},
                      conj(gen(i, s), i, j) *
                          (gen(i, s) * gen(j, s) * gen(i, s) * gen(j, s, -1) *
                           gen(i, s, -1))
                              .inverse());

  // (PR4)  A_{i,j}^-1 A_{r,s} A_{i,j}
  //          = A_{i,s} A_{j,s} A_{i,s}^-1 A_{j,s}^-1 A_{r,s} A_{j,s} A_{i,s} A_{j,s}^-1 A_{i,s}^-1
  for (int i = 1; i <= last; ++i)
    for (int j = std::max(i + 1, fp); j <= last; ++j)
      for (int r = i + 1; r < j; ++r)
        for (int s = j + 1; s <= last; ++s) {
          const bool strict = i + 1 < r;
          const bool adjacent = i + 1 == r && ((r % 2 == 1 && r < g2) || r > g2);
          if (!(strict || adjacent)) continue;
          const Word rhs = gen(i, s) * gen(j, s) * gen(i, s, -1) * gen(j, s, -1) *
                           gen(r, s) * gen(j, s) * gen(i, s) * gen(j, s, -1) *
                           gen(i, s, -1);
          p.add_relator("PR4", {i, j, r, s}, conj(gen(r, s), i, j) * rhs.inverse());
        }

  // (ER1)  A_{r+1,j}^-1 A_{r,s} A_{r+1,j} = A_{r,s} A_{r+1,s} A_{j,s}^-1 A_{r+1,s}^-1
  //        for odd r < 2g
  for (int r = 1; r < g2; r += 2)
    for (int j = fp; j <= last; ++j)
      for (int s = j + 1; s <= last; ++s)
        p.add_relator("ER1", {r, j, s},
                      conj(gen(r, s), r + 1, j) *
                          (gen(r, s) * gen(r + 1, s) * gen(j, s, -1) *
                           gen(r + 1, s, -1))
                              .inverse());

  // (ER2)  A_{r-1,j}^-1 A_{r,s} A_{r-1,j}
  //          = A_{r-1,s} A_{j,s} A_{r-1,s}^-1 A_{r,s} A_{j,s} A_{r-1,s} A_{j,s}^-1 A_{r-1,s}^-1
  //        for even r < 2g
  for (int r = 2; r < g2; r += 2)
    for (int j = fp; j <= last; ++j)
      for (int s = j + 1; s <= last; ++s) {
        const Word rhs = gen(r - 1, s) * gen(j, s) * gen(r - 1, s, -1) * gen(r, s) *
                         gen(j, s) * gen(r - 1, s) * gen(j, s, -1) *
                         gen(r - 1, s, -1);
        p.add_relator("ER2", {r, j, s}, conj(gen(r, s), r - 1, j) * rhs.inverse());
      }
}

// Surface relation of the closed group, one instance per strand k:
//   [A_{2g,2g+k}^-1, A_{2g-1,2g+k}] ... [A_{2,2g+k}^-1, A_{1,2g+k}]
//     = A_{2g+1,2g+k} ... A_{2g+k-1,2g+k} A_{2g+k,2g+k+1} ... A_{2g+k,2g+n}
// (empty products when the index ranges collapse).  The framed variant
// appends f_k^{2(g-1)} to the right side.
inline Word surface_relation_word(const Alphabet& alpha, Family fam, int k, bool framed) {
  const int g = alpha.g, n = alpha.n, g2 = 2 * alpha.g;
  const auto gen = [&](int i, int j, int e = 1) {
    return Word::generator(alpha, {fam, i, j}, e);
  };
  Word lhs(alpha);
  for (int h = g; h >= 1; --h)
    lhs = lhs * Word::commutator(gen(2 * h, g2 + k, -1), gen(2 * h - 1, g2 + k));
  Word rhs(alpha);
  for (int l = g2 + 1; l <= g2 + k - 1; ++l) rhs = rhs * gen(l, g2 + k);
  for (int m = g2 + k + 1; m <= g2 + n; ++m) rhs = rhs * gen(g2 + k, m);
  if (framed) rhs = rhs * Word::generator(alpha, gen_f(k), 2 * (g - 1));
  return lhs * rhs.inverse();
}

inline void add_surface_relators(GroupPresentation& p, Family fam, bool framed) {
  for (int k = 1; k <= p.alphabet().n; ++k)
    p.add_relator(framed ? "FTR" : "TR", {k},
                  surface_relation_word(p.alphabet(), fam, k, framed));
}

inline void check_domain(bool ok, const std::string& what) {
  if (!ok) throw braid_error("parameters outside validity domain: " + what);
}

}  // namespace detail

// P_n of the genus-g surface with b boundary components.
inline GroupPresentation pure_presentation(int g, int b, int n) {
  detail::check_domain(g >= 1 && b >= 1 && n >= 1, "pure needs g>=1, b>=1, n>=1");
  GroupPresentation p("pure(" + std::to_string(g) + "," + std::to_string(b) + "," +
                          std::to_string(n) + ")",
                      Alphabet::pure(g, b, n));
  detail::add_band_relators(p, Family::A);
  return p;
}

// P_n of the closed genus-g surface, g >= 2, presented over the b=1 index
// scheme plus the n surface relations.
inline GroupPresentation closed_pure_presentation(int g, int n) {
  detail::check_domain(g >= 2 && n >= 1, "pure-closed needs g>=2, n>=1");
  GroupPresentation p("pure-closed(" + std::to_string(g) + "," + std::to_string(n) + ")",
                      Alphabet::pure(g, 0, n));
  detail::add_band_relators(p, Family::A);
  detail::add_surface_relators(p, Family::A, false);
  return p;
}

// P_n of the torus: the g=1 instance of the closed construction.
inline GroupPresentation torus_pure_presentation(int n) {
  detail::check_domain(n >= 1, "torus-pure needs n>=1");
  GroupPresentation p("torus-pure(" + std::to_string(n) + ")", Alphabet::pure(1, 0, n));
  detail::add_band_relators(p, Family::A);
  detail::add_surface_relators(p, Family::A, false);
  return p;
}

// P_n of the torus modulo its center: the torus group with the two central
// words A_{1,3}...A_{1,2+n} and A_{2,3}...A_{2,2+n} killed.
inline GroupPresentation torus_quotient_presentation(int n) {
  detail::check_domain(n >= 1, "torus-ptilde needs n>=1");
  GroupPresentation p("torus-ptilde(" + std::to_string(n) + ")", Alphabet::pure(1, 0, n));
  detail::add_band_relators(p, Family::A);
  detail::add_surface_relators(p, Family::A, false);
  const Alphabet& alpha = p.alphabet();
  for (int i = 1; i <= 2; ++i) {
    Word w(alpha);
    for (int j = 3; j <= 2 + n; ++j) w = w * Word::generator(alpha, gen_A(i, j));
    p.add_relator(i == 1 ? "QR1" : "QR2", {}, w);
  }
  return p;
}

// Forget strand s (1-based): letters whose band touches the forgotten
// puncture die, puncture indices above it shift down by one.
inline Word forget_strand(const Word& w, int s) {
  const Alphabet& a = w.alphabet();
  if (a.kind != Alphabet::Kind::Pure)
    throw braid_error("forget_strand expects a word over a pure-group alphabet");
  if (s < 1 || s > a.n) throw braid_error("strand number out of range");
  const Alphabet out{a.kind, a.g, a.b, a.n - 1};
  const int cut = a.first_puncture() + s - 1;
  Word res(out);
  for (const Letter& l : w.letters()) {
    int i = l.id.i, j = l.id.j;
    if (i == cut || j == cut) continue;
    if (i > cut) --i;
    if (j > cut) --j;
    res = res * Word::generator(out, {l.id.fam, i, j}, l.sign);
  }
  return res;
}

// Fold of forget_strand over a strand set, highest strand first so the
// remaining strand numbers stay valid.
inline Word forget_strands(const Word& w, const std::set<int>& strands) {
  Word res = w;
  for (auto it = strands.rbegin(); it != strands.rend(); ++it)
    res = forget_strand(res, *it);
  return res;
}

}  // namespace braidframe
