#pragma once
// Framed braid models.
//
// Boundary surfaces: the framed groups split, so elements carry an explicit
// framing vector next to the braid data (direct product over the pure group,
// semidirect product with permutation transport over the full group).
//
// Closed surfaces: no splitting; the groups are handled by presentation.
// fp_closed_presentation gives the framed pure group (B letters plus central
// f's, surface relation picking up f_k^{2(g-1)}), fb_tilde_closed_presentation
// the full framed model on generators A_i, B_i, tau_i, F_k, and the torus
// builders the g=1 degenerations.

#include <string>
#include <vector>

#include "permutation.hpp"
#include "surface.hpp"

namespace braidframe {

using FramingVector = std::vector<long long>;

// Entry-position permutation of a braid word: sigma_i and tau_i exchange the
// strands entering at i, i+1; pure and framing letters move nothing.
inline Permutation permutation_of(const Word& w, int n) {
  Permutation p = Permutation::identity(n);
  for (const Letter& l : w.letters())
    if (l.id.fam == Family::Sigma || l.id.fam == Family::Tau)
      p = p * Permutation::transposition(n, l.id.i);
  return p;
}

inline Word erase_family(const Word& w, Family fam) {
  Word out(w.alphabet());
  for (const Letter& l : w.letters())
    if (l.id.fam != fam) out = out * Word::from_letters(w.alphabet(), {l});
  return out;
}

// ---- boundary case: framed pure = Z^n x P_n -------------------------------

struct FramedPureElement {
  FramingVector framing;
  Word pure;

  friend bool operator==(const FramedPureElement&, const FramedPureElement&) = default;
};

inline FramedPureElement fp_identity(const Alphabet& pure_alpha) {
  return {FramingVector(static_cast<std::size_t>(pure_alpha.n), 0), Word(pure_alpha)};
}

inline void check_fp_shapes(const FramedPureElement& u, const FramedPureElement& v) {
  if (!(u.pure.alphabet() == v.pure.alphabet()) || u.framing.size() != v.framing.size())
    throw braid_error("framed element shape mismatch");
}

inline FramedPureElement fp_multiply(const FramedPureElement& u, const FramedPureElement& v) {
  check_fp_shapes(u, v);
  FramingVector f = u.framing;
  for (std::size_t k = 0; k < f.size(); ++k) f[k] += v.framing[k];
  return {std::move(f), u.pure * v.pure};
}

inline FramedPureElement fp_invert(const FramedPureElement& u) {
  FramingVector f = u.framing;
  for (long long& x : f) x = -x;
  return {std::move(f), u.pure.inverse()};
}

// ---- boundary case: framed full = Z^n x| B_n ------------------------------

// framing[k] belongs to the strand entering at position k; the cached
// permutation always equals permutation_of(braid).
struct FramedFullElement {
  FramingVector framing;
  Word braid;
  Permutation perm;

  friend bool operator==(const FramedFullElement&, const FramedFullElement&) = default;
};

inline FramedFullElement fb_element(FramingVector framing, Word braid) {
  const Alphabet& a = braid.alphabet();
  if (a.kind != Alphabet::Kind::SurfaceBraid)
    throw braid_error("framed full elements carry a braid-alphabet word");
  if (static_cast<int>(framing.size()) != a.n)
    throw braid_error("framing length must match the strand count");
  Permutation p = permutation_of(braid, a.n);
  return {std::move(framing), std::move(braid), std::move(p)};
}

inline FramedFullElement fb_identity(const Alphabet& braid_alpha) {
  return fb_element(FramingVector(static_cast<std::size_t>(braid_alpha.n), 0),
                    Word(braid_alpha));
}

// (v1, b1)(v2, b2) = (v, b1 b2) where the strand entering the product at k
// runs through b1 first, so v[k] = v1[k] + v2[perm(b1)(k)].
inline FramedFullElement fb_multiply(const FramedFullElement& u, const FramedFullElement& v) {
  if (!(u.braid.alphabet() == v.braid.alphabet()) || u.framing.size() != v.framing.size())
    throw braid_error("framed element shape mismatch");
  FramingVector f(u.framing.size());
  for (std::size_t k = 0; k < f.size(); ++k)
    f[k] = u.framing[k] + v.framing[static_cast<std::size_t>(u.perm.apply(static_cast<int>(k) + 1)) - 1];
  return {std::move(f), u.braid * v.braid, u.perm * v.perm};
}

inline FramedFullElement fb_invert(const FramedFullElement& u) {
  const Permutation inv = u.perm.inverse();
  FramingVector f(u.framing.size());
  for (std::size_t m = 0; m < f.size(); ++m)
    f[m] = -u.framing[static_cast<std::size_t>(inv.apply(static_cast<int>(m) + 1)) - 1];
  return {std::move(f), u.braid.inverse(), inv};
}

// ---- closed-surface presentations -----------------------------------------

namespace detail {

// [f_k, x] for every other generator x, in enumeration order; n(#gen-1)
// relators in total across the n framing generators.
inline void add_centrality_relators(GroupPresentation& p, Family frame_fam) {
  const Alphabet& alpha = p.alphabet();
  const std::vector<GeneratorId> gens = alpha.generators();
  for (int k = 1; k <= alpha.n; ++k) {
    const GeneratorId fk{frame_fam, k, 0};
    const Word f = Word::generator(alpha, fk);
    for (std::size_t pos = 0; pos < gens.size(); ++pos) {
      if (gens[pos] == fk) continue;
      p.add_relator("C", {k, static_cast<int>(pos) + 1},
                    Word::commutator(f, Word::generator(alpha, gens[pos])));
    }
  }
}

}  // namespace detail

// Framed pure group of the closed genus-g surface, g >= 2.
inline GroupPresentation fp_closed_presentation(int g, int n) {
  detail::check_domain(g >= 2 && n >= 1, "fp-closed needs g>=2, n>=1");
  GroupPresentation p("fp-closed(" + std::to_string(g) + "," + std::to_string(n) + ")",
                      Alphabet::framed_closed(g, n));
  detail::add_band_relators(p, Family::B);
  detail::add_centrality_relators(p, Family::Frame);
  detail::add_surface_relators(p, Family::B, true);
  return p;
}

// Framed pure group over a surface with boundary: the framing splits off, so
// bands plus centrality already present Z^n x P_n and no surface relation
// is needed.
inline GroupPresentation fp_boundary_presentation(int g, int b, int n) {
  detail::check_domain(g >= 1 && b >= 1 && n >= 1, "fp needs g>=1, b>=1, n>=1");
  GroupPresentation p("fp(" + std::to_string(g) + "," + std::to_string(b) + "," +
                          std::to_string(n) + ")",
                      Alphabet::framed_pure(g, b, n));
  detail::add_band_relators(p, Family::B);
  detail::add_centrality_relators(p, Family::Frame);
  return p;
}

// Torus degenerations: the framed surface relation loses its f term
// (exponent 2(g-1) = 0), leaving a direct sum with n central f's.
inline GroupPresentation torus_fp_presentation(int n) {
  detail::check_domain(n >= 1, "torus-fp needs n>=1");
  GroupPresentation p("torus-fp(" + std::to_string(n) + ")", Alphabet::framed_closed(1, n));
  detail::add_band_relators(p, Family::B);
  detail::add_centrality_relators(p, Family::Frame);
  detail::add_surface_relators(p, Family::B, true);
  return p;
}

inline GroupPresentation torus_fp_tilde_presentation(int n) {
  detail::check_domain(n >= 1, "torus-fp-tilde needs n>=1");
  GroupPresentation p("torus-fp-tilde(" + std::to_string(n) + ")",
                      Alphabet::framed_closed(1, n));
  detail::add_band_relators(p, Family::B);
  detail::add_centrality_relators(p, Family::Frame);
  detail::add_surface_relators(p, Family::B, true);
  const Alphabet& alpha = p.alphabet();
  for (int i = 1; i <= 2; ++i) {
    Word w(alpha);
    for (int j = 3; j <= 2 + n; ++j) w = w * Word::generator(alpha, gen_B(i, j));
    p.add_relator(i == 1 ? "QR1" : "QR2", {}, w);
  }
  return p;
}

// Full framed braid group of the closed genus-g surface, modeled on 2n
// strands: generators A_i, B_i (handles), tau_i (pair crossings), F_k
// (framings), with the printed relation list (1)-(10).
inline GroupPresentation fb_tilde_closed_presentation(int g, int n) {
  detail::check_domain(g >= 2 && n >= 1, "fb-tilde needs g>=2, n>=1");
  const Alphabet alpha = Alphabet::fb_tilde(g, n);
  GroupPresentation p("fb-tilde(" + std::to_string(g) + "," + std::to_string(n) + ")",
                      alpha);
  const auto tau = [&](int i, int e = 1) { return Word::generator(alpha, gen_tau(i), e); };
  const auto cap_f = [&](int k, int e = 1) { return Word::generator(alpha, gen_F(k), e); };
  const auto handle = [&](int i, int c, int e = 1) {
    return Word::generator(alpha, c == 1 ? gen_cA(i) : gen_cB(i), e);
  };

  // (1) tau_i F_j = F_j tau_i for j != i, i+1
  for (int i = 1; i + 1 <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      p.add_relator("R1", {i, j}, tau(i) * cap_f(j) * tau(i, -1) * cap_f(j, -1));
    }
  // (2) tau_i F_i = F_{i+1} tau_i
  for (int i = 1; i + 1 <= n; ++i)
    p.add_relator("R2", {i}, tau(i) * cap_f(i) * tau(i, -1) * cap_f(i + 1, -1));
  // (3) tau_i F_{i+1} = F_i tau_i
  for (int i = 1; i + 1 <= n; ++i)
    p.add_relator("R3", {i}, tau(i) * cap_f(i + 1) * tau(i, -1) * cap_f(i, -1));
  // (4) tau_i tau_j = tau_j tau_i for |i-j| >= 2
  for (int i = 1; i + 1 <= n; ++i)
    for (int j = i + 2; j + 1 <= n; ++j)
      p.add_relator("R4", {i, j}, tau(i) * tau(j) * tau(i, -1) * tau(j, -1));
  // (5) tau_i tau_{i+1} tau_i = tau_{i+1} tau_i tau_{i+1}
  for (int i = 1; i + 2 <= n; ++i)
    p.add_relator("R5", {i},
                  tau(i) * tau(i + 1) * tau(i) * tau(i + 1, -1) * tau(i, -1) *
                      tau(i + 1, -1));
  // (6) c_i tau_j = tau_j c_i for j >= 2
  for (int i = 1; i <= g; ++i)
    for (int c = 1; c <= 2; ++c)
      for (int j = 2; j + 1 <= n; ++j)
        p.add_relator("R6", {i, c, j},
                      handle(i, c) * tau(j) * handle(i, c, -1) * tau(j, -1));
  // (7) c_i tau_1 c_i tau_1 = tau_1 c_i tau_1 c_i
  if (n >= 2)
    for (int i = 1; i <= g; ++i)
      for (int c = 1; c <= 2; ++c)
        p.add_relator("R7", {i, c},
                      handle(i, c) * tau(1) * handle(i, c) * tau(1) *
                          (tau(1) * handle(i, c) * tau(1) * handle(i, c)).inverse());
  // (8) A_i tau_1 B_i = tau_1 B_i tau_1 A_i tau_1
  if (n >= 2)
    for (int i = 1; i <= g; ++i)
      p.add_relator("R8", {i},
                    handle(i, 1) * tau(1) * handle(i, 2) *
                        (tau(1) * handle(i, 2) * tau(1) * handle(i, 1) * tau(1)).inverse());
  // (9) c_i tau_1^-1 c_j tau_1 = tau_1^-1 c_j tau_1 c_i for j < i
  if (n >= 2)
    for (int i = 2; i <= g; ++i)
      for (int j = 1; j < i; ++j)
        for (int ci = 1; ci <= 2; ++ci)
          for (int cj = 1; cj <= 2; ++cj)
            p.add_relator("R9", {i, j, ci, cj},
                          handle(i, ci) * tau(1, -1) * handle(j, cj) * tau(1) *
                              (tau(1, -1) * handle(j, cj) * tau(1) * handle(i, ci))
                                  .inverse());
  // (10) prod_i [A_i^-1, B_i] = tau_1 ... tau_{n-2} tau_{n-1}^2 tau_{n-2} ... tau_1 F_1^{2(g-1)}
  {
    Word lhs(alpha);
    for (int i = 1; i <= g; ++i)
      lhs = lhs * Word::commutator(handle(i, 1, -1), handle(i, 2));
    Word rhs(alpha);
    for (int t = 1; t <= n - 2; ++t) rhs = rhs * tau(t);
    if (n >= 2) rhs = rhs * tau(n - 1, 2);
    for (int t = n - 2; t >= 1; --t) rhs = rhs * tau(t);
    rhs = rhs * cap_f(1, 2 * (g - 1));
    p.add_relator("R10", {}, lhs * rhs.inverse());
  }
  return p;
}

}  // namespace braidframe
