#pragma once
// Word-problem oracle for braids on the genus-g surface with one boundary
// component: braids act on the free group of rank 2g+n generated by the
// handle loops a_r, b_r and puncture loops x_s of the once-holed surface
// minus n points.  A braid word maps to a free-group automorphism; the word
// is trivial iff the automorphism fixes every basis element.
//
// The per-generator image words below are the project's central derived
// dataset.  They are pinned by construction-time validation: every relator of
// pure_presentation(g,1,n) must act as the identity, every stored forward /
// backward pair must verify as mutually inverse, and sigma_i^2 must act
// exactly as the band generator linking strands i, i+1.  Construction throws
// on the first violation.

#include <map>
#include <string>

#include "automorphism.hpp"
#include "surface.hpp"

namespace braidframe {

namespace detail {

// Conjugation rows for the band generator with spine index i and puncture
// index j, acting on fiber slot r.  Case split follows the relation families
// of the b=1 presentation, read with the fiber strand appended last.
struct ActionRows {
  const Alphabet& fiber;
  int g2;  // 2g

  Word y(int slot, int e = 1) const {
    return Word::generator(fiber, fiber.slot_generator(slot), e);
  }

  Word forward(int i, int j, int r) const {
    if (r == i) return y(i) * y(j) * y(i) * y(j, -1) * y(i, -1);
    if (r == j) return y(i) * y(j) * y(i, -1);
    if (i < r && r < j) {
      if (r == i + 1 && r % 2 == 0 && r <= g2)
        return y(i) * y(j) * y(i, -1) * y(r) * y(j) * y(i) * y(j, -1) * y(i, -1);
      const Word c = y(i) * y(j) * y(i, -1) * y(j, -1);
      return c * y(r) * c.inverse();
    }
    if (r == i - 1 && r % 2 == 1 && r < g2) return y(r) * y(i) * y(j, -1) * y(i, -1);
    return y(r);
  }

  Word backward(int i, int j, int r) const {
    if (r == i) return y(j, -1) * y(i) * y(j);
    if (r == j) return y(j, -1) * y(i, -1) * y(j) * y(i) * y(j);
    if (i < r && r < j) {
      if (r == i + 1 && r % 2 == 0 && r <= g2)
        return y(j, -1) * y(r) * y(i, -1) * y(j, -1) * y(i) * y(j);
      const Word d = y(j, -1) * y(i, -1) * y(j) * y(i);
      return d * y(r) * d.inverse();
    }
    if (r == i - 1 && r % 2 == 1 && r < g2) return y(r) * y(j);
    return y(r);
  }
};

}  // namespace detail

// Classical band generator of the disk braid group on puncture ordinals
// p < q, as a word in elementary crossings:
//   (sigma_{q-1} ... sigma_{p+1}) sigma_p^2 (sigma_{p+1}^-1 ... sigma_{q-1}^-1)
inline Word band_word(const Alphabet& braid, int p, int q) {
  if (p < 1 || p >= q || q > braid.n) throw braid_error("band ordinals out of range");
  Word w(braid);
  for (int t = q - 1; t >= p + 1; --t) w = w * Word::generator(braid, gen_sigma(t));
  w = w * Word::generator(braid, gen_sigma(p), 2);
  for (int t = p + 1; t <= q - 1; ++t) w = w * Word::generator(braid, gen_sigma(t), -1);
  return w;
}

class ActionTable {
public:
  ActionTable(int g, int n)
      : g_(g),
        n_(n),
        fiber_(Alphabet::free_basis(g, n)),
        pure_(Alphabet::pure(g, 1, n)),
        braid_(Alphabet::surface_braid(g, 1, n)) {
    if (g < 1 || n < 1) throw braid_error("action table needs g>=1, n>=1");
    const detail::ActionRows rows{fiber_, 2 * g_};
    for (const GeneratorId& id : pure_.generators()) {
      Substitution fwd(fiber_), bwd(fiber_);
      for (int r = 1; r <= fiber_.free_rank(); ++r) {
        fwd.set(r, rows.forward(id.i, id.j, r));
        bwd.set(r, rows.backward(id.i, id.j, r));
      }
      table_.emplace(id, FreeAutomorphism(std::move(fwd), std::move(bwd)));
    }
    for (int i = 1; i + 1 <= n_; ++i) {
      Substitution fwd(fiber_), bwd(fiber_);
      const int xi = 2 * g_ + i;
      fwd.set(xi, rows.y(xi) * rows.y(xi + 1) * rows.y(xi, -1));
      fwd.set(xi + 1, rows.y(xi));
      bwd.set(xi, rows.y(xi + 1));
      bwd.set(xi + 1, rows.y(xi + 1, -1) * rows.y(xi) * rows.y(xi + 1));
      table_.emplace(gen_sigma(i), FreeAutomorphism(std::move(fwd), std::move(bwd)));
    }
    validate();
  }

  int g() const { return g_; }
  int n() const { return n_; }
  const Alphabet& fiber_alphabet() const { return fiber_; }
  const Alphabet& pure_alphabet() const { return pure_; }
  const Alphabet& braid_alphabet() const { return braid_; }

  const FreeAutomorphism& generator_action(const GeneratorId& id) const {
    auto it = table_.find(id);
    if (it == table_.end())
      throw braid_error("no action stored for letter " + generator_name(id));
    return it->second;
  }

  FreeAutomorphism word_action(const Word& w) const {
    require_supported(w.alphabet());
    FreeAutomorphism acc = FreeAutomorphism::identity(fiber_);
    for (const Letter& l : w.letters()) {
      const FreeAutomorphism& a = generator_action(l.id);
      acc = acc.then(l.sign > 0 ? a : a.inverse());
    }
    return acc;
  }

  bool is_trivial(const Word& w) const { return word_action(w).is_identity(); }

  bool are_equal(const Word& u, const Word& v) const {
    return is_trivial(u * v.inverse());
  }

private:
  void require_supported(const Alphabet& a) const {
    const bool kind_ok =
        a.kind == Alphabet::Kind::Pure || a.kind == Alphabet::Kind::SurfaceBraid;
    if (!kind_ok || a.g != g_ || a.b != 1 || a.n != n_)
      throw braid_error("word alphabet not supported by this action table");
  }

  void validate() const {
    const GroupPresentation p = pure_presentation(g_, 1, n_);
    for (const Relator& rel : p.relators())
      if (!is_trivial(rel.word))
        throw braid_error("action table rejected: relator " + rel.label() +
                          " does not act as the identity");
    for (int i = 1; i + 1 <= n_; ++i) {
      const Word sq = Word::generator(braid_, gen_sigma(i), 2);
      if (!(word_action(sq) == generator_action(gen_A(2 * g_ + i, 2 * g_ + i + 1))))
        throw braid_error(
            "action table rejected: sigma^2 differs from the band generator at strand " +
            std::to_string(i));
    }
  }

  int g_, n_;
  Alphabet fiber_, pure_, braid_;
  std::map<GeneratorId, FreeAutomorphism> table_;
};

inline FreeAutomorphism braid_automorphism(const ActionTable& t, const Word& w) {
  return t.word_action(w);
}

}  // namespace braidframe
