#pragma once
// Free group endomorphisms given by substitution on a slot-indexed basis, and
// automorphisms as verified forward/backward substitution pairs.
//
// Composition is written left to right throughout: (phi.then(psi))(x) is
// psi(phi(x)), matching word multiplication u*v = "u first, then v".

#include <utility>
#include <vector>

#include "word.hpp"

namespace braidframe {

class Substitution {
public:
  explicit Substitution(Alphabet alpha) : alpha_(alpha) {
    if (alpha_.kind != Alphabet::Kind::FreeBasis)
      throw braid_error("substitutions act on a free fiber basis alphabet");
    const int n = alpha_.free_rank();
    images_.reserve(n);
    for (int s = 1; s <= n; ++s)
      images_.push_back(Word::generator(alpha_, alpha_.slot_generator(s)));
  }

  const Alphabet& alphabet() const { return alpha_; }

  void set(int slot, Word image) {
    if (!(image.alphabet() == alpha_)) throw braid_error("substitution image alphabet mismatch");
    images_.at(static_cast<std::size_t>(slot - 1)) = std::move(image);
  }

  const Word& image(int slot) const {
    return images_.at(static_cast<std::size_t>(slot - 1));
  }

  Word apply(const Word& w) const {
    if (!(w.alphabet() == alpha_)) throw braid_error("substitution argument alphabet mismatch");
    Word out(alpha_);
    for (const Letter& l : w.letters()) {
      const Word& im = image(alpha_.slot_of(l.id));
      out = out * (l.sign > 0 ? im : im.inverse());
    }
    return out;
  }

  // this first, then next
  Substitution then(const Substitution& next) const {
    Substitution out(alpha_);
    for (int s = 1; s <= alpha_.free_rank(); ++s)
      out.set(s, next.apply(image(s)));
    return out;
  }

  bool is_identity() const {
    for (int s = 1; s <= alpha_.free_rank(); ++s) {
      const Word& im = image(s);
      if (im.length() != 1) return false;
      const Letter& l = im.letters()[0];
      if (l.sign != 1 || !(l.id == alpha_.slot_generator(s))) return false;
    }
    return true;
  }

  friend bool operator==(const Substitution& x, const Substitution& y) {
    return x.alpha_ == y.alpha_ && x.images_ == y.images_;
  }

private:
  Alphabet alpha_;
  std::vector<Word> images_;  // slot s at index s-1
};

class FreeAutomorphism {
public:
  FreeAutomorphism(Substitution fwd, Substitution bwd)
      : fwd_(std::move(fwd)), bwd_(std::move(bwd)) {
    if (!(fwd_.alphabet() == bwd_.alphabet()))
      throw braid_error("automorphism alphabet mismatch");
    verify_inverse_pair();
  }

  static FreeAutomorphism identity(const Alphabet& alpha) {
    Substitution s(alpha);
    return FreeAutomorphism(s, s, unchecked{});
  }

  const Alphabet& alphabet() const { return fwd_.alphabet(); }
  const Substitution& forward() const { return fwd_; }
  const Substitution& backward() const { return bwd_; }

  Word apply(const Word& w) const { return fwd_.apply(w); }
  Word apply_inverse(const Word& w) const { return bwd_.apply(w); }

  // this first, then next.  A composition of verified pairs is again a
  // verified pair, so no re-check is needed.
  FreeAutomorphism then(const FreeAutomorphism& next) const {
    return FreeAutomorphism(fwd_.then(next.fwd_), next.bwd_.then(bwd_), unchecked{});
  }

  FreeAutomorphism inverse() const {
    return FreeAutomorphism(bwd_, fwd_, unchecked{});
  }

  bool is_identity() const { return fwd_.is_identity(); }

  void verify_inverse_pair() const {
    const Alphabet& alpha = fwd_.alphabet();
    for (int s = 1; s <= alpha.free_rank(); ++s) {
      const Word basis = Word::generator(alpha, alpha.slot_generator(s));
      if (!(bwd_.apply(fwd_.image(s)) == basis))
        throw braid_error("not an inverse pair: backward(forward(" +
                          generator_name(alpha.slot_generator(s)) + ")) != identity");
      if (!(fwd_.apply(bwd_.image(s)) == basis))
        throw braid_error("not an inverse pair: forward(backward(" +
                          generator_name(alpha.slot_generator(s)) + ")) != identity");
    }
  }

  // backward images are determined by the forward ones
  friend bool operator==(const FreeAutomorphism& x, const FreeAutomorphism& y) {
    return x.fwd_ == y.fwd_;
  }

private:
  struct unchecked {};
  FreeAutomorphism(Substitution fwd, Substitution bwd, unchecked)
      : fwd_(std::move(fwd)), bwd_(std::move(bwd)) {}

  Substitution fwd_;
  Substitution bwd_;
};

}  // namespace braidframe
