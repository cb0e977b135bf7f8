#pragma once
// Freely reduced words over a fixed alphabet.  A Word is an immutable value:
// every constructor reduces eagerly, so equality of free-group elements is
// structural equality of the letter sequences.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "alphabet.hpp"

namespace braidframe {

struct Letter {
  GeneratorId id;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {id, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

class Word {
public:
  explicit Word(Alphabet alpha) : alpha_(alpha) {}

  static Word from_letters(Alphabet alpha, const std::vector<Letter>& letters) {
    Word w(alpha);
    for (const Letter& l : letters) w.push(l);
    return w;
  }

  static Word generator(Alphabet alpha, GeneratorId id, int exponent = 1) {
    alpha.require(id);
    Word w(alpha);
    const int sign = exponent >= 0 ? 1 : -1;
    for (int t = 0; t != exponent; t += sign) w.push({id, sign});
    return w;
  }

  const Alphabet& alphabet() const { return alpha_; }
  const std::vector<Letter>& letters() const { return ls_; }
  std::size_t length() const { return ls_.size(); }
  bool empty() const { return ls_.empty(); }

  friend bool operator==(const Word& l, const Word& r) {
    return l.alpha_ == r.alpha_ && l.ls_ == r.ls_;
  }

  Word operator*(const Word& rhs) const {
    check_same_alphabet(rhs);
    Word w = *this;
    for (const Letter& l : rhs.ls_) w.push(l);
    return w;
  }

  Word inverse() const {
    Word w(alpha_);
    w.ls_.reserve(ls_.size());
    for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) w.ls_.push_back(it->inverse());
    return w;  // reversal of a reduced word is reduced
  }

  Word pow(int k) const {
    Word acc(alpha_);
    const Word base = k >= 0 ? *this : inverse();
    for (int t = std::abs(k); t > 0; --t) acc = acc * base;
    return acc;
  }

  // w^-1 * this * w
  Word conjugated_by(const Word& w) const { return w.inverse() * *this * w; }

  // [u, v] = u^-1 v^-1 u v
  static Word commutator(const Word& u, const Word& v) {
    return u.inverse() * v.inverse() * u * v;
  }

  long long exponent_sum(const GeneratorId& id) const {
    long long s = 0;
    for (const Letter& l : ls_)
      if (l.id == id) s += l.sign;
    return s;
  }

  std::map<GeneratorId, long long> exponent_sums() const {
    std::map<GeneratorId, long long> m;
    for (const Letter& l : ls_) m[l.id] += l.sign;
    return m;
  }

  Word cyclically_reduced() const {
    Word w = *this;
    while (w.ls_.size() >= 2 && w.ls_.front() == w.ls_.back().inverse()) {
      w.ls_.erase(w.ls_.begin());
      w.ls_.pop_back();
    }
    return w;
  }

private:
  void check_same_alphabet(const Word& other) const {
    if (!(alpha_ == other.alpha_))
      throw braid_error("cannot combine words over different alphabets");
  }

  void push(const Letter& l) {
    alpha_.require(l.id);
    if (l.sign != 1 && l.sign != -1) throw braid_error("letter sign must be +1 or -1");
    if (!ls_.empty() && ls_.back() == l.inverse())
      ls_.pop_back();
    else
      ls_.push_back(l);
  }

  Alphabet alpha_;
  std::vector<Letter> ls_;
};

// Convenience: product of a list of words (identity for an empty list).
inline Word product(Alphabet alpha, const std::vector<Word>& ws) {
  Word acc(alpha);
  for (const Word& w : ws) acc = acc * w;
  return acc;
}

}  // namespace braidframe
