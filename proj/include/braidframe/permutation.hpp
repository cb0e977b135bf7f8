#pragma once
// Permutations on {1..n}, composed left to right: (p * q)(k) = q(p(k)).

#include <numeric>
#include <string>
#include <vector>

#include "alphabet.hpp"

namespace braidframe {

class Permutation {
public:
  explicit Permutation(int n = 0) : img_(static_cast<std::size_t>(n)) {
    std::iota(img_.begin(), img_.end(), 1);
  }

  static Permutation identity(int n) { return Permutation(n); }

  static Permutation transposition(int n, int i) {
    if (i < 1 || i + 1 > n) throw braid_error("transposition index out of range");
    Permutation p(n);
    std::swap(p.img_[static_cast<std::size_t>(i) - 1], p.img_[static_cast<std::size_t>(i)]);
    return p;
  }

  static Permutation from_images(std::vector<int> images) {
    Permutation p;
    p.img_ = std::move(images);
    std::vector<bool> seen(p.img_.size(), false);
    for (int v : p.img_) {
      if (v < 1 || v > static_cast<int>(p.img_.size()) || seen[static_cast<std::size_t>(v) - 1])
        throw braid_error("image array is not a permutation");
      seen[static_cast<std::size_t>(v) - 1] = true;
    }
    return p;
  }

  int size() const { return static_cast<int>(img_.size()); }

  int apply(int k) const {
    if (k < 1 || k > size()) throw braid_error("permutation argument out of range");
    return img_[static_cast<std::size_t>(k) - 1];
  }

  Permutation operator*(const Permutation& rhs) const {
    if (size() != rhs.size()) throw braid_error("permutation size mismatch");
    Permutation out(size());
    for (int k = 1; k <= size(); ++k)
      out.img_[static_cast<std::size_t>(k) - 1] = rhs.apply(apply(k));
    return out;
  }

  Permutation inverse() const {
    Permutation out(size());
    for (int k = 1; k <= size(); ++k) out.img_[static_cast<std::size_t>(apply(k)) - 1] = k;
    return out;
  }

  bool is_identity() const {
    for (int k = 1; k <= size(); ++k)
      if (apply(k) != k) return false;
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& l, const Permutation& r) {
    return l.img_ <=> r.img_;
  }

  const std::vector<int>& images() const { return img_; }

  std::string cycle_string() const {
    std::string out;
    std::vector<bool> seen(img_.size(), false);
    for (int k = 1; k <= size(); ++k) {
      if (seen[static_cast<std::size_t>(k) - 1] || apply(k) == k) continue;
      out += '(';
      int c = k;
      bool first = true;
      while (!seen[static_cast<std::size_t>(c) - 1]) {
        seen[static_cast<std::size_t>(c) - 1] = true;
        if (!first) out += ' ';
        out += std::to_string(c);
        first = false;
        c = apply(c);
      }
      out += ')';
    }
    return out.empty() ? "id" : out;
  }

private:
  std::vector<int> img_;
};

}  // namespace braidframe
