#pragma once
// Generator families and parametrized alphabets for surface braid groups.
//
// Index scheme (shared by every alphabet here): on a genus-g surface with b
// boundary components and n strands, the "spine" indices 1..2g name the handle
// curves (odd = b-type, even = a-type), 2g+1..2g+b-1 name interior boundary
// curves, and punctures occupy the last n indices.  first_puncture() is the
// single source of truth for the puncture offset; q(j) converts an index to a
// strand number.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace braidframe {

class braid_error : public std::runtime_error {
public:
  explicit braid_error(const std::string& msg) : std::runtime_error(msg) {}
};

enum class Family : std::uint8_t {
  A,         // two-index band generators of pure braid groups
  B,         // two-index generators of framed closed-surface groups
  C,         // two-index doubled-pair generators inside a 2n-strand group
  Frame,     // f_k, framing generator of a framed pure group
  CapFrame,  // F_k, framing generator of the 2n-strand framed model
  Sigma,     // sigma_i, elementary crossing
  Tau,       // tau_i, pair crossing of the 2n-strand framed model
  CapA,      // A_i, handle generator of the 2n-strand framed model
  CapB,      // B_i, handle generator of the 2n-strand framed model
  X,         // x_s, puncture loop of a free fiber basis
  LowerA,    // a_r, handle loop of a free fiber basis
  LowerB,    // b_r, handle loop of a free fiber basis
};

constexpr bool two_index(Family f) {
  return f == Family::A || f == Family::B || f == Family::C;
}

inline const char* family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::Frame: return "f";
    case Family::CapFrame: return "F";
    case Family::Sigma: return "sigma";
    case Family::Tau: return "tau";
    case Family::CapA: return "cA";
    case Family::CapB: return "cB";
    case Family::X: return "x";
    case Family::LowerA: return "a";
    case Family::LowerB: return "b";
  }
  return "?";
}

inline std::optional<Family> family_from_name(std::string_view s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "f") return Family::Frame;
  if (s == "F") return Family::CapFrame;
  if (s == "sigma") return Family::Sigma;
  if (s == "tau") return Family::Tau;
  if (s == "cA") return Family::CapA;
  if (s == "cB") return Family::CapB;
  if (s == "x") return Family::X;
  if (s == "a") return Family::LowerA;
  if (s == "b") return Family::LowerB;
  return std::nullopt;
}

struct GeneratorId {
  Family fam{Family::A};
  int i = 0;
  int j = 0;  // 0 for one-index families

  friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
  friend auto operator<=>(const GeneratorId& l, const GeneratorId& r) {
    return std::tie(l.fam, l.i, l.j) <=> std::tie(r.fam, r.i, r.j);
  }
};

inline GeneratorId gen_A(int i, int j) { return {Family::A, i, j}; }
inline GeneratorId gen_B(int i, int j) { return {Family::B, i, j}; }
inline GeneratorId gen_f(int k) { return {Family::Frame, k, 0}; }
inline GeneratorId gen_F(int k) { return {Family::CapFrame, k, 0}; }
inline GeneratorId gen_sigma(int i) { return {Family::Sigma, i, 0}; }
inline GeneratorId gen_tau(int i) { return {Family::Tau, i, 0}; }
inline GeneratorId gen_cA(int i) { return {Family::CapA, i, 0}; }
inline GeneratorId gen_cB(int i) { return {Family::CapB, i, 0}; }

inline std::string generator_name(const GeneratorId& g) {
  std::string s = family_name(g.fam);
  s += '[';
  s += std::to_string(g.i);
  if (two_index(g.fam)) {
    s += ',';
    s += std::to_string(g.j);
  }
  s += ']';
  return s;
}

// A parametrized alphabet: which letters are words allowed to use.
struct Alphabet {
  enum class Kind {
    Pure,          // A_{i,j}; surface with b boundary components (b=0: closed)
    Framed,        // B_{i,j} and f_k; b=0 is the closed surface, b>=1 has boundary
    FbTilde,       // cA_i, cB_i, tau_i, F_k; 2n-strand framed model
    FreeBasis,     // a_r, b_r, x_s; fiber of the point-forgetting fibration
    SurfaceBraid,  // A_{i,j} plus sigma_i; full surface braid group letters
    Any,           // permissive: every family, minimal index checks
  };

  Kind kind = Kind::Any;
  int g = 0;
  int b = 0;
  int n = 0;

  static Alphabet pure(int g, int b, int n) { return {Kind::Pure, g, b, n}; }
  static Alphabet framed_closed(int g, int n) { return {Kind::Framed, g, 0, n}; }
  static Alphabet framed_pure(int g, int b, int n) { return {Kind::Framed, g, b, n}; }
  static Alphabet fb_tilde(int g, int n) { return {Kind::FbTilde, g, 0, n}; }
  static Alphabet free_basis(int g, int n) { return {Kind::FreeBasis, g, 0, n}; }
  static Alphabet surface_braid(int g, int b, int n) { return {Kind::SurfaceBraid, g, b, n}; }
  static Alphabet any() { return {Kind::Any, 0, 0, 0}; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

  // Index of the first puncture; valid for the index-carrying kinds.
  int first_puncture() const { return 2 * g + (b > 0 ? b : 1); }
  int last_index() const { return first_puncture() + n - 1; }
  // Strand number of puncture index j (1-based).
  int q(int j) const { return j - first_puncture() + 1; }
  bool is_puncture_index(int idx) const {
    return idx >= first_puncture() && idx <= last_index();
  }
  bool is_handle_index(int idx) const { return idx >= 1 && idx <= 2 * g; }

  int free_rank() const {  // FreeBasis only
    return 2 * g + n;
  }

  bool valid(const GeneratorId& id) const {
    const auto band_ok = [&](int lo_j) {
      return id.i >= 1 && id.i < id.j && id.j >= lo_j && id.j <= last_index();
    };
    switch (kind) {
      case Kind::Pure:
        return id.fam == Family::A && band_ok(first_puncture());
      case Kind::Framed:
        if (id.fam == Family::B) return band_ok(first_puncture());
        if (id.fam == Family::Frame) return id.i >= 1 && id.i <= n;
        return false;
      case Kind::FbTilde:
        switch (id.fam) {
          case Family::CapA:
          case Family::CapB: return id.i >= 1 && id.i <= g;
          case Family::Tau: return id.i >= 1 && id.i <= n - 1;
          case Family::CapFrame: return id.i >= 1 && id.i <= n;
          default: return false;
        }
      case Kind::FreeBasis:
        switch (id.fam) {
          case Family::LowerA:
          case Family::LowerB: return id.i >= 1 && id.i <= g;
          case Family::X: return id.i >= 1 && id.i <= n;
          default: return false;
        }
      case Kind::SurfaceBraid:
        if (id.fam == Family::A) return band_ok(first_puncture());
        if (id.fam == Family::Sigma) return id.i >= 1 && id.i <= n - 1;
        return false;
      case Kind::Any:
        if (two_index(id.fam)) return id.i >= 1 && id.j > id.i;
        return id.i >= 1;
    }
    return false;
  }

  void require(const GeneratorId& id) const {
    if (!valid(id))
      throw braid_error("letter " + generator_name(id) + " is not in this alphabet");
  }

  // Canonical generator enumeration for the presentation-bearing kinds.
  std::vector<GeneratorId> generators() const {
    std::vector<GeneratorId> out;
    switch (kind) {
      case Kind::Pure:
        for (int i = 1; i < last_index(); ++i)
          for (int j = std::max(i + 1, first_puncture()); j <= last_index(); ++j)
            out.push_back(gen_A(i, j));
        break;
      case Kind::Framed:
        for (int i = 1; i < last_index(); ++i)
          for (int j = std::max(i + 1, first_puncture()); j <= last_index(); ++j)
            out.push_back(gen_B(i, j));
        for (int k = 1; k <= n; ++k) out.push_back(gen_f(k));
        break;
      case Kind::FbTilde:
        for (int i = 1; i <= g; ++i) {
          out.push_back(gen_cA(i));
          out.push_back(gen_cB(i));
        }
        for (int i = 1; i + 1 <= n; ++i) out.push_back(gen_tau(i));
        for (int k = 1; k <= n; ++k) out.push_back(gen_F(k));
        break;
      case Kind::FreeBasis:
        for (int r = 1; r <= g; ++r) {
          out.push_back({Family::LowerA, r, 0});
          out.push_back({Family::LowerB, r, 0});
        }
        for (int s = 1; s <= n; ++s) out.push_back({Family::X, s, 0});
        break;
      case Kind::SurfaceBraid:
        for (int i = 1; i < last_index(); ++i)
          for (int j = std::max(i + 1, first_puncture()); j <= last_index(); ++j)
            out.push_back(gen_A(i, j));
        for (int i = 1; i + 1 <= n; ++i) out.push_back(gen_sigma(i));
        break;
      case Kind::Any:
        throw braid_error("the permissive alphabet has no generator enumeration");
    }
    return out;
  }

  // FreeBasis slot numbering: slot 2r-1 = b_r, slot 2r = a_r, slot 2g+s = x_s.
  // Odd slots are the b-type curves; this matches the parity convention of the
  // band generators (odd spine index = b-type).
  GeneratorId slot_generator(int slot) const {
    if (slot < 1 || slot > free_rank())
      throw braid_error("fiber slot " + std::to_string(slot) + " out of range");
    if (slot <= 2 * g) {
      if (slot % 2 == 1) return {Family::LowerB, (slot + 1) / 2, 0};
      return {Family::LowerA, slot / 2, 0};
    }
    return {Family::X, slot - 2 * g, 0};
  }

  int slot_of(const GeneratorId& id) const {
    require(id);
    switch (id.fam) {
      case Family::LowerB: return 2 * id.i - 1;
      case Family::LowerA: return 2 * id.i;
      case Family::X: return 2 * g + id.i;
      default:
        throw braid_error(generator_name(id) + " is not a fiber basis letter");
    }
  }
};

}  // namespace braidframe
