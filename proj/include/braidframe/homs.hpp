#pragma once

// Homomorphisms between the presented groups, given by generator image
// tables, plus the audit machinery that checks well-definedness: every
// relator of the source must map to a trivial word of the target.
//
// Triviality of the image is decided by a pluggable checker.  Oracle and
// string-identity checkers are complete on their domains; abelianization
// and permutation checkers are sound only, so a passing audit downgrades
// the verdict to "consistent" instead of "verified".

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "alphabet.hpp"
#include "framed.hpp"
#include "matrix.hpp"
#include "oracle.hpp"
#include "permutation.hpp"
#include "presentation.hpp"
#include "surface.hpp"
#include "word.hpp"

namespace braidframe {

class GroupHom {
 public:
  GroupHom(std::string name, GroupPresentation source, Alphabet target_alphabet)
      : name_(std::move(name)),
        source_(std::move(source)),
        target_alphabet_(target_alphabet) {}

  GroupHom(std::string name, GroupPresentation source, GroupPresentation target)
      : name_(std::move(name)),
        source_(std::move(source)),
        target_alphabet_(target.alphabet()),
        target_(std::move(target)) {}

  const std::string& name() const { return name_; }
  const GroupPresentation& source() const { return source_; }
  const Alphabet& target_alphabet() const { return target_alphabet_; }
  bool has_target_presentation() const { return target_.has_value(); }
  const GroupPresentation& target() const {
    if (!target_) throw braid_error(name_ + ": no target presentation on record");
    return *target_;
  }

  bool experimental() const { return experimental_; }
  void set_experimental(bool flag) { experimental_ = flag; }

  // Space-separated CLI arguments reproducing this hom, e.g. "chi 2 2".
  const std::string& repro() const { return repro_; }
  void set_repro(std::string r) { repro_ = std::move(r); }

  void set_image(const GeneratorId& id, Word image) {
    source_.alphabet().require(id);
    if (!(image.alphabet() == target_alphabet_))
      throw braid_error(name_ + ": image of " + generator_name(id) +
                        " lives in the wrong alphabet");
    images_.insert_or_assign(id, std::move(image));
  }

  const Word& image_of(const GeneratorId& id) const {
    auto it = images_.find(id);
    if (it == images_.end())
      throw braid_error(name_ + ": no image for " + generator_name(id));
    return it->second;
  }

  Word apply(const Word& w) const {
    Word out(target_alphabet_);
    for (const Letter& l : w.letters()) {
      const Word& img = image_of(l.id);
      out = out * (l.sign < 0 ? img.inverse() : img);
    }
    return out;
  }

  void require_total() const {
    for (const GeneratorId& id : source_.generators()) image_of(id);
  }

 private:
  std::string name_;
  GroupPresentation source_;
  Alphabet target_alphabet_;
  std::optional<GroupPresentation> target_;
  std::map<GeneratorId, Word> images_;
  std::string repro_;
  bool experimental_ = false;
};

enum class Checker { Oracle, Abelianization, Permutation, StringIdentity };

inline bool checker_is_complete(Checker c) {
  return c == Checker::Oracle || c == Checker::StringIdentity;
}

inline const char* checker_name(Checker c) {
  switch (c) {
    case Checker::Oracle: return "oracle";
    case Checker::Abelianization: return "abelianization";
    case Checker::Permutation: return "permutation";
    case Checker::StringIdentity: return "string-identity";
  }
  return "?";
}

inline std::optional<Checker> checker_from_name(std::string_view s) {
  if (s == "oracle") return Checker::Oracle;
  if (s == "abelianization") return Checker::Abelianization;
  if (s == "permutation") return Checker::Permutation;
  if (s == "string-identity") return Checker::StringIdentity;
  return std::nullopt;
}

struct AuditCheck {
  std::string name;
  bool passed = false;
  std::string witness;  // serialized offending image, empty when passed
  std::string command;  // follow-up command reproducing the failure
};

struct AuditReport {
  std::string hom;
  std::string checker;
  bool checker_complete = false;
  bool experimental = false;
  std::vector<AuditCheck> checks;

  int checked() const { return static_cast<int>(checks.size()); }

  std::vector<AuditCheck> failures() const {
    std::vector<AuditCheck> out;
    for (const AuditCheck& c : checks)
      if (!c.passed) out.push_back(c);
    return out;
  }

  std::string verdict() const {
    for (const AuditCheck& c : checks)
      if (!c.passed) return "refuted";
    return checker_complete ? "verified" : "consistent";
  }
};

namespace detail {

// Letter-for-letter family swap between the A and B band alphabets.
inline Word relabel_bands(const Word& w, const Alphabet& out_alpha, Family from,
                          Family to) {
  std::vector<Letter> out;
  out.reserve(w.letters().size());
  for (const Letter& l : w.letters()) {
    if (l.id.fam != from)
      throw braid_error("relabel: unexpected letter " + generator_name(l.id));
    out.push_back({{to, l.id.i, l.id.j}, l.sign});
  }
  return Word::from_letters(out_alpha, out);
}

// Drop frame letters and relabel bands to A over the matching pure alphabet.
inline Word framed_to_pure(const Word& w, const Alphabet& pure_alpha) {
  std::vector<Letter> out;
  for (const Letter& l : w.letters()) {
    if (l.id.fam == Family::Frame) continue;
    if (l.id.fam != Family::B)
      throw braid_error("framed word has unexpected letter " +
                        generator_name(l.id));
    out.push_back({{Family::A, l.id.i, l.id.j}, l.sign});
  }
  return Word::from_letters(pure_alpha, out);
}

inline void run_chunked(int total, int jobs,
                        const std::function<void(int)>& body) {
  if (jobs <= 1 || total <= 1) {
    for (int i = 0; i < total; ++i) body(i);
    return;
  }
  const int workers = std::min(jobs, total);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < total; i += workers) body(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace detail

// Checks that every source relator maps to a trivial target word.  The
// checker must fit the target: oracle needs a one-boundary surface,
// abelianization and string-identity need a presented target.
inline AuditReport hom_audit(const GroupHom& h, Checker checker, int jobs = 1) {
  h.require_total();
  const Alphabet& ta = h.target_alphabet();

  AuditReport rep;
  rep.hom = h.name();
  rep.checker = checker_name(checker);
  rep.checker_complete = checker_is_complete(checker);
  rep.experimental = h.experimental();

  std::optional<ActionTable> table;
  std::optional<SmithResult> snf;
  std::vector<Word> target_relator_words;

  switch (checker) {
    case Checker::Oracle:
      if (ta.b != 1 || (ta.kind != Alphabet::Kind::Pure &&
                        ta.kind != Alphabet::Kind::SurfaceBraid &&
                        ta.kind != Alphabet::Kind::Framed))
        throw braid_error("oracle checker needs a one-boundary target");
      table.emplace(ta.g, ta.n);
      break;
    case Checker::Abelianization:
      snf = smith_normal_form(h.target().abelianization_matrix());
      break;
    case Checker::Permutation:
      break;
    case Checker::StringIdentity:
      for (const Relator& r : h.target().relators())
        target_relator_words.push_back(r.word);
      break;
  }

  const auto& relators = h.source().relators();
  const int total = static_cast<int>(relators.size());
  rep.checks.resize(total);

  auto check_one = [&](int idx) {
    const Relator& rel = relators[idx];
    const Word img = h.apply(rel.word);
    AuditCheck out;
    out.name = rel.label();
    out.passed = true;
    switch (checker) {
      case Checker::Oracle: {
        if (ta.kind == Alphabet::Kind::Framed) {
          bool framing_ok = true;
          for (int k = 1; k <= ta.n && framing_ok; ++k)
            framing_ok = img.exponent_sum(gen_f(k)) == 0;
          const Word pure = detail::framed_to_pure(img, table->pure_alphabet());
          out.passed = framing_ok && table->is_trivial(pure);
          if (!out.passed) {
            out.witness = format_word(img);
            out.command = framing_ok
                              ? "braidframe equal " + std::to_string(ta.g) + " " +
                                    std::to_string(ta.n) + " \"" +
                                    format_word(pure) + "\" 1"
                              : "braidframe reduce \"" + format_word(img) + "\"";
          }
        } else {
          out.passed = table->is_trivial(img);
          if (!out.passed) {
            out.witness = format_word(img);
            out.command = "braidframe equal " + std::to_string(ta.g) + " " +
                          std::to_string(ta.n) + " \"" + format_word(img) +
                          "\" 1";
          }
        }
        break;
      }
      case Checker::Abelianization: {
        out.passed = in_row_space(*snf, h.target().abelianized(img));
        if (!out.passed) {
          out.witness = format_word(img);
          out.command = "braidframe audit " + h.repro() +
                        " --checker=abelianization";
        }
        break;
      }
      case Checker::Permutation: {
        out.passed = permutation_of(img, ta.n).is_identity();
        if (!out.passed) {
          out.witness = format_word(img);
          out.command = "braidframe perm " + std::to_string(ta.n) + " \"" +
                        format_word(img) + "\"";
        }
        break;
      }
      case Checker::StringIdentity: {
        bool ok = img.empty();
        for (size_t t = 0; !ok && t < target_relator_words.size(); ++t)
          ok = img == target_relator_words[t] ||
               img == target_relator_words[t].inverse();
        out.passed = ok;
        if (!ok) {
          out.witness = format_word(img);
          out.command = "braidframe reduce \"" + format_word(img) + "\"";
        }
        break;
      }
    }
    rep.checks[idx] = std::move(out);
  };

  detail::run_chunked(total, jobs, check_one);
  return rep;
}

// Kills the framing: B_{i,j} goes to A_{i,j} and every f_k to the empty
// word.  Sends each framed surface relator to the matching unframed one
// on the nose, so the string-identity audit verifies it.
inline GroupHom beta_forget_framing(int g, int n) {
  GroupPresentation src = fp_closed_presentation(g, n);
  GroupPresentation tgt = closed_pure_presentation(g, n);
  const Alphabet ta = tgt.alphabet();
  GroupHom h("beta(" + std::to_string(g) + "," + std::to_string(n) + ")",
             std::move(src), std::move(tgt));
  h.set_repro("beta " + std::to_string(g) + " " + std::to_string(n));
  for (const GeneratorId& id : h.source().generators()) {
    if (id.fam == Family::Frame)
      h.set_image(id, Word(ta));
    else
      h.set_image(id, Word::generator(ta, gen_A(id.i, id.j)));
  }
  return h;
}

// Doubles every framed strand into a parallel pair: the framed group on n
// strands embeds into the pure group on 2n strands.  Source puncture
// 2g+q becomes the strand pair (2g+2q-1, 2g+2q); a framing generator
// becomes the band around its pair.
inline GroupHom chi_doubling(int g, int n) {
  GroupPresentation src = fp_closed_presentation(g, n);
  GroupPresentation tgt = closed_pure_presentation(g, 2 * n);
  const Alphabet ta = tgt.alphabet();
  GroupHom h("chi(" + std::to_string(g) + "," + std::to_string(n) + ")",
             std::move(src), std::move(tgt));
  h.set_repro("chi " + std::to_string(g) + " " + std::to_string(n));

  const auto band = [&](int i, int j) {
    return Word::generator(ta, gen_A(i, j));
  };
  const auto lo = [&](int q) { return 2 * g + 2 * q - 1; };  // pair of puncture q
  const auto hi = [&](int q) { return 2 * g + 2 * q; };

  for (const GeneratorId& id : h.source().generators()) {
    if (id.fam == Family::Frame) {
      const int k = id.i;
      h.set_image(id, band(lo(k), hi(k)));
      continue;
    }
    const int j = id.j;
    const int q = j - 2 * g;
    if (id.i <= 2 * g) {
      const int i = id.i;
      h.set_image(id, band(i, lo(q)) * band(i, hi(q)) * band(lo(q), hi(q)));
    } else {
      const int p = id.i - 2 * g;
      h.set_image(id, band(lo(p), lo(q)) * band(hi(p), lo(q)) *
                          band(lo(p), hi(q)) * band(hi(p), hi(q)) *
                          band(lo(q), hi(q)));
    }
  }
  return h;
}

// Forgets the first m strands of a framed pure group; b = 0 is the
// closed surface.  Framing entries of forgotten strands are dropped and
// the remaining punctures slide down by m.
inline GroupHom alpha_forget_framed(int g, int b, int n, int m) {
  detail::check_domain(n >= 1 && m >= 1, "alpha needs n>=1 and m>=1");
  GroupPresentation src = (b == 0) ? fp_closed_presentation(g, n + m)
                                   : fp_boundary_presentation(g, b, n + m);
  GroupPresentation tgt = (b == 0) ? fp_closed_presentation(g, n)
                                   : fp_boundary_presentation(g, b, n);
  const Alphabet ta = tgt.alphabet();
  const Alphabet src_pure = Alphabet::pure(g, b, n + m);
  GroupHom h("alpha(" + std::to_string(g) + "," + std::to_string(b) + "," +
                 std::to_string(n) + "," + std::to_string(m) + ")",
             std::move(src), std::move(tgt));
  h.set_repro("alpha " + std::to_string(g) + " " + std::to_string(b) + " " +
              std::to_string(n) + " " + std::to_string(m));

  std::set<int> first;
  for (int c = 1; c <= m; ++c) first.insert(c);

  for (const GeneratorId& id : h.source().generators()) {
    if (id.fam == Family::Frame) {
      const int k = id.i;
      h.set_image(id, k <= m ? Word(ta) : Word::generator(ta, gen_f(k - m)));
      continue;
    }
    const Word aw = Word::generator(src_pure, gen_A(id.i, id.j));
    const Word fw = forget_strands(aw, first);
    h.set_image(id, detail::relabel_bands(fw, ta, Family::A, Family::B));
  }
  return h;
}

// Section of alpha: adds m trivially framed strands in front.  With
// boundary the new strands sit next to the boundary and every image is a
// single shifted generator.  On a closed surface there is no such spot;
// the candidate images cable the first new strands by the doubling
// pattern and ship flagged experimental.
inline GroupHom iota_section(int g, int b, int n, int m) {
  detail::check_domain(n >= 1 && m >= 1, "iota needs n>=1 and m>=1");
  GroupPresentation src = (b == 0) ? fp_closed_presentation(g, n)
                                   : fp_boundary_presentation(g, b, n);
  GroupPresentation tgt = (b == 0) ? fp_closed_presentation(g, n + m)
                                   : fp_boundary_presentation(g, b, n + m);
  const Alphabet ta = tgt.alphabet();
  const int fp = (b == 0) ? 2 * g + 1 : Alphabet::pure(g, b, n).first_puncture();
  GroupHom h("iota(" + std::to_string(g) + "," + std::to_string(b) + "," +
                 std::to_string(n) + "," + std::to_string(m) + ")",
             std::move(src), std::move(tgt));
  h.set_repro("iota " + std::to_string(g) + " " + std::to_string(b) + " " +
              std::to_string(n) + " " + std::to_string(m));

  const auto band = [&](int i, int j) {
    return Word::generator(ta, gen_B(i, j));
  };
  // Bands among the m+1 strands of the cable, in lexicographic order.
  const auto cable_bands = [&]() {
    Word w(ta);
    for (int c = 1; c <= m; ++c)
      for (int cc = c + 1; cc <= m + 1; ++cc)
        w = w * band(fp + c - 1, fp + cc - 1);
    return w;
  };

  for (const GeneratorId& id : h.source().generators()) {
    if (id.fam == Family::Frame) {
      const int k = id.i;
      if (b > 0 || k >= 2) {
        h.set_image(id, Word::generator(ta, gen_f(k + m)));
      } else {
        Word w = cable_bands();
        for (int c = 1; c <= m + 1; ++c)
          w = w * Word::generator(ta, gen_f(c));
        h.set_image(id, w);
      }
      continue;
    }
    const int i = id.i;
    const int j = id.j;
    if (b > 0) {
      h.set_image(id, band(i >= fp ? i + m : i, j + m));
      continue;
    }
    if (i < fp && j == fp) {
      Word w(ta);
      for (int c = 1; c <= m + 1; ++c) w = w * band(i, fp + c - 1);
      h.set_image(id, w * cable_bands());
    } else if (i < fp) {
      h.set_image(id, band(i, j + m));
    } else if (i == fp) {
      Word w(ta);
      for (int c = 1; c <= m + 1; ++c) w = w * band(fp + c - 1, j + m);
      h.set_image(id, w);
    } else {
      h.set_image(id, band(i + m, j + m));
    }
  }
  if (b == 0) h.set_experimental(true);
  return h;
}

// Rewrites the 2n-strand framed model inside the full braid group of the
// closed surface: handle generators become three-band products over the
// first strand pair, tau becomes the four-crossing block swap, and each
// F_k becomes the band around its pair.
inline GroupHom fb_tilde_expansion(int g, int n) {
  GroupPresentation src = fb_tilde_closed_presentation(g, n);
  const Alphabet ta = Alphabet::surface_braid(g, 0, 2 * n);
  GroupHom h("expansion(" + std::to_string(g) + "," + std::to_string(n) + ")",
             std::move(src), ta);
  h.set_repro("expansion " + std::to_string(g) + " " + std::to_string(n));

  const auto band = [&](int i, int j) {
    return Word::generator(ta, gen_A(i, j));
  };
  const auto cross = [&](int i) { return Word::generator(ta, gen_sigma(i)); };

  for (const GeneratorId& id : h.source().generators()) {
    switch (id.fam) {
      case Family::CapA:
        h.set_image(id, band(2 * id.i - 1, 2 * g + 1) *
                            band(2 * id.i - 1, 2 * g + 2) *
                            band(2 * g + 1, 2 * g + 2));
        break;
      case Family::CapB:
        h.set_image(id, band(2 * id.i, 2 * g + 1) * band(2 * id.i, 2 * g + 2) *
                            band(2 * g + 1, 2 * g + 2));
        break;
      case Family::Tau:
        h.set_image(id, cross(2 * id.i) * cross(2 * id.i - 1) *
                            cross(2 * id.i + 1) * cross(2 * id.i));
        break;
      case Family::CapFrame:
        h.set_image(id, band(2 * g + 2 * id.i - 1, 2 * g + 2 * id.i));
        break;
      default:
        throw braid_error("unexpected generator " + generator_name(id));
    }
  }
  return h;
}

// Strand-forgetting map between pure surface groups, one strand at a time.
inline GroupHom forget_strand_hom(int g, int b, int n, int s) {
  detail::check_domain(n >= 2 && s >= 1 && s <= n,
                       "forget needs n>=2 and 1<=s<=n");
  GroupPresentation src =
      (b == 0) ? closed_pure_presentation(g, n) : pure_presentation(g, b, n);
  GroupPresentation tgt = (b == 0) ? closed_pure_presentation(g, n - 1)
                                   : pure_presentation(g, b, n - 1);
  GroupHom h("forget(" + std::to_string(g) + "," + std::to_string(b) + "," +
                 std::to_string(n) + "," + std::to_string(s) + ")",
             std::move(src), std::move(tgt));
  h.set_repro("forget " + std::to_string(g) + " " + std::to_string(b) + " " +
              std::to_string(n) + " " + std::to_string(s));
  const Alphabet sa = h.source().alphabet();
  for (const GeneratorId& id : h.source().generators())
    h.set_image(id, forget_strand(Word::generator(sa, id), s));
  return h;
}

inline GroupHom hom_compose(const GroupHom& first, const GroupHom& then) {
  if (!(first.target_alphabet() == then.source().alphabet()))
    throw braid_error("hom composition needs matching middle alphabets");
  GroupHom h = then.has_target_presentation()
                   ? GroupHom(first.name() + " then " + then.name(),
                              first.source(), then.target())
                   : GroupHom(first.name() + " then " + then.name(),
                              first.source(), then.target_alphabet());
  for (const GeneratorId& id : first.source().generators())
    h.set_image(id, then.apply(first.image_of(id)));
  h.set_experimental(first.experimental() || then.experimental());
  return h;
}

// Generator-level commuting square for the doubling map: forgetting the
// even strands of a doubled image must equal the framing-killed image.
// Exactly one band of each doubled product survives and the surviving
// indices already agree, so the two sides are compared as plain strings.
inline AuditReport chi_square_audit(int g, int n, int jobs = 1) {
  const GroupHom chi = chi_doubling(g, n);
  const GroupHom beta = beta_forget_framing(g, n);
  std::set<int> evens;
  for (int c = 1; c <= n; ++c) evens.insert(2 * c);

  AuditReport rep;
  rep.hom = chi.name();
  rep.checker = "string-square";
  rep.checker_complete = true;

  const auto& gens = chi.source().generators();
  const int total = static_cast<int>(gens.size());
  rep.checks.resize(total);

  auto check_one = [&](int idx) {
    const GeneratorId& id = gens[idx];
    const Word lhs = forget_strands(chi.image_of(id), evens);
    const Word rhs = beta.image_of(id);
    AuditCheck out;
    out.name = generator_name(id);
    out.passed = lhs == rhs;
    if (!out.passed) {
      out.witness = format_word(lhs) + " vs " + format_word(rhs);
      out.command = "braidframe audit chi " + std::to_string(g) + " " +
                    std::to_string(n) + " --checker=string-square";
    }
    rep.checks[idx] = std::move(out);
  };

  detail::run_chunked(total, jobs, check_one);
  return rep;
}

// Underlying permutation of strand pairs.  Throws if some pair is torn
// apart or flipped, which signals that the word is not a framed braid.
inline Permutation block_permutation_of(const Word& w) {
  const int strands = w.alphabet().n;
  if (strands % 2 != 0)
    throw braid_error("block permutation needs an even strand count");
  const int blocks = strands / 2;
  const Permutation p = permutation_of(w, strands);
  std::vector<int> images(blocks);
  for (int i = 1; i <= blocks; ++i) {
    const int x = p.apply(2 * i - 1);
    const int y = p.apply(2 * i);
    if (x % 2 == 0 || y != x + 1)
      throw braid_error("word does not move strand pairs as blocks");
    images[i - 1] = (x + 1) / 2;
  }
  return Permutation::from_images(images);
}

// Collapses each strand pair of a doubled word to a single strand.
// Crossings inside a pair and bands around one pair disappear; every
// surviving letter must occur as an adjacent equal pair and is emitted
// once.  Partial by design: throws when the word is not in doubled form.
inline Word block_collapse(const Word& w) {
  const Alphabet& a = w.alphabet();
  if (a.kind != Alphabet::Kind::SurfaceBraid || a.n % 2 != 0)
    throw braid_error("block collapse expects braid letters on 2n strands");
  const Alphabet out_alpha = Alphabet::surface_braid(a.g, a.b, a.n / 2);
  const int fp = a.first_puncture();
  const auto collapse_index = [&](int idx) {
    return idx < fp ? idx : fp + (idx - fp) / 2;
  };

  std::vector<Letter> half;
  for (const Letter& l : w.letters()) {
    if (l.id.fam == Family::Sigma) {
      if (l.id.i % 2 == 1) continue;
      half.push_back({gen_sigma(l.id.i / 2), l.sign});
    } else if (l.id.fam == Family::A) {
      const int p = collapse_index(l.id.i);
      const int q = collapse_index(l.id.j);
      if (p == q) continue;
      half.push_back({gen_A(p, q), l.sign});
    } else {
      throw braid_error("block collapse expects sigma and band letters only");
    }
  }

  if (half.size() % 2 != 0)
    throw braid_error("word does not collapse: odd letter count");
  std::vector<Letter> letters;
  letters.reserve(half.size() / 2);
  for (size_t t = 0; t < half.size(); t += 2) {
    if (!(half[t].id == half[t + 1].id) || half[t].sign != half[t + 1].sign)
      throw braid_error("word does not collapse: letters are not doubled");
    letters.push_back(half[t]);
  }
  return Word::from_letters(out_alpha, letters);
}

struct SnEnumeration {
  int n = 0;
  long long order = 0;
  bool relators_trivial = false;
};

// Closure of the generator permutations inside the symmetric group on the
// alphabet's strands, plus the well-definedness check that every relator
// has trivial permutation.  Capped at n <= 5.
inline SnEnumeration sn_coset_enumeration(const GroupPresentation& p) {
  const int n = p.alphabet().n;
  if (n < 1 || n > 5)
    throw braid_error("symmetric image enumeration is capped at 1<=n<=5");

  std::vector<Permutation> gens;
  for (const GeneratorId& id : p.generators()) {
    Permutation q = permutation_of(Word::generator(p.alphabet(), id), n);
    if (!q.is_identity()) gens.push_back(q);
  }

  std::set<Permutation> seen;
  std::vector<Permutation> frontier{Permutation::identity(n)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& x : frontier) {
      for (const Permutation& q : gens) {
        Permutation y = x * q;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }

  SnEnumeration out;
  out.n = n;
  out.order = static_cast<long long>(seen.size());
  out.relators_trivial = true;
  for (const Relator& r : p.relators())
    if (!permutation_of(r.word, n).is_identity()) {
      out.relators_trivial = false;
      break;
    }
  return out;
}

}  // namespace braidframe
