// Command line front end: builds presentations, runs audits, computes
// homology, evaluates framed arithmetic, and emits JSON reports.
//
// Exit codes: 0 verdict verified or consistent, 1 refuted or a failed
// check, 2 usage error (message on stderr).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "braidframe/alphabet.hpp"
#include "braidframe/framed.hpp"
#include "braidframe/homs.hpp"
#include "braidframe/matrix.hpp"
#include "braidframe/oracle.hpp"
#include "braidframe/parse.hpp"
#include "braidframe/permutation.hpp"
#include "braidframe/presentation.hpp"
#include "braidframe/report.hpp"
#include "braidframe/surface.hpp"
#include "braidframe/version.hpp"
#include "braidframe/word.hpp"

namespace {

using namespace braidframe;

struct UsageError {
  std::string message;
};

struct Cli {
  std::string command;
  std::vector<std::string> args;
  bool json = false;
  int jobs = 1;
  unsigned long long seed = 0;
  std::string checker;
};

const char* kUsage =
    "usage: braidframe <command> [args] [--json] [--jobs N] [--seed N]\n"
    "\n"
    "commands:\n"
    "  reduce <word>                       freely reduce a word\n"
    "  equal <g> <n> <u> <v>               compare braids on the one-boundary\n"
    "                                      genus-g surface via the fiber action\n"
    "  perm <n> <word>                     underlying strand permutation\n"
    "  h1 <presentation>                   first homology via Smith normal form\n"
    "  oracle-check <g> <n>                relator audit of the fiber action,\n"
    "                                      plus seeded random cross-checks\n"
    "  audit <hom> <params> [--checker=C]  well-definedness audit of a\n"
    "                                      shipped homomorphism\n"
    "  fp-mul <g> <b> <n> <f> <w> <f> <w>  framed pure product\n"
    "  fb-mul <g> <b> <n> <f> <w> <f> <w>  framed braid product\n"
    "  ftr-vs-tr <g> <n>                   framing-killed surface relators\n"
    "                                      against the unframed ones\n"
    "  export-presentation <presentation>  generators and relators as JSON\n"
    "\n"
    "presentations:\n"
    "  pure <g> <b> <n> | pure-closed <g> <n> | torus-pure <n> |\n"
    "  torus-ptilde <n> | fp <g> <b> <n> | fp-closed <g> <n> |\n"
    "  torus-fp <n> | torus-fp-tilde <n> | fb-tilde <g> <n>\n"
    "\n"
    "homs (for audit):\n"
    "  beta <g> <n> | chi <g> <n> | alpha <g> <b> <n> <m> |\n"
    "  iota <g> <b> <n> <m> | expansion <g> <n> | forget <g> <b> <n> <s>\n"
    "\n"
    "checkers: oracle | abelianization | permutation | string-identity |\n"
    "          string-square (chi only)\n";

int to_int(const std::string& s) {
  try {
    size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw UsageError{"not an integer: " + s};
    return v;
  } catch (const UsageError&) {
    throw;
  } catch (...) {
    throw UsageError{"not an integer: " + s};
  }
}

std::vector<int> int_args(const std::vector<std::string>& args, size_t from,
                          size_t count) {
  if (args.size() < from + count) throw UsageError{"missing arguments"};
  std::vector<int> out;
  for (size_t i = 0; i < count; ++i) out.push_back(to_int(args[from + i]));
  return out;
}

FramingVector parse_framing(const std::string& text, int n) {
  FramingVector out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(std::stoll(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::stoll(cur));
  if (static_cast<int>(out.size()) != n)
    throw UsageError{"framing needs " + std::to_string(n) +
                     " comma-separated integers, got \"" + text + "\""};
  return out;
}

GroupPresentation build_presentation(const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError{"missing presentation name"};
  const std::string& name = args[0];
  struct Spec {
    size_t arity;
    std::function<GroupPresentation(const std::vector<int>&)> make;
  };
  static const std::map<std::string, Spec> table = {
      {"pure", {3, [](const std::vector<int>& v) {
                  return pure_presentation(v[0], v[1], v[2]);
                }}},
      {"pure-closed", {2, [](const std::vector<int>& v) {
                         return closed_pure_presentation(v[0], v[1]);
                       }}},
      {"torus-pure", {1, [](const std::vector<int>& v) {
                        return torus_pure_presentation(v[0]);
                      }}},
      {"torus-ptilde", {1, [](const std::vector<int>& v) {
                          return torus_quotient_presentation(v[0]);
                        }}},
      {"fp", {3, [](const std::vector<int>& v) {
                return fp_boundary_presentation(v[0], v[1], v[2]);
              }}},
      {"fp-closed", {2, [](const std::vector<int>& v) {
                       return fp_closed_presentation(v[0], v[1]);
                     }}},
      {"torus-fp", {1, [](const std::vector<int>& v) {
                      return torus_fp_presentation(v[0]);
                    }}},
      {"torus-fp-tilde", {1, [](const std::vector<int>& v) {
                            return torus_fp_tilde_presentation(v[0]);
                          }}},
      {"fb-tilde", {2, [](const std::vector<int>& v) {
                      return fb_tilde_closed_presentation(v[0], v[1]);
                    }}},
  };
  auto it = table.find(name);
  if (it == table.end()) throw UsageError{"unknown presentation: " + name};
  if (args.size() != 1 + it->second.arity)
    throw UsageError{"presentation " + name + " takes " +
                     std::to_string(it->second.arity) + " integer arguments"};
  return it->second.make(int_args(args, 1, it->second.arity));
}

json params_json(const Cli& cli) {
  json args = json::array();
  for (const std::string& a : cli.args) args.push_back(a);
  json out{{"args", args}};
  if (cli.jobs != 1) out["jobs"] = cli.jobs;
  if (cli.command == "oracle-check") out["seed"] = cli.seed;
  if (!cli.checker.empty()) out["checker"] = cli.checker;
  return out;
}

void emit(const Cli& cli, const json& result,
          std::chrono::steady_clock::time_point started) {
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();
  std::cout << report_envelope(cli.command, params_json(cli), result,
                               static_cast<long long>(ms))
                   .dump()
            << "\n";
}

int run_reduce(const Cli& cli) {
  if (cli.args.size() != 1) throw UsageError{"reduce takes one word"};
  const auto started = std::chrono::steady_clock::now();
  const Word w = parse_word(cli.args[0], Alphabet::any());
  if (cli.json)
    emit(cli, json{{"word", format_word(w)}, {"length", w.length()}}, started);
  else
    std::cout << format_word(w) << "\n";
  return 0;
}

int run_equal(const Cli& cli) {
  if (cli.args.size() != 4) throw UsageError{"equal takes g n word word"};
  const auto started = std::chrono::steady_clock::now();
  const int g = to_int(cli.args[0]);
  const int n = to_int(cli.args[1]);
  const Alphabet a = Alphabet::surface_braid(g, 1, n);
  const ActionTable table(g, n);
  const bool eq =
      table.are_equal(parse_word(cli.args[2], a), parse_word(cli.args[3], a));
  if (cli.json)
    emit(cli, json{{"equal", eq}}, started);
  else
    std::cout << (eq ? "equal" : "different") << "\n";
  return eq ? 0 : 1;
}

int run_perm(const Cli& cli) {
  if (cli.args.size() != 2) throw UsageError{"perm takes n word"};
  const auto started = std::chrono::steady_clock::now();
  const int n = to_int(cli.args[0]);
  const Permutation p =
      permutation_of(parse_word(cli.args[1], Alphabet::any()), n);
  if (cli.json) {
    json images = json::array();
    for (int k = 1; k <= n; ++k) images.push_back(p.apply(k));
    emit(cli, json{{"n", n}, {"cycles", p.cycle_string()}, {"images", images}},
         started);
  } else {
    std::cout << p.cycle_string() << "\n";
  }
  return 0;
}

int run_h1(const Cli& cli) {
  const GroupPresentation p = build_presentation(cli.args);
  const H1Invariants h = p.h1();
  if (cli.json) {
    std::cout << h1_to_json(h).dump() << "\n";
  } else {
    std::cout << "H1(" << p.name() << ") = Z^" << h.free_rank;
    for (const Int& t : h.torsion) std::cout << " + Z/" << t.str();
    std::cout << "\n";
  }
  return 0;
}

int run_oracle_check(const Cli& cli) {
  if (cli.args.size() != 2) throw UsageError{"oracle-check takes g n"};
  const auto started = std::chrono::steady_clock::now();
  const int g = to_int(cli.args[0]);
  const int n = to_int(cli.args[1]);
  const ActionTable table(g, n);
  const GroupPresentation p = pure_presentation(g, 1, n);

  std::map<std::string, int> family_counts;
  json failures = json::array();
  for (const Relator& r : p.relators()) {
    ++family_counts[r.family];
    if (!table.is_trivial(r.word)) {
      failures.push_back(json{
          {"check", r.label()},
          {"witness", format_word(r.word)},
          {"command", "braidframe equal " + std::to_string(g) + " " +
                          std::to_string(n) + " \"" + format_word(r.word) +
                          "\" 1"}});
    }
  }

  // Seeded cross-checks on random braid words: the forward and backward
  // substitutions must be inverse, and each puncture letter must map to a
  // conjugate of the letter selected by the underlying permutation.
  const Alphabet braid = table.braid_alphabet();
  const Alphabet fiber = table.fiber_alphabet();
  const auto gens = braid.generators();
  std::mt19937_64 rng(cli.seed);
  std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
  // short words only: image length under the action grows exponentially
  // with word length, and genus 3 tables already feel length 12
  std::uniform_int_distribution<int> len(0, 6);
  std::uniform_int_distribution<int> flip(0, 1);
  const int samples = 25;
  int sample_failures = 0;
  for (int t = 0; t < samples; ++t) {
    Word w(braid);
    const int l = len(rng);
    for (int i = 0; i < l; ++i)
      w = w * Word::generator(braid, gens[pick(rng)], flip(rng) ? 1 : -1);
    const FreeAutomorphism aut = table.word_action(w);
    bool ok = true;
    try {
      aut.verify_inverse_pair();
    } catch (const braid_error&) {
      ok = false;
    }
    const Permutation perm = permutation_of(w, n);
    for (int s = 1; s <= n && ok; ++s) {
      const Word img =
          aut.apply(Word::generator(fiber, fiber.slot_generator(2 * g + s)));
      ok = img.cyclically_reduced() ==
           Word::generator(fiber, fiber.slot_generator(2 * g + perm.apply(s)));
    }
    if (!ok) {
      ++sample_failures;
      failures.push_back(json{
          {"check", "sample " + std::to_string(t)},
          {"witness", format_word(w)},
          {"command", "braidframe oracle-check " + std::to_string(g) + " " +
                          std::to_string(n) + " --seed " +
                          std::to_string(cli.seed)}});
    }
  }

  const bool refuted = !failures.empty();
  if (cli.json) {
    json fams = json::object();
    for (const auto& [fam, count] : family_counts) fams[fam] = count;
    emit(cli,
         json{{"g", g},
              {"n", n},
              {"relators_checked", static_cast<int>(p.relators().size())},
              {"relators_by_family", fams},
              {"samples", samples},
              {"failures", failures},
              {"verdict", refuted ? "refuted" : "verified"}},
         started);
  } else {
    for (const auto& [fam, count] : family_counts)
      std::cout << "ok " << fam << " (" << count << " instances)\n";
    std::cout << "ok random samples (" << samples - sample_failures << "/"
              << samples << ")\n"
              << "verdict: " << (refuted ? "refuted" : "verified") << "\n";
  }
  return refuted ? 1 : 0;
}

int run_audit(const Cli& cli) {
  if (cli.args.empty()) throw UsageError{"audit takes a hom name"};
  const auto started = std::chrono::steady_clock::now();
  const std::string& name = cli.args[0];

  AuditReport rep;
  if (name == "chi" && cli.checker == "string-square") {
    const auto v = int_args(cli.args, 1, 2);
    if (cli.args.size() != 3) throw UsageError{"audit chi takes g n"};
    rep = chi_square_audit(v[0], v[1], cli.jobs);
  } else {
    GroupHom hom = [&]() -> GroupHom {
      if (name == "beta") {
        if (cli.args.size() != 3) throw UsageError{"audit beta takes g n"};
        const auto v = int_args(cli.args, 1, 2);
        return beta_forget_framing(v[0], v[1]);
      }
      if (name == "chi") {
        if (cli.args.size() != 3) throw UsageError{"audit chi takes g n"};
        const auto v = int_args(cli.args, 1, 2);
        return chi_doubling(v[0], v[1]);
      }
      if (name == "alpha") {
        if (cli.args.size() != 5) throw UsageError{"audit alpha takes g b n m"};
        const auto v = int_args(cli.args, 1, 4);
        return alpha_forget_framed(v[0], v[1], v[2], v[3]);
      }
      if (name == "iota") {
        if (cli.args.size() != 5) throw UsageError{"audit iota takes g b n m"};
        const auto v = int_args(cli.args, 1, 4);
        return iota_section(v[0], v[1], v[2], v[3]);
      }
      if (name == "expansion") {
        if (cli.args.size() != 3) throw UsageError{"audit expansion takes g n"};
        const auto v = int_args(cli.args, 1, 2);
        return fb_tilde_expansion(v[0], v[1]);
      }
      if (name == "forget") {
        if (cli.args.size() != 5)
          throw UsageError{"audit forget takes g b n s"};
        const auto v = int_args(cli.args, 1, 4);
        return forget_strand_hom(v[0], v[1], v[2], v[3]);
      }
      throw UsageError{"unknown hom: " + name};
    }();

    Checker checker;
    if (cli.checker.empty()) {
      // Strongest checker the target admits: the fiber action when the
      // target surface has one boundary component, else the abelianized
      // presentation, else the strand permutation.
      const Alphabet& ta = hom.target_alphabet();
      if (ta.b == 1 && (ta.kind == Alphabet::Kind::Pure ||
                        ta.kind == Alphabet::Kind::Framed ||
                        ta.kind == Alphabet::Kind::SurfaceBraid))
        checker = Checker::Oracle;
      else if (name == "beta")
        checker = Checker::StringIdentity;
      else if (hom.has_target_presentation())
        checker = Checker::Abelianization;
      else
        checker = Checker::Permutation;
    } else {
      const auto parsed = checker_from_name(cli.checker);
      if (!parsed) throw UsageError{"unknown checker: " + cli.checker};
      checker = *parsed;
    }
    rep = hom_audit(hom, checker, cli.jobs);
  }

  if (cli.json) {
    emit(cli, audit_to_json(rep), started);
  } else {
    std::cout << rep.hom << " [" << rep.checker << "] relators_checked=";
    std::cout << rep.checked() << "\n";
    for (const AuditCheck& f : rep.failures())
      std::cout << "FAIL " << f.name << "\n  witness: " << f.witness
                << "\n  reproduce: " << f.command << "\n";
    if (rep.experimental) std::cout << "note: experimental images\n";
    std::cout << "verdict: " << rep.verdict() << "\n";
  }
  return rep.verdict() == "refuted" ? 1 : 0;
}

int run_fp_mul(const Cli& cli) {
  if (cli.args.size() != 7)
    throw UsageError{"fp-mul takes g b n framing word framing word"};
  const auto started = std::chrono::steady_clock::now();
  const int g = to_int(cli.args[0]);
  const int b = to_int(cli.args[1]);
  const int n = to_int(cli.args[2]);
  const Alphabet a = Alphabet::pure(g, b, n);
  const FramedPureElement u{parse_framing(cli.args[3], n),
                            parse_word(cli.args[4], a)};
  const FramedPureElement v{parse_framing(cli.args[5], n),
                            parse_word(cli.args[6], a)};
  const FramedPureElement prod = fp_multiply(u, v);
  if (cli.json) {
    json framing = json::array();
    for (long long f : prod.framing) framing.push_back(f);
    emit(cli, json{{"framing", framing}, {"word", format_word(prod.pure)}},
         started);
  } else {
    std::cout << "framing:";
    for (long long f : prod.framing) std::cout << " " << f;
    std::cout << "\nword: " << format_word(prod.pure) << "\n";
  }
  return 0;
}

int run_fb_mul(const Cli& cli) {
  if (cli.args.size() != 7)
    throw UsageError{"fb-mul takes g b n framing word framing word"};
  const auto started = std::chrono::steady_clock::now();
  const int g = to_int(cli.args[0]);
  const int b = to_int(cli.args[1]);
  const int n = to_int(cli.args[2]);
  const Alphabet a = Alphabet::surface_braid(g, b, n);
  const FramedFullElement u =
      fb_element(parse_framing(cli.args[3], n), parse_word(cli.args[4], a));
  const FramedFullElement v =
      fb_element(parse_framing(cli.args[5], n), parse_word(cli.args[6], a));
  const FramedFullElement prod = fb_multiply(u, v);
  if (cli.json) {
    json framing = json::array();
    for (long long f : prod.framing) framing.push_back(f);
    emit(cli,
         json{{"framing", framing},
              {"word", format_word(prod.braid)},
              {"permutation", prod.perm.cycle_string()}},
         started);
  } else {
    std::cout << "framing:";
    for (long long f : prod.framing) std::cout << " " << f;
    std::cout << "\nword: " << format_word(prod.braid)
              << "\npermutation: " << prod.perm.cycle_string() << "\n";
  }
  return 0;
}

int run_ftr_vs_tr(const Cli& cli) {
  if (cli.args.size() != 2) throw UsageError{"ftr-vs-tr takes g n"};
  const auto started = std::chrono::steady_clock::now();
  const int g = to_int(cli.args[0]);
  const int n = to_int(cli.args[1]);
  const GroupHom beta = beta_forget_framing(g, n);

  std::map<int, Word> tr;
  for (const Relator& r : beta.target().relators())
    if (r.family == "TR") tr.emplace(r.indices.at(0), r.word);

  int checked = 0;
  json failures = json::array();
  for (const Relator& r : beta.source().relators()) {
    if (r.family != "FTR") continue;
    ++checked;
    const Word got = beta.apply(r.word);
    const Word& want = tr.at(r.indices.at(0));
    if (!(got == want)) {
      failures.push_back(
          json{{"check", r.label()},
               {"witness", format_word(got) + " vs " + format_word(want)},
               {"command", "braidframe audit beta " + std::to_string(g) + " " +
                               std::to_string(n) +
                               " --checker=string-identity"}});
    }
  }

  const bool refuted = !failures.empty();
  if (cli.json) {
    emit(cli,
         json{{"g", g},
              {"n", n},
              {"relators_checked", checked},
              {"failures", failures},
              {"verdict", refuted ? "refuted" : "verified"}},
         started);
  } else {
    std::cout << checked << " framed surface relators against unframed: "
              << (refuted ? "refuted" : "verified") << "\n";
  }
  return refuted ? 1 : 0;
}

int run_export(const Cli& cli) {
  const auto started = std::chrono::steady_clock::now();
  const GroupPresentation p = build_presentation(cli.args);
  if (cli.json) {
    emit(cli, presentation_to_json(p), started);
  } else {
    std::cout << p.name() << ": " << p.generators().size() << " generators, "
              << p.relators().size() << " relators\n";
    for (const GeneratorId& id : p.generators())
      std::cout << "gen " << generator_name(id) << "\n";
    for (const Relator& r : p.relators())
      std::cout << r.label() << ": " << format_word(r.word) << "\n";
  }
  return 0;
}

Cli parse_cli(int argc, char** argv) {
  Cli cli;
  if (argc < 2) throw UsageError{"missing command"};
  cli.command = argv[1];
  for (int i = 2; i < argc; ++i) {
    const std::string arg = argv[i];
    const auto value_of = [&](const std::string& flag) -> std::string {
      if (arg.size() > flag.size() + 1 && arg.rfind(flag + "=", 0) == 0)
        return arg.substr(flag.size() + 1);
      if (arg == flag) {
        if (i + 1 >= argc) throw UsageError{flag + " needs a value"};
        return argv[++i];
      }
      return "";
    };
    if (arg == "--json") {
      cli.json = true;
    } else if (arg.rfind("--jobs", 0) == 0) {
      cli.jobs = to_int(value_of("--jobs"));
      if (cli.jobs < 1) throw UsageError{"--jobs needs a positive value"};
    } else if (arg.rfind("--seed", 0) == 0) {
      cli.seed = std::stoull(value_of("--seed"));
    } else if (arg.rfind("--checker", 0) == 0) {
      cli.checker = value_of("--checker");
    } else if (arg.rfind("--", 0) == 0) {
      throw UsageError{"unknown flag: " + arg};
    } else {
      cli.args.push_back(arg);
    }
  }
  return cli;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    const Cli cli = parse_cli(argc, argv);
    static const std::map<std::string, std::function<int(const Cli&)>>
        commands = {
            {"reduce", run_reduce},
            {"equal", run_equal},
            {"perm", run_perm},
            {"h1", run_h1},
            {"oracle-check", run_oracle_check},
            {"audit", run_audit},
            {"fp-mul", run_fp_mul},
            {"fb-mul", run_fb_mul},
            {"ftr-vs-tr", run_ftr_vs_tr},
            {"export-presentation", run_export},
        };
    auto it = commands.find(cli.command);
    if (it == commands.end()) {
      if (cli.command == "--help" || cli.command == "help") {
        std::cout << kUsage;
        return 0;
      }
      throw UsageError{"unknown command: " + cli.command};
    }
    return it->second(cli);
  } catch (const UsageError& e) {
    std::cerr << "braidframe: " << e.message << "\n\n" << kUsage;
    return 2;
  } catch (const braid_error& e) {
    std::cerr << "braidframe: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "braidframe: " << e.what() << "\n";
    return 2;
  }
}
