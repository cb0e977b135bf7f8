#pragma once
// Text form of words.  Whitespace-separated letters:
//
//   letter := NAME '[' INT (',' INT)? ']' ('^' SIGNED_INT)?
//
// NAME is one of A, B, C, f, F, sigma, tau, cA, cB, x, a, b.  Exponents are
// expanded to letter runs; the reduced empty word prints (and parses) as "1".

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "word.hpp"

namespace braidframe {

namespace detail {

inline int parse_int(std::string_view tok, std::size_t& pos, const std::string& what) {
  std::size_t start = pos;
  if (pos < tok.size() && (tok[pos] == '-' || tok[pos] == '+')) ++pos;
  while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
  if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(tok[start]))))
    throw braid_error("expected " + what + " in '" + std::string(tok) + "'");
  return std::stoi(std::string(tok.substr(start, pos - start)));
}

inline void parse_token(std::string_view tok, std::vector<Letter>& out) {
  std::size_t pos = 0;
  while (pos < tok.size() &&
         (std::isalpha(static_cast<unsigned char>(tok[pos])) || tok[pos] == '_'))
    ++pos;
  const auto fam = family_from_name(tok.substr(0, pos));
  if (!fam) throw braid_error("unknown generator name in '" + std::string(tok) + "'");
  if (pos >= tok.size() || tok[pos] != '[')
    throw braid_error("expected '[' in '" + std::string(tok) + "'");
  ++pos;
  GeneratorId id{*fam, 0, 0};
  id.i = parse_int(tok, pos, "index");
  if (two_index(*fam)) {
    if (pos >= tok.size() || tok[pos] != ',')
      throw braid_error(std::string(family_name(*fam)) + " takes two indices: '" +
                        std::string(tok) + "'");
    ++pos;
    id.j = parse_int(tok, pos, "second index");
  }
  if (pos >= tok.size() || tok[pos] != ']')
    throw braid_error("expected ']' in '" + std::string(tok) + "'");
  ++pos;
  int exponent = 1;
  if (pos < tok.size()) {
    if (tok[pos] != '^')
      throw braid_error("unexpected trailing text in '" + std::string(tok) + "'");
    ++pos;
    exponent = parse_int(tok, pos, "exponent");
    if (pos != tok.size())
      throw braid_error("unexpected trailing text in '" + std::string(tok) + "'");
  }
  const int sign = exponent >= 0 ? 1 : -1;
  for (int t = 0; t != exponent; t += sign) out.push_back({id, sign});
}

}  // namespace detail

inline Word parse_word(const std::string& text, Alphabet alpha) {
  std::vector<Letter> letters;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;  // identity token
    detail::parse_token(tok, letters);
  }
  return Word::from_letters(alpha, letters);
}

inline std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t run = i + 1;
    while (run < ls.size() && ls[run] == ls[i]) ++run;
    const long long exponent = static_cast<long long>(run - i) * ls[i].sign;
    if (!out.empty()) out += ' ';
    out += generator_name(ls[i].id);
    if (exponent != 1) out += '^' + std::to_string(exponent);
    i = run;
  }
  return out;
}

}  // namespace braidframe
