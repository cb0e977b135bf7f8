#pragma once
// A finite presentation: an alphabet, its generator list, and a list of named
// relators.  Relators carry the family tag and index tuple they were
// instantiated from so audit reports can point back at them.

#include <map>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "parse.hpp"
#include "word.hpp"

namespace braidframe {

struct Relator {
  std::string family;        // "PR2", "ER1", "TR", "C", ...
  std::vector<int> indices;  // instantiation tuple, family-specific order
  Word word;

  std::string label() const {
    std::string s = family;
    if (!indices.empty()) {
      s += '(';
      for (std::size_t k = 0; k < indices.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(indices[k]);
      }
      s += ')';
    }
    return s;
  }
};

class GroupPresentation {
public:
  GroupPresentation(std::string name, Alphabet alpha)
      : name_(std::move(name)), alpha_(alpha), generators_(alpha.generators()) {
    for (std::size_t k = 0; k < generators_.size(); ++k)
      index_[generators_[k]] = k;
  }

  const std::string& name() const { return name_; }
  const Alphabet& alphabet() const { return alpha_; }
  const std::vector<GeneratorId>& generators() const { return generators_; }
  const std::vector<Relator>& relators() const { return relators_; }

  std::size_t generator_index(const GeneratorId& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
      throw braid_error("generator not in presentation: " + generator_name(id));
    return it->second;
  }

  void add_relator(std::string family, std::vector<int> indices, Word w) {
    if (!(w.alphabet() == alpha_)) throw braid_error("relator alphabet mismatch");
    relators_.push_back({std::move(family), std::move(indices), std::move(w)});
  }

  // Rows = relators, columns = generators in enumeration order.
  IntegerMatrix abelianization_matrix() const {
    IntegerMatrix m(relators_.size(), generators_.size());
    for (std::size_t r = 0; r < relators_.size(); ++r)
      for (const Letter& l : relators_[r].word.letters())
        m.at(r, generator_index(l.id)) += l.sign;
    return m;
  }

  H1Invariants h1() const { return cokernel_invariants(abelianization_matrix()); }

  std::vector<Int> abelianized(const Word& w) const {
    std::vector<Int> row(generators_.size());
    for (const Letter& l : w.letters()) row[generator_index(l.id)] += l.sign;
    return row;
  }

private:
  std::string name_;
  Alphabet alpha_;
  std::vector<GeneratorId> generators_;
  std::vector<Relator> relators_;
  std::map<GeneratorId, std::size_t> index_;
};

}  // namespace braidframe
