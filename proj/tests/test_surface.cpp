#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "braidframe/oracle.hpp"
#include "braidframe/surface.hpp"

using namespace braidframe;

namespace {

Word random_word(const Alphabet& a, std::mt19937_64& rng, int len) {
  const std::vector<GeneratorId> gens = a.generators();
  std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  Word w(a);
  for (int i = 0; i < len; ++i)
    w = w * Word::generator(a, gens[pick(rng)], sign(rng) ? 1 : -1);
  return w;
}

}  // namespace

TEST_CASE("closed surface relation words") {
  const GroupPresentation p = closed_pure_presentation(2, 2);
  const Alphabet a = p.alphabet();
  const auto band = [&](int i, int j, int e = 1) {
    return Word::generator(a, gen_A(i, j), e);
  };

  std::vector<Word> tr;
  for (const Relator& r : p.relators())
    if (r.family == "TR") tr.push_back(r.word);
  REQUIRE(tr.size() == 2);

  // strand 1 sees the other puncture on its right, strand 2 on its left;
  // both right sides reduce to the single linking band
  const Word handles1 = Word::commutator(band(4, 5, -1), band(3, 5)) *
                        Word::commutator(band(2, 5, -1), band(1, 5));
  const Word handles2 = Word::commutator(band(4, 6, -1), band(3, 6)) *
                        Word::commutator(band(2, 6, -1), band(1, 6));
  CHECK(tr[0] == handles1 * band(5, 6, -1));
  CHECK(tr[1] == handles2 * band(5, 6, -1));

  CHECK(p.relators().size() == 21);  // 19 band instances + 2 surface relations
}

TEST_CASE("torus pure group") {
  const GroupPresentation p = torus_pure_presentation(1);
  const Alphabet a = p.alphabet();
  REQUIRE(p.relators().size() == 1);
  CHECK(p.relators()[0].word ==
        Word::commutator(Word::generator(a, gen_A(2, 3), -1),
                         Word::generator(a, gen_A(1, 3))));

  const H1Invariants h = p.h1();
  CHECK(h.free_rank == 2);
  CHECK(h.torsion.empty());
}

TEST_CASE("torus quotient kills the central words") {
  const GroupPresentation p = torus_quotient_presentation(1);
  CHECK(p.relators().size() == 3);

  const H1Invariants h = p.h1();
  CHECK(h.free_rank == 0);
  CHECK(h.torsion.empty());

  const GroupPresentation q = torus_quotient_presentation(2);
  const Alphabet a = q.alphabet();
  bool saw_qr1 = false;
  for (const Relator& r : q.relators())
    if (r.family == "QR1") {
      saw_qr1 = true;
      CHECK(r.word == Word::generator(a, gen_A(1, 3)) *
                          Word::generator(a, gen_A(1, 4)));
      const auto row = q.abelianized(r.word);
      CHECK(row[q.generator_index(gen_A(1, 3))] == 1);
      CHECK(row[q.generator_index(gen_A(1, 4))] == 1);
    }
  CHECK(saw_qr1);
}

TEST_CASE("forgetting a strand drops its bands and renumbers the rest") {
  const Alphabet a = Alphabet::pure(2, 1, 2);
  const Word w56 = Word::generator(a, gen_A(5, 6));
  const Word w15 = Word::generator(a, gen_A(1, 5));
  const Word w16 = Word::generator(a, gen_A(1, 6));

  CHECK(forget_strand(w56, 2).empty());
  CHECK(forget_strand(w15, 2) ==
        Word::generator(Alphabet::pure(2, 1, 1), gen_A(1, 5)));
  CHECK(forget_strand(w16, 1) ==
        Word::generator(Alphabet::pure(2, 1, 1), gen_A(1, 5)));

  CHECK_THROWS_AS(forget_strand(w15, 0), braid_error);
  CHECK_THROWS_AS(forget_strand(w15, 3), braid_error);
  const Word sigma = Word::generator(Alphabet::surface_braid(2, 1, 2), gen_sigma(1));
  CHECK_THROWS_AS(forget_strand(sigma, 1), braid_error);
}

TEST_CASE("forget_strands folds highest strand first") {
  const Alphabet a = Alphabet::pure(2, 1, 3);
  std::mt19937_64 rng(20311);
  for (int t = 0; t < 50; ++t) {
    const Word w = random_word(a, rng, 12);
    CHECK(forget_strands(w, {1, 2}) == forget_strand(forget_strand(w, 2), 1));
  }
}

TEST_CASE("forget order can be exchanged with renumbering") {
  const Alphabet a = Alphabet::pure(2, 1, 3);
  for (int s = 1; s <= 3; ++s)
    for (int t = s + 1; t <= 3; ++t)
      for (const GeneratorId& id : a.generators()) {
        const Word w = Word::generator(a, id);
        INFO("s=" << s << " t=" << t << " gen=" << generator_name(id));
        CHECK(forget_strand(forget_strand(w, t), s) ==
              forget_strand(forget_strand(w, s), t - 1));
      }
}

TEST_CASE("forgetting the last strand sends relators to relations") {
  const GroupPresentation p = pure_presentation(2, 1, 3);
  const ActionTable table(2, 2);
  for (const Relator& r : p.relators()) {
    INFO(r.label());
    CHECK(table.is_trivial(forget_strand(r.word, 3)));
  }
}
