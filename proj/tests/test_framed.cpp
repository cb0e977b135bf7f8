#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "braidframe/framed.hpp"
#include "braidframe/homs.hpp"

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

FramingVector random_framing(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long long> v(-5, 5);
  FramingVector f(static_cast<size_t>(n));
  for (auto& x : f) x = v(rng);
  return f;
}

}  // namespace

TEST_CASE("framed pure elements multiply componentwise") {
  const Alphabet a = Alphabet::pure(2, 1, 2);
  const FramedPureElement u{{1, 0}, Word::generator(a, gen_A(1, 5))};
  const FramedPureElement v{{0, 2}, Word::generator(a, gen_A(2, 5))};
  const FramedPureElement uv = fp_multiply(u, v);
  CHECK(uv.framing == FramingVector{1, 2});
  CHECK(uv.pure == Word::generator(a, gen_A(1, 5)) * Word::generator(a, gen_A(2, 5)));

  CHECK(fp_multiply(u, fp_invert(u)) == fp_identity(a));
  CHECK(fp_multiply(fp_invert(v), v) == fp_identity(a));

  const FramedPureElement bad{{1, 0, 0}, Word(a)};
  CHECK_THROWS_AS(fp_multiply(u, bad), braid_error);
  const FramedPureElement other{{1, 0}, Word(Alphabet::pure(2, 1, 3))};
  CHECK_THROWS_AS(fp_multiply(u, other), braid_error);
}

TEST_CASE("framed full framing rides the strand through the first factor") {
  const Alphabet a = Alphabet::surface_braid(2, 1, 2);
  const FramedFullElement u = fb_element({1, 0}, Word::generator(a, gen_sigma(1)));
  const FramedFullElement uu = fb_multiply(u, u);
  CHECK(uu.framing == FramingVector{1, 1});
  CHECK(uu.braid == Word::generator(a, gen_sigma(1), 2));
  CHECK(uu.perm.is_identity());

  // zero framings reduce to plain braid multiplication
  const FramedFullElement z1 = fb_element({0, 0}, Word::generator(a, gen_A(1, 5)));
  const FramedFullElement z2 = fb_element({0, 0}, Word::generator(a, gen_sigma(1)));
  const FramedFullElement z = fb_multiply(z1, z2);
  CHECK(z.framing == FramingVector{0, 0});
  CHECK(z.braid == z1.braid * z2.braid);

  CHECK_THROWS_AS(fb_element({1}, Word(a)), braid_error);
  CHECK_THROWS_AS(fb_element({0, 0}, Word(Alphabet::pure(2, 1, 2))), braid_error);
}

TEST_CASE("framed full group laws hold on random triples") {
  const Alphabet a = Alphabet::surface_braid(2, 1, 3);
  std::mt19937_64 rng(60601);
  for (int t = 0; t < 200; ++t) {
    const FramedFullElement x = fb_element(random_framing(rng, 3), random_word(a, rng, 6));
    const FramedFullElement y = fb_element(random_framing(rng, 3), random_word(a, rng, 6));
    const FramedFullElement z = fb_element(random_framing(rng, 3), random_word(a, rng, 6));
    CHECK(fb_multiply(fb_multiply(x, y), z) == fb_multiply(x, fb_multiply(y, z)));

    const FramedFullElement xy = fb_multiply(x, y);
    CHECK(xy.perm == permutation_of(xy.braid, 3));

    CHECK(fb_multiply(x, fb_invert(x)) == fb_identity(a));
    CHECK(fb_multiply(fb_invert(x), x) == fb_identity(a));
  }
}

TEST_CASE("entry permutations of braid words") {
  const Alphabet a = Alphabet::surface_braid(2, 1, 3);
  const Word w = Word::generator(a, gen_sigma(1)) * Word::generator(a, gen_sigma(2));
  const Permutation p = permutation_of(w, 3);
  CHECK(p.apply(1) == 3);
  CHECK(p.apply(2) == 1);
  CHECK(p.apply(3) == 2);
  CHECK(permutation_of(Word::generator(a, gen_A(1, 5)), 3).is_identity());
  CHECK(permutation_of(w * w.inverse(), 3).is_identity());
}

TEST_CASE("erasing the framing letters leaves the band image") {
  const Alphabet fr = Alphabet::framed_closed(2, 2);
  const Alphabet pu = Alphabet::pure(2, 0, 2);
  const auto B = [&](int i, int j, int e = 1) {
    return Word::generator(fr, gen_B(i, j), e);
  };
  const Word w = B(1, 5) * Word::generator(fr, gen_f(1), 3) * B(2, 5);
  CHECK(detail::framed_to_pure(w, pu) ==
        Word::generator(pu, gen_A(1, 5)) * Word::generator(pu, gen_A(2, 5)));
  CHECK(detail::framed_to_pure(B(1, 5) * Word::generator(fr, gen_f(1), 2) * B(1, 5, -1),
                               pu)
            .empty());
}

TEST_CASE("framed surface relations map to the unframed ones") {
  for (int g : {2, 3})
    for (int n : {1, 2, 3}) {
      const GroupPresentation framed = fp_closed_presentation(g, n);
      const GroupPresentation plain = closed_pure_presentation(g, n);
      std::map<int, Word> tr;
      for (const Relator& r : plain.relators())
        if (r.family == "TR") tr.emplace(r.indices[0], r.word);
      int seen = 0;
      for (const Relator& r : framed.relators())
        if (r.family == "FTR") {
          INFO("(g,n,k)=(" << g << "," << n << "," << r.indices[0] << ")");
          CHECK(detail::framed_to_pure(r.word, plain.alphabet()) ==
                tr.at(r.indices[0]));
          ++seen;
        }
      CHECK(seen == n);
    }
}

TEST_CASE("centrality relator count") {
  const GroupPresentation p = fp_boundary_presentation(2, 1, 2);
  int c = 0;
  for (const Relator& r : p.relators()) c += (r.family == "C");
  const int gens = static_cast<int>(p.generators().size());
  CHECK(gens == 11);
  CHECK(c == 2 * (gens - 1));
  CHECK(p.relators().size() == 39);
}

TEST_CASE("homology of the framed closed groups") {
  CHECK(fp_closed_presentation(2, 1).h1() == H1Invariants{4, {2}});
  CHECK(fp_closed_presentation(3, 1).h1() == H1Invariants{6, {4}});
  CHECK(fb_tilde_closed_presentation(2, 1).h1() == H1Invariants{4, {2}});
  CHECK(fb_tilde_closed_presentation(2, 2).h1() == H1Invariants{4, {2, 2}});
  CHECK(fb_tilde_closed_presentation(3, 1).h1() == H1Invariants{6, {4}});
}

TEST_CASE("homology of the unframed closed groups") {
  for (int n : {1, 2, 3}) {
    INFO("n=" << n);
    CHECK(closed_pure_presentation(2, n).h1() ==
          H1Invariants{4 * n, {}});
  }
}

TEST_CASE("homology of the torus groups") {
  CHECK(torus_fp_presentation(1).h1() == H1Invariants{3, {}});
  CHECK(torus_fp_presentation(2).h1() == H1Invariants{6, {}});
  CHECK(torus_fp_tilde_presentation(1).h1() == H1Invariants{1, {}});
}

TEST_CASE("boundary framing splits off in homology") {
  for (auto [g, b, n] : {std::tuple{2, 1, 2}, std::tuple{1, 1, 1}, std::tuple{1, 2, 1}}) {
    INFO("(g,b,n)=(" << g << "," << b << "," << n << ")");
    const H1Invariants framed = fp_boundary_presentation(g, b, n).h1();
    const H1Invariants plain = pure_presentation(g, b, n).h1();
    CHECK(framed.free_rank == plain.free_rank + n);
    CHECK(framed.torsion == plain.torsion);
  }
}

TEST_CASE("doubled-strand relator list shapes") {
  const GroupPresentation p = fb_tilde_closed_presentation(2, 2);
  CHECK(p.generators().size() == 7);
  CHECK(p.relators().size() == 13);
  CHECK(fb_tilde_closed_presentation(2, 3).generators().size() == 9);

  const Alphabet a = p.alphabet();
  for (const Relator& r : p.relators()) {
    if (r.family == "R8") {
      const auto row = p.abelianized(r.word);
      CHECK(row[p.generator_index(gen_tau(1))] == -2);
      CHECK(row[p.generator_index(gen_cA(r.indices[0]))] == 0);
      CHECK(row[p.generator_index(gen_cB(r.indices[0]))] == 0);
    }
  }
}

TEST_CASE("surface relation of the doubled model for a single pair") {
  const GroupPresentation p = fb_tilde_closed_presentation(2, 1);
  REQUIRE(p.relators().size() == 1);  // only the global relation survives at n=1
  const Relator& r = p.relators().front();
  CHECK(r.family == "R10");

  const Alphabet a = p.alphabet();
  const auto cA = [&](int i, int e = 1) { return Word::generator(a, gen_cA(i), e); };
  const auto cB = [&](int i, int e = 1) { return Word::generator(a, gen_cB(i), e); };
  const Word want = Word::commutator(cA(1, -1), cB(1)) *
                    Word::commutator(cA(2, -1), cB(2)) *
                    Word::generator(a, gen_F(1), -2);
  CHECK(r.word == want);
}
