#include <catch2/catch_amalgamated.hpp>

#include "braidframe/homs.hpp"

using namespace braidframe;

namespace {

void expect_clean(const AuditReport& rep, const std::string& verdict, int checks) {
  INFO(rep.hom << " via " << rep.checker);
  CHECK(rep.verdict() == verdict);
  CHECK(rep.checked() == checks);
  CHECK(rep.failures().empty());
}

}  // namespace

TEST_CASE("hom image tables validate their entries") {
  const Alphabet ta = Alphabet::pure(2, 1, 2);
  GroupHom h("demo", pure_presentation(2, 1, 2), ta);
  CHECK_THROWS_AS(h.set_image(gen_A(1, 5), Word::generator(Alphabet::pure(2, 1, 3), gen_A(1, 5))),
                  braid_error);
  CHECK_THROWS_AS(h.set_image(gen_A(5, 5), Word(ta)), braid_error);
  CHECK_THROWS_AS(h.image_of(gen_A(1, 5)), braid_error);
  CHECK_THROWS_AS(h.require_total(), braid_error);

  h.set_image(gen_A(1, 5), Word::generator(ta, gen_A(1, 6)));
  CHECK(h.apply(Word::generator(h.source().alphabet(), gen_A(1, 5), -1)) ==
        Word::generator(ta, gen_A(1, 6), -1));
}

TEST_CASE("killing the framing is verified letter for letter") {
  expect_clean(hom_audit(beta_forget_framing(2, 2), Checker::StringIdentity), "verified", 41);
  expect_clean(hom_audit(beta_forget_framing(3, 1), Checker::StringIdentity), "verified", 7);
}

TEST_CASE("doubling map images") {
  const GroupHom chi = chi_doubling(2, 2);
  const Alphabet ta = chi.target_alphabet();
  const auto A = [&](int i, int j) { return Word::generator(ta, gen_A(i, j)); };
  CHECK(chi.image_of(gen_B(1, 5)) == A(1, 5) * A(1, 6) * A(5, 6));
  CHECK(chi.image_of(gen_f(1)) == A(5, 6));
  CHECK(chi.image_of(gen_f(2)) == A(7, 8));
  CHECK(chi.image_of(gen_B(5, 6)) ==
        A(5, 7) * A(6, 7) * A(5, 8) * A(6, 8) * A(7, 8));
}

TEST_CASE("doubling map passes the sound checkers") {
  expect_clean(hom_audit(chi_doubling(2, 1), Checker::Abelianization), "consistent", 5);
  expect_clean(hom_audit(chi_doubling(2, 2), Checker::Abelianization), "consistent", 41);
  expect_clean(hom_audit(chi_doubling(2, 2), Checker::Permutation), "consistent", 41);
}

TEST_CASE("doubling square commutes generator by generator") {
  expect_clean(chi_square_audit(2, 1), "verified", 5);
  expect_clean(chi_square_audit(2, 2), "verified", 11);
  expect_clean(chi_square_audit(3, 3), "verified", 24);
  expect_clean(chi_square_audit(2, 2, 4), "verified", 11);  // jobs split
}

TEST_CASE("strand-forgetting audits") {
  expect_clean(hom_audit(alpha_forget_framed(2, 1, 2, 1), Checker::Oracle), "verified", 121);
  expect_clean(hom_audit(alpha_forget_framed(2, 1, 1, 2), Checker::Oracle), "verified", 121);
  expect_clean(hom_audit(alpha_forget_framed(2, 0, 1, 1), Checker::Abelianization),
               "consistent", 41);
  expect_clean(hom_audit(forget_strand_hom(2, 1, 3, 2), Checker::Oracle), "verified", 70);
}

TEST_CASE("section audits") {
  expect_clean(hom_audit(iota_section(2, 1, 2, 1), Checker::Oracle), "verified", 39);
  expect_clean(hom_audit(iota_section(2, 1, 1, 2), Checker::Oracle), "verified", 4);

  const GroupHom closed = iota_section(2, 0, 1, 1);
  CHECK(closed.experimental());
  const AuditReport rep = hom_audit(closed, Checker::Abelianization);
  CHECK(rep.experimental);
  expect_clean(rep, "consistent", 5);
  expect_clean(hom_audit(iota_section(2, 0, 2, 1), Checker::Abelianization), "consistent", 41);
}

TEST_CASE("boundary section shifts generators") {
  const GroupHom io = iota_section(2, 1, 1, 1);
  const Alphabet ta = io.target_alphabet();
  CHECK(io.image_of(gen_B(1, 5)) == Word::generator(ta, gen_B(1, 6)));
  CHECK(io.image_of(gen_f(1)) == Word::generator(ta, gen_f(2)));
}

TEST_CASE("forgetting the added strands undoes the section") {
  for (auto [g, b, n, m] : {std::tuple{2, 1, 2, 1}, std::tuple{2, 1, 1, 2},
                            std::tuple{2, 0, 1, 1}, std::tuple{2, 0, 2, 1}}) {
    INFO("(g,b,n,m)=(" << g << "," << b << "," << n << "," << m << ")");
    const GroupHom io = iota_section(g, b, n, m);
    const GroupHom al = alpha_forget_framed(g, b, n, m);
    const GroupHom round = hom_compose(io, al);
    CHECK(round.experimental() == (b == 0));
    const Alphabet sa = round.source().alphabet();
    for (const GeneratorId& id : round.source().generators()) {
      INFO(generator_name(id));
      CHECK(round.image_of(id) == Word::generator(sa, id));
    }
  }
}

TEST_CASE("hom composition needs matching middle alphabets") {
  CHECK_THROWS_AS(hom_compose(beta_forget_framing(2, 1), beta_forget_framing(2, 1)),
                  braid_error);
}

TEST_CASE("doubled model expansion images") {
  const GroupHom ex = fb_tilde_expansion(2, 2);
  const Alphabet ta = ex.target_alphabet();
  const auto A = [&](int i, int j) { return Word::generator(ta, gen_A(i, j)); };
  const auto s = [&](int i) { return Word::generator(ta, gen_sigma(i)); };
  CHECK(ex.image_of(gen_tau(1)) == s(2) * s(1) * s(3) * s(2));
  CHECK(ex.image_of(gen_cA(1)) == A(1, 5) * A(1, 6) * A(5, 6));
  CHECK(ex.image_of(gen_F(2)) == A(7, 8));

  expect_clean(hom_audit(ex, Checker::Permutation), "consistent", 13);
  expect_clean(hom_audit(fb_tilde_expansion(2, 3), Checker::Permutation), "consistent", 22);
}

TEST_CASE("expanded words move strand pairs as blocks") {
  const GroupHom ex = fb_tilde_expansion(2, 3);
  const Alphabet sa = ex.source().alphabet();
  for (int i = 1; i <= 2; ++i) {
    const Permutation bp =
        block_permutation_of(ex.apply(Word::generator(sa, gen_tau(i))));
    CHECK(bp == Permutation::transposition(3, i));
  }
  CHECK(block_permutation_of(ex.apply(Word::generator(sa, gen_cB(1)))).is_identity());

  const Alphabet odd = Alphabet::surface_braid(2, 0, 3);
  CHECK_THROWS_AS(block_permutation_of(Word(odd)), braid_error);
  const Alphabet four = Alphabet::surface_braid(2, 0, 4);
  CHECK_THROWS_AS(block_permutation_of(Word::generator(four, gen_sigma(2))), braid_error);
}

TEST_CASE("collapsing doubled words halves them") {
  const GroupHom ex1 = fb_tilde_expansion(2, 1);
  const Alphabet s1 = ex1.source().alphabet();
  const Alphabet half1 = Alphabet::surface_braid(2, 0, 1);
  CHECK(block_collapse(ex1.apply(Word::generator(s1, gen_cA(1)))) ==
        Word::generator(half1, gen_A(1, 5)));
  CHECK(block_collapse(ex1.apply(Word::generator(s1, gen_cB(2)))) ==
        Word::generator(half1, gen_A(4, 5)));

  const GroupHom ex2 = fb_tilde_expansion(2, 2);
  const Alphabet s2 = ex2.source().alphabet();
  const Alphabet half2 = Alphabet::surface_braid(2, 0, 2);
  CHECK(block_collapse(ex2.apply(Word::generator(s2, gen_F(2)))).empty());
  CHECK(block_collapse(ex2.apply(Word::generator(s2, gen_tau(1)))) ==
        Word::generator(half2, gen_sigma(1)));
  CHECK(block_collapse(ex2.apply(Word::generator(s2, gen_tau(1)) *
                                 Word::generator(s2, gen_cA(1)))) ==
        Word::generator(half2, gen_sigma(1)) * Word::generator(half2, gen_A(1, 5)));

  const Alphabet four = Alphabet::surface_braid(2, 0, 4);
  CHECK_THROWS_AS(block_collapse(Word::generator(four, gen_sigma(2))), braid_error);
  CHECK_THROWS_AS(block_collapse(Word::generator(four, gen_A(1, 5)) *
                                 Word::generator(four, gen_A(1, 6), -1)),
                  braid_error);
  CHECK_THROWS_AS(block_collapse(Word::generator(Alphabet::pure(2, 0, 4), gen_A(1, 5))),
                  braid_error);
}

TEST_CASE("symmetric images of the doubled model") {
  for (int n = 1; n <= 4; ++n) {
    const SnEnumeration e = sn_coset_enumeration(fb_tilde_closed_presentation(2, n));
    INFO("n=" << n);
    long long fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(e.order == fact);
    CHECK(e.relators_trivial);
  }
  CHECK_THROWS_AS(sn_coset_enumeration(fb_tilde_closed_presentation(2, 6)), braid_error);
}

TEST_CASE("a wrong image table is refuted by the oracle") {
  const GroupPresentation src = pure_presentation(2, 1, 2);
  GroupHom h("broken", src, Alphabet::pure(2, 1, 2));
  const Alphabet ta = h.target_alphabet();
  for (const GeneratorId& id : src.generators())
    h.set_image(id, Word::generator(ta, id));
  h.set_image(gen_A(1, 5), Word::generator(ta, gen_A(1, 6)));

  const AuditReport rep = hom_audit(h, Checker::Oracle);
  CHECK(rep.verdict() == "refuted");
  CHECK_FALSE(rep.failures().empty());
  const AuditCheck f = rep.failures().front();
  CHECK_FALSE(f.witness.empty());
  CHECK(f.command.find("braidframe equal 2 2") == 0);
}

TEST_CASE("checkers reject unfit targets") {
  // closed-surface target: no oracle
  CHECK_THROWS_AS(hom_audit(chi_doubling(2, 1), Checker::Oracle), braid_error);
  // bare alphabet target: nothing to compare strings against
  CHECK_THROWS_AS(hom_audit(fb_tilde_expansion(2, 1), Checker::StringIdentity), braid_error);
}

TEST_CASE("audit is independent of the job count") {
  const AuditReport one = hom_audit(beta_forget_framing(2, 2), Checker::StringIdentity, 1);
  const AuditReport four = hom_audit(beta_forget_framing(2, 2), Checker::StringIdentity, 4);
  REQUIRE(one.checked() == four.checked());
  CHECK(one.verdict() == four.verdict());
  for (int i = 0; i < one.checked(); ++i) {
    CHECK(one.checks[i].name == four.checks[i].name);
    CHECK(one.checks[i].passed == four.checks[i].passed);
  }
}

TEST_CASE("checker names round-trip") {
  for (Checker c : {Checker::Oracle, Checker::Abelianization, Checker::Permutation,
                    Checker::StringIdentity}) {
    const auto back = checker_from_name(checker_name(c));
    REQUIRE(back.has_value());
    CHECK(*back == c);
  }
  CHECK_FALSE(checker_from_name("nonsense").has_value());
  CHECK(checker_is_complete(Checker::Oracle));
  CHECK(checker_is_complete(Checker::StringIdentity));
  CHECK_FALSE(checker_is_complete(Checker::Abelianization));
  CHECK_FALSE(checker_is_complete(Checker::Permutation));
}
