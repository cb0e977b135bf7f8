#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "braidframe/matrix.hpp"

using namespace braidframe;

namespace {

IntegerMatrix make(int rows, int cols, const std::vector<long long>& entries) {
  IntegerMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = entries[r * cols + c];
  return m;
}

std::vector<long long> factors_of(const SmithResult& s) {
  std::vector<long long> out;
  for (const Int& d : s.invariant_factors)
    out.push_back(d.convert_to<long long>());
  return out;
}

}  // namespace

TEST_CASE("smith normal form on pinned matrices") {
  const SmithResult a = smith_normal_form(make(2, 2, {2, 0, 0, 0}));
  CHECK(a.rank == 1);
  CHECK(factors_of(a) == std::vector<long long>{2});

  const SmithResult b = smith_normal_form(make(2, 2, {1, 2, 3, 4}));
  CHECK(b.rank == 2);
  CHECK(factors_of(b) == std::vector<long long>{1, 2});

  const SmithResult c = smith_normal_form(make(2, 2, {2, 0, 2, 2}));
  CHECK(c.rank == 2);
  CHECK(factors_of(c) == std::vector<long long>{2, 2});

  const SmithResult z = smith_normal_form(IntegerMatrix(3, 2));
  CHECK(z.rank == 0);
  CHECK(z.invariant_factors.empty());

  const SmithResult e = smith_normal_form(IntegerMatrix(0, 4));
  CHECK(e.rank == 0);
}

TEST_CASE("smith transforms multiply back to the diagonal") {
  const IntegerMatrix m = make(3, 4, {6, 4, 2, 0, 4, 8, 0, 2, 0, 0, 3, 9});
  const SmithResult s = smith_normal_form(m);
  CHECK(s.u * m * s.v == s.d);
  for (size_t t = 1; t < s.invariant_factors.size(); ++t)
    CHECK(s.invariant_factors[t] % s.invariant_factors[t - 1] == 0);
  for (const Int& d : s.invariant_factors) CHECK(d > 0);
}

TEST_CASE("smith normal form under random unimodular disguise") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> small(-3, 3);
  std::uniform_int_distribution<int> dim(1, 5);

  for (int trial = 0; trial < 60; ++trial) {
    const int rows = dim(rng);
    const int cols = dim(rng);
    IntegerMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m.at(r, c) = small(rng);

    const SmithResult before = smith_normal_form(m);
    CHECK(before.u * m * before.v == before.d);

    // disguise by elementary unimodular row and column operations
    IntegerMatrix d = m;
    for (int k = 0; k < 6; ++k) {
      if (rows >= 2) {
        std::uniform_int_distribution<int> pr(0, rows - 1);
        int r1 = pr(rng), r2 = pr(rng);
        if (r1 != r2) d.add_row(r1, r2, small(rng));
      }
      if (cols >= 2) {
        std::uniform_int_distribution<int> pc(0, cols - 1);
        int c1 = pc(rng), c2 = pc(rng);
        if (c1 != c2) d.add_col(c1, c2, small(rng));
      }
    }
    const SmithResult after = smith_normal_form(d);
    CHECK(after.invariant_factors == before.invariant_factors);
    CHECK(after.rank == before.rank);
  }
}

TEST_CASE("row space membership") {
  const IntegerMatrix m = make(2, 3, {2, 0, 0, 0, 3, 0});
  const SmithResult s = smith_normal_form(m);

  CHECK(in_row_space(s, {2, 0, 0}));
  CHECK(in_row_space(s, {4, 3, 0}));
  CHECK(in_row_space(s, {-2, 6, 0}));
  CHECK_FALSE(in_row_space(s, {1, 0, 0}));
  CHECK_FALSE(in_row_space(s, {0, 0, 1}));
  CHECK_FALSE(in_row_space(s, {2, 1, 0}));

  // each row of a matrix lies in its own row space
  const IntegerMatrix q = make(3, 3, {2, 4, 6, 1, 1, 1, 0, 5, 0});
  const SmithResult sq = smith_normal_form(q);
  for (int r = 0; r < 3; ++r) {
    std::vector<Int> row;
    for (int c = 0; c < 3; ++c) row.push_back(q.at(r, c));
    CHECK(in_row_space(sq, row));
  }
}

TEST_CASE("cokernel invariants") {
  const H1Invariants free3 = cokernel_invariants(IntegerMatrix(0, 3));
  CHECK(free3.free_rank == 3);
  CHECK(free3.torsion.empty());

  const H1Invariants t = cokernel_invariants(make(1, 1, {2}));
  CHECK(t.free_rank == 0);
  REQUIRE(t.torsion.size() == 1);
  CHECK(t.torsion[0] == 2);

  // unit invariant factors leave no torsion behind
  const H1Invariants u = cokernel_invariants(make(2, 3, {1, 0, 0, 0, 2, 0}));
  CHECK(u.free_rank == 1);
  REQUIRE(u.torsion.size() == 1);
  CHECK(u.torsion[0] == 2);
}
