#include <doctest.h>

#include <random>

#include "chordweights/errors.hpp"
#include "chordweights/gf2_matrix.hpp"
#include "chordweights/random.hpp"
#include "oracles.hpp"

using namespace chordweights;

namespace {

Gf2SymmetricMatrix random_symmetric(std::size_t n, std::mt19937_64 &rng) {
  Gf2SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m.set(i, j, rng() & 1U);
  return m;
}

} // namespace

TEST_CASE("adjacency_matrix") {
  const auto k2 = adjacency_matrix(MarkedGraph(2, {{0, 1}}));
  CHECK(k2.to_rows() == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
  CHECK(adjacency_matrix(MarkedGraph(1).with_marks(1)).to_rows() ==
        std::vector<std::vector<int>>{{1}});
  const auto empty = adjacency_matrix(MarkedGraph());
  CHECK(empty.size() == 0);
  CHECK(gf2_rank(empty) == 0);
  CHECK(gf2_det(empty) == 1);
  CHECK_THROWS_AS(Gf2SymmetricMatrix::from_rows({{0, 1}, {0, 0}}), PreconditionError);
  CHECK_THROWS_AS(Gf2SymmetricMatrix::from_rows({{0, 1}}), PreconditionError);
}

TEST_CASE("rank and determinant") {
  const auto k3 = adjacency_matrix(MarkedGraph::complete(3));
  CHECK(gf2_rank(k3) == 2);
  CHECK(gf2_det(k3) == 0);
  CHECK(gf2_nullity(k3) == 1);
  CHECK(gf2_det(adjacency_matrix(MarkedGraph(2, {{0, 1}}))) == 1);

  SUBCASE("agree with brute force") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
      const auto m = random_symmetric(static_cast<std::size_t>(trial % 8), rng);
      const auto rows = m.to_rows();
      CHECK(static_cast<int>(gf2_rank(m)) == oracle::rank_mod2(rows));
      CHECK(gf2_det(m) == oracle::det_mod2(rows));
    }
  }
  SUBCASE("wide matrices") {
    // Identity plus one off-diagonal pair spanning word boundaries.
    Gf2SymmetricMatrix m(130);
    for (std::size_t i = 0; i < 130; ++i) m.set(i, i, true);
    CHECK(gf2_rank(m) == 130);
    m.set(3, 100, true);
    m.set(100, 100, false);
    CHECK(gf2_rank(m) == 130);
    m.set(3, 3, false);
    CHECK(gf2_rank(m) == 130);
  }
  SUBCASE("direct sums add ranks") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = random_symmetric(static_cast<std::size_t>(trial % 5), rng);
      const auto b = random_symmetric(static_cast<std::size_t>((trial / 5) % 5), rng);
      const auto s = a.direct_sum(b);
      CHECK(s.size() == a.size() + b.size());
      CHECK(gf2_rank(s) == gf2_rank(a) + gf2_rank(b));
    }
  }
  SUBCASE("unmarked intersection forms have even rank") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
      const auto g = random_graph(trial % 9, 0.5, rng);
      CHECK(gf2_rank(adjacency_matrix(g)) % 2 == 0);
    }
  }
}

TEST_CASE("symmetric_transvection") {
  const auto ones = Gf2SymmetricMatrix::from_rows({{1, 1}, {1, 1}});
  const auto t = symmetric_transvection(ones, 0, 1);
  CHECK(gf2_rank(t) == 1);
  // Row 1 added to row 0 zeroes it, then the column follows.
  CHECK(t.to_rows() == std::vector<std::vector<int>>{{0, 0}, {0, 1}});
  CHECK_THROWS(symmetric_transvection(ones, 1, 1));

  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 6);
    const auto m = random_symmetric(n, rng);
    const std::size_t a = rng() % n;
    const std::size_t b = (a + 1 + rng() % (n - 1)) % n;
    const auto r = symmetric_transvection(m, a, b);
    const auto rows = r.to_rows();
    CHECK(rows == Gf2SymmetricMatrix::from_rows(rows).to_rows());
    CHECK(oracle::rank_mod2(rows) == oracle::rank_mod2(m.to_rows()));
    CHECK(oracle::det_mod2(rows) == oracle::det_mod2(m.to_rows()));
    // Alternation is preserved as well.
    CHECK(r.diagonal_is_zero() == m.diagonal_is_zero());
  }
}

TEST_CASE("congruence_normal_form") {
  const auto x = adjacency_matrix(MarkedGraph(2, {{0, 1}}));
  CHECK(congruence_normal_form(x) == CaravanClass{0, 0, 1});
  CHECK(congruence_normal_form(Gf2SymmetricMatrix::from_rows({{1, 1}, {1, 1}})) ==
        CaravanClass{1, 1, 0});
  CHECK(congruence_normal_form(adjacency_matrix(MarkedGraph(1))) == CaravanClass{0, 1, 0});
  CHECK(congruence_normal_form(Gf2SymmetricMatrix()) == CaravanClass{0, 0, 0});
  // A marked vertex joined to a crossing pair is not alternating.
  CHECK(congruence_normal_form(adjacency_matrix(MarkedGraph(3, {{0, 1}, {1, 2}}, 0b001))) ==
        CaravanClass{3, 0, 0});

  const auto blocks = congruence_blocks(x.direct_sum(Gf2SymmetricMatrix::from_rows({{1}})));
  CHECK(blocks.ones + 2 * blocks.hyperbolic + blocks.zeros == 3);
  CHECK(blocks.zeros == 0);

  SUBCASE("fixed point on caravans and block counts") {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = static_cast<std::size_t>(trial % 9);
      const auto m = random_symmetric(n, rng);
      const auto c = congruence_normal_form(m);
      CHECK(c.degree() == n);
      CHECK(c.n1 + 2 * c.n3 == gf2_rank(m));
      if (gf2_rank(m) > 0) CHECK((c.n1 == 0) == m.diagonal_is_zero());
      // Rebuild the caravan form and normalize again.
      Gf2SymmetricMatrix rebuilt;
      for (std::size_t i = 0; i < c.n1; ++i) rebuilt = rebuilt.direct_sum(Gf2SymmetricMatrix::from_rows({{1}}));
      for (std::size_t i = 0; i < c.n2; ++i) rebuilt = rebuilt.direct_sum(Gf2SymmetricMatrix(1));
      for (std::size_t i = 0; i < c.n3; ++i) rebuilt = rebuilt.direct_sum(x);
      CHECK(congruence_normal_form(rebuilt) == c);
      const auto b = congruence_blocks(m);
      CHECK(b.ones + 2 * b.hyperbolic == gf2_rank(m));
      CHECK(b.zeros == gf2_nullity(m));
    }
  }
}
