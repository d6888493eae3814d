#include <doctest.h>

#include <random>
#include <set>

#include "chordweights/chord_diagram.hpp"
#include "chordweights/errors.hpp"
#include "chordweights/random.hpp"
#include "oracles.hpp"

using namespace chordweights;

namespace {

MarkedChordDiagram D(const char *text) { return parse_diagram(text); }

MarkedChordDiagram rotated(const MarkedChordDiagram &d, std::size_t by) {
  std::vector<int> w(d.length());
  for (std::size_t i = 0; i < d.length(); ++i) w[i] = d.label_at((i + by) % d.length());
  return MarkedChordDiagram(w, d.marks());
}

} // namespace

TEST_CASE("parse_diagram") {
  const auto x = D("1 2 1 2");
  CHECK(x.degree() == 2);
  CHECK(x.word() == std::vector<int>{0, 1, 0, 1});
  CHECK_FALSE(x.has_marks());

  const auto tm = D("1# 1");
  CHECK(tm == MarkedChordDiagram::marked_theta());

  CHECK_THROWS_AS(D("1 2 1"), ParseError);
  CHECK_THROWS_AS(D("1 1 1"), ParseError);
  CHECK_THROWS_AS(D("1 ## 1"), ParseError);

  SUBCASE("empty input is the degree-0 diagram") {
    CHECK(D("").degree() == 0);
    CHECK(D("   ").length() == 0);
  }
  SUBCASE("labels are opaque and renumbered by first occurrence") {
    CHECK(D("b a b a") == x);
    CHECK(D("foo bar bar foo").word() == std::vector<int>{0, 1, 1, 0});
  }
  SUBCASE("a mark on either or both occurrences marks the chord") {
    CHECK(D("1# 2 1 2").is_marked(0));
    CHECK(D("1 2 1# 2").is_marked(0));
    CHECK(D("1# 2 1# 2") == D("1 2 1# 2"));
    CHECK_FALSE(D("1 2 1# 2").is_marked(1));
  }
  CHECK(D("1# 2 1# 2").to_string() == "1# 2 1# 2");
}

TEST_CASE("canonical_form") {
  CHECK(canonical_form(MarkedChordDiagram({1, 0, 1, 0})).word() == std::vector<int>{0, 1, 0, 1});
  // Rotating [1 2 2 1] by one gives [1 1 2 2], which is smaller.
  CHECK(canonical_form(D("1 2 2 1")).word() == std::vector<int>{0, 0, 1, 1});
  CHECK(canonical_form(D("1 1 2 2")).word() == std::vector<int>{0, 0, 1, 1});
  CHECK(canonical_form(D("1 1 2 2")) == canonical_form(D("2 1 1 2")));
  CHECK(canonical_form(MarkedChordDiagram()) == MarkedChordDiagram());

  SUBCASE("marks are part of the key") {
    CHECK(canonical_form(D("1# 1 2 2")) != canonical_form(D("1 1 2 2")));
    CHECK(equivalent(D("1# 1 2 2"), D("1 1 2# 2")));
  }

  SUBCASE("idempotent and rotation invariant") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
      const auto d = random_diagram(1 + trial % 7, 0.4, rng);
      const auto c = canonical_form(d);
      CHECK(canonical_form(c) == c);
      for (std::size_t r = 0; r < d.length(); ++r) CHECK(canonical_form(rotated(d, r)) == c);
    }
  }
  SUBCASE("reflection is not an equivalence") {
    // Smallest diagram not equivalent to its mirror image under rotation.
    const auto d = D("1 1 2 3 4 2 4 3");
    std::vector<int> rev(d.word().rbegin(), d.word().rend());
    CHECK_FALSE(equivalent(d, MarkedChordDiagram(rev)));
  }
}

TEST_CASE("connect_sum") {
  const auto theta = MarkedChordDiagram::theta();
  const auto x = MarkedChordDiagram::crossed_pair();
  CHECK(connect_sum(theta, x).word() == std::vector<int>{0, 0, 1, 2, 1, 2});
  CHECK(connect_sum(x, MarkedChordDiagram()) == x);
  CHECK(connect_sum(MarkedChordDiagram(), x) == x);
  const auto tm2 = connect_sum(MarkedChordDiagram::marked_theta(), MarkedChordDiagram::marked_theta());
  CHECK(tm2.word() == std::vector<int>{0, 0, 1, 1});
  CHECK(tm2.mark_mask() == 0b11);
  CHECK(isolated_chords(3).word() == std::vector<int>{0, 0, 1, 1, 2, 2});
}

TEST_CASE("coproduct") {
  const auto theta = MarkedChordDiagram::theta();
  const auto empty = MarkedChordDiagram();

  const auto dt = coproduct(theta);
  REQUIRE(dt.size() == 2);
  CHECK(dt[0].value == DiagramPair{theta, empty});
  CHECK(dt[1].value == DiagramPair{empty, theta});

  const auto d0 = coproduct(empty);
  REQUIRE(d0.size() == 1);
  CHECK(d0[0].value == DiagramPair{empty, empty});

  const auto dx = coproduct(MarkedChordDiagram::crossed_pair());
  REQUIRE(dx.size() == 4);
  CHECK(dx[1].subset == 1);
  CHECK(dx[1].value == DiagramPair{theta, theta});
  // Merged, the two middle terms combine.
  const auto merged = merge_terms(dx);
  CHECK(merged.size() == 3);
  CHECK(merged.coefficient({theta, theta}) == 2);

  SUBCASE("size and extreme terms") {
    std::mt19937_64 rng(3);
    for (int n = 0; n <= 6; ++n) {
      const auto d = random_diagram(n, 0.3, rng);
      const auto terms = coproduct(d);
      CHECK(terms.size() == (std::size_t{1} << n));
      CHECK(terms.front().value.first == canonical_form(d));
      CHECK(terms.front().value.second == empty);
      CHECK(terms.back().value.first == empty);
      CHECK(terms.back().value.second == canonical_form(d));
    }
  }

  SUBCASE("compatible with the product") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      const auto d1 = random_diagram(trial % 4, 0.3, rng);
      const auto d2 = random_diagram((trial / 4) % 4, 0.3, rng);
      std::multiset<DiagramPair> lhs;
      for (const auto &t : coproduct(connect_sum(d1, d2))) lhs.insert(t.value);
      // Pieces are cut at the original base points, not at canonical ones.
      std::multiset<DiagramPair> rhs;
      const std::uint64_t all1 = (std::uint64_t{1} << d1.degree()) - 1;
      const std::uint64_t all2 = (std::uint64_t{1} << d2.degree()) - 1;
      for (std::uint64_t j1 = 0; j1 <= all1; ++j1)
        for (std::uint64_t j2 = 0; j2 <= all2; ++j2)
          rhs.insert({canonical_form(connect_sum(d1.restricted(all1 & ~j1), d2.restricted(all2 & ~j2))),
                      canonical_form(connect_sum(d1.restricted(j1), d2.restricted(j2)))});
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("marking_expansion") {
  const auto theta = MarkedChordDiagram::theta();
  const auto mt = marking_expansion(theta);
  REQUIRE(mt.size() == 2);
  CHECK(mt[0].coefficient == 1);
  CHECK(mt[0].value == theta);
  CHECK(mt[1].coefficient == -1);
  CHECK(mt[1].value == MarkedChordDiagram::marked_theta());

  const auto m0 = marking_expansion(MarkedChordDiagram());
  REQUIRE(m0.size() == 1);
  CHECK(m0[0].coefficient == 1);

  const auto mx = marking_expansion(MarkedChordDiagram::crossed_pair());
  REQUIRE(mx.size() == 4);
  CHECK(mx[0].coefficient == 1);
  CHECK(mx[1].coefficient == -1);
  CHECK(mx[2].coefficient == -1);
  CHECK(mx[3].coefficient == 1);
  CHECK(mx[3].value.mark_mask() == 0b11);
  // X^{1} and X^{2} are rotations of each other.
  CHECK(mx[1].value == mx[2].value);

  CHECK_THROWS_AS(marking_expansion(MarkedChordDiagram::marked_theta()), PreconditionError);

  for (int n = 1; n <= 5; ++n) {
    std::int64_t sum = 0;
    for (const auto &t : marking_expansion(isolated_chords(n))) sum += t.coefficient;
    CHECK(sum == 0);
  }
}

TEST_CASE("enumerate_diagrams") {
  const auto two = enumerate_diagrams(2);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == D("1 1 2 2"));
  CHECK(two[1] == D("1 2 1 2"));

  // Frozen from the brute-force rotation-class oracle.
  const std::vector<std::size_t> expected{1, 1, 2, 5, 18, 105, 902};
  for (int n = 0; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(enumerate_diagrams(n).size() == expected[static_cast<std::size_t>(n)]);
    if (n <= 5) CHECK(oracle::count_rotation_classes(n) == expected[static_cast<std::size_t>(n)]);
    CHECK(oracle::all_matchings(n).size() == matching_count(n));
  }
  CHECK(matching_count(6) == 10395);

  const auto marked1 = enumerate_diagrams(1, true);
  REQUIRE(marked1.size() == 2);
  CHECK(marked1[0] == MarkedChordDiagram::theta());
  CHECK(marked1[1] == MarkedChordDiagram::marked_theta());

  SUBCASE("pairwise distinct canonical forms, deterministic order") {
    for (bool marked : {false, true}) {
      const auto list = enumerate_diagrams(4, marked);
      std::set<MarkedChordDiagram> unique(list.begin(), list.end());
      CHECK(unique.size() == list.size());
      CHECK(std::is_sorted(list.begin(), list.end()));
      for (const auto &d : list) CHECK(canonical_form(d) == d);
      CHECK(list == enumerate_diagrams(4, marked));
    }
  }
  SUBCASE("marked counts match the oracle") {
    for (int n = 1; n <= 4; ++n) {
      std::set<std::string> keys;
      for (const auto &w : oracle::all_matchings(n))
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
          std::vector<bool> marks(static_cast<std::size_t>(n));
          for (int c = 0; c < n; ++c) marks[static_cast<std::size_t>(c)] = (m >> c) & 1U;
          keys.insert(oracle::rotation_key(w, marks));
        }
      CHECK(enumerate_diagrams(n, true).size() == keys.size());
    }
  }
  CHECK_THROWS_AS(enumerate_diagrams(-1), PreconditionError);
}

TEST_CASE("restricted and endpoints") {
  const auto d = D("1 2# 3 1 2# 3");
  CHECK(d.endpoints(1) == std::pair<std::size_t, std::size_t>{1, 4});
  CHECK(d.partner(4) == 1);
  const auto sub = d.restricted(0b110);
  CHECK(sub.word() == std::vector<int>{0, 1, 0, 1});
  CHECK(sub.is_marked(0));
  CHECK_FALSE(sub.is_marked(1));
  CHECK_THROWS_AS(MarkedChordDiagram({0, 0, 0, 1}), PreconditionError);
  CHECK_THROWS_AS(MarkedChordDiagram({0, 1}), PreconditionError);
}
