#include <doctest.h>

#include <random>

#include "glossgraft/overlap.hpp"
#include "greedy_oracle.hpp"

using namespace glossgraft;
using Seq = std::vector<std::string>;
using Ids = std::vector<std::uint32_t>;

namespace {

Ids random_seq(std::mt19937_64& rng, std::size_t max_len, std::uint32_t alphabet) {
  Ids s(rng() % (max_len + 1));
  for (auto& x : s) x = static_cast<std::uint32_t>(rng() % alphabet);
  return s;
}

}  // namespace

TEST_SUITE("overlap") {
  TEST_CASE("worked examples") {
    Seq a{"x", "a", "b", "y", "c"}, b{"a", "b", "c"};
    auto ov = find_overlaps(a, b);
    REQUIRE(ov.size() == 2);
    CHECK(ov[0] == Overlap{1, 0, 2});
    CHECK(ov[1] == Overlap{4, 2, 1});
    CHECK(score(a, b).total == 5);

    Seq l{"lithe", "bodied", "roundheaded"};
    CHECK(find_overlaps(l, l) == std::vector<Overlap>{{0, 0, 3}});
    CHECK(score(l, l).total == 9);
    CHECK(find_overlaps(Seq{"cat"}, Seq{"dog"}).empty());
    CHECK(score(Seq{}, l).total == 0);
    CHECK(score(l, Seq{}).total == 0);
  }

  TEST_CASE("consumption splits later matches") {
    // "a b" and "b c" tie; "a b" starts first in a, and once consumed the
    // pair "b c" is no longer available.
    Seq a{"a", "b", "c"}, b{"b", "c", "a", "b"};
    auto ov = find_overlaps(a, b);
    REQUIRE(ov.size() == 2);
    CHECK(ov[0] == Overlap{0, 2, 2});
    CHECK(ov[1] == Overlap{2, 1, 1});
    CHECK(score(a, b).total == 5);
  }

  TEST_CASE("ties go to the smallest start in a, then in b") {
    Seq a{"p", "q", "p", "q"}, b{"p", "q"};
    CHECK(find_overlaps(a, b) == std::vector<Overlap>{{0, 0, 2}});
    Seq c{"z", "z"}, d{"z", "w", "z"};
    auto ov = find_overlaps(c, d);
    REQUIRE(ov.size() == 2);
    CHECK(ov[0] == Overlap{0, 0, 1});
    CHECK(ov[1] == Overlap{1, 2, 1});
  }

  TEST_CASE("matches the brute-force oracle") {
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 3000; ++i) {
      auto a = random_seq(rng, 12, 1 + rng() % 5);
      auto b = random_seq(rng, 12, 1 + rng() % 5);
      auto expected = oracle::greedy_matches(a, b);
      auto got = find_overlaps(a, b);
      REQUIRE(got.size() == expected.size());
      for (std::size_t k = 0; k < got.size(); ++k) {
        CHECK(got[k].pos_a == expected[k].a);
        CHECK(got[k].pos_b == expected[k].b);
        CHECK(got[k].length == expected[k].len);
      }
      CHECK(score_total(a, b) == oracle::greedy_score(a, b));
      CHECK(score(a, b).total == score_total(a, b));
    }
  }

  TEST_CASE("bounds") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 2000; ++i) {
      auto a = random_seq(rng, 15, 4);
      auto b = random_seq(rng, 15, 4);
      auto m = std::min(a.size(), b.size());
      CHECK(score_total(a, b) <= m * m);
      for (const auto& o : find_overlaps(a, b))
        for (std::size_t k = 0; k < o.length; ++k) CHECK(a[o.pos_a + k] == b[o.pos_b + k]);
    }
    Ids distinct{1, 2, 3, 4, 5, 6};
    CHECK(score_total(distinct, distinct) == 36);
    Ids repeated{1, 1, 1};
    CHECK(score_total(repeated, repeated) == 9);
  }

  TEST_CASE("argument order") {
    // Symmetric except where greedy tie-breaking depends on which side
    // is "a"; the engine always passes the WordNet side first.
    std::mt19937_64 rng(4242);
    std::size_t asymmetric = 0;
    for (int i = 0; i < 20000; ++i) {
      auto a = random_seq(rng, 12, 3);
      auto b = random_seq(rng, 12, 3);
      if (score_total(a, b) != score_total(b, a)) {
        ++asymmetric;
        CHECK(oracle::greedy_score(a, b) == score_total(a, b));
        CHECK(oracle::greedy_score(b, a) == score_total(b, a));
      }
    }
    MESSAGE("asymmetric pairs: " << asymmetric << " of 20000");
  }
}
