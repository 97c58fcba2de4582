#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "scover/cover_test.hpp"
#include "scover/errors.hpp"

using namespace scover;

TEST_CASE("golden tables for abcab in abacbacab") {
  const auto t = build_tables(letters("abcab"), letters("abacbacab"));
  REQUIRE(t.has_value());
  CHECK(t->first_occ == Positions{0, 1, 3, 5, 8});
  CHECK(t->last_occ == Positions{2, 4, 6, 7, 8, 9});
  CHECK(t->pref == std::vector<long>{0, 1, 0, 2, 1, 3, 2, 3, 4});
  CHECK(is_s_cover(letters("abcab"), letters("abacbacab")));
}

TEST_CASE("small verdicts") {
  CHECK(is_s_cover(letters("abcab"), letters("abcbacab")));
  CHECK_FALSE(is_s_cover(letters("abc"), letters("abcb")));
  CHECK(is_s_cover(letters("ab"), letters("aab")));
  CHECK(is_s_cover(letters("a"), letters("aaaa")));
  CHECK_FALSE(is_s_cover(letters("ab"), letters("ba")));
  CHECK_FALSE(is_s_cover(letters("abc"), letters("ab")));
  CHECK_THROWS_AS(is_s_cover(Word{}, letters("a")), InputError);
  CHECK_THROWS_AS(is_s_cover(letters("a"), Word{}), InputError);
}

TEST_CASE("anchoring") {
  // C must start with S[0] and end with S[n-1].
  CHECK_FALSE(build_tables(letters("bc"), letters("abc")).has_value());
  CHECK_FALSE(build_tables(letters("ab"), letters("abc")).has_value());
  const auto t = occurrence_tables(letters("ab"), letters("abc"));
  REQUIRE(t.has_value());
  CHECK(covers_position(*t, 0));
  CHECK(covers_position(*t, 1));
  CHECK_FALSE(covers_position(*t, 2));
  CHECK_FALSE(occurrence_tables(letters("ca"), letters("abc")).has_value());
}

TEST_CASE("coverage") {
  const CoverReport r = cover_report(letters("abc"), letters("abcb"));
  CHECK(r.coverage == 3);
  CHECK(r.covered == std::vector<bool>{true, true, true, false});
  CHECK_FALSE(r.is_cover);
  CHECK(cover_report(letters("ba"), letters("ab")).coverage == 0);
  const Word s = letters("abcbacab");
  CHECK(cover_report(s, s).coverage == s.size());
}

TEST_CASE("witnesses are occurrences through their position") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 3000; ++t) {
    const unsigned k = 1 + rng() % 4;
    const Word s = brute::random_word(rng, 1 + rng() % 14, k);
    const Word c = brute::random_word(rng, 1 + rng() % s.size(), k);
    const CoverReport r = cover_report(c, s);
    REQUIRE(r.witnesses.has_value());
    for (std::size_t i = 0; i < s.size(); ++i) {
      const Positions& p = (*r.witnesses)[i];
      CHECK(p.empty() == !r.covered[i]);
      if (p.empty()) continue;
      REQUIRE(p.size() == c.size());
      CHECK(std::find(p.begin(), p.end(), i) != p.end());
      for (std::size_t j = 0; j < p.size(); ++j) {
        CHECK(s[p[j]] == c[j]);
        if (j) CHECK(p[j - 1] < p[j]);
      }
    }
    CHECK(r.covered == cover_report(c, s, false).covered);
    CHECK_FALSE(cover_report(c, s, false).witnesses.has_value());
  }
}

TEST_CASE("linear test agrees with brute force and both oracles") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 3000; ++t) {
    const unsigned k = 1 + rng() % 3;
    const Word s = brute::random_word(rng, 1 + rng() % 12, k);
    const Word c = brute::random_word(rng, 1 + rng() % s.size(), k);
    const std::uint64_t mask = brute::covered_mask(c, s);
    const CoverReport r = cover_report(c, s, false);
    for (std::size_t i = 0; i < s.size(); ++i)
      CHECK(r.covered[i] == static_cast<bool>(mask >> i & 1));
    CHECK(oracle_split(c, s).covered == r.covered);
    CHECK(oracle_enumerate(c, s).covered == r.covered);
  }
}

TEST_CASE("large sparse letter ids") {
  const Word s{1000000, 7, 1000000, 7};
  CHECK(is_s_cover(Word{1000000, 7}, s));
  CHECK(cover_report(Word{7, 1000000}, s).coverage == 2);
}

TEST_CASE("oracle guards") {
  CHECK_THROWS_AS(oracle_enumerate(letters("a"), Word(std::vector<Letter>(19, 0))),
                  InputError);
}

TEST_CASE("shuffle expansion") {
  const Word c = letters("abcab");
  const Word s = letters("abcbacab");
  const ShuffleExpansion e = shuffle_expand(c, s);
  REQUIRE(e.multiplicity.size() == s.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(e.multiplicity[i] >= 1);
    total += e.multiplicity[i];
  }
  CHECK(e.expanded.size() == total);
  CHECK(total == e.parts.size() * c.size());
  std::vector<int> used(total, 0);
  for (const Positions& part : e.parts) {
    REQUIRE(part.size() == c.size());
    for (std::size_t j = 0; j < part.size(); ++j) {
      CHECK(e.expanded[part[j]] == c[j]);
      ++used[part[j]];
    }
  }
  for (int u : used) CHECK(u == 1);
  CHECK_THROWS_AS(shuffle_expand(letters("abc"), letters("abcb")), PreconditionError);
}
