#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "scover/errors.hpp"
#include "scover/word.hpp"

using namespace scover;

TEST_CASE("letters maps a..z without renaming") {
  CHECK(letters("ba") == Word{1, 0});
  CHECK(render_canonical(letters("abcab")) == "abcab");
  CHECK_THROWS_AS(letters("aB"), InputError);
  CHECK(render_canonical(Word{0, 30, 2}) == "0,30,2");
}

TEST_CASE("parse_word in chars mode") {
  const ParsedWord p = parse_word("  xyzx \n", ParseMode::chars);
  CHECK(p.word == Word{0, 1, 2, 0});
  CHECK(render(p.word, p.map) == "xyzx");
  CHECK_THROWS_AS(parse_word("", ParseMode::chars), InputError);
  CHECK_THROWS_AS(parse_word("   ", ParseMode::chars), InputError);
  CHECK_THROWS_AS(parse_word("a b", ParseMode::chars), InputError);
}

TEST_CASE("parse_word in tokens mode") {
  const ParsedWord p = parse_word("10, 7 10,x", ParseMode::tokens);
  CHECK(p.word == Word{0, 1, 0, 2});
  CHECK(render(p.word, p.map) == "10,7,10,x");
  CHECK_THROWS_AS(parse_word("1,,2", ParseMode::tokens), InputError);
  CHECK_THROWS_AS(parse_word(" , ", ParseMode::tokens), InputError);
}

TEST_CASE("shared alphabet map numbers both words alike") {
  AlphabetMap map;
  const Word s = parse_word("bca", map);
  const Word c = parse_word("ad", map);
  CHECK(s == Word{0, 1, 2});
  CHECK(c == Word{2, 3});
  CHECK(map.size() == 4);
}

TEST_CASE("canonical form and first/last words") {
  CHECK(canonicalize(letters("cacb")) == letters("abac"));
  CHECK(is_canonical(letters("abac")));
  CHECK_FALSE(is_canonical(letters("bab")));
  CHECK(first_word(letters("abadbcd")) == letters("abdc"));
  CHECK(last_word(letters("abadbcd")) == letters("abcd"));
  CHECK(alphabet_size(letters("abadbcd")) == 4);
}

TEST_CASE("subsequence test") {
  CHECK(is_subsequence(letters("ace"), letters("abcde")));
  CHECK_FALSE(is_subsequence(letters("ea"), letters("abcde")));
  CHECK(is_subsequence(Word{}, letters("a")));
}

TEST_CASE("squares") {
  CHECK(find_square(letters("abcbc")) == Square{1, 4});
  CHECK(find_square(letters("aa")) == Square{0, 2});
  CHECK(is_square_free(letters("abcabadabacba")));
  CHECK(ends_with_square(letters("abab").span()));
  CHECK_FALSE(ends_with_square(letters("ababc").span()));
}

TEST_CASE("square search agrees with a direct scan") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 2000; ++t) {
    const Word w = brute::random_word(rng, 1 + rng() % 12, 3);
    bool has = false;
    for (std::size_t i = 0; i < w.size() && !has; ++i)
      for (std::size_t h = 1; i + 2 * h <= w.size() && !has; ++h)
        has = w.factor(i, h) == w.factor(i + h, h);
    CHECK(is_square_free(w) == !has);
  }
}

TEST_CASE("gapped repeats") {
  // ab c ab with c not in {a, b} is not a witness; ab a ab is.
  CHECK_FALSE(find_gapped_repeat_cover(letters("abcab")).has_value());
  const auto g = find_gapped_repeat_cover(letters("cabaab"));
  REQUIRE(g.has_value());
  CHECK(g->v_len == 0);  // the square aa comes first
  const auto h = find_gapped_repeat_cover(letters("abcabacb"));
  CHECK_FALSE(h.has_value());
  const auto u = find_gapped_repeat_cover(letters("dabbab"));
  REQUIRE(u.has_value());
  CHECK(ends_with_gapped_repeat(letters("abaab").span()));
  CHECK(ends_with_gapped_repeat(letters("cabab").span()));
  CHECK_FALSE(ends_with_gapped_repeat(letters("abcab").span()));
}

TEST_CASE("abXbc factors") {
  CHECK(find_abxbc_factor(letters("abbc")) == FactorRange{0, 4});
  CHECK(find_abxbc_factor(letters("cabacbc")).has_value());
  CHECK_FALSE(find_abxbc_factor(letters("abcabacb")).has_value());
  CHECK_FALSE(find_abxbc_factor(letters("abdbc")).has_value());  // four letters
  CHECK(ends_with_abxbc(letters("abcabc").span()));
}

TEST_CASE("zimin words") {
  CHECK(zimin(1) == letters("a"));
  CHECK(zimin(3) == letters("abacaba"));
  CHECK(zimin(10).size() == 1023);
  CHECK_THROWS_AS(zimin(0), InputError);
  CHECK_THROWS_AS(zimin(27), InputError);
}
