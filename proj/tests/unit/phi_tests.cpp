#include <doctest.h>

#include "scover/errors.hpp"
#include "scover/phi.hpp"

using namespace scover;

TEST_CASE("phi and psi examples") {
  CHECK(phi(letters("abca"), letters("aacddd")));
  CHECK(psi(letters("abbc")));
  CHECK_FALSE(psi(letters("abcb")));
  CHECK(psi(letters("aba")));
  CHECK(psi(letters("a")));
  CHECK_THROWS_AS(phi(letters("a"), letters("ab")), InputError);
}

TEST_CASE("matches is phi against the reversal") {
  // Z1 Z matches Z2 Z for distinct letters.
  CHECK(matches(letters("ac"), letters("bc")));
  // ABCA matches each of these.
  for (const char* v : {"ac", "ba", "cb", "ad", "bd", "cd"})
    CHECK(matches(letters("abca"), letters(v)));
  CHECK(matches(letters("abc"), letters("cab")) ==
        phi(letters("abc"), letters("bac")));
}

TEST_CASE("XY enumeration") {
  const XyVerdict v = verify_xy_lemma();
  CHECK(v.pass);
  CHECK(v.counterexamples == 0);
  CHECK(v.pairs > 0);
  std::set<Word> shapes;
  for (const Word& x : v.x_types) shapes.insert(canonicalize(x));
  CHECK(shapes == std::set<Word>{letters("abac"), letters("abca"),
                                 letters("abcb"), letters("abcd")});
  // Non-square-free Y never reaches the check.
  CHECK(ends_with_square(letters("aa").span()));
  CHECK_FALSE(is_square_free(letters("aacacb")));
}

TEST_CASE("pair rule variants") {
  CHECK(pair_condition(0, 1, 2, 3));
  CHECK_FALSE(pair_condition(0, 1, 0, 3));
  CHECK_FALSE(pair_condition(0, 1, 2, 1));
  CHECK(pair_condition(0, 1, 2, 1, PhiRule::drop_b2_clause));
  CHECK_FALSE(pair_condition(0, 1, 1, 2, PhiRule::strict_b2_clause));
  CHECK(verify_xy_lemma(PhiRule::drop_b2_clause).pass);
  CHECK_FALSE(verify_xy_lemma(PhiRule::strict_b2_clause).pass);
}

TEST_CASE("psi factors") {
  const Word w = letters("abcabadabacba");
  const FactorRange f = find_psi_factor(w);
  CHECK(f.length == w.size() - 6);
  CHECK(psi(w.factor(f.start, f.length)));
  CHECK(find_psi_factor(letters("abcab")) == FactorRange{0, 3});
  CHECK(find_psi_factor(letters("ab")) == FactorRange{0, 2});
  CHECK_THROWS_AS(find_psi_factor(letters("abab")), InputError);
}

TEST_CASE("FL words have no equal neighbours") {
  CHECK(fl_word(letters("abadbcd")) == letters("abdcabcd"));
  CHECK(fl_word(letters("abcba")) == letters("abcba"));
  for (const char* s : {"abcba", "abacadbabdcabcbadac", "abcabacb", "aab", "a"}) {
    const Word fl = fl_word(letters(s));
    for (std::size_t i = 1; i < fl.size(); ++i) CHECK(fl[i] != fl[i - 1]);
  }
}
