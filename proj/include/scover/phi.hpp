#ifndef SCOVER_PHI_HPP_
#define SCOVER_PHI_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>

#include "scover/word.hpp"

namespace scover {

// Which inequalities a pair of length-2 factors a1 a2 (of X) and b1 b2 (of Y)
// must satisfy. `full` is  a1 not in {b1, b2}  and  b2 not in {a1, a2}.
// The other variants exist for mutation testing of the XY enumeration.
enum class PhiRule {
  full,
  drop_b2_clause,    // only a1 not in {b1, b2}
  strict_b2_clause,  // full, and additionally b1 not in {a1, a2}
};

bool pair_condition(Letter a1, Letter a2, Letter b1, Letter b2,
                    PhiRule rule = PhiRule::full);

// Some length-2 factors of X and Y satisfy the pair condition. Throws
// InputError when |X| < 2 or |Y| < 2.
bool phi(const Word& x, const Word& y, PhiRule rule = PhiRule::full);

// Index pair (i, j) of the first witnessing factors X[i, i+2), Y[j, j+2) in
// row-major order, if any.
std::optional<std::pair<std::size_t, std::size_t>> phi_witness(
    const Word& x, const Word& y, PhiRule rule = PhiRule::full);

// Pair condition between the first two and the last two letters; true for
// words of length at most 3.
bool psi(const Word& s);

// X matches Y  iff  phi(X, reverse(Y)).
bool matches(const Word& x, const Word& y);

struct XyVerdict {
  bool pass = false;
  std::uint64_t pairs = 0;  // jointly canonical (X, Y) examined
  std::uint64_t counterexamples = 0;
  std::optional<std::pair<Word, Word>> first_counterexample;
  std::set<Word> x_types;  // distinct X seen, each canonical
};

// Checks phi(X, Y) for every square-free X of length 4 and square-free Y of
// length 6, up to renaming of letters across the concatenation X Y.
XyVerdict verify_xy_lemma(PhiRule rule = PhiRule::full);

// Factor W' = W[start, start + length) with |W'| >= |W| - 6 and psi(W'),
// following the prefix-4 / suffix-6 argument. Throws InputError when W is not
// square-free.
FactorRange find_psi_factor(const Word& w);

// first(S) followed by last(S), dropping the first letter of last(S) when it
// equals the last letter of first(S). Never has two equal adjacent letters.
Word fl_word(const Word& s);

}  // namespace scover

#endif  // SCOVER_PHI_HPP_
