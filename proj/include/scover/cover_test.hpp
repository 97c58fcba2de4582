#ifndef SCOVER_COVER_TEST_HPP_
#define SCOVER_COVER_TEST_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "scover/word.hpp"

namespace scover {

using Positions = std::vector<std::size_t>;

// Leftmost and rightmost embeddings of a candidate C (|C| = m) in a text S
// (|S| = n), plus pref[i]: the largest j with first_occ[j] <= i and
// S[first_occ[j]] == S[i], or -1.
//
// first_occ[0] == 0 and last_occ[m - 1] == n - 1 always hold for tables
// returned by build_tables(); last_occ[m] == n is a sentinel.
struct OccurrenceTables {
  Positions first_occ;
  Positions last_occ;
  std::vector<long> pref;
};

// Tables for (C, S), or nullopt when C does not embed in S anchored at both
// ends, in which case C is not an s-cover of S.
// Throws InputError when either word is empty.
std::optional<OccurrenceTables> build_tables(const Word& cover,
                                             const Word& text);

// Same tables without the anchoring requirement: nullopt only when C is not a
// subsequence of S. Position i is covered by some occurrence of C exactly
// when covers_position() holds, anchored or not.
std::optional<OccurrenceTables> occurrence_tables(const Word& cover,
                                                  const Word& text);
bool covers_position(const OccurrenceTables& tables, std::size_t i);

// O(|S|) s-cover test.
bool is_s_cover(const Word& cover, const Word& text);

struct CoverReport {
  bool is_cover = false;
  std::vector<bool> covered;
  std::size_t coverage = 0;
  // witnesses[i] is an occurrence of C through position i, empty when i is
  // not covered. Absent when the caller did not ask for witnesses.
  std::optional<std::vector<Positions>> witnesses;
};

// Coverage of C in S with the canonical witness for each covered position i:
// first_occ[0, j) ++ [i] ++ last_occ(j, m) where j = pref[i].
CoverReport cover_report(const Word& cover, const Word& text,
                         bool with_witnesses = true);

// Reference implementations used to cross-check cover_report().
//
// oracle_split decides each position i by the split characterisation: some j
// with C[j] == S[i], C[0, j) a subsequence of S[0, i) and C(j, m) a
// subsequence of S(i, n), using quadratic reachability tables.
// Requires |C| * |S| <= 10^7.
CoverReport oracle_split(const Word& cover, const Word& text);

// Enumerates every occurrence of C in S and unions their positions.
// Requires |S| <= 18.
CoverReport oracle_enumerate(const Word& cover, const Word& text);

// S' = S[0]^r0 S[1]^r1 ... S[n-1]^r(n-1) together with a partition of its
// positions into disjoint occurrences of C, built from the deduplicated
// canonical witnesses of cover_report(). parts[t] is sorted.
struct ShuffleExpansion {
  std::vector<std::size_t> multiplicity;
  Word expanded;
  std::vector<Positions> parts;
};

// Throws PreconditionError when C is not an s-cover of S.
ShuffleExpansion shuffle_expand(const Word& cover, const Word& text);

}  // namespace scover

#endif  // SCOVER_COVER_TEST_HPP_
