#ifndef SCOVER_COVER_SEARCH_HPP_
#define SCOVER_COVER_SEARCH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "scover/word.hpp"

namespace scover {

using BigInt = boost::multiprecision::cpp_int;

// Knobs for the candidate search. The prune_* flags only affect running
// time; verdicts, witnesses and counts are identical with any combination.
struct SearchConfig {
  bool prune_square_free = true;
  bool prune_subsequence = true;
  // Drop a prefix as soon as some position it has passed can no longer be
  // covered by any continuation.
  bool prune_coverage = true;
  std::optional<std::size_t> max_candidate_len;
  bool enumerate_all = false;
  bool count_only = false;
  // Candidate nodes per search before ResourceError; 0 means unlimited.
  std::uint64_t node_budget = 500'000'000;
};

struct ShortestResult {
  std::size_t length = 0;
  Word witness;  // lexicographically smallest shortest s-cover
  std::optional<std::vector<Word>> all;
  std::optional<std::uint64_t> count;
};

// Candidates are tried by increasing length, then lexicographically.
// Throws InputError for an empty word and ResourceError when the budget runs
// out or max_candidate_len is below the shortest cover length.
ShortestResult shortest_s_cover(const Word& text, const SearchConfig& config = {});

struct PrimitivityResult {
  bool primitive = false;
  std::optional<Word> witness;  // a non-trivial s-cover when not primitive
};

// Splits at letters occurring once, uses the prefix reduction for words
// longer than gamma(k) when k <= 4, and falls back to a direct search.
PrimitivityResult is_s_primitive(const Word& text,
                                 const SearchConfig& config = {});

// Some s-cover shorter than the text, found by a single depth-first pass.
// No decomposition or gamma shortcuts; this is the raw search used while
// computing gamma.
std::optional<Word> find_nontrivial_cover(const Word& text,
                                          const SearchConfig& config = {});

// gamma(k) for the alphabet sizes where it is known exactly (k <= 4).
std::optional<std::size_t> known_gamma(std::size_t k);

// An s-cover of the text of length at most gamma(k). Throws UnsupportedError
// when the text has more than four distinct letters.
Word reduce_to_bounded_cover(const Word& text, const SearchConfig& config = {});

struct UniqueLetterDecomposition {
  std::size_t position;
  Word left;
  Word right;
};

// Split around the leftmost position whose letter occurs exactly once.
std::optional<UniqueLetterDecomposition> decompose_unique_letter(
    const Word& text);

struct ShortestCount {
  std::size_t length = 0;
  BigInt count;
};

// Number of distinct shortest s-covers. Letters that occur once split the
// problem (lengths add, counts multiply); the remaining blocks are
// enumerated directly.
ShortestCount count_shortest_s_covers(const Word& text,
                                      const SearchConfig& config = {});

}  // namespace scover

#endif  // SCOVER_COVER_SEARCH_HPP_
