#ifndef SCOVER_EXTREMAL_HPP_
#define SCOVER_EXTREMAL_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "scover/cover_search.hpp"
#include "scover/word.hpp"

namespace scover {

// ---------------------------------------------------------------------------
// Longest s-primitive words.

struct GammaConfig {
  unsigned k = 3;
  // Depth cap. Required for k >= 5, where the search has no known end.
  std::optional<std::size_t> max_len;
  unsigned workers = 1;

  // Cheap sufficient conditions for non-primitivity, tried before the full
  // cover search on each node. Turning them off never changes the report.
  bool filter_square = true;
  bool filter_gapped_repeat = true;
  bool filter_abxbc = true;

  // Subtrees rooted at this depth are the unit of work and of checkpointing.
  std::size_t split_depth = 8;
  // When set, progress is saved here after every finished subtree and an
  // existing file is resumed from.
  std::optional<std::filesystem::path> checkpoint;
  bool keep_words = true;
};

struct GammaReport {
  unsigned k = 0;
  std::size_t gamma = 0;
  std::uint64_t canonical_count = 0;
  // Number of words over a fixed k-letter alphabet that rename to one of the
  // canonical words: k! / (k - letters used)! per canonical word.
  std::uint64_t total_count = 0;
  std::vector<Word> canonical_words;  // sorted
  std::uint64_t nodes_explored = 0;   // s-primitive canonical words visited

  friend bool operator==(const GammaReport&, const GammaReport&) = default;
};

// Exhaustive search over canonical words, extending a word only while it is
// s-primitive. Throws ResourceError for k >= 5 without max_len and InputError
// for k == 0 or k > 26 or a checkpoint that does not match the request.
GammaReport gamma_search(const GammaConfig& config);

// True when the node passes the cheap filters and the full cover search.
// Exposed for tests; assumes every proper prefix of w is s-primitive.
bool extends_primitive(const Word& w, const GammaConfig& config);

// ---------------------------------------------------------------------------
// Word families.

// a, aba, abcabacb, abacadbabdcabcbadac for k = 1..4; S_k = S_{k-1} x S_{k-1}
// with a fresh letter x beyond that. Requires 1 <= k <= 12.
Word lower_bound_word(unsigned k);

// Length-n prefix of the infinite word whose prefixes are T_0 =
// abcadbcacbdacba and T_i = T_{i-1} a_i T_{i-1}, a_i the letter 3 + i.
// Requires 1 <= n <= 2^20.
Word multicover_word(std::size_t n);

// ---------------------------------------------------------------------------
// Bounds on gamma.

struct BoundsRow {
  unsigned k = 0;
  std::optional<std::size_t> gamma;  // exact value where known
  // Best lower bound: exact gamma for k <= 4, 5 * 2^(k-2) - 1 beyond.
  BigInt lower;
  // (2k + 2)(g + 1) - 1 with g the best upper bound for k - 1; k >= 2.
  std::optional<BigInt> preliminary_upper;
  std::optional<BigInt> delta;       // Delta(4) = 19, (2k - 2) Delta + 6
  std::optional<BigInt> conference;  // P(4) = 19, P(k) = 2k P(k - 1)
  std::optional<BigInt> factorial_cap;  // 2^(k-1) k!, for k >= 4
  // gamma'(1) = 1, gamma'(k+1) = 2 gamma'(k) + k; a conjecture, not a bound.
  BigInt conjectured;
};

// Rows for k = 1..k_max. Requires 1 <= k_max <= 64.
std::vector<BoundsRow> bounds_table(unsigned k_max);

}  // namespace scover

#endif  // SCOVER_EXTREMAL_HPP_
