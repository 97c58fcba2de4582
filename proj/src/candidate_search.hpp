#ifndef SCOVER_SRC_CANDIDATE_SEARCH_HPP_
#define SCOVER_SRC_CANDIDATE_SEARCH_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "scover/word.hpp"

namespace scover::detail {

struct CandidateOptions {
  bool prune_square_free = true;
  bool prune_subsequence = true;
  bool prune_coverage = true;
  std::uint64_t node_budget = 0;  // 0: unlimited
};

// Depth-first enumeration of s-cover candidates C for a fixed text S.
//
// Candidates always start with S[0] and never repeat a letter twice in a row;
// they only use letters of S. Letters are tried in increasing id order, so
// candidates of one length come out lexicographically sorted.
//
// Optional pruning, none of which removes a shortest s-cover:
//   square_free   C has no square suffix.
//   subsequence   C embeds into S (leftmost embedding frontier).
//   coverage      once the leftmost embedding of C passes position i, the
//                 index pref[i] is final; i is dropped as uncoverable when
//                 pref[i] = -1 or C(pref[i], |C|) cannot embed after i. The
//                 suffix constraint of all finalised positions is carried as
//                 a single pointer since "next occurrence" is monotone.
class CandidateSearch {
 public:
  CandidateSearch(const Word& text, CandidateOptions options);

  // Calls on_cover for every s-cover of length exactly len, in lexicographic
  // order, until it returns false.
  void exact_length(std::size_t len,
                    const std::function<bool(const Word&)>& on_cover);

  // Some s-cover of length in [1, max_len], or nullopt.
  std::optional<Word> any_cover(std::size_t max_len);

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  enum class Mode { exact, any };

  void dfs(std::size_t depth);
  bool extend(std::size_t depth, Letter x);
  bool covers(std::size_t len);
  Word to_word(std::size_t len) const;

  int next(int from, Letter x) const {
    return next_[static_cast<std::size_t>(from) * k_ + x];
  }

  CandidateOptions options_;
  std::vector<Letter> text_;      // letters renamed to 0..k-1, order kept
  std::vector<Letter> original_;  // dense id -> original letter
  int n_ = 0;
  std::size_t k_ = 0;
  std::vector<int> next_;  // next_[p * k + x]: first q >= p with S[q] == x

  Mode mode_ = Mode::exact;
  std::size_t target_ = 0;
  bool stop_ = false;
  std::uint64_t nodes_ = 0;
  const std::function<bool(const Word&)>* on_cover_ = nullptr;
  std::optional<Word> found_;

  std::vector<Letter> cand_;
  std::vector<int> first_occ_;  // per candidate index, n when not embedded
  std::vector<int> suffix_ptr_; // per prefix length, -1 when unconstrained
  std::vector<int> last_occ_;   // scratch for covers()
  std::vector<int> pred_;       // scratch for covers()
};

}  // namespace scover::detail

#endif  // SCOVER_SRC_CANDIDATE_SEARCH_HPP_
