#include "candidate_search.hpp"

#include <algorithm>
#include <string>

#include "scover/errors.hpp"

namespace scover::detail {

CandidateSearch::CandidateSearch(const Word& text, CandidateOptions options)
    : options_(options) {
  original_.assign(text.begin(), text.end());
  std::sort(original_.begin(), original_.end());
  original_.erase(std::unique(original_.begin(), original_.end()),
                  original_.end());
  k_ = original_.size();
  n_ = static_cast<int>(text.size());
  text_.reserve(text.size());
  for (Letter x : text)
    text_.push_back(static_cast<Letter>(
        std::lower_bound(original_.begin(), original_.end(), x) -
        original_.begin()));

  // Rows n and n + 1 both answer "none" so that next(n, x) is safe.
  next_.assign((text.size() + 2) * k_, n_);
  for (int p = n_ - 1; p >= 0; --p) {
    const auto row = static_cast<std::size_t>(p) * k_;
    std::copy_n(next_.begin() + static_cast<long>(row + k_), k_,
                next_.begin() + static_cast<long>(row));
    next_[row + text_[static_cast<std::size_t>(p)]] = p;
  }

  cand_.resize(text.size() + 1);
  first_occ_.resize(text.size() + 1);
  suffix_ptr_.resize(text.size() + 2);
  last_occ_.resize(text.size() + 2);
  pred_.resize(k_);
}

void CandidateSearch::exact_length(
    std::size_t len, const std::function<bool(const Word&)>& on_cover) {
  if (len == 0 || len > text_.size()) return;
  mode_ = Mode::exact;
  target_ = len;
  stop_ = false;
  on_cover_ = &on_cover;
  suffix_ptr_[0] = -1;
  dfs(0);
  on_cover_ = nullptr;
}

std::optional<Word> CandidateSearch::any_cover(std::size_t max_len) {
  max_len = std::min(max_len, text_.size());
  if (max_len == 0) return std::nullopt;
  mode_ = Mode::any;
  target_ = max_len;
  stop_ = false;
  found_.reset();
  suffix_ptr_[0] = -1;
  dfs(0);
  return std::move(found_);
}

void CandidateSearch::dfs(std::size_t depth) {
  for (Letter x = 0; x < k_ && !stop_; ++x) {
    if (depth == 0 ? x != text_[0] : x == cand_[depth - 1]) continue;
    if (!extend(depth, x)) continue;

    const std::size_t len = depth + 1;
    const bool test_here = mode_ == Mode::any || len == target_;
    if (test_here && x == text_.back() && covers(len)) {
      if (mode_ == Mode::any) {
        found_ = to_word(len);
        stop_ = true;
        return;
      }
      if (!(*on_cover_)(to_word(len))) {
        stop_ = true;
        return;
      }
    }
    if (len < target_) dfs(len);
  }
}

// Appends x at index depth and updates the frontier state. False when the
// branch is pruned.
bool CandidateSearch::extend(std::size_t depth, Letter x) {
  if (options_.node_budget && nodes_ >= options_.node_budget)
    throw ResourceError("candidate search exceeded its node budget of " +
                        std::to_string(options_.node_budget));
  ++nodes_;
  cand_[depth] = x;

  if (options_.prune_square_free &&
      ends_with_square(std::span<const Letter>(cand_.data(), depth + 1)))
    return false;

  const int prev = depth == 0 ? -1 : first_occ_[depth - 1];
  const int f = prev >= n_ ? n_ : next(prev + 1, x);
  first_occ_[depth] = f;
  if (f == n_) {
    suffix_ptr_[depth + 1] = n_;
    return !options_.prune_subsequence;
  }
  if (!options_.prune_coverage) {
    suffix_ptr_[depth + 1] = -1;
    return true;
  }

  const int before = suffix_ptr_[depth];
  int ptr = before < 0 ? -1 : (before >= n_ ? n_ : next(before + 1, x));
  if (ptr == n_) return false;

  // Positions (prev, f] become final now.
  for (int i = prev + 1; i <= f; ++i) {
    const Letter s = text_[static_cast<std::size_t>(i)];
    long j = static_cast<long>(depth);
    while (j >= 0 && (first_occ_[static_cast<std::size_t>(j)] > i ||
                      cand_[static_cast<std::size_t>(j)] != s))
      --j;
    if (j < 0) return false;
    int q = i;
    for (auto t = static_cast<std::size_t>(j) + 1; t <= depth; ++t) {
      q = next(q + 1, cand_[t]);
      if (q == n_) return false;
    }
    ptr = std::max(ptr, q);
  }
  suffix_ptr_[depth + 1] = ptr;
  return true;
}

// Full linear-time test of cand_[0, len) against the text.
bool CandidateSearch::covers(std::size_t len) {
  const auto m = len;
  for (std::size_t j = 0; j < m; ++j)
    if (first_occ_[j] >= n_) return false;

  std::size_t j = m;
  for (int i = n_ - 1; i >= 0 && j > 0; --i)
    if (text_[static_cast<std::size_t>(i)] == cand_[j - 1])
      last_occ_[--j] = i;
  if (j > 0 || last_occ_[m - 1] != n_ - 1) return false;
  last_occ_[m] = n_;

  std::fill(pred_.begin(), pred_.end(), -1);
  std::size_t k = 0;
  for (int i = 0; i < n_; ++i) {
    const Letter s = text_[static_cast<std::size_t>(i)];
    if (i == first_occ_[k]) {
      pred_[s] = static_cast<int>(k);
      if (k < m - 1) ++k;
    }
    const int p = pred_[s];
    if (p < 0 || last_occ_[static_cast<std::size_t>(p) + 1] <= i) return false;
  }
  return true;
}

Word CandidateSearch::to_word(std::size_t len) const {
  std::vector<Letter> out(len);
  for (std::size_t t = 0; t < len; ++t) out[t] = original_[cand_[t]];
  return Word(std::move(out));
}

}  // namespace scover::detail
