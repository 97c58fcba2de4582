#include "scover/cover_search.hpp"

#include <map>
#include <string>

#include "candidate_search.hpp"
#include "scover/errors.hpp"

namespace scover {

namespace {

detail::CandidateOptions options_of(const SearchConfig& config) {
  detail::CandidateOptions o;
  o.prune_square_free = config.prune_square_free;
  o.prune_subsequence = config.prune_subsequence;
  o.prune_coverage = config.prune_coverage;
  o.node_budget = config.node_budget;
  return o;
}

void require_nonempty(const Word& text) {
  if (text.empty()) throw InputError("cover search needs a nonempty word");
}

}  // namespace

ShortestResult shortest_s_cover(const Word& text, const SearchConfig& config) {
  require_nonempty(text);
  const std::size_t cap =
      std::min(text.size(), config.max_candidate_len.value_or(text.size()));
  const bool collect = config.enumerate_all || config.count_only;

  detail::CandidateSearch search(text, options_of(config));
  for (std::size_t len = 1; len <= cap; ++len) {
    ShortestResult result;
    std::vector<Word> found;
    std::uint64_t count = 0;
    search.exact_length(len, [&](const Word& c) {
      if (count == 0) result.witness = c;
      ++count;
      if (config.enumerate_all && !config.count_only) found.push_back(c);
      return collect;
    });
    if (count == 0) continue;
    result.length = len;
    if (collect) result.count = count;
    if (config.enumerate_all && !config.count_only)
      result.all = std::move(found);
    return result;
  }
  throw ResourceError("no s-cover of length <= " + std::to_string(cap));
}

std::optional<Word> find_nontrivial_cover(const Word& text,
                                          const SearchConfig& config) {
  require_nonempty(text);
  if (text.size() == 1) return std::nullopt;
  std::size_t cap = text.size() - 1;
  if (config.max_candidate_len) cap = std::min(cap, *config.max_candidate_len);
  detail::CandidateSearch search(text, options_of(config));
  return search.any_cover(cap);
}

std::optional<std::size_t> known_gamma(std::size_t k) {
  static constexpr std::size_t values[] = {0, 1, 3, 8, 19};
  if (k < std::size(values)) return values[k];
  return std::nullopt;
}

std::optional<UniqueLetterDecomposition> decompose_unique_letter(
    const Word& text) {
  std::vector<std::size_t> occurrences(text.letter_bound(), 0);
  for (Letter x : text) ++occurrences[x];
  for (std::size_t i = 0; i < text.size(); ++i)
    if (occurrences[text[i]] == 1)
      return UniqueLetterDecomposition{i, text.prefix(i),
                                       text.suffix_from(i + 1)};
  return std::nullopt;
}

PrimitivityResult is_s_primitive(const Word& text, const SearchConfig& config) {
  require_nonempty(text);

  // S = S' a S'' with a unique: the s-covers are exactly C' a C''.
  if (auto split = decompose_unique_letter(text)) {
    const Letter a = text[split->position];
    auto part = [&](const Word& w) -> PrimitivityResult {
      if (w.empty()) return {true, std::nullopt};
      return is_s_primitive(w, config);
    };
    const PrimitivityResult left = part(split->left);
    const PrimitivityResult right = part(split->right);
    if (left.primitive && right.primitive) return {true, std::nullopt};
    return {false, concat(left.witness.value_or(split->left), a,
                          right.witness.value_or(split->right))};
  }

  const std::size_t k = alphabet_size(text);
  if (const auto gamma = known_gamma(k); gamma && text.size() > *gamma) {
    // Every factor of length gamma(k) + 1 has a non-trivial s-cover.
    const Word head = text.prefix(*gamma + 1);
    const Word cover = shortest_s_cover(head, config).witness;
    return {false, concat(cover, text.suffix_from(head.size()))};
  }

  if (!find_nontrivial_cover(text, config)) return {true, std::nullopt};
  SearchConfig shortest = config;
  shortest.enumerate_all = false;
  shortest.count_only = false;
  return {false, shortest_s_cover(text, shortest).witness};
}

Word reduce_to_bounded_cover(const Word& text, const SearchConfig& config) {
  require_nonempty(text);
  const std::size_t k = alphabet_size(text);
  const auto gamma = known_gamma(k);
  if (!gamma)
    throw UnsupportedError("gamma(" + std::to_string(k) +
                           ") is not known; reduction needs k <= 4");

  SearchConfig plain = config;
  plain.enumerate_all = false;
  plain.count_only = false;

  // The current word is head ++ text[rest, n). Each round replaces the first
  // gamma + 1 letters by their shortest s-cover, which is strictly shorter.
  Word head = text.prefix(std::min(text.size(), *gamma));
  std::size_t rest = head.size();
  while (head.size() + (text.size() - rest) > *gamma) {
    while (head.size() <= *gamma) head.push_back(text[rest++]);
    head = shortest_s_cover(head, plain).witness;
  }
  // Now everything fits in gamma letters; one more search makes it shortest.
  while (rest < text.size()) head.push_back(text[rest++]);
  return shortest_s_cover(head, plain).witness;
}

ShortestCount count_shortest_s_covers(const Word& text,
                                      const SearchConfig& config) {
  require_nonempty(text);
  SearchConfig leaf_config = config;
  leaf_config.count_only = true;
  leaf_config.enumerate_all = false;

  std::map<Word, ShortestCount> memo;
  auto solve = [&](auto&& self, const Word& w) -> ShortestCount {
    if (w.empty()) return {0, 1};
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    ShortestCount out;
    if (auto split = decompose_unique_letter(w)) {
      const ShortestCount left = self(self, split->left);
      const ShortestCount right = self(self, split->right);
      out = {left.length + 1 + right.length, left.count * right.count};
    } else {
      const ShortestResult r = shortest_s_cover(w, leaf_config);
      out = {r.length, BigInt(*r.count)};
    }
    memo.emplace(w, out);
    return out;
  };
  return solve(solve, text);
}

}  // namespace scover
