#ifndef SCOVER_WORD_HPP_
#define SCOVER_WORD_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace scover {

// Letters are dense nonnegative ids. Words produced by the parser or by
// canonicalize() use exactly {0, ..., k-1}.
using Letter = std::uint32_t;

class Word {
 public:
  using value_type = Letter;
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  const_iterator begin() const noexcept { return letters_.begin(); }
  const_iterator end() const noexcept { return letters_.end(); }

  std::span<const Letter> span() const noexcept { return letters_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  void push_back(Letter x) { letters_.push_back(x); }
  void pop_back() { letters_.pop_back(); }
  void reserve(std::size_t n) { letters_.reserve(n); }

  // Factor [pos, pos + len), clamped to the end of the word.
  Word factor(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return factor(0, len); }
  Word suffix_from(std::size_t pos) const {
    return factor(pos, size() - std::min(pos, size()));
  }

  // One more than the largest letter id, 0 for the empty word.
  std::size_t letter_bound() const noexcept;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

Word concat(const Word& a, const Word& b);
Word concat(const Word& a, Letter x, const Word& b);
Word reversed(const Word& w);

// Builds a word from lowercase letters: 'a' -> 0, 'b' -> 1, ... No renaming
// happens, so letters("ba") is [1, 0].
Word letters(std::string_view text);

// a, b, c, ... when every id is below 26; otherwise comma-separated ids.
std::string render_canonical(const Word& w);

// Number of distinct letters.
std::size_t alphabet_size(const Word& w);

bool is_subsequence(const Word& needle, const Word& hay);

enum class ParseMode { chars, tokens };

// Bijection between external tokens and letter ids. Ids are handed out in
// order of first appearance, so tokens() is also the original-order record.
class AlphabetMap {
 public:
  explicit AlphabetMap(ParseMode mode = ParseMode::chars) : mode_(mode) {}

  Letter intern(std::string_view token);
  std::optional<Letter> find(std::string_view token) const;
  const std::string& token(Letter id) const { return tokens_.at(id); }
  std::size_t size() const noexcept { return tokens_.size(); }
  ParseMode mode() const noexcept { return mode_; }
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }

 private:
  ParseMode mode_;
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, Letter> ids_;
};

struct ParsedWord {
  Word word;
  AlphabetMap map;
};

// Chars mode: every byte is a token (printable ASCII, no interior blanks;
// surrounding whitespace is trimmed). Tokens mode: tokens separated by commas
// and/or whitespace. Throws InputError on empty input or malformed tokens.
ParsedWord parse_word(std::string_view text, ParseMode mode);

// Same, but letters are interned into an existing map so that several words
// share one numbering.
Word parse_word(std::string_view text, AlphabetMap& map);

// Inverse of parse_word: chars mode concatenates, tokens mode joins with ','.
// Falls back to render_canonical for ids the map does not know.
std::string render(const Word& w, const AlphabetMap& map);

// Renames letters by order of first occurrence to 0, 1, 2, ...
Word canonicalize(const Word& w);
bool is_canonical(const Word& w);

// Letters of w in order of first (resp. last) occurrence.
Word first_word(const Word& w);
Word last_word(const Word& w);

struct Square {
  std::size_t start;
  std::size_t length;  // 2 * |X| for the square XX

  friend bool operator==(const Square&, const Square&) = default;
};

// Leftmost square (shortest among those starting there), if any.
std::optional<Square> find_square(const Word& w);
inline bool is_square_free(const Word& w) { return !find_square(w); }

// True when w[0, n) ends with a square.
bool ends_with_square(std::span<const Letter> w);

// Factor U V U at [start, start + 2 * u_len + v_len) with Alph(V) a subset of
// Alph(U); v_len == 0 is a square.
struct GappedRepeatWitness {
  std::size_t start;
  std::size_t u_len;
  std::size_t v_len;

  std::size_t length() const noexcept { return 2 * u_len + v_len; }
  friend bool operator==(const GappedRepeatWitness&,
                         const GappedRepeatWitness&) = default;
};

// Squares are reported first (leftmost square, v_len = 0). Otherwise factors
// are scanned by start, then u_len, then v_len. Without an explicit bound the
// scan is exhaustive for words up to 64 letters and limited to u_len <= 16
// beyond that.
std::optional<GappedRepeatWitness> find_gapped_repeat_cover(
    const Word& w, std::optional<std::size_t> max_u_len = std::nullopt);

// Gapped repeat U V U occupying a suffix of w.
bool ends_with_gapped_repeat(std::span<const Letter> w);

// For words over at most three letters: a factor a b X b c with a, b, c
// pairwise distinct. Returns nullopt for words with four or more letters.
struct FactorRange {
  std::size_t start;
  std::size_t length;
  friend bool operator==(const FactorRange&, const FactorRange&) = default;
};
std::optional<FactorRange> find_abxbc_factor(const Word& w);
bool ends_with_abxbc(std::span<const Letter> w);

// Zimin word over letters 0..k-1; requires 1 <= k <= 26.
Word zimin(unsigned k);

}  // namespace scover

#endif  // SCOVER_WORD_HPP_
