#include "scover/word.hpp"

#include <cctype>
#include <cstdint>
#include <string>

#include "scover/errors.hpp"

namespace scover {

namespace {

// Membership set over letters, bit-packed for the common small-alphabet case.
class LetterSet {
 public:
  explicit LetterSet(std::size_t bound) {
    if (bound > 64) wide_.assign(bound, 0);
  }
  void insert(Letter x) {
    if (wide_.empty())
      bits_ |= std::uint64_t{1} << x;
    else
      wide_[x] = 1;
  }
  bool contains(Letter x) const {
    return wide_.empty() ? ((bits_ >> x) & 1U) != 0 : wide_[x] != 0;
  }

 private:
  std::uint64_t bits_ = 0;
  std::vector<char> wide_;
};

std::size_t bound_of(std::span<const Letter> w) {
  Letter m = 0;
  for (Letter x : w) m = std::max(m, x);
  return w.empty() ? 0 : std::size_t{m} + 1;
}

bool equal_factors(std::span<const Letter> w, std::size_t a, std::size_t b,
                   std::size_t len) {
  for (std::size_t t = 0; t < len; ++t)
    if (w[a + t] != w[b + t]) return false;
  return true;
}

// Alph(w[v, v + v_len)) is a subset of Alph(w[u, u + u_len)).
bool alph_subset(std::span<const Letter> w, std::size_t v, std::size_t v_len,
                 std::size_t u, std::size_t u_len, std::size_t bound) {
  if (v_len == 0) return true;
  LetterSet in_u(bound);
  for (std::size_t t = 0; t < u_len; ++t) in_u.insert(w[u + t]);
  for (std::size_t t = 0; t < v_len; ++t)
    if (!in_u.contains(w[v + t])) return false;
  return true;
}

bool is_blank(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool is_printable(char c) {
  auto u = static_cast<unsigned char>(c);
  return u >= 0x21 && u <= 0x7e;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_blank(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

Word Word::factor(std::size_t pos, std::size_t len) const {
  pos = std::min(pos, size());
  len = std::min(len, size() - pos);
  return Word(std::vector<Letter>(letters_.begin() + pos,
                                  letters_.begin() + pos + len));
}

std::size_t Word::letter_bound() const noexcept { return bound_of(span()); }

Word concat(const Word& a, const Word& b) {
  std::vector<Letter> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return Word(std::move(out));
}

Word concat(const Word& a, Letter x, const Word& b) {
  std::vector<Letter> out(a.begin(), a.end());
  out.push_back(x);
  out.insert(out.end(), b.begin(), b.end());
  return Word(std::move(out));
}

Word reversed(const Word& w) {
  return Word(std::vector<Letter>(w.letters().rbegin(), w.letters().rend()));
}

Word letters(std::string_view text) {
  std::vector<Letter> out;
  out.reserve(text.size());
  for (char c : text) {
    if (c < 'a' || c > 'z')
      throw InputError(std::string("letters(): expected a-z, got '") + c +
                       "'");
    out.push_back(static_cast<Letter>(c - 'a'));
  }
  return Word(std::move(out));
}

std::string render_canonical(const Word& w) {
  std::string out;
  if (w.letter_bound() <= 26) {
    for (Letter x : w) out.push_back(static_cast<char>('a' + x));
    return out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(w[i]);
  }
  return out;
}

std::size_t alphabet_size(const Word& w) {
  std::vector<char> seen(w.letter_bound(), 0);
  std::size_t k = 0;
  for (Letter x : w)
    if (!seen[x]) {
      seen[x] = 1;
      ++k;
    }
  return k;
}

bool is_subsequence(const Word& needle, const Word& hay) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < hay.size() && j < needle.size(); ++i)
    if (hay[i] == needle[j]) ++j;
  return j == needle.size();
}

Letter AlphabetMap::intern(std::string_view token) {
  std::string key(token);
  if (auto it = ids_.find(key); it != ids_.end()) return it->second;
  auto id = static_cast<Letter>(tokens_.size());
  tokens_.push_back(key);
  ids_.emplace(std::move(key), id);
  return id;
}

std::optional<Letter> AlphabetMap::find(std::string_view token) const {
  if (auto it = ids_.find(std::string(token)); it != ids_.end())
    return it->second;
  return std::nullopt;
}

Word parse_word(std::string_view text, AlphabetMap& map) {
  std::vector<Letter> out;
  if (map.mode() == ParseMode::chars) {
    text = trim(text);
    if (text.empty()) throw InputError("empty word");
    for (char c : text) {
      if (!is_printable(c))
        throw InputError("word contains a blank or non-printable character");
      out.push_back(map.intern(std::string_view(&c, 1)));
    }
    return Word(std::move(out));
  }

  // Tokens mode. A comma always terminates a token, so ",," or a leading or
  // trailing comma leaves an empty token behind, which is malformed.
  std::string current;
  bool pending_comma = false;
  bool any = false;
  auto flush = [&] {
    if (current.empty()) return;
    out.push_back(map.intern(current));
    current.clear();
    any = true;
  };
  for (char c : trim(text)) {
    if (c == ',') {
      if (current.empty() && (pending_comma || !any))
        throw InputError("empty token in token list");
      if (!current.empty()) flush();
      pending_comma = true;
    } else if (is_blank(c)) {
      if (!current.empty()) {
        flush();
        pending_comma = false;
      }
    } else if (is_printable(c)) {
      current.push_back(c);
      pending_comma = false;
    } else {
      throw InputError("token contains a non-printable character");
    }
  }
  if (pending_comma && current.empty())
    throw InputError("empty token in token list");
  flush();
  if (!any) throw InputError("empty word");
  return Word(std::move(out));
}

ParsedWord parse_word(std::string_view text, ParseMode mode) {
  ParsedWord result{Word{}, AlphabetMap(mode)};
  result.word = parse_word(text, result.map);
  return result;
}

std::string render(const Word& w, const AlphabetMap& map) {
  if (w.letter_bound() > map.size()) return render_canonical(w);
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (map.mode() == ParseMode::tokens && i) out.push_back(',');
    out += map.token(w[i]);
  }
  return out;
}

Word canonicalize(const Word& w) {
  std::vector<Letter> rename(w.letter_bound(), UINT32_MAX);
  Letter next = 0;
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (rename[x] == UINT32_MAX) rename[x] = next++;
    out.push_back(rename[x]);
  }
  return Word(std::move(out));
}

bool is_canonical(const Word& w) {
  Letter next = 0;
  for (Letter x : w) {
    if (x > next) return false;
    if (x == next) ++next;
  }
  return true;
}

Word first_word(const Word& w) {
  std::vector<char> seen(w.letter_bound(), 0);
  Word out;
  for (Letter x : w)
    if (!seen[x]) {
      seen[x] = 1;
      out.push_back(x);
    }
  return out;
}

Word last_word(const Word& w) {
  return reversed(first_word(reversed(w)));
}

std::optional<Square> find_square(const Word& w) {
  const auto s = w.span();
  const std::size_t n = s.size();
  for (std::size_t start = 0; start < n; ++start)
    for (std::size_t half = 1; start + 2 * half <= n; ++half)
      if (equal_factors(s, start, start + half, half))
        return Square{start, 2 * half};
  return std::nullopt;
}

bool ends_with_square(std::span<const Letter> w) {
  const std::size_t n = w.size();
  for (std::size_t half = 1; 2 * half <= n; ++half)
    if (equal_factors(w, n - 2 * half, n - half, half)) return true;
  return false;
}

std::optional<GappedRepeatWitness> find_gapped_repeat_cover(
    const Word& w, std::optional<std::size_t> max_u_len) {
  if (auto sq = find_square(w)) return GappedRepeatWitness{sq->start,
                                                           sq->length / 2, 0};
  const auto s = w.span();
  const std::size_t n = s.size();
  const std::size_t bound = bound_of(s);
  const std::size_t u_cap = max_u_len ? *max_u_len : (n <= 64 ? n : 16);
  for (std::size_t start = 0; start < n; ++start)
    for (std::size_t u = 1; u <= u_cap && start + 2 * u <= n; ++u)
      for (std::size_t v = 1; start + 2 * u + v <= n; ++v)
        if (equal_factors(s, start, start + u + v, u) &&
            alph_subset(s, start + u, v, start, u, bound))
          return GappedRepeatWitness{start, u, v};
  return std::nullopt;
}

bool ends_with_gapped_repeat(std::span<const Letter> w) {
  const std::size_t n = w.size();
  const std::size_t bound = bound_of(w);
  for (std::size_t u = 1; 2 * u <= n; ++u)
    for (std::size_t v = 0; 2 * u + v <= n; ++v) {
      const std::size_t start = n - 2 * u - v;
      if (equal_factors(w, start, n - u, u) &&
          alph_subset(w, start + u, v, start, u, bound))
        return true;
    }
  return false;
}

namespace {

// Factor a b X b c ending at position end (inclusive), with the longest X
// excluded: returns the largest valid start, or npos.
std::size_t abxbc_start(std::span<const Letter> w, std::size_t end) {
  if (end < 3) return std::string::npos;
  const Letter c = w[end];
  const Letter b = w[end - 1];
  if (b == c) return std::string::npos;
  // a at p, b at p + 1, and p + 1 < end - 1.
  for (std::size_t p = end - 3 + 1; p-- > 0;) {
    if (w[p + 1] == b && w[p] != b && w[p] != c) return p;
  }
  return std::string::npos;
}

}  // namespace

std::optional<FactorRange> find_abxbc_factor(const Word& w) {
  if (alphabet_size(w) > 3) return std::nullopt;
  const auto s = w.span();
  for (std::size_t end = 3; end < s.size(); ++end) {
    const std::size_t p = abxbc_start(s, end);
    if (p != std::string::npos) return FactorRange{p, end - p + 1};
  }
  return std::nullopt;
}

bool ends_with_abxbc(std::span<const Letter> w) {
  if (w.size() < 4) return false;
  Letter seen[4];
  std::size_t k = 0;
  for (Letter x : w) {
    bool known = false;
    for (std::size_t t = 0; t < k; ++t) known = known || seen[t] == x;
    if (!known) {
      if (k == 3) return false;
      seen[k++] = x;
    }
  }
  return abxbc_start(w, w.size() - 1) != std::string::npos;
}

Word zimin(unsigned k) {
  if (k < 1 || k > 26) throw InputError("zimin: k must lie in [1, 26]");
  Word z{0};
  for (Letter i = 1; i < k; ++i) z = concat(z, i, z);
  return z;
}

}  // namespace scover
