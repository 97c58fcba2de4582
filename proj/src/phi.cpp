#include "scover/phi.hpp"

#include <array>
#include <stdexcept>

#include "scover/errors.hpp"

namespace scover {

bool pair_condition(Letter a1, Letter a2, Letter b1, Letter b2, PhiRule rule) {
  const bool a1_clause = a1 != b1 && a1 != b2;
  const bool b2_clause = b2 != a1 && b2 != a2;
  switch (rule) {
    case PhiRule::full:
      return a1_clause && b2_clause;
    case PhiRule::drop_b2_clause:
      return a1_clause;
    case PhiRule::strict_b2_clause:
      return a1_clause && b2_clause && b1 != a1 && b1 != a2;
  }
  return false;
}

std::optional<std::pair<std::size_t, std::size_t>> phi_witness(
    const Word& x, const Word& y, PhiRule rule) {
  if (x.size() < 2 || y.size() < 2)
    throw InputError("phi needs words of length at least 2");
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    for (std::size_t j = 0; j + 1 < y.size(); ++j)
      if (pair_condition(x[i], x[i + 1], y[j], y[j + 1], rule))
        return std::make_pair(i, j);
  return std::nullopt;
}

bool phi(const Word& x, const Word& y, PhiRule rule) {
  return phi_witness(x, y, rule).has_value();
}

bool psi(const Word& s) {
  const std::size_t n = s.size();
  if (n <= 3) return true;
  return pair_condition(s[0], s[1], s[n - 2], s[n - 1]);
}

bool matches(const Word& x, const Word& y) { return phi(x, reversed(y)); }

XyVerdict verify_xy_lemma(PhiRule rule) {
  constexpr std::size_t x_len = 4;
  constexpr std::size_t total = 10;
  XyVerdict verdict;
  std::array<Letter, total> buf{};

  // Restricted growth strings over the concatenation, so every pair is seen
  // once up to a renaming that acts on X and Y together.
  auto visit = [&](auto&& self, std::size_t pos, Letter used) -> void {
    if (pos == total) {
      const Word x(std::vector<Letter>(buf.begin(), buf.begin() + x_len));
      const Word y(std::vector<Letter>(buf.begin() + x_len, buf.end()));
      ++verdict.pairs;
      verdict.x_types.insert(x);
      if (!phi(x, y, rule)) {
        ++verdict.counterexamples;
        if (!verdict.first_counterexample)
          verdict.first_counterexample.emplace(x, y);
      }
      return;
    }
    const std::size_t block_start = pos < x_len ? 0 : x_len;
    for (Letter c = 0; c <= used && c < total; ++c) {
      buf[pos] = c;
      const std::span<const Letter> block(buf.data() + block_start,
                                          pos + 1 - block_start);
      if (ends_with_square(block)) continue;
      self(self, pos + 1, c == used ? used + 1 : used);
    }
  };
  visit(visit, 0, 0);
  verdict.pass = verdict.counterexamples == 0;
  return verdict;
}

FactorRange find_psi_factor(const Word& w) {
  if (!is_square_free(w))
    throw InputError("find_psi_factor needs a square-free word");
  const std::size_t n = w.size();
  if (n < 10) return FactorRange{0, std::min<std::size_t>(3, n)};

  const Word x = w.prefix(4);
  const Word y = w.suffix_from(n - 6);
  std::optional<FactorRange> best;
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    for (std::size_t j = 0; j + 1 < y.size(); ++j) {
      if (!pair_condition(x[i], x[i + 1], y[j], y[j + 1])) continue;
      // W' = W[i .. (n - 6) + j + 1], both ends inclusive.
      const std::size_t length = n - 4 + j - i;
      if (!best || length > best->length) best = FactorRange{i, length};
    }
  if (!best)
    throw std::logic_error("no psi factor found in a square-free word");
  return *best;
}

Word fl_word(const Word& s) {
  const Word f = first_word(s);
  Word l = last_word(s);
  if (!f.empty() && !l.empty() && f.back() == l.front())
    l = l.suffix_from(1);
  return concat(f, l);
}

}  // namespace scover
