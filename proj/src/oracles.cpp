#include <functional>

#include "scover/cover_test.hpp"
#include "scover/errors.hpp"

namespace scover {

namespace {

CoverReport empty_report(std::size_t n) {
  CoverReport r;
  r.covered.assign(n, false);
  r.witnesses.emplace(n);
  return r;
}

// Greedy leftmost embedding of pattern[from, to) into text[begin, end).
// The caller has already established that it exists.
void embed_leftmost(const Word& pattern, std::size_t from, std::size_t to,
                    const Word& text, std::size_t begin, Positions& out) {
  std::size_t p = begin;
  for (std::size_t j = from; j < to; ++j) {
    while (text[p] != pattern[j]) ++p;
    out.push_back(p++);
  }
}

}  // namespace

CoverReport oracle_split(const Word& cover, const Word& text) {
  if (cover.empty() || text.empty())
    throw InputError("s-cover operations need nonempty words");
  const std::size_t m = cover.size();
  const std::size_t n = text.size();
  if (m * n > 10'000'000)
    throw InputError("oracle_split: |C| * |S| exceeds 10^7");

  const std::size_t w = n + 1;
  // before[j * w + i]: C[0, j) is a subsequence of S[0, i).
  // after[j * w + i]:  C[j, m) is a subsequence of S[i, n).
  std::vector<char> before((m + 1) * w, 0);
  std::vector<char> after((m + 1) * w, 0);
  for (std::size_t i = 0; i <= n; ++i) before[i] = 1;
  for (std::size_t j = 1; j <= m; ++j)
    for (std::size_t i = 1; i <= n; ++i)
      before[j * w + i] =
          before[j * w + i - 1] ||
          (before[(j - 1) * w + i - 1] && cover[j - 1] == text[i - 1]);
  for (std::size_t i = 0; i <= n; ++i) after[m * w + i] = 1;
  for (std::size_t j = m; j-- > 0;)
    for (std::size_t i = n; i-- > 0;)
      after[j * w + i] =
          after[j * w + i + 1] ||
          (cover[j] == text[i] && after[(j + 1) * w + i + 1]);

  CoverReport r = empty_report(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (cover[j] != text[i] || !before[j * w + i] ||
          !after[(j + 1) * w + i + 1])
        continue;
      r.covered[i] = true;
      ++r.coverage;
      Positions& occ = (*r.witnesses)[i];
      embed_leftmost(cover, 0, j, text, 0, occ);
      occ.push_back(i);
      embed_leftmost(cover, j + 1, m, text, i + 1, occ);
      break;
    }
  }
  r.is_cover = r.coverage == n;
  return r;
}

CoverReport oracle_enumerate(const Word& cover, const Word& text) {
  if (cover.empty() || text.empty())
    throw InputError("s-cover operations need nonempty words");
  const std::size_t m = cover.size();
  const std::size_t n = text.size();
  if (n > 18) throw InputError("oracle_enumerate: |S| exceeds 18");

  CoverReport r = empty_report(n);
  Positions occ;
  occ.reserve(m);
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    const std::size_t j = occ.size();
    if (j == m) {
      for (std::size_t p : occ) {
        if (r.covered[p]) continue;
        r.covered[p] = true;
        ++r.coverage;
        (*r.witnesses)[p] = occ;
      }
      return;
    }
    for (std::size_t p = from; p + (m - j) <= n; ++p) {
      if (text[p] != cover[j]) continue;
      occ.push_back(p);
      extend(p + 1);
      occ.pop_back();
    }
  };
  extend(0);
  r.is_cover = r.coverage == n;
  return r;
}

}  // namespace scover
