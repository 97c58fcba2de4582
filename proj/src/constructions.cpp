#include "scover/errors.hpp"
#include "scover/extremal.hpp"

namespace scover {

Word lower_bound_word(unsigned k) {
  if (k < 1 || k > 12)
    throw InputError("lower_bound_word: k must lie in [1, 12]");
  switch (k) {
    case 1:
      return letters("a");
    case 2:
      return letters("aba");
    case 3:
      return letters("abcabacb");
    default:
      break;
  }
  Word s = letters("abacadbabdcabcbadac");
  for (Letter fresh = 4; fresh < k; ++fresh) s = concat(s, fresh, s);
  return s;
}

Word multicover_word(std::size_t n) {
  if (n < 1 || n > (std::size_t{1} << 20))
    throw InputError("multicover_word: n must lie in [1, 2^20]");
  Word t = letters("abcadbcacbdacba");
  for (Letter fresh = 4; t.size() < n; ++fresh) t = concat(t, fresh, t);
  return t.prefix(n);
}

}  // namespace scover
