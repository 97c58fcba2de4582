#include "scover/errors.hpp"
#include "scover/extremal.hpp"

namespace scover {

std::vector<BoundsRow> bounds_table(unsigned k_max) {
  if (k_max < 1 || k_max > 64)
    throw InputError("bounds_table: k_max must lie in [1, 64]");

  std::vector<BoundsRow> rows;
  rows.reserve(k_max);
  BigInt factorial = 1;
  BigInt conjectured = 1;
  for (unsigned k = 1; k <= k_max; ++k) {
    factorial *= k;
    BoundsRow row;
    row.k = k;
    row.gamma = known_gamma(k);
    if (k > 1) conjectured = 2 * conjectured + (k - 1);
    row.conjectured = conjectured;

    if (row.gamma)
      row.lower = *row.gamma;
    else
      row.lower = BigInt(5) * (BigInt(1) << (k - 2)) - 1;

    if (k >= 2) {
      const BoundsRow& prev = rows.back();
      const BigInt g = prev.gamma ? BigInt(*prev.gamma) : *prev.preliminary_upper;
      row.preliminary_upper = BigInt(2 * k + 2) * (g + 1) - 1;
    }

    if (k == 4) {
      row.delta = 19;
      row.conference = 19;
    } else if (k > 4) {
      const BoundsRow& prev = rows.back();
      row.delta = BigInt(2 * k - 2) * *prev.delta + 6;
      row.conference = BigInt(2 * k) * *prev.conference;
    }
    if (k >= 4) row.factorial_cap = (BigInt(1) << (k - 1)) * factorial;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace scover
