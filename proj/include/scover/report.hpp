#ifndef SCOVER_REPORT_HPP_
#define SCOVER_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "scover/cover_search.hpp"
#include "scover/cover_test.hpp"
#include "scover/extremal.hpp"
#include "scover/word.hpp"

namespace scover {

using Json = nlohmann::ordered_json;

// A JSON number when the value fits in 64 bits, else its decimal string.
Json big_to_json(const BigInt& value);

// {"is_cover", "coverage", "covered": [0/1...], "witnesses": [[...]|null...]
//  or null, "tables": {"first_occ", "last_occ", "pref"} or null}
Json cover_report_json(const CoverReport& report,
                       const std::optional<OccurrenceTables>& tables);

// {"shortest_length", "witness", "count"?, "all"?}
Json shortest_json(const ShortestResult& result, const AlphabetMap& map);

// {"primitive", "witness": string or null}
Json primitive_json(const PrimitivityResult& result, const AlphabetMap& map);

// {"shortest_length", "count"}
Json count_json(const ShortestCount& result);

// {"k", "gamma", "canonical_count", "total_count", "nodes_explored",
//  "canonical_words"?}
Json gamma_json(const GammaReport& report, bool with_words);

// [{"k", "gamma", "lower", "preliminary_upper", "delta", "conference",
//   "factorial_cap", "conjectured"}...], absent values as null.
Json bounds_json(const std::vector<BoundsRow>& rows);

// Aligned text table, one row per k, "-" for absent values.
std::string bounds_text(const std::vector<BoundsRow>& rows);

}  // namespace scover

#endif  // SCOVER_REPORT_HPP_
