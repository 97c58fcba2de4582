#include "scover/report.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace scover {

namespace {

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json opt_big(const std::optional<BigInt>& v) {
  return v ? big_to_json(*v) : Json(nullptr);
}

std::string cell(const std::optional<BigInt>& v) {
  return v ? v->str() : "-";
}

}  // namespace

Json big_to_json(const BigInt& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max())
    return Json(static_cast<std::uint64_t>(value));
  return Json(value.str());
}

Json cover_report_json(const CoverReport& report,
                       const std::optional<OccurrenceTables>& tables) {
  Json j;
  j["is_cover"] = report.is_cover;
  j["coverage"] = report.coverage;
  Json covered = Json::array();
  for (bool b : report.covered) covered.push_back(b ? 1 : 0);
  j["covered"] = covered;
  if (report.witnesses) {
    Json w = Json::array();
    for (const Positions& p : *report.witnesses)
      w.push_back(p.empty() ? Json(nullptr) : Json(p));
    j["witnesses"] = w;
  } else {
    j["witnesses"] = nullptr;
  }
  if (tables) {
    j["tables"] = {{"first_occ", tables->first_occ},
                   {"last_occ", tables->last_occ},
                   {"pref", tables->pref}};
  } else {
    j["tables"] = nullptr;
  }
  return j;
}

Json shortest_json(const ShortestResult& result, const AlphabetMap& map) {
  Json j;
  j["shortest_length"] = result.length;
  j["witness"] = render(result.witness, map);
  if (result.count) j["count"] = *result.count;
  if (result.all) {
    Json all = Json::array();
    for (const Word& w : *result.all) all.push_back(render(w, map));
    j["all"] = all;
  }
  return j;
}

Json primitive_json(const PrimitivityResult& result, const AlphabetMap& map) {
  Json j;
  j["primitive"] = result.primitive;
  j["witness"] =
      result.witness ? Json(render(*result.witness, map)) : Json(nullptr);
  return j;
}

Json count_json(const ShortestCount& result) {
  return {{"shortest_length", result.length},
          {"count", big_to_json(result.count)}};
}

Json gamma_json(const GammaReport& report, bool with_words) {
  Json j;
  j["k"] = report.k;
  j["gamma"] = report.gamma;
  j["canonical_count"] = report.canonical_count;
  j["total_count"] = report.total_count;
  j["nodes_explored"] = report.nodes_explored;
  if (with_words) {
    Json words = Json::array();
    for (const Word& w : report.canonical_words)
      words.push_back(render_canonical(w));
    j["canonical_words"] = words;
  }
  return j;
}

Json bounds_json(const std::vector<BoundsRow>& rows) {
  Json out = Json::array();
  for (const BoundsRow& r : rows) {
    Json j;
    j["k"] = r.k;
    j["gamma"] = opt(r.gamma);
    j["lower"] = big_to_json(r.lower);
    j["preliminary_upper"] = opt_big(r.preliminary_upper);
    j["delta"] = opt_big(r.delta);
    j["conference"] = opt_big(r.conference);
    j["factorial_cap"] = opt_big(r.factorial_cap);
    j["conjectured"] = big_to_json(r.conjectured);
    out.push_back(j);
  }
  return out;
}

std::string bounds_text(const std::vector<BoundsRow>& rows) {
  const std::vector<std::string> head = {"k",     "gamma",      "lower",
                                         "prelim", "delta",     "P",
                                         "2^(k-1)k!", "conjectured"};
  std::vector<std::vector<std::string>> table{head};
  for (const BoundsRow& r : rows)
    table.push_back({std::to_string(r.k),
                     r.gamma ? std::to_string(*r.gamma) : "-",
                     r.lower.str(), cell(r.preliminary_upper), cell(r.delta),
                     cell(r.conference), cell(r.factorial_cap),
                     r.conjectured.str()});
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& row : table)
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace scover
