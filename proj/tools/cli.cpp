#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "scover/cover_search.hpp"
#include "scover/cover_test.hpp"
#include "scover/errors.hpp"
#include "scover/extremal.hpp"
#include "scover/phi.hpp"
#include "scover/report.hpp"
#include "scover/word.hpp"

namespace scover::cli {

namespace {

struct Globals {
  bool json = false;
  bool tokens = false;
  bool quiet = false;
};

std::string read_argument(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  const std::string path = arg.substr(1);
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.pop_back();
  return text;
}

// Parses every argument against one alphabet whose ids follow the sorted
// order of the tokens, so that id order and lexicographic order agree.
std::pair<std::vector<Word>, AlphabetMap> parse_words(
    const std::vector<std::string>& args, const Globals& g) {
  const ParseMode mode = g.tokens ? ParseMode::tokens : ParseMode::chars;
  std::vector<std::string> texts;
  std::vector<std::string> tokens;
  for (const std::string& a : args) {
    texts.push_back(read_argument(a));
    const ParsedWord p = parse_word(texts.back(), mode);
    tokens.insert(tokens.end(), p.map.tokens().begin(), p.map.tokens().end());
  }
  std::sort(tokens.begin(), tokens.end());
  tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
  AlphabetMap map(mode);
  for (const std::string& t : tokens) map.intern(t);
  std::vector<Word> words;
  for (const std::string& t : texts) words.push_back(parse_word(t, map));
  return {std::move(words), std::move(map)};
}

std::string positions_text(const Positions& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s;
}

std::string mask_text(const std::vector<bool>& covered) {
  std::string s;
  for (bool b : covered) s += b ? '1' : '0';
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& real_out,
        std::ostream& err) {
  CLI::App app{"Subsequence covers of words", "scover"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Print JSON instead of text");
  app.add_flag("--tokens", g.tokens,
               "Read words as tokens separated by commas or blanks");
  app.add_flag("--quiet", g.quiet, "Print nothing; use the exit code");

  SearchConfig search;
  bool no_prune = false;
  auto add_search_flags = [&](CLI::App* cmd) {
    cmd->add_option("--budget", search.node_budget,
                    "Candidate nodes before giving up (0: unlimited)");
    cmd->add_flag("--no-prune", no_prune, "Disable all search pruning");
  };

  std::string cover_arg, text_arg;
  bool witnesses = false;
  auto* test = app.add_subcommand("test", "Is C an s-cover of S?");
  test->add_option("C", cover_arg)->required();
  test->add_option("S", text_arg)->required();
  test->add_flag("--witnesses", witnesses, "Print an occurrence per position");

  auto* coverage = app.add_subcommand("coverage", "Positions of S covered by C");
  coverage->add_option("C", cover_arg)->required();
  coverage->add_option("S", text_arg)->required();

  bool all = false, count_flag = false;
  auto* shortest = app.add_subcommand("shortest", "Shortest s-cover of S");
  shortest->add_option("S", text_arg)->required();
  shortest->add_flag("--all", all, "List every shortest s-cover");
  shortest->add_flag("--count", count_flag, "Count the shortest s-covers");
  add_search_flags(shortest);

  auto* primitive = app.add_subcommand("primitive", "Is S s-primitive?");
  primitive->add_option("S", text_arg)->required();
  add_search_flags(primitive);

  auto* reduce = app.add_subcommand(
      "reduce", "An s-cover of length at most gamma(k), k <= 4");
  reduce->add_option("S", text_arg)->required();
  add_search_flags(reduce);

  auto* count = app.add_subcommand("count", "Number of shortest s-covers");
  count->add_option("S", text_arg)->required();
  add_search_flags(count);

  GammaConfig gamma_config;
  std::size_t max_len = 0;
  std::string checkpoint;
  bool list = false, no_filters = false;
  auto* gamma = app.add_subcommand("gamma", "Longest s-primitive words");
  gamma->add_option("k", gamma_config.k)->required();
  gamma->add_option("--max-len", max_len, "Stop extending at this length");
  gamma->add_flag("--list", list, "Print the canonical extremal words");
  gamma->add_option("--workers", gamma_config.workers, "Worker threads")
      ->check(CLI::Range(1u, 1024u));
  gamma->add_option("--checkpoint", checkpoint, "Resumable progress file");
  gamma->add_option("--split-depth", gamma_config.split_depth,
                    "Depth of the subtrees handed to workers")
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  gamma->add_flag("--no-filters", no_filters,
                  "Skip the square, gapped-repeat and abXbc filters");

  unsigned k_max = 8;
  auto* bounds = app.add_subcommand("bounds", "Bounds on gamma(k)");
  bounds->add_option("k_max", k_max, "Largest k (default 8)");

  std::string family;
  std::size_t param = 0;
  auto* construct = app.add_subcommand("construct", "Word families");
  construct->add_option("family", family)
      ->required()
      ->check(CLI::IsMember({"zimin", "lowerbound", "multicover"}));
  construct->add_option("param", param)->required();

  std::string rule_name = "full";
  auto* verify = app.add_subcommand("verify-xy", "Machine check of the XY-Lemma");
  verify->add_option("--rule", rule_name, "Pair condition variant")
      ->check(CLI::IsMember({"full", "drop-b2", "strict-b2"}));

  try {
    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    std::ostringstream sink_out, sink_err;
    const int code = app.exit(e, sink_out, sink_err);
    real_out << sink_out.str();
    err << sink_err.str();
    return code == 0 ? kTrue : kUsage;
  }

  std::ostream null_stream(nullptr);
  std::ostream& out = g.quiet ? null_stream : real_out;
  if (no_prune) {
    search.prune_square_free = false;
    search.prune_subsequence = false;
    search.prune_coverage = false;
  }

  try {
    if (*test || *coverage) {
      auto [words, map] = parse_words({text_arg, cover_arg}, g);
      const Word& s = words[0];
      const Word& c = words[1];
      const bool want_witnesses = *test && (witnesses || g.json);
      const CoverReport report = cover_report(c, s, want_witnesses);
      if (g.json) {
        out << cover_report_json(report, build_tables(c, s)).dump(2) << '\n';
      } else if (*test) {
        out << "s-cover: " << (report.is_cover ? "yes" : "no") << '\n';
        if (witnesses)
          for (std::size_t i = 0; i < s.size(); ++i) {
            const Positions& p = (*report.witnesses)[i];
            out << i << ": " << (p.empty() ? "-" : positions_text(p)) << '\n';
          }
      } else {
        out << "coverage: " << report.coverage << '\n'
            << "covered: " << mask_text(report.covered) << '\n';
      }
      if (*coverage) return kTrue;
      return report.is_cover ? kTrue : kFalse;
    }

    if (*shortest) {
      auto [words, map] = parse_words({text_arg}, g);
      search.enumerate_all = all;
      search.count_only = count_flag && !all;
      if (all) search.count_only = false;
      ShortestResult r = shortest_s_cover(words[0], search);
      if (all && r.all) r.count = r.all->size();
      if (!count_flag) r.count.reset();
      if (g.json) {
        out << shortest_json(r, map).dump(2) << '\n';
      } else {
        out << "length: " << r.length << '\n'
            << "witness: " << render(r.witness, map) << '\n';
        if (r.count) out << "count: " << *r.count << '\n';
        if (r.all)
          for (const Word& w : *r.all) out << "cover: " << render(w, map) << '\n';
      }
      return kTrue;
    }

    if (*primitive) {
      auto [words, map] = parse_words({text_arg}, g);
      const PrimitivityResult r = is_s_primitive(words[0], search);
      if (g.json) {
        out << primitive_json(r, map).dump(2) << '\n';
      } else {
        out << "primitive: " << (r.primitive ? "yes" : "no") << '\n';
        if (r.witness) out << "witness: " << render(*r.witness, map) << '\n';
      }
      return r.primitive ? kTrue : kFalse;
    }

    if (*reduce) {
      auto [words, map] = parse_words({text_arg}, g);
      const Word r = reduce_to_bounded_cover(words[0], search);
      if (g.json)
        out << Json{{"cover", render(r, map)}, {"length", r.size()}}.dump(2)
            << '\n';
      else
        out << render(r, map) << '\n';
      return kTrue;
    }

    if (*count) {
      auto [words, map] = parse_words({text_arg}, g);
      const ShortestCount r = count_shortest_s_covers(words[0], search);
      if (g.json)
        out << count_json(r).dump(2) << '\n';
      else
        out << "length: " << r.length << '\n' << "count: " << r.count << '\n';
      return kTrue;
    }

    if (*gamma) {
      if (max_len) gamma_config.max_len = max_len;
      if (!checkpoint.empty()) gamma_config.checkpoint = checkpoint;
      if (no_filters) {
        gamma_config.filter_square = false;
        gamma_config.filter_gapped_repeat = false;
        gamma_config.filter_abxbc = false;
      }
      gamma_config.keep_words = list || g.json || !checkpoint.empty();
      const GammaReport r = gamma_search(gamma_config);
      if (g.json) {
        out << gamma_json(r, list).dump(2) << '\n';
      } else {
        out << "gamma(" << r.k << ") = " << r.gamma << " (" << r.total_count
            << " words)\n";
        if (list)
          for (const Word& w : r.canonical_words)
            out << render_canonical(w) << '\n';
      }
      return kTrue;
    }

    if (*bounds) {
      const auto rows = bounds_table(k_max);
      if (g.json)
        out << bounds_json(rows).dump(2) << '\n';
      else
        out << bounds_text(rows);
      return kTrue;
    }

    if (*construct) {
      Word w;
      if (family == "zimin") {
        if (param > 26) throw InputError("zimin: k must lie in [1, 26]");
        w = zimin(static_cast<unsigned>(param));
      } else if (family == "lowerbound") {
        if (param > 12) throw InputError("lower_bound_word: k must lie in [1, 12]");
        w = lower_bound_word(static_cast<unsigned>(param));
      } else {
        w = multicover_word(param);
      }
      if (g.json)
        out << Json{{"family", family},
                    {"param", param},
                    {"length", w.size()},
                    {"word", render_canonical(w)}}
                   .dump(2)
            << '\n';
      else
        out << render_canonical(w) << '\n';
      return kTrue;
    }

    if (*verify) {
      PhiRule rule = PhiRule::full;
      if (rule_name == "drop-b2") rule = PhiRule::drop_b2_clause;
      if (rule_name == "strict-b2") rule = PhiRule::strict_b2_clause;
      const XyVerdict v = verify_xy_lemma(rule);
      if (g.json) {
        Json j;
        j["pass"] = v.pass;
        j["pairs"] = v.pairs;
        j["counterexamples"] = v.counterexamples;
        if (v.first_counterexample)
          j["first_counterexample"] = {render_canonical(v.first_counterexample->first),
                                       render_canonical(v.first_counterexample->second)};
        else
          j["first_counterexample"] = nullptr;
        Json types = Json::array();
        for (const Word& x : v.x_types) types.push_back(render_canonical(x));
        j["x_types"] = types;
        out << j.dump(2) << '\n';
      } else if (v.pass) {
        out << "XY-Lemma verified over " << v.pairs << " pairs; 0 counterexamples\n";
      } else {
        out << "XY-Lemma failed over " << v.pairs << " pairs; "
            << v.counterexamples << " counterexamples; first: "
            << render_canonical(v.first_counterexample->first) << ' '
            << render_canonical(v.first_counterexample->second) << '\n';
      }
      return v.pass ? kTrue : kFalse;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  }
  return kUsage;
}

}  // namespace scover::cli
