#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <string>
#include <thread>

#include <json.hpp>

#include "scover/errors.hpp"
#include "scover/extremal.hpp"

namespace scover {

namespace {

using nlohmann::json;

constexpr int kCheckpointVersion = 1;

// Maximal-length words seen in one part of the tree.
struct Partial {
  std::size_t gamma = 0;
  std::uint64_t count = 0;
  std::uint64_t total = 0;
  std::uint64_t nodes = 0;
  std::vector<Word> words;

  void merge(Partial&& other) {
    nodes += other.nodes;
    if (other.gamma < gamma || other.count == 0) return;
    if (other.gamma > gamma) {
      gamma = other.gamma;
      count = total = 0;
      words.clear();
    }
    count += other.count;
    total += other.total;
    for (Word& w : other.words) words.push_back(std::move(w));
  }
};

json partial_to_json(const Partial& p) {
  json words = json::array();
  for (const Word& w : p.words) words.push_back(render_canonical(w));
  return {{"gamma", p.gamma}, {"count", p.count}, {"total", p.total},
          {"nodes", p.nodes}, {"words", words}};
}

Partial partial_from_json(const json& j) {
  Partial p;
  p.gamma = j.at("gamma").get<std::size_t>();
  p.count = j.at("count").get<std::uint64_t>();
  p.total = j.at("total").get<std::uint64_t>();
  p.nodes = j.at("nodes").get<std::uint64_t>();
  for (const auto& w : j.at("words")) p.words.push_back(letters(w.get<std::string>()));
  return p;
}

json config_to_json(const GammaConfig& c) {
  return {{"k", c.k},
          {"max_len", c.max_len ? json(*c.max_len) : json(nullptr)},
          {"filters",
           {{"square", c.filter_square},
            {"gapped_repeat", c.filter_gapped_repeat},
            {"abxbc", c.filter_abxbc}}},
          {"split_depth", c.split_depth},
          {"keep_words", c.keep_words}};
}

class Explorer {
 public:
  explicit Explorer(const GammaConfig& config) : config_(config) {
    // weight_[u]: number of words over k letters renaming to a canonical
    // word with u letters.
    weight_.assign(config.k + 1, 1);
    for (unsigned u = 1; u <= config.k; ++u) {
      std::uint64_t w = 0;
      if (__builtin_mul_overflow(weight_[u - 1], std::uint64_t{config.k - u + 1}, &w))
        w = 0;
      weight_[u] = w;
    }
  }

  // Walks the tree above split_depth. Nodes strictly above it are recorded in
  // `shallow`; nodes at split_depth become subtree roots.
  void collect(std::vector<Letter>& buf, unsigned used, Partial& shallow,
               std::vector<Word>& roots) const {
    if (buf.size() == config_.split_depth) {
      roots.emplace_back(buf);
      return;
    }
    record(buf, used, shallow);
    for_children(buf, used, [&](unsigned next_used) {
      collect(buf, next_used, shallow, roots);
    });
  }

  void explore(std::vector<Letter>& buf, unsigned used, Partial& out) const {
    record(buf, used, out);
    for_children(buf, used,
                 [&](unsigned next_used) { explore(buf, next_used, out); });
  }

 private:
  template <class F>
  void for_children(std::vector<Letter>& buf, unsigned used, F&& visit) const {
    if (config_.max_len && buf.size() >= *config_.max_len) return;
    const Letter top = std::min(used, config_.k - 1);
    for (Letter c = 0; c <= top; ++c) {
      if (c == buf.back()) continue;
      buf.push_back(c);
      if (extends_primitive(Word(buf), config_))
        visit(c == used ? used + 1 : used);
      buf.pop_back();
    }
  }

  void record(const std::vector<Letter>& buf, unsigned used, Partial& out) const {
    ++out.nodes;
    if (buf.size() < out.gamma) return;
    if (buf.size() > out.gamma) {
      out.gamma = buf.size();
      out.count = out.total = 0;
      out.words.clear();
    }
    if (weight_[used] == 0 ||
        __builtin_add_overflow(out.total, weight_[used], &out.total))
      throw ResourceError("total count does not fit in 64 bits");
    ++out.count;
    if (config_.keep_words) out.words.emplace_back(buf);
  }

  const GammaConfig& config_;
  std::vector<std::uint64_t> weight_;
};

unsigned used_letters(const Word& w) {
  Letter top = 0;
  for (Letter x : w) top = std::max(top, x);
  return w.empty() ? 0 : top + 1;
}

class Checkpoint {
 public:
  Checkpoint(const GammaConfig& config, const std::vector<Word>& roots)
      : config_(config), done_(roots.size()) {
    header_ = config_to_json(config);
    header_["format"] = "scover-gamma-checkpoint";
    header_["version"] = kCheckpointVersion;
    json frontier = json::array();
    for (const Word& w : roots) frontier.push_back(render_canonical(w));
    header_["frontier"] = frontier;
  }

  // Loads finished subtrees from an existing file, if any.
  void load() {
    if (!config_.checkpoint || !std::filesystem::exists(*config_.checkpoint))
      return;
    std::ifstream in(*config_.checkpoint);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw InputError(std::string("unreadable checkpoint: ") + e.what());
    }
    for (const char* key : {"format", "version", "k", "max_len", "filters",
                            "split_depth", "keep_words", "frontier"})
      if (!j.contains(key))
        throw InputError(std::string("checkpoint lacks ") + key);
    for (const char* key :
         {"format", "version", "k", "max_len", "filters", "split_depth", "frontier"})
      if (j[key] != header_[key])
        throw InputError(std::string("checkpoint does not match request: ") + key);
    // Words saved earlier can be dropped, missing ones cannot be recovered.
    if (config_.keep_words && !j["keep_words"].get<bool>())
      throw InputError("checkpoint was written without the word lists");
    try {
      for (const auto& entry : j.at("done")) {
        const auto index = entry.at("index").get<std::size_t>();
        if (index >= done_.size())
          throw InputError("checkpoint subtree index out of range");
        done_[index] = partial_from_json(entry.at("result"));
        if (!config_.keep_words) done_[index]->words.clear();
      }
    } catch (const json::exception& e) {
      throw InputError(std::string("malformed checkpoint: ") + e.what());
    }
  }

  bool finished(std::size_t index) const { return done_[index].has_value(); }

  void store(std::size_t index, const Partial& p) {
    std::lock_guard lock(mutex_);
    done_[index] = p;
    if (config_.checkpoint) write();
  }

  std::vector<std::optional<Partial>>& results() { return done_; }

 private:
  void write() const {
    json j = header_;
    json done = json::array();
    for (std::size_t i = 0; i < done_.size(); ++i)
      if (done_[i])
        done.push_back({{"index", i}, {"result", partial_to_json(*done_[i])}});
    j["done"] = done;
    const auto target = *config_.checkpoint;
    auto tmp = target;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      out << j.dump() << '\n';
      if (!out) throw ResourceError("cannot write checkpoint " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
  }

  const GammaConfig& config_;
  json header_;
  std::vector<std::optional<Partial>> done_;
  std::mutex mutex_;
};

}  // namespace

bool extends_primitive(const Word& w, const GammaConfig& config) {
  const auto s = w.span();
  if (w.size() >= 2 && w[w.size() - 1] == w[w.size() - 2]) return false;
  if (config.filter_square && ends_with_square(s)) return false;
  if (config.filter_gapped_repeat && ends_with_gapped_repeat(s)) return false;
  if (config.filter_abxbc && ends_with_abxbc(s)) return false;
  return !find_nontrivial_cover(w).has_value();
}

GammaReport gamma_search(const GammaConfig& config) {
  if (config.k == 0 || config.k > 26)
    throw InputError("gamma_search: k must lie in [1, 26]");
  if (config.k >= 5 && !config.max_len)
    throw ResourceError("gamma(" + std::to_string(config.k) +
                        ") has no known end; pass a maximum length");
  if (config.max_len && *config.max_len == 0)
    throw InputError("gamma_search: max_len must be positive");
  if (config.split_depth == 0)
    throw InputError("gamma_search: split_depth must be positive");

  const Explorer explorer(config);
  Partial total;
  std::vector<Word> roots;
  {
    std::vector<Letter> buf{0};
    explorer.collect(buf, 1, total, roots);
  }

  Checkpoint checkpoint(config, roots);
  checkpoint.load();

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= roots.size()) return;
      if (checkpoint.finished(i)) continue;
      {
        std::lock_guard lock(failure_mutex);
        if (failure) return;
      }
      try {
        Partial p;
        std::vector<Letter> buf(roots[i].begin(), roots[i].end());
        explorer.explore(buf, used_letters(roots[i]), p);
        checkpoint.store(i, p);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  const unsigned workers = std::max(1u, config.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (auto& r : checkpoint.results()) total.merge(std::move(*r));

  GammaReport report;
  report.k = config.k;
  report.gamma = total.gamma;
  report.canonical_count = total.count;
  report.total_count = total.total;
  report.nodes_explored = total.nodes;
  report.canonical_words = std::move(total.words);
  std::sort(report.canonical_words.begin(), report.canonical_words.end());
  return report;
}

}  // namespace scover
