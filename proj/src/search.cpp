#include "abelsq/search.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <mutex>
#include <json.hpp>
#include <optional>
#include <unordered_map>

#include "abelsq/abelian.hpp"
#include "abelsq/parallel.hpp"

namespace abelsq {

namespace {

constexpr std::size_t kMaxSigma = 4;
constexpr std::size_t kMaxLength = 32;
// Shards are prefixes; their length is the longest keeping this many shards.
constexpr std::uint64_t kMaxShards = 4096;

const Alphabet& search_alphabet(std::size_t sigma) {
  static const std::array<Alphabet, kMaxSigma + 1> alphabets{
      Alphabet(), Alphabet(), Alphabet::from_symbols("ab"), Alphabet::from_symbols("abc"),
      Alphabet::from_symbols("abcd")};
  return alphabets[sigma];
}

std::uint64_t evaluate(const Letter* w, std::size_t L, std::size_t sigma, Objective objective) {
  std::uint64_t packed = 0;
  for (std::size_t i = 0; i < L; ++i) packed |= static_cast<std::uint64_t>(w[i]) << (2 * i);
  std::array<std::array<std::int32_t, kMaxLength + 1>, kMaxSigma> cnt{};
  for (std::size_t c = 0; c < sigma; ++c) {
    for (std::size_t i = 0; i < L; ++i) cnt[c][i + 1] = cnt[c][i] + (w[i] == c);
  }
  std::array<std::uint64_t, kMaxLength> keys{};
  std::uint64_t total = 0;
  for (std::size_t h = 1; 2 * h <= L; ++h) {
    const std::size_t m = 2 * h;
    const std::uint64_t mask = m >= 32 ? ~0ULL : (1ULL << (2 * m)) - 1;
    std::size_t k = 0;
    for (std::size_t i = 0; i + m <= L; ++i) {
      bool square = true;
      for (std::size_t c = 0; c + 1 < sigma && square; ++c) {
        square = 2 * cnt[c][i + h] == cnt[c][i] + cnt[c][i + m];
      }
      if (!square) continue;
      if (objective == Objective::distinct_asf_total) {
        keys[k++] = (packed >> (2 * i)) & mask;
      } else {
        std::uint64_t key = 0;
        for (std::size_t c = 0; c < sigma; ++c) key |= static_cast<std::uint64_t>(cnt[c][i + m] - cnt[c][i]) << (8 * c);
        keys[k++] = key;
      }
    }
    std::sort(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(k));
    total += static_cast<std::uint64_t>(std::unique(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(k)) -
                                        keys.begin());
  }
  return total;
}

std::uint64_t oracle_objective(const Word& w, Objective objective) {
  if (objective == Objective::distinct_asf_total) return reference::asf_profile(w, w.size()).total;
  return reference::inequivalent_profile(w, w.size()).total;
}

// All words (or canonical words) of length P, lexicographic.
std::vector<std::vector<Letter>> enumerate_prefixes(std::size_t sigma, std::size_t P, bool canonical) {
  std::vector<std::vector<Letter>> out;
  std::vector<Letter> cur;
  auto rec = [&](auto&& self, std::size_t limit) -> void {
    if (cur.size() == P) {
      out.push_back(cur);
      return;
    }
    const std::size_t top = canonical ? std::min(sigma, limit + 1) : sigma;
    for (std::size_t c = 0; c < top; ++c) {
      cur.push_back(static_cast<Letter>(c));
      self(self, std::max(limit, c + 1));
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::uint64_t prefix_count(std::size_t sigma, std::size_t P, bool canonical) {
  if (!canonical) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < P; ++i) v *= sigma;
    return v;
  }
  return canonical_word_count(sigma, P);
}

struct ShardResult {
  std::uint64_t best = 0;
  std::uint64_t count = 0;
  std::uint64_t enumerated = 0;
  std::vector<std::vector<Letter>> witnesses;
};

ShardResult run_shard(const std::vector<Letter>& prefix, std::size_t sigma, std::size_t L, Objective objective,
                      bool canonical, std::size_t cap) {
  ShardResult r;
  std::array<Letter, kMaxLength> w{};
  std::size_t limit = 0;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    w[i] = prefix[i];
    limit = std::max<std::size_t>(limit, prefix[i] + 1U);
  }
  auto rec = [&](auto&& self, std::size_t pos, std::size_t lim) -> void {
    if (pos == L) {
      ++r.enumerated;
      const std::uint64_t v = evaluate(w.data(), L, sigma, objective);
      if (v > r.best || r.enumerated == 1) {
        r.best = v;
        r.count = 0;
        r.witnesses.clear();
      }
      if (v == r.best) {
        ++r.count;
        if (r.witnesses.size() < cap) r.witnesses.emplace_back(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(L));
      }
      return;
    }
    const std::size_t top = canonical ? std::min(sigma, lim + 1) : sigma;
    for (std::size_t c = 0; c < top; ++c) {
      w[pos] = static_cast<Letter>(c);
      self(self, pos + 1, std::max(lim, c + 1));
    }
  };
  rec(rec, prefix.size(), limit);
  return r;
}

std::string letters_key(const std::vector<Letter>& v) {
  std::string s;
  for (auto c : v) s += static_cast<char>('a' + c);
  return s;
}

std::vector<Letter> key_letters(const std::string& s) {
  std::vector<Letter> v;
  for (char ch : s) v.push_back(static_cast<Letter>(ch - 'a'));
  return v;
}

using nlohmann::json;

json shard_record(std::size_t sigma, std::size_t L, Objective objective, bool canonical, std::size_t cap,
                  const std::string& shard, const ShardResult& r) {
  json j;
  j["sigma"] = sigma;
  j["length"] = L;
  j["objective"] = objective_name(objective);
  j["canonical"] = canonical;
  j["witness_cap"] = cap;
  j["shard"] = shard;
  j["best"] = r.best;
  j["witness_count"] = r.count;
  j["enumerated"] = r.enumerated;
  json ws = json::array();
  for (const auto& w : r.witnesses) ws.push_back(letters_key(w));
  j["witnesses"] = ws;
  return j;
}

std::unordered_map<std::string, ShardResult> load_checkpoint(const std::string& path, std::size_t sigma, std::size_t L,
                                                             Objective objective, bool canonical, std::size_t cap) {
  std::unordered_map<std::string, ShardResult> done;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) continue;  // torn trailing write
    if (j.value("sigma", 0UL) != sigma || j.value("length", 0UL) != L ||
        j.value("objective", std::string()) != objective_name(objective) || j.value("canonical", !canonical) != canonical ||
        j.value("witness_cap", 0UL) != cap) {
      continue;
    }
    ShardResult r;
    r.best = j.at("best").get<std::uint64_t>();
    r.count = j.at("witness_count").get<std::uint64_t>();
    r.enumerated = j.at("enumerated").get<std::uint64_t>();
    for (const auto& w : j.at("witnesses")) r.witnesses.push_back(key_letters(w.get<std::string>()));
    done[j.at("shard").get<std::string>()] = std::move(r);
  }
  return done;
}

}  // namespace

const char* objective_name(Objective objective) {
  return objective == Objective::distinct_asf_total ? "distinct_asf_total" : "inequivalent_total";
}

BudgetExceeded::BudgetExceeded(std::size_t s, std::size_t l, std::size_t b)
    : std::runtime_error("length " + std::to_string(l) + " over the budget " + std::to_string(b) + " for sigma " +
                         std::to_string(s) + "; raise the budget to at least " + std::to_string(l)),
      sigma(s),
      length(l),
      budget(b) {}

std::uint64_t canonical_word_count(std::size_t sigma, std::size_t length) {
  // S(n, k) by the usual recurrence, rows up to length.
  std::vector<std::uint64_t> row(sigma + 1, 0);
  row[0] = 1;
  for (std::size_t n = 1; n <= length; ++n) {
    for (std::size_t k = std::min(n, sigma); k >= 1; --k) row[k] = k * row[k] + row[k - 1];
    row[0] = 0;
  }
  std::uint64_t total = 0;
  for (std::size_t k = length == 0 ? 0 : 1; k <= sigma; ++k) total += row[k];
  return total;
}

std::uint64_t packed_objective(const Word& w, Objective objective) {
  const std::size_t sigma = w.alphabet().size();
  if (sigma > kMaxSigma || w.size() > kMaxLength) throw std::invalid_argument("packed evaluator needs sigma <= 4 and length <= 32");
  return evaluate(w.letters().data(), w.size(), sigma, objective);
}

SearchResult exhaustive_search(std::size_t sigma, std::size_t L, Objective objective, const SearchOptions& options) {
  if (sigma < 2 || sigma > kMaxSigma) throw std::invalid_argument("search supports alphabet sizes 2 to 4");
  if (L < 1 || L > kMaxLength) throw std::invalid_argument("search supports lengths 1 to 32");
  const auto budget = options.budget.find(sigma);
  if (budget == options.budget.end()) throw BudgetExceeded(sigma, L, 0);
  if (L > budget->second) throw BudgetExceeded(sigma, L, budget->second);

  const bool canonical = options.canonical;
  const std::size_t cap = options.witness_cap;
  std::size_t P = 0;
  while (P < L && prefix_count(sigma, P + 1, canonical) <= kMaxShards) ++P;
  const auto prefixes = enumerate_prefixes(sigma, P, canonical);

  std::unordered_map<std::string, ShardResult> done;
  if (!options.checkpoint_path.empty()) done = load_checkpoint(options.checkpoint_path, sigma, L, objective, canonical, cap);
  std::ofstream log;
  std::mutex log_mutex;
  if (!options.checkpoint_path.empty()) {
    bool torn = false;
    {
      std::ifstream in(options.checkpoint_path, std::ios::binary | std::ios::ate);
      if (in && in.tellg() > 0) {
        in.seekg(-1, std::ios::end);
        torn = in.get() != '\n';
      }
    }
    log.open(options.checkpoint_path, std::ios::app);
    if (!log) throw std::runtime_error("cannot open checkpoint file " + options.checkpoint_path);
    if (torn) log << '\n';  // keep the next record on its own line
  }

  std::vector<ShardResult> shards(prefixes.size());
  parallel_for(prefixes.size(), options.threads, [&](std::size_t k) {
    const std::string key = letters_key(prefixes[k]);
    if (auto it = done.find(key); it != done.end()) {
      shards[k] = it->second;
      return;
    }
    shards[k] = run_shard(prefixes[k], sigma, L, objective, canonical, cap);
    if (log.is_open()) {
      const auto line = shard_record(sigma, L, objective, canonical, cap, key, shards[k]).dump();
      std::lock_guard lock(log_mutex);
      log << line << '\n' << std::flush;
    }
  });

  SearchResult result;
  result.sigma = sigma;
  result.length = L;
  result.objective = objective;
  result.witness_cap = cap;
  bool any = false;
  for (const auto& s : shards) {
    result.enumerated += s.enumerated;
    if (s.enumerated == 0) continue;
    if (!any || s.best > result.maximum) {
      result.maximum = s.best;
      result.witness_count = 0;
      result.witnesses.clear();
      any = true;
    }
    if (s.best != result.maximum) continue;
    result.witness_count += s.count;
    for (const auto& w : s.witnesses) {
      if (result.witnesses.size() < cap) result.witnesses.emplace_back(search_alphabet(sigma), w);
    }
  }
  for (const auto& w : result.witnesses) {
    if (oracle_objective(w, objective) != result.maximum) {
      throw std::logic_error("witness " + w.str() + " does not re-verify");
    }
  }
  return result;
}

SearchResult max_asf(std::size_t sigma, std::size_t length, const SearchOptions& options) {
  return exhaustive_search(sigma, length, Objective::distinct_asf_total, options);
}

SearchResult max_inequivalent(std::size_t sigma, std::size_t length, const SearchOptions& options) {
  return exhaustive_search(sigma, length, Objective::inequivalent_total, options);
}

AlphabetComparison compare_alphabets(std::size_t length, const SearchOptions& options) {
  AlphabetComparison cmp;
  cmp.length = length;
  cmp.results.push_back(max_asf(2, length, options));
  cmp.results.push_back(max_asf(3, length, options));
  if (auto b = options.budget.find(4); b != options.budget.end() && length <= b->second) {
    cmp.results.push_back(max_asf(4, length, options));
  }
  cmp.binary_max_ge_larger = std::all_of(cmp.results.begin() + 1, cmp.results.end(), [&](const SearchResult& r) {
    return cmp.results.front().maximum >= r.maximum;
  });
  return cmp;
}

}  // namespace abelsq
