#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "abelsq/search.hpp"
#include "support/oracle.hpp"

using namespace abelsq;

namespace {

std::string nth_word(std::uint64_t m, std::size_t sigma, std::size_t L) {
  std::string s(L, 'a');
  for (std::size_t i = L; i-- > 0;) {
    s[i] = static_cast<char>('a' + m % sigma);
    m /= sigma;
  }
  return s;
}

// maximum and sorted maximizers over all sigma^L words, by the string oracle
std::pair<std::uint64_t, std::vector<std::string>> brute_max(std::size_t sigma, std::size_t L, bool inequivalent) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < L; ++i) total *= sigma;
  std::uint64_t best = 0;
  std::vector<std::string> ws;
  for (std::uint64_t m = 0; m < total; ++m) {
    const auto s = nth_word(m, sigma, L);
    const auto v = inequivalent ? oracle::inequivalent_total(s) : oracle::asf_total(s);
    if (v > best || ws.empty()) {
      best = v;
      ws.clear();
    }
    if (v == best) ws.push_back(s);
  }
  return {best, ws};
}

std::vector<std::string> strs(const SearchResult& r) {
  std::vector<std::string> out;
  for (const auto& w : r.witnesses) out.push_back(w.str());
  return out;
}

bool canonical_form(const std::string& s) {
  char next = 'a';
  for (char c : s) {
    if (c > next) return false;
    if (c == next) ++next;
  }
  return true;
}

}  // namespace

TEST(Search, SmallExamples) {
  const auto two = max_asf(2, 2);
  EXPECT_EQ(two.maximum, 1u);
  EXPECT_EQ(strs(two), std::vector<std::string>{"aa"});
  const auto five = max_asf(2, 5);
  EXPECT_EQ(five.maximum, 3u);
  EXPECT_EQ(strs(five), (std::vector<std::string>{"aabba", "abbaa"}));
  EXPECT_EQ(max_inequivalent(2, 2).maximum, 1u);
}

TEST(Search, MatchesOracleEnumeration) {
  for (std::size_t sigma = 2; sigma <= 3; ++sigma) {
    for (std::size_t L = 1; L <= (sigma == 2 ? 11u : 7u); ++L) {
      for (bool ineq : {false, true}) {
        const auto [best, ws] = brute_max(sigma, L, ineq);
        SearchOptions full;
        full.canonical = false;
        full.witness_cap = 1000000;
        const auto r = exhaustive_search(sigma, L, ineq ? Objective::inequivalent_total : Objective::distinct_asf_total, full);
        ASSERT_EQ(r.maximum, best) << sigma << " " << L;
        ASSERT_EQ(strs(r), ws);
        ASSERT_EQ(r.witness_count, ws.size());
        std::uint64_t words = 1;
        for (std::size_t i = 0; i < L; ++i) words *= sigma;
        ASSERT_EQ(r.enumerated, words);

        SearchOptions canon = full;
        canon.canonical = true;
        const auto c = exhaustive_search(sigma, L, r.objective, canon);
        ASSERT_EQ(c.maximum, best);
        std::vector<std::string> want;
        for (const auto& w : ws)
          if (canonical_form(w)) want.push_back(w);
        ASSERT_EQ(strs(c), want);
        ASSERT_EQ(c.enumerated, canonical_word_count(sigma, L));
      }
    }
  }
}

TEST(Search, CanonicalEqualsFullUpTo14) {
  for (std::size_t L = 12; L <= 14; ++L) {
    SearchOptions full;
    full.canonical = false;
    const auto a = max_asf(2, L, full);
    const auto b = max_asf(2, L);
    EXPECT_EQ(a.maximum, b.maximum) << L;
    EXPECT_EQ(b.witnesses.front().str(), a.witnesses.front().str());
  }
}

TEST(Search, MonotoneInLength) {
  std::uint64_t prev = 0;
  for (std::size_t L = 1; L <= 18; ++L) {
    const auto r = max_asf(2, L);
    EXPECT_GE(r.maximum, prev) << L;
    prev = r.maximum;
    for (const auto& w : r.witnesses) ASSERT_EQ(oracle::asf_total(w.str()), r.maximum);
  }
}

TEST(Search, DeterministicAcrossThreads) {
  SearchOptions one, four;
  four.threads = 4;
  for (std::size_t L : {9u, 16u}) {
    const auto a = max_asf(2, L, one);
    const auto b = max_asf(2, L, four);
    EXPECT_EQ(a.maximum, b.maximum);
    EXPECT_EQ(strs(a), strs(b));
    EXPECT_EQ(a.witness_count, b.witness_count);
    EXPECT_EQ(a.enumerated, b.enumerated);
  }
  const auto a = max_inequivalent(3, 9, one);
  const auto b = max_inequivalent(3, 9, four);
  EXPECT_EQ(strs(a), strs(b));
}

TEST(Search, WitnessCap) {
  SearchOptions opt;
  opt.witness_cap = 1;
  SearchOptions full;
  full.witness_cap = 1000;
  const auto capped = max_asf(2, 10, opt);
  const auto all = max_asf(2, 10, full);
  EXPECT_EQ(capped.witnesses.size(), 1u);
  EXPECT_EQ(capped.witness_count, all.witness_count);
  EXPECT_EQ(capped.witnesses[0].str(), all.witnesses[0].str());
}

TEST(Search, Budget) {
  EXPECT_THROW(max_asf(2, 27), BudgetExceeded);
  EXPECT_THROW(max_asf(3, 17), BudgetExceeded);
  EXPECT_THROW(max_asf(4, 14), BudgetExceeded);
  SearchOptions tight;
  tight.budget = {{2, 5}};
  EXPECT_THROW(max_asf(2, 6, tight), BudgetExceeded);
  EXPECT_THROW(max_asf(3, 3, tight), BudgetExceeded);
  EXPECT_NO_THROW(max_asf(2, 5, tight));
  try {
    max_asf(2, 6, tight);
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.budget, 5u);
    EXPECT_EQ(e.length, 6u);
  }
  EXPECT_THROW(max_asf(5, 4), std::invalid_argument);
  EXPECT_THROW(max_asf(2, 0), std::invalid_argument);
}

TEST(Search, CheckpointResume) {
  const auto path = std::filesystem::temp_directory_path() / "abelsq_search_ckpt.jsonl";
  std::filesystem::remove(path);
  SearchOptions opt;
  opt.checkpoint_path = path.string();
  const auto first = max_asf(2, 15, opt);
  std::vector<std::string> lines;
  {
    std::ifstream in(path);
    for (std::string l; std::getline(in, l);) lines.push_back(l);
  }
  ASSERT_FALSE(lines.empty());
  // keep half the records plus a torn line
  {
    std::ofstream out(path, std::ios::trunc);
    for (std::size_t i = 0; i < lines.size() / 2; ++i) out << lines[i] << '\n';
    out << lines.back().substr(0, lines.back().size() / 2);
  }
  const auto second = max_asf(2, 15, opt);
  EXPECT_EQ(second.maximum, first.maximum);
  EXPECT_EQ(strs(second), strs(first));
  EXPECT_EQ(second.witness_count, first.witness_count);
  EXPECT_EQ(second.enumerated, first.enumerated);
  const auto size_after = std::filesystem::file_size(path);
  const auto third = max_asf(2, 15, opt);
  EXPECT_EQ(std::filesystem::file_size(path), size_after);
  EXPECT_EQ(strs(third), strs(first));
  // records for another length are ignored
  const auto other = max_asf(2, 12, opt);
  EXPECT_EQ(other.maximum, max_asf(2, 12).maximum);
  std::filesystem::remove(path);
}

TEST(Search, CanonicalWordCount) {
  EXPECT_EQ(canonical_word_count(2, 1), 1u);
  EXPECT_EQ(canonical_word_count(2, 5), 16u);
  EXPECT_EQ(canonical_word_count(3, 4), 14u);  // 1 + 7 + 6
  EXPECT_EQ(canonical_word_count(4, 4), 15u);  // Bell(4)
  EXPECT_EQ(canonical_word_count(3, 0), 1u);
}

TEST(Search, CompareAlphabets) {
  for (std::size_t L : {4u, 8u}) {
    const auto cmp = compare_alphabets(L);
    ASSERT_EQ(cmp.results.size(), 3u);
    bool ge = true;
    for (std::size_t i = 1; i < cmp.results.size(); ++i) ge = ge && cmp.results[0].maximum >= cmp.results[i].maximum;
    EXPECT_EQ(cmp.binary_max_ge_larger, ge);
    EXPECT_TRUE(cmp.binary_max_ge_larger) << L;
  }
  EXPECT_EQ(compare_alphabets(14).results.size(), 2u);
}

TEST(Search, InequivalentTwelve) {
  const auto r = max_inequivalent(2, 12);
  EXPECT_EQ(r.maximum, brute_max(2, 12, true).first);
  EXPECT_LE(r.maximum, max_asf(2, 12).maximum);
}

TEST(PackedEvaluator, MatchesOracle) {
  std::mt19937_64 gen(3);
  for (int t = 0; t < 3000; ++t) {
    const std::size_t sigma = 2 + gen() % 3;
    const std::size_t L = 1 + gen() % 32;
    std::string s;
    for (std::size_t i = 0; i < L; ++i) s += static_cast<char>('a' + gen() % sigma);
    const auto w = Word::parse(s, Alphabet::from_symbols(std::string("abcd").substr(0, sigma)));
    ASSERT_EQ(packed_objective(w, Objective::distinct_asf_total), oracle::asf_total(s)) << s;
    ASSERT_EQ(packed_objective(w, Objective::inequivalent_total), oracle::inequivalent_total(s)) << s;
  }
}
