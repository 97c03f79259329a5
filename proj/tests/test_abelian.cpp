#include <gtest/gtest.h>

#include "abelsq/abelian.hpp"
#include "abelsq/substitution.hpp"
#include "abelsq/sturmian.hpp"
#include "abelsq/thue_morse.hpp"
#include "support/oracle.hpp"

using namespace abelsq;

namespace {

Word fib(std::size_t len) { return fixed_point_prefix(FixedPointSpec(Substitution::fibonacci(), 0), len); }

}  // namespace

TEST(FactorIndex, DistinctCountsMatchOracle) {
  const auto w = Word::parse("abaababaabaababaababa");
  const FactorIndex idx(w);
  for (std::size_t m = 0; m <= w.size(); ++m) {
    const auto want = m == 0 ? 1 : oracle::factors(w.str(), m).size();
    EXPECT_EQ(idx.distinct_count(m), want) << m;
    EXPECT_EQ(idx.distinct_starts(m).size(), want);
  }
  EXPECT_THROW(idx.distinct_count(w.size() + 1), std::out_of_range);
}

TEST(FactorIndex, DistinctStartsAreLexicographic) {
  const auto w = Word::parse("bananaban");
  const FactorIndex idx(w);
  std::vector<std::string> got;
  for (auto s : idx.distinct_starts(3)) got.push_back(w.factor(static_cast<std::size_t>(s), 3).str());
  const auto set = oracle::factors(w.str(), 3);
  EXPECT_EQ(got, std::vector<std::string>(set.begin(), set.end()));
}

TEST(FactorIndex, SquareStartsAreSquares) {
  const auto w = thue_morse_prefix(300);
  const FactorIndex idx(w);
  for (std::size_t m = 2; m <= 40; m += 2) {
    const auto starts = idx.abelian_square_starts(m);
    EXPECT_EQ(starts.size(), idx.abelian_square_count(m));
    std::set<std::string> seen;
    for (auto s : starts) {
      const auto f = w.factor(static_cast<std::size_t>(s), m);
      EXPECT_TRUE(is_abelian_kpower(f, 2));
      EXPECT_TRUE(seen.insert(f.str()).second) << "duplicate " << f.str();
    }
  }
  EXPECT_TRUE(idx.abelian_square_starts(7).empty());
}

TEST(FactorIndex, ParikhOfWindow) {
  const FactorIndex idx(Word::parse("abcabca"));
  EXPECT_EQ(idx.parikh_of(1, 5).counts, (std::vector<std::uint32_t>{1, 2, 2}));
  EXPECT_EQ(idx.prefix_counts(0).size(), 8u);
  EXPECT_THROW(idx.prefix_counts(3), std::out_of_range);
}

TEST(FibonacciCounts, ShortLengthsFromLongPrefix) {
  // n = 2..36; at n = 34 a direct enumeration gives 1
  const std::vector<std::uint64_t> want{0, 1, 3, 5, 1, 9, 5, 5, 15, 3, 13, 13, 5, 25, 9, 15, 25, 1, 27};
  const auto p = asf_profile(fib(10000), 36);
  EXPECT_EQ(p.by_half, want);
  const auto oracle_counts = oracle::asf_counts(fib(400).str(), 36);
  for (std::size_t m = 2; m <= 36; m += 2) EXPECT_EQ(oracle_counts.at(m), want[m / 2]) << m;
}

TEST(Stability, CountStabilization) {
  const auto t = thue_morse_prefix(4096);
  EXPECT_TRUE(factor_count_stable(t, 100));
  EXPECT_FALSE(factor_count_stable(t, 3000));
  const auto small = thue_morse_prefix(20);
  EXPECT_FALSE(factor_count_stable(small, 8));
}

TEST(Reference, MatchesEngineOnSamples) {
  for (const char* s : {"a", "ab", "abba", "aabbaabb", "abcacbbca", "ababa", "aaaa"}) {
    const auto w = Word::parse(s);
    EXPECT_EQ(reference::asf_profile(w, w.size()), asf_profile(w)) << s;
    EXPECT_EQ(reference::inequivalent_profile(w, w.size()), inequivalent_profile(w, w.size())) << s;
  }
}

TEST(Reference, EmptyWord) {
  const Word empty(Alphabet(2), {});
  EXPECT_EQ(asf_profile(empty).total, 0u);
  EXPECT_EQ(reference::asf_profile(empty, 0).total, 0u);
}
