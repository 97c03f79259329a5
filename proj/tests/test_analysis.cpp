#include <gtest/gtest.h>

#include <cmath>

#include "abelsq/analysis.hpp"
#include "abelsq/substitution.hpp"
#include "abelsq/thue_morse.hpp"
#include "support/oracle.hpp"

using namespace abelsq;

namespace {

Word fibonacci(std::size_t len) { return fixed_point_prefix(FixedPointSpec(Substitution::fibonacci(), 0), len); }

Word periodic_ab(std::size_t len) {
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s += i % 2 ? 'b' : 'a';
  return Word::parse(s);
}

// shortest window length containing every length-n factor, by direct scan
std::uint64_t brute_recurrence(const std::string& s, std::size_t n) {
  const auto all = oracle::factors(s, n);
  for (std::size_t m = n; m <= s.size(); ++m) {
    bool ok = true;
    for (std::size_t i = 0; ok && i + m <= s.size(); ++i) ok = oracle::factors(s.substr(i, m), n) == all;
    if (ok) return m;
  }
  return s.size();
}

}  // namespace

TEST(TripleBlock, SmallCases) {
  const auto one = triple_block(1);
  EXPECT_EQ(one.word.str(), "ababa");
  EXPECT_EQ(one.asf_total, 2u);
  EXPECT_EQ(one.lower_bound, 2u);
  const auto two = triple_block(2);
  EXPECT_EQ(two.word.str(), "aabaabaa");
  EXPECT_EQ(two.asf_total, 6u);
  EXPECT_EQ(two.lower_bound, 5u);
  EXPECT_THROW(triple_block(0), std::invalid_argument);
}

TEST(TripleBlock, BoundHolds) {
  for (std::size_t n = 1; n <= 60; ++n) {
    const auto rep = triple_block(n);
    ASSERT_EQ(rep.word.size(), 3 * n + 2);
    // pairs (i, j) in [0, n]^2 with i + j + n even
    std::uint64_t pairs = 0;
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j <= n; ++j) pairs += (i + j + n) % 2 == 0;
    ASSERT_EQ(rep.lower_bound, pairs);
    ASSERT_GE(rep.asf_total, rep.lower_bound) << n;
    if (n <= 12) {
      ASSERT_EQ(rep.asf_total, oracle::asf_total(rep.word.str())) << n;
    }
  }
}

TEST(TripleBlock, QuadraticSlope) {
  std::vector<double> xs, ys;
  for (std::size_t n = 10; n <= 60; ++n) {
    xs.push_back(static_cast<double>(n));
    ys.push_back(static_cast<double>(triple_block(n).asf_total));
  }
  const double slope = loglog_slope(xs, ys);
  RecordProperty("slope", std::to_string(slope));
  EXPECT_GT(slope, 1.5);
}

TEST(Recurrence, Examples) {
  EXPECT_EQ(recurrence_index_estimate(periodic_ab(100), 1), 2u);
  EXPECT_EQ(recurrence_index_estimate(fibonacci(1000), 1), 3u);
}

TEST(Recurrence, MatchesBruteForce) {
  const auto tm = thue_morse_prefix(300);
  const auto fib = fibonacci(300);
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(recurrence_index_estimate(tm, n), brute_recurrence(tm.str(), n)) << n;
    EXPECT_EQ(recurrence_index_estimate(fib, n), brute_recurrence(fib.str(), n)) << n;
  }
}

TEST(Recurrence, MonotoneAndLinearForThueMorse) {
  const FactorIndex idx(thue_morse_prefix(1 << 14));
  std::uint64_t prev = 0;
  for (std::size_t n = 1; n <= 64; ++n) {
    const auto r = recurrence_index_estimate(idx, n);
    ASSERT_GE(r, prev) << n;
    ASSERT_LE(static_cast<double>(r) / static_cast<double>(n), 10.0) << n;
    prev = r;
  }
}

TEST(Recurrence, ThueMorseClosedForm) {
  // R(n) = 9 * 2^k + n - 1 for 2^k + 2 <= n <= 2^(k+1) + 1
  const FactorIndex idx(thue_morse_prefix(1 << 15));
  for (std::size_t n = 3; n <= 129; ++n) {
    std::size_t k = 0;
    while ((std::size_t{2} << k) + 1 < n) ++k;
    ASSERT_EQ(recurrence_index_estimate(idx, n), 9 * (std::size_t{1} << k) + n - 1) << n;
  }
}

TEST(Richness, ThueMorseAndFibonacci) {
  for (const auto& w : {thue_morse_prefix(4096), fibonacci(4096)}) {
    const auto rep = richness_report(w, {32, 64, 128});
    ASSERT_EQ(rep.rows.size(), 3u);
    EXPECT_GT(rep.C_min, 0.0);
    EXPECT_GT(rep.C_avg, 0.0);
    EXPECT_LE(rep.C_min, rep.C_avg);
    for (const auto& row : rep.rows) {
      EXPECT_LE(static_cast<double>(row.asf_min), row.avg());
      EXPECT_LE(row.avg(), static_cast<double>(row.n * row.n));
      EXPECT_NEAR(row.avg_ratio() / rep.C_avg, 1.0, 0.3) << row.n;
      EXPECT_NEAR(row.min_ratio() / rep.C_min, 1.0, 0.3) << row.n;
    }
    EXPECT_GT(rep.recurrence_quotient_estimate, 0.0);
  }
}

TEST(Richness, RowMatchesOracle) {
  const auto w = fibonacci(600);
  const auto rep = richness_report(w, {10, 16});
  for (const auto& row : rep.rows) {
    const auto fs = oracle::factors(w.str(), row.n);
    std::uint64_t sum = 0, mn = UINT64_MAX;
    for (const auto& f : fs) {
      const auto t = oracle::asf_total(f);
      sum += t;
      mn = std::min(mn, t);
    }
    EXPECT_EQ(row.factors, fs.size());
    EXPECT_EQ(row.asf_sum, sum);
    EXPECT_EQ(row.asf_min, mn);
  }
}

TEST(Richness, PeriodicWord) {
  const auto rep = richness_report(periodic_ab(200), {16});
  ASSERT_EQ(rep.rows.size(), 1u);
  const auto& row = rep.rows[0];
  EXPECT_EQ(row.factors, 2u);
  // squares only at lengths divisible by 4, plus the whole factor
  EXPECT_EQ(row.asf_min, oracle::asf_total(periodic_ab(16).str()));
  EXPECT_EQ(row.asf_min, 7u);
  EXPECT_EQ(row.asf_sum, 14u);
}

TEST(Richness, RejectsBadInput) {
  EXPECT_THROW(richness_report(fibonacci(100), {60}), InadequatePrefix);
  EXPECT_THROW(richness_report(fibonacci(100), {0}), std::invalid_argument);
  // a prefix whose length-n factor count is still growing
  EXPECT_THROW(richness_report(Word::parse("aaaaaaaaaaaaaaaabababababababab"), {4}), InadequatePrefix);
}

TEST(Baseline, ExhaustiveTinyCases) {
  EXPECT_DOUBLE_EQ(exhaustive_mean_total(2), 0.5);
  for (std::size_t n = 1; n <= 8; ++n) {
    std::uint64_t sum = 0;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      std::string s;
      for (std::size_t i = 0; i < n; ++i) s += (m >> (n - 1 - i)) & 1 ? 'b' : 'a';
      sum += oracle::asf_total(s);
    }
    EXPECT_DOUBLE_EQ(exhaustive_mean_total(n), static_cast<double>(sum) / (1u << n)) << n;
  }
  EXPECT_THROW(exhaustive_mean_total(25), std::invalid_argument);
}

TEST(Baseline, MeanMatchesOracle) {
  const auto rep = random_baseline({20, 30}, 6, 99);
  for (const auto& row : rep.rows) {
    double sum = 0;
    for (std::size_t t = 0; t < 6; ++t) {
      const auto w = random_binary_word(99, row.n, t);
      ASSERT_EQ(w.size(), row.n);
      sum += static_cast<double>(oracle::asf_total(w.str()));
    }
    EXPECT_DOUBLE_EQ(row.mean, sum / 6);
  }
}

TEST(Baseline, Deterministic) {
  const auto a = random_baseline({64, 128, 256}, 12, 5, 1);
  const auto b = random_baseline({64, 128, 256}, 12, 5, 4);
  const auto c = random_baseline({64, 128, 256}, 12, 5, 1);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].mean, b.rows[i].mean);
    EXPECT_EQ(a.rows[i].stddev, b.rows[i].stddev);
    EXPECT_EQ(a.rows[i].mean, c.rows[i].mean);
  }
  EXPECT_EQ(a.exponent, b.exponent);
  EXPECT_NE(random_binary_word(5, 64, 0).str(), random_binary_word(6, 64, 0).str());
  EXPECT_THROW(random_baseline({8}, 0, 1), std::invalid_argument);
}

TEST(Baseline, LogLogSlope) {
  EXPECT_NEAR(loglog_slope({1, 2, 4, 8}, {3, 12, 48, 192}), 2.0, 1e-12);
  EXPECT_NEAR(loglog_slope({10, 100}, {5, 50}), 1.0, 1e-12);
  EXPECT_THROW(loglog_slope({1}, {1}), std::invalid_argument);
  EXPECT_THROW(loglog_slope({1, 2}, {0, 1}), std::invalid_argument);
}
