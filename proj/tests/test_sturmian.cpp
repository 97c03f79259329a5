#include <gtest/gtest.h>

#include "abelsq/abelian.hpp"
#include "abelsq/continued_fraction.hpp"
#include "abelsq/sturmian.hpp"
#include "support/oracle.hpp"

using namespace abelsq;
using QI = QuadraticIrrational;

namespace {

const QI alpha = QI::golden_conjugate();

std::vector<QI> test_angles() {
  return {alpha, parse_quadratic("cf:[0;|2]"), parse_quadratic("cf:[0;1|2,1]")};
}

SturmianSpec spec_of(const QI& angle, const QI& start, Convention c = Convention::left) {
  SturmianSpec s;
  s.angle = angle;
  s.start = start;
  s.convention = c;
  return s;
}

std::vector<std::string> factor_strings(const Word& w, std::size_t n) {
  std::vector<std::string> out;
  for (const auto& f : distinct_factors(w, n)) out.push_back(f.str());
  return out;
}

}  // namespace

TEST(SturmianPrefix, FibonacciExamples) {
  EXPECT_EQ(sturmian_prefix(spec_of(alpha, alpha), 15).str(), "abaababaabaabab");
  const auto f = sturmian_prefix(spec_of(alpha, alpha), 40).str();
  EXPECT_EQ(sturmian_prefix(spec_of(alpha, QI::integer(0)), 41).str(), "b" + f);
  EXPECT_EQ(sturmian_prefix(spec_of(alpha, QI::integer(0), Convention::right), 41).str(), "a" + f);
}

TEST(SturmianPrefix, MatchesMechanicalOracle) {
  struct Angle {
    std::int64_t p, q, r, d;
  };
  const std::vector<Angle> angles{{-1, 1, 2, 5}, {-1, 1, 1, 2}, {-2, 1, 1, 7}, {5, -1, 4, 3}};
  for (const auto& a : angles) {
    const QI angle(a.p, a.q, a.r, a.d);
    ASSERT_GT(angle, QI::integer(0));
    ASSERT_LT(angle, QI::integer(1));
    for (const QI& start : {QI::integer(0), angle, QI::rational(1, 3), frac(QI::integer(5) * angle)}) {
      for (auto conv : {Convention::left, Convention::right}) {
        const auto got = sturmian_prefix(spec_of(angle, start, conv), 3000).str();
        const auto want = oracle::mechanical(angle.p(), angle.q(), angle.r(), start.p(), start.q(), start.r(),
                                             angle.d(), 3000, conv == Convention::right);
        ASSERT_EQ(got, want) << angle.str() << " start " << start.str();
      }
    }
  }
}

TEST(SturmianPrefix, Validation) {
  EXPECT_THROW(sturmian_prefix(spec_of(QI::rational(1, 2), QI::integer(0)), 5), std::invalid_argument);
  EXPECT_THROW(sturmian_prefix(spec_of(QI(1, 1, 2, 5), QI::integer(0)), 5), std::invalid_argument);
  EXPECT_THROW(sturmian_prefix(spec_of(alpha, QI::integer(1)), 5), std::invalid_argument);
  EXPECT_THROW(sturmian_prefix(spec_of(alpha, QI::rational(-1, 3)), 5), std::invalid_argument);
  EXPECT_TRUE(sturmian_prefix(spec_of(alpha, alpha), 0).empty());
}

TEST(Partition, FigureValues) {
  const auto part = interval_partition(alpha, 6);
  ASSERT_EQ(part.points.size(), 8u);
  ASSERT_EQ(part.intervals.size(), 7u);
  const std::vector<double> ends{0.146, 0.292, 0.382, 0.528, 0.764, 0.910};
  for (std::size_t i = 0; i < ends.size(); ++i) EXPECT_NEAR(part.points[i + 1].to_double(), ends[i], 5e-4);
  EXPECT_EQ(part.points.front(), QI::integer(0));
  EXPECT_EQ(part.points.back(), QI::integer(1));
  const std::vector<std::string> labels{"babaab", "baabab", "baabaa", "ababaa", "abaaba", "aababa", "aabaab"};
  for (std::size_t i = 0; i < labels.size(); ++i) {
    EXPECT_EQ(part.intervals[i].factor.str(), labels[i]);
    EXPECT_EQ(part.intervals[i].heavy, i >= 2) << i;
  }
  EXPECT_NEAR(part.threshold.to_double(), 0.292, 5e-4);
}

TEST(Partition, SinglePoint) {
  const auto part = interval_partition(alpha, 1);
  ASSERT_EQ(part.intervals.size(), 2u);
  EXPECT_EQ(part.intervals[0].factor.str(), "b");
  EXPECT_EQ(part.intervals[1].factor.str(), "a");
  EXPECT_THROW(interval_partition(alpha, 0), std::invalid_argument);
}

TEST(Partition, PointsStrictlyIncreasing) {
  for (const auto& a : test_angles()) {
    const auto part = interval_partition(a, 80);
    for (std::size_t i = 1; i < part.points.size(); ++i) ASSERT_LT(part.points[i - 1], part.points[i]);
  }
}

TEST(Partition, FactorsMatchPrefix) {
  for (const auto& a : test_angles()) {
    const auto w = sturmian_prefix(spec_of(a, a), 10000);
    for (std::size_t n = 1; n <= 60; ++n) {
      std::vector<std::string> labels;
      for (const auto& iv : interval_partition(a, n).intervals) labels.push_back(iv.factor.str());
      std::sort(labels.begin(), labels.end());
      ASSERT_EQ(labels, factor_strings(w, n)) << a.str() << " n=" << n;
    }
  }
}

TEST(Classify, ParikhExamples) {
  const auto six = classify_parikh(alpha, 6);
  ASSERT_EQ(six.size(), 7u);
  for (std::size_t i = 0; i < 7; ++i) {
    EXPECT_EQ(six[i].counts, i < 2 ? (std::vector<std::uint32_t>{3, 3}) : (std::vector<std::uint32_t>{4, 2}));
  }
  const auto part8 = interval_partition(alpha, 8);
  const auto eight = classify_parikh(part8, alpha);
  for (std::size_t i = 0; i < eight.size(); ++i) {
    EXPECT_EQ(eight[i].counts, part8.intervals[i].heavy ? (std::vector<std::uint32_t>{5, 3})
                                                         : (std::vector<std::uint32_t>{4, 4}));
  }
}

TEST(Classify, AgreesWithLetterCounts) {
  for (const auto& a : test_angles()) {
    for (std::size_t n = 1; n <= 60; ++n) {
      const auto part = interval_partition(a, n);
      const auto pvs = classify_parikh(part, a);
      for (std::size_t i = 0; i < pvs.size(); ++i) ASSERT_EQ(pvs[i], parikh(part.intervals[i].factor));
    }
  }
}

TEST(Classify, SquareIffParityRule) {
  for (const auto& a : test_angles()) {
    for (std::size_t n = 2; n <= 60; n += 2) {
      const auto part = interval_partition(a, n);
      const bool even_floor = floor(QI::integer(static_cast<std::int64_t>(n)) * a) % 2 == 0;
      for (const auto& iv : part.intervals) {
        ASSERT_EQ(is_abelian_kpower(iv.factor, 2), even_floor ? !iv.heavy : iv.heavy) << n;
      }
    }
  }
}

TEST(Arithmetic, WorkedExamples) {
  EXPECT_EQ(asf_arith(alpha, 6), 5u);
  EXPECT_EQ(asf_arith(alpha, 8), 1u);
  EXPECT_EQ(asf_arith(alpha, 0), 0u);
  EXPECT_THROW(asf_arith(alpha, 7), std::invalid_argument);
  EXPECT_THROW(asf_arith(QI::rational(1, 3), 4), std::invalid_argument);
}

TEST(Arithmetic, FibonacciTable) {
  const std::vector<std::uint64_t> want{0, 1, 3, 5, 1, 9, 5, 5, 15, 3, 13, 13, 5, 25, 9, 15, 25, 1, 27};
  EXPECT_EQ(asf_arith_table(alpha, 36), want);
  // length 34: a single square, checked by brute force
  const auto text = sturmian_prefix(spec_of(alpha, alpha), 3000).str();
  EXPECT_EQ(oracle::asf_counts(text, 36).at(34), 1u);
  EXPECT_EQ(oracle::asf_counts(text, 36).at(36), 27u);
}

TEST(Arithmetic, AgreesWithCounting) {
  for (const auto& a : test_angles()) {
    const auto table = asf_arith_table(a, 200);
    const auto prof = asf_profile(sturmian_prefix(spec_of(a, a), 10000), 200);
    for (std::size_t n = 2; n <= 200; n += 2) ASSERT_EQ(table[n / 2], prof.at(n)) << a.str() << " n=" << n;
  }
}

TEST(SturmianProperties, BalancedWithLinearComplexity) {
  for (const auto& a : test_angles()) {
    const auto w = sturmian_prefix(spec_of(a, a), 10000);
    EXPECT_TRUE(is_balanced(w.factor(0, 2000)));
    const FactorIndex idx(w);
    for (std::size_t n = 1; n <= 100; ++n) ASSERT_EQ(idx.distinct_count(n), n + 1) << a.str() << " n=" << n;
  }
}

TEST(SturmianProperties, ConventionIndependence) {
  for (const auto& a : test_angles()) {
    const auto l = sturmian_prefix(spec_of(a, QI::integer(0), Convention::left), 5000);
    const auto r = sturmian_prefix(spec_of(a, QI::integer(0), Convention::right), 5000);
    const auto shifted = sturmian_prefix(spec_of(a, QI::rational(2, 7), Convention::left), 5000);
    for (std::size_t n = 1; n <= 60; ++n) {
      ASSERT_EQ(factor_strings(l, n), factor_strings(r, n)) << n;
      ASSERT_EQ(factor_strings(l, n), factor_strings(shifted, n)) << n;
    }
  }
}

TEST(SturmianProperties, OneInequivalentClassPerLength) {
  for (const auto& a : test_angles()) {
    const auto w = sturmian_prefix(spec_of(a, a), 5000);
    const auto ineq = inequivalent_profile(w, 300);
    for (std::size_t n = 2; n <= 300; n += 2) ASSERT_LE(ineq.at(n), 1u) << n;
    EXPECT_LE(ineq.total, 300u / 2);
  }
}
