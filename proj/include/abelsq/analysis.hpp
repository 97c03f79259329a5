#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "abelsq/abelian.hpp"
#include "abelsq/word.hpp"

namespace abelsq {

/// Thrown when a prefix is too short to certify the factors of some length.
class InadequatePrefix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RichnessRow {
  std::size_t n = 0;
  /// p_w(n) on the prefix.
  std::uint64_t factors = 0;
  /// Sum over the distinct length-n factors of their distinct abelian-square
  /// counts; avg = asf_sum / factors exactly.
  std::uint64_t asf_sum = 0;
  std::uint64_t asf_min = 0;
  double avg() const noexcept { return factors ? static_cast<double>(asf_sum) / static_cast<double>(factors) : 0.0; }
  double avg_ratio() const noexcept { return avg() / (static_cast<double>(n) * static_cast<double>(n)); }
  double min_ratio() const noexcept { return static_cast<double>(asf_min) / (static_cast<double>(n) * static_cast<double>(n)); }
  /// Recurrence index estimate R(n) from the prefix.
  std::uint64_t recurrence = 0;
};

struct RichnessReport {
  std::vector<RichnessRow> rows;
  /// Least-squares fits of avg = C n^2 and min = C n^2 through the origin.
  double C_avg = 0.0;
  double C_min = 0.0;
  /// max over rows of R(n) / n.
  double recurrence_quotient_estimate = 0.0;
};

/// Richness statistics of the factors of an infinite word, read from a finite
/// prefix. Every n must pass the stabilization check against the first half
/// of the prefix, otherwise InadequatePrefix is thrown. n = 0 is rejected with
/// std::invalid_argument.
RichnessReport richness_report(const Word& prefix, const std::vector<std::size_t>& n_range, unsigned threads = 1);

/// Least m such that every length-m window of the prefix contains every
/// distinct length-n factor of the prefix. An estimate from finite data.
std::uint64_t recurrence_index_estimate(const FactorIndex& prefix, std::size_t n);
std::uint64_t recurrence_index_estimate(const Word& prefix, std::size_t n);

struct TripleBlockReport {
  std::size_t n = 0;
  Word word;
  std::uint64_t asf_total = 0;
  std::uint64_t lower_bound = 0;
};

/// a^n b a^n b a^n over {a, b}.
Word triple_block_word(std::size_t n);
/// Counts with the brute-force oracle. Throws std::invalid_argument for n = 0.
TripleBlockReport triple_block(std::size_t n);

struct BaselineRow {
  std::size_t n = 0;
  std::size_t trials = 0;
  double mean = 0.0;
  /// Sample standard deviation (0 for a single trial).
  double stddev = 0.0;
};

struct BaselineReport {
  std::uint64_t seed = 0;
  std::vector<BaselineRow> rows;
  /// Least-squares slope of log(mean) against log(n); 0 with fewer than two rows.
  double exponent = 0.0;
};

/// Uniform binary words drawn from std::mt19937_64; trial t at length n is
/// seeded with splitmix64(seed, n, t), so results do not depend on threads.
/// Throws std::invalid_argument for trials == 0.
BaselineReport random_baseline(const std::vector<std::size_t>& lengths, std::size_t trials, std::uint64_t seed,
                               unsigned threads = 1);

/// The random word used by random_baseline for (seed, n, trial).
Word random_binary_word(std::uint64_t seed, std::size_t n, std::size_t trial);

/// Mean total distinct abelian-square count over all 2^n binary words,
/// n <= 24.
double exhaustive_mean_total(std::size_t n);

/// Least-squares slope of log y against log x. Requires positive values and
/// at least two points.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace abelsq
