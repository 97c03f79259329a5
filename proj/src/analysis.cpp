#include "abelsq/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "abelsq/parallel.hpp"

namespace abelsq {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t recurrence_index_estimate(const FactorIndex& prefix, std::size_t n) {
  const std::size_t L = prefix.word().size();
  if (n == 0) return 0;
  if (n > L) throw std::out_of_range("factor length exceeds prefix length");
  const auto sa = prefix.suffixes().suffix_array();
  const auto lcp = prefix.suffixes().lcp();

  std::uint64_t need = 0;
  std::vector<std::size_t> group;
  auto flush = [&] {
    if (group.empty()) return;
    std::sort(group.begin(), group.end());
    std::size_t m = std::max(group.front() + n, L - group.back());
    for (std::size_t k = 1; k < group.size(); ++k) m = std::max(m, group[k] - group[k - 1] + n - 1);
    need = std::max<std::uint64_t>(need, m);
    group.clear();
  };
  for (std::size_t r = 0; r < sa.size(); ++r) {
    const auto pos = static_cast<std::size_t>(sa[r]);
    if (static_cast<std::size_t>(lcp[r]) < n) flush();
    if (L - pos >= n) group.push_back(pos);
  }
  flush();
  return need;
}

std::uint64_t recurrence_index_estimate(const Word& prefix, std::size_t n) {
  return recurrence_index_estimate(FactorIndex(prefix), n);
}

RichnessReport richness_report(const Word& prefix, const std::vector<std::size_t>& n_range, unsigned threads) {
  const FactorIndex full(prefix);
  const FactorIndex half(prefix.factor(0, prefix.size() / 2));
  RichnessReport report;
  for (std::size_t n : n_range) {
    if (n == 0) throw std::invalid_argument("richness needs n >= 1");
    if (2 * n > prefix.size() || !factor_count_stable(half, full, n)) {
      throw InadequatePrefix("prefix of length " + std::to_string(prefix.size()) +
                             " does not stabilize the factors of length " + std::to_string(n));
    }
    const auto starts = full.distinct_starts(n);
    std::vector<std::uint64_t> totals(starts.size());
    parallel_for(starts.size(), threads, [&](std::size_t k) {
      totals[k] = asf_profile(prefix.factor(static_cast<std::size_t>(starts[k]), n)).total;
    });
    RichnessRow row;
    row.n = n;
    row.factors = starts.size();
    for (auto t : totals) row.asf_sum += t;
    row.asf_min = totals.empty() ? 0 : *std::min_element(totals.begin(), totals.end());
    row.recurrence = recurrence_index_estimate(full, n);
    report.rows.push_back(row);
  }

  double num_avg = 0, num_min = 0, den = 0;
  for (const auto& row : report.rows) {
    const double n2 = static_cast<double>(row.n) * static_cast<double>(row.n);
    num_avg += row.avg() * n2;
    num_min += static_cast<double>(row.asf_min) * n2;
    den += n2 * n2;
    report.recurrence_quotient_estimate =
        std::max(report.recurrence_quotient_estimate, static_cast<double>(row.recurrence) / static_cast<double>(row.n));
  }
  if (den > 0) {
    report.C_avg = num_avg / den;
    report.C_min = num_min / den;
  }
  return report;
}

Word triple_block_word(std::size_t n) {
  std::vector<Letter> letters;
  letters.reserve(3 * n + 2);
  for (int block = 0; block < 3; ++block) {
    if (block) letters.push_back(1);
    letters.insert(letters.end(), n, 0);
  }
  return Word(Alphabet::from_symbols("ab"), std::move(letters));
}

TripleBlockReport triple_block(std::size_t n) {
  if (n == 0) throw std::invalid_argument("triple block needs n >= 1");
  TripleBlockReport report;
  report.n = n;
  report.word = triple_block_word(n);
  report.asf_total = reference::asf_profile(report.word, report.word.size()).total;
  report.lower_bound = ((n + 1) * (n + 1) + 1) / 2;
  return report;
}

Word random_binary_word(std::uint64_t seed, std::size_t n, std::size_t trial) {
  std::mt19937_64 gen(splitmix64(splitmix64(seed ^ splitmix64(n)) + trial));
  std::vector<Letter> letters(n);
  for (auto& c : letters) c = static_cast<Letter>(gen() >> 63);
  return Word(Alphabet::from_symbols("ab"), std::move(letters));
}

BaselineReport random_baseline(const std::vector<std::size_t>& lengths, std::size_t trials, std::uint64_t seed,
                               unsigned threads) {
  if (trials == 0) throw std::invalid_argument("baseline needs at least one trial");
  BaselineReport report;
  report.seed = seed;
  std::vector<std::uint64_t> totals(lengths.size() * trials);
  parallel_for(totals.size(), threads, [&](std::size_t k) {
    const std::size_t n = lengths[k / trials];
    totals[k] = asf_profile(random_binary_word(seed, n, k % trials)).total;
  });
  std::vector<double> xs, ys;
  for (std::size_t li = 0; li < lengths.size(); ++li) {
    BaselineRow row;
    row.n = lengths[li];
    row.trials = trials;
    double sum = 0;
    for (std::size_t t = 0; t < trials; ++t) sum += static_cast<double>(totals[li * trials + t]);
    row.mean = sum / static_cast<double>(trials);
    if (trials > 1) {
      double ss = 0;
      for (std::size_t t = 0; t < trials; ++t) {
        const double d = static_cast<double>(totals[li * trials + t]) - row.mean;
        ss += d * d;
      }
      row.stddev = std::sqrt(ss / static_cast<double>(trials - 1));
    }
    report.rows.push_back(row);
    if (row.n > 0 && row.mean > 0) {
      xs.push_back(static_cast<double>(row.n));
      ys.push_back(row.mean);
    }
  }
  if (xs.size() >= 2) report.exponent = loglog_slope(xs, ys);
  return report;
}

double exhaustive_mean_total(std::size_t n) {
  if (n > 24) throw std::invalid_argument("exhaustive mean limited to n <= 24");
  if (n == 0) return 0.0;
  const std::uint64_t count = 1ULL << n;
  std::uint64_t sum = 0;
  std::vector<Letter> letters(n);
  const Alphabet ab = Alphabet::from_symbols("ab");
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    for (std::size_t i = 0; i < n; ++i) letters[i] = static_cast<Letter>((bits >> i) & 1U);
    sum += asf_profile(Word(ab, letters)).total;
  }
  return static_cast<double>(sum) / static_cast<double>(count);
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("slope needs two or more paired points");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0 || y[i] <= 0) throw std::invalid_argument("log-log slope needs positive values");
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0) throw std::invalid_argument("slope needs distinct x values");
  return sxy / sxx;
}

}  // namespace abelsq
