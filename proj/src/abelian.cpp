#include "abelsq/abelian.hpp"

#include <set>
#include <stdexcept>

#include "abelsq/parallel.hpp"

namespace abelsq {

FactorIndex::FactorIndex(Word word) : word_(std::move(word)), suffixes_(word_.letters(), word_.alphabet().size()) {
  const std::size_t n = word_.size();
  const std::size_t sigma = word_.alphabet().size();
  prefix_.assign(sigma * (n + 1), 0);
  for (std::size_t c = 0; c < sigma; ++c) {
    std::int32_t* p = prefix_.data() + c * (n + 1);
    for (std::size_t i = 0; i < n; ++i) p[i + 1] = p[i] + (word_[i] == c);
  }
}

kernels::PrefixChannels FactorIndex::channels() const noexcept {
  const std::size_t sigma = word_.alphabet().size();
  return kernels::PrefixChannels{prefix_, word_.size(), sigma - 1};
}

std::span<const std::int32_t> FactorIndex::prefix_counts(Letter letter) const {
  if (letter >= word_.alphabet().size()) throw std::out_of_range("letter outside alphabet");
  const std::size_t stride = word_.size() + 1;
  return std::span<const std::int32_t>(prefix_).subspan(letter * stride, stride);
}

std::size_t FactorIndex::distinct_count(std::size_t m) const {
  if (m > word_.size()) throw std::out_of_range("factor length exceeds word length");
  if (m == 0) return 1;
  return kernels::count_new_factors(suffixes_.lcp_prev(), m);
}

std::vector<std::int32_t> FactorIndex::distinct_starts(std::size_t m) const {
  if (m > word_.size()) throw std::out_of_range("factor length exceeds word length");
  if (m == 0) return {0};
  std::vector<std::int32_t> out;
  const auto sa = suffixes_.suffix_array();
  const auto lcp = suffixes_.lcp();
  const std::size_t n = word_.size();
  for (std::size_t r = 0; r < sa.size(); ++r) {
    if (n - static_cast<std::size_t>(sa[r]) >= m && static_cast<std::size_t>(lcp[r]) < m) out.push_back(sa[r]);
  }
  return out;
}

std::size_t FactorIndex::abelian_square_count(std::size_t m) const {
  if (m > word_.size()) throw std::out_of_range("factor length exceeds word length");
  if (m == 0 || m % 2 != 0) return 0;
  return kernels::count_new_abelian_squares(channels(), suffixes_.lcp_prev(), m / 2);
}

std::vector<std::int32_t> FactorIndex::abelian_square_starts(std::size_t m) const {
  if (m > word_.size()) throw std::out_of_range("factor length exceeds word length");
  if (m == 0 || m % 2 != 0) return {};
  std::vector<std::uint8_t> marks(word_.size() - m + 1);
  kernels::mark_new_abelian_squares(channels(), suffixes_.lcp_prev(), m / 2, marks);
  std::vector<std::int32_t> out;
  for (std::size_t i = 0; i < marks.size(); ++i) {
    if (marks[i]) out.push_back(static_cast<std::int32_t>(i));
  }
  return out;
}

ParikhVector FactorIndex::parikh_of(std::size_t pos, std::size_t len) const {
  const std::size_t sigma = word_.alphabet().size();
  const std::size_t stride = word_.size() + 1;
  ParikhVector pv{std::vector<std::uint32_t>(sigma)};
  for (std::size_t c = 0; c < sigma; ++c) {
    const std::int32_t* p = prefix_.data() + c * stride;
    pv.counts[c] = static_cast<std::uint32_t>(p[pos + len] - p[pos]);
  }
  return pv;
}

bool is_abelian_kpower(const Word& w, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  if (w.size() % k != 0) return false;
  if (w.empty() || k == 1) return true;
  const std::size_t block = w.size() / k;
  const std::size_t sigma = w.alphabet().size();
  const auto first = parikh(w.letters().subspan(0, block), sigma);
  for (std::size_t b = 1; b < k; ++b) {
    if (parikh(w.letters().subspan(b * block, block), sigma) != first) return false;
  }
  return true;
}

std::vector<Word> distinct_factors(const Word& w, std::size_t n) {
  if (n > w.size()) throw std::out_of_range("factor length exceeds word length");
  if (n == 0) return {Word(w.alphabet(), {})};
  FactorIndex index(w);
  std::vector<Word> out;
  for (auto pos : index.distinct_starts(n)) out.push_back(w.factor(static_cast<std::size_t>(pos), n));
  return out;
}

ASFProfile asf_profile(const FactorIndex& index, std::size_t max_length, const CountOptions& options) {
  if (max_length > index.word().size()) throw std::out_of_range("max_length exceeds word length");
  max_length -= max_length % 2;
  ASFProfile profile;
  profile.max_length = max_length;
  profile.by_half.assign(max_length / 2 + 1, 0);
  parallel_for(max_length / 2, options.threads, [&](std::size_t k) {
    const std::size_t m = 2 * (k + 1);
    profile.by_half[k + 1] = index.abelian_square_count(m);
  });
  for (auto c : profile.by_half) profile.total += c;
  return profile;
}

ASFProfile asf_profile(const Word& w, std::size_t max_length, const CountOptions& options) {
  if (max_length > w.size()) throw std::out_of_range("max_length exceeds word length");
  return asf_profile(FactorIndex(w), max_length, options);
}

ASFProfile asf_profile(const Word& w) { return asf_profile(w, w.size()); }

InequivalentProfile inequivalent_profile(const FactorIndex& index, std::size_t max_length,
                                         const CountOptions& options) {
  if (max_length > index.word().size()) throw std::out_of_range("max_length exceeds word length");
  max_length -= max_length % 2;
  InequivalentProfile profile;
  profile.max_length = max_length;
  profile.by_half.assign(max_length / 2 + 1, 0);
  std::vector<std::set<ParikhVector>> classes(max_length / 2 + 1);
  parallel_for(max_length / 2, options.threads, [&](std::size_t k) {
    const std::size_t m = 2 * (k + 1);
    auto& set = classes[k + 1];
    for (auto pos : index.abelian_square_starts(m)) set.insert(index.parikh_of(static_cast<std::size_t>(pos), m));
    profile.by_half[k + 1] = set.size();
  });
  std::set<ParikhVector> all;
  for (auto& set : classes) all.merge(set);
  profile.total = all.size();
  return profile;
}

InequivalentProfile inequivalent_profile(const Word& w, std::size_t max_length, const CountOptions& options) {
  if (max_length > w.size()) throw std::out_of_range("max_length exceeds word length");
  return inequivalent_profile(FactorIndex(w), max_length, options);
}

bool factor_count_stable(const FactorIndex& shorter, const FactorIndex& longer, std::size_t n) {
  if (n > shorter.word().size() || n > longer.word().size()) return false;
  return shorter.distinct_count(n) == longer.distinct_count(n);
}

bool factor_count_stable(const Word& w, std::size_t n) {
  if (n > w.size() / 2) return false;
  return FactorIndex(w.factor(0, w.size() / 2)).distinct_count(n) == FactorIndex(w).distinct_count(n);
}

bool is_balanced(const Word& w) {
  if (w.alphabet().size() != 2) throw std::invalid_argument("balance is defined for binary words only");
  const std::size_t n = w.size();
  std::vector<std::int32_t> prefix(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + (w[i] == 0);
  for (std::size_t width = 1; width < n; ++width) {
    const auto range = kernels::window_count_range(prefix, width);
    if (range.max - range.min > 1) return false;
  }
  return true;
}

}  // namespace abelsq
