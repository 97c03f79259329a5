#include "abelsq/suffix_index.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace abelsq {

namespace {

// Prefix doubling with counting sorts, O(n log n).
std::vector<std::int32_t> build_suffix_array(std::span<const Letter> text, std::size_t sigma,
                                             std::vector<std::int32_t>& rank) {
  const std::size_t n = text.size();
  std::vector<std::int32_t> sa(n);
  rank.assign(n, 0);
  if (n == 0) return sa;

  std::vector<std::int32_t> bucket(std::max(sigma, n) + 1, 0);
  for (Letter l : text) ++bucket[l + 1];
  for (std::size_t c = 1; c < bucket.size(); ++c) bucket[c] += bucket[c - 1];
  for (std::size_t i = 0; i < n; ++i) sa[bucket[text[i]]++] = static_cast<std::int32_t>(i);
  for (std::size_t i = 0; i < n; ++i) rank[i] = text[i];
  std::size_t classes = sigma;

  std::vector<std::int32_t> second(n);
  std::vector<std::int32_t> next_rank(n);
  for (std::size_t k = 1;; k <<= 1) {
    // Order by second key: suffixes shorter than k first, then by previous order.
    std::size_t pos = 0;
    for (std::size_t i = n - std::min(k, n); i < n; ++i) second[pos++] = static_cast<std::int32_t>(i);
    for (std::size_t r = 0; r < n; ++r) {
      if (static_cast<std::size_t>(sa[r]) >= k) second[pos++] = sa[r] - static_cast<std::int32_t>(k);
    }
    // Stable counting sort by first key.
    std::fill(bucket.begin(), bucket.begin() + static_cast<std::ptrdiff_t>(classes + 1), 0);
    for (std::size_t i = 0; i < n; ++i) ++bucket[rank[i] + 1];
    for (std::size_t c = 1; c <= classes; ++c) bucket[c] += bucket[c - 1];
    for (std::size_t j = 0; j < n; ++j) sa[bucket[rank[second[j]]]++] = second[j];

    next_rank[sa[0]] = 0;
    std::int32_t cls = 0;
    for (std::size_t r = 1; r < n; ++r) {
      const auto a = static_cast<std::size_t>(sa[r - 1]);
      const auto b = static_cast<std::size_t>(sa[r]);
      const std::int32_t ka = a + k < n ? rank[a + k] : -1;
      const std::int32_t kb = b + k < n ? rank[b + k] : -1;
      if (rank[a] != rank[b] || ka != kb) ++cls;
      next_rank[b] = cls;
    }
    rank.swap(next_rank);
    classes = static_cast<std::size_t>(cls) + 1;
    if (classes == n) break;
  }
  return sa;
}

}  // namespace

SuffixIndex::SuffixIndex(std::span<const Letter> text, std::size_t sigma) {
  if (text.size() >= static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max() / 2)) {
    throw std::length_error("text too long for 32-bit suffix index");
  }
  const std::size_t n = text.size();
  sa_ = build_suffix_array(text, sigma, rank_);

  // Kasai et al.
  lcp_.assign(n, 0);
  lcp_prev_.assign(n, 0);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = static_cast<std::size_t>(rank_[i]);
    if (r == 0) {
      h = 0;
      continue;
    }
    const auto j = static_cast<std::size_t>(sa_[r - 1]);
    while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
    lcp_[r] = static_cast<std::int32_t>(h);
    lcp_prev_[i] = static_cast<std::int32_t>(h);
    if (h > 0) --h;
  }
}

}  // namespace abelsq
