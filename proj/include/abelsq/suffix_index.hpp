#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "abelsq/word.hpp"

namespace abelsq {

/// Suffix array with LCP information for a text over a small alphabet.
///
/// Distinct factors of length m correspond to runs of consecutive suffixes
/// (in sorted order) that share their first m letters. A start position i
/// therefore begins the first suffix of its run exactly when its LCP with the
/// preceding suffix is below m and the suffix has length >= m; counting such
/// starts counts distinct factors without hashing.
class SuffixIndex {
 public:
  SuffixIndex() = default;
  SuffixIndex(std::span<const Letter> text, std::size_t sigma);

  std::size_t size() const noexcept { return sa_.size(); }
  /// Sorted suffix start positions.
  std::span<const std::int32_t> suffix_array() const noexcept { return sa_; }
  /// rank()[i] is the position of suffix i in suffix_array().
  std::span<const std::int32_t> rank() const noexcept { return rank_; }
  /// lcp()[r] = longest common prefix of suffixes sa[r-1] and sa[r]; lcp()[0] = 0.
  std::span<const std::int32_t> lcp() const noexcept { return lcp_; }
  /// LCP with the preceding suffix, indexed by text position.
  std::span<const std::int32_t> lcp_prev() const noexcept { return lcp_prev_; }

 private:
  std::vector<std::int32_t> sa_;
  std::vector<std::int32_t> rank_;
  std::vector<std::int32_t> lcp_;
  std::vector<std::int32_t> lcp_prev_;
};

}  // namespace abelsq
