#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "abelsq/kernels.hpp"
#include "abelsq/suffix_index.hpp"
#include "abelsq/word.hpp"

namespace abelsq {

/// Distinct abelian-square factors per even length. Odd lengths are always
/// zero and are not stored.
struct ASFProfile {
  std::size_t max_length = 0;
  /// by_half[k] = count at length 2k; by_half[0] (length 0) is always 0.
  std::vector<std::uint64_t> by_half;
  std::uint64_t total = 0;

  std::uint64_t at(std::size_t length) const noexcept {
    if (length % 2 != 0 || length / 2 >= by_half.size()) return 0;
    return by_half[length / 2];
  }
  friend bool operator==(const ASFProfile&, const ASFProfile&) = default;
};

/// Distinct Parikh vectors among abelian-square factors, per even length and
/// over all lengths. Classes are keyed on the Parikh vector of the whole
/// square.
struct InequivalentProfile {
  std::size_t max_length = 0;
  std::vector<std::uint64_t> by_half;
  std::uint64_t total = 0;

  std::uint64_t at(std::size_t length) const noexcept {
    if (length % 2 != 0 || length / 2 >= by_half.size()) return 0;
    return by_half[length / 2];
  }
  friend bool operator==(const InequivalentProfile&, const InequivalentProfile&) = default;
};

struct CountOptions {
  /// Workers for per-length tasks; 0 means hardware concurrency.
  unsigned threads = 1;
};

/// A word together with its suffix index and prefix-count channels. Build
/// once and query many lengths.
class FactorIndex {
 public:
  explicit FactorIndex(Word word);

  const Word& word() const noexcept { return word_; }
  const SuffixIndex& suffixes() const noexcept { return suffixes_; }
  kernels::PrefixChannels channels() const noexcept;
  /// Prefix counts of a single letter (n+1 entries).
  std::span<const std::int32_t> prefix_counts(Letter letter) const;

  /// Number of distinct factors of length m (m <= |w|).
  std::size_t distinct_count(std::size_t m) const;
  /// Start of one occurrence of each distinct factor of length m, in
  /// lexicographic order of the factors.
  std::vector<std::int32_t> distinct_starts(std::size_t m) const;
  /// Distinct abelian squares of even length m.
  std::size_t abelian_square_count(std::size_t m) const;
  /// Starts (first suffix of each run) of the distinct abelian squares of length m.
  std::vector<std::int32_t> abelian_square_starts(std::size_t m) const;
  /// Parikh vector of text[pos, pos + len) from the prefix counts.
  ParikhVector parikh_of(std::size_t pos, std::size_t len) const;

 private:
  Word word_;
  SuffixIndex suffixes_;
  // sigma full channels; the kernels read only the first sigma-1.
  std::vector<std::int32_t> prefix_;
};

/// True iff |w| is divisible by k and the k consecutive blocks share one
/// Parikh vector. Every word is an abelian 1-power; the empty word is an
/// abelian k-power for all k. Throws std::invalid_argument if k == 0.
bool is_abelian_kpower(const Word& w, std::size_t k);

/// Distinct factors of length n in lexicographic order; {ε} for n = 0.
/// Throws std::out_of_range if n > |w|.
std::vector<Word> distinct_factors(const Word& w, std::size_t n);

/// Throws std::out_of_range if max_length > |w|. An odd max_length is rounded down.
ASFProfile asf_profile(const Word& w, std::size_t max_length, const CountOptions& options = {});
ASFProfile asf_profile(const FactorIndex& index, std::size_t max_length, const CountOptions& options = {});
/// Profile over all lengths up to |w|.
ASFProfile asf_profile(const Word& w);

InequivalentProfile inequivalent_profile(const Word& w, std::size_t max_length, const CountOptions& options = {});
InequivalentProfile inequivalent_profile(const FactorIndex& index, std::size_t max_length,
                                         const CountOptions& options = {});

/// Prefix adequacy by count stabilization: the number of distinct factors of
/// length n agrees between a shorter and a longer prefix of the same word.
bool factor_count_stable(const FactorIndex& shorter, const FactorIndex& longer, std::size_t n);
/// Stabilization between w and its first half. False when n > |w|/2.
bool factor_count_stable(const Word& w, std::size_t n);

/// Binary words only (throws std::invalid_argument otherwise). True iff any two
/// factors of equal length differ by at most one in their count of letter 0.
bool is_balanced(const Word& w);

namespace reference {

// Quadratic-space brute force: enumerate every factor, deduplicate by
// content, compare half Parikh vectors directly. Slow and independent of the
// suffix-index engine; used to re-verify search witnesses and small cases.

ASFProfile asf_profile(const Word& w, std::size_t max_length);
InequivalentProfile inequivalent_profile(const Word& w, std::size_t max_length);

}  // namespace reference

}  // namespace abelsq
