#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

#include "abelsq/abelian.hpp"
#include "abelsq/word.hpp"

namespace abelsq {

/// Prefix of the Thue-Morse word t = 0110100110010110... over {0, 1}.
Word thue_morse_prefix(std::size_t length);

/// Factor complexity p(n) of t. p(1), p(2), p(3) come from enumerating a
/// prefix; larger n use p(2k) = p(k) + p(k+1) and p(2k+1) = 2 p(k+1), which
/// hold for k >= 2. p(0) = 1.
std::uint64_t tm_complexity(std::size_t n);

struct BoundaryCounts {
  std::size_t n = 0;
  /// Distinct length-n factors whose first and last letters agree.
  std::uint64_t same = 0;
  /// ... whose first and last letters differ.
  std::uint64_t different = 0;
  std::uint64_t total = 0;
};

/// Counts over the distinct length-n factors of the indexed prefix. The
/// caller is responsible for the prefix containing all factors of length n.
BoundaryCounts boundary_counts(const FactorIndex& prefix, std::size_t n);
BoundaryCounts boundary_counts(const Word& prefix, std::size_t n);

/// For a factor u of t with |u| >= 2 that begins and ends with the same
/// letter: mu^2(u) (length 4|u|) and mu^2(u) without its first and last
/// letters (length 4|u| - 2). Both are abelian squares occurring in t.
/// Throws std::invalid_argument when u violates the precondition.
std::pair<Word, Word> tm_lift(const Word& u);

}  // namespace abelsq
