#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "abelsq/word.hpp"

namespace abelsq {

/// Letter -> non-empty word map, extended to a morphism on words.
class Substitution {
 public:
  Substitution(Alphabet alphabet, std::vector<std::vector<Letter>> images);

  /// mu: 0 -> 01, 1 -> 10 over {0, 1}.
  static Substitution thue_morse();
  /// a -> ab, b -> a over {a, b}.
  static Substitution fibonacci();

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Letter>& image(Letter letter) const { return images_.at(letter); }

  Word apply(const Word& w) const;
  /// tau^times(w); times = 0 returns w.
  Word apply(const Word& w, std::size_t times) const;

  /// incidence[i][j] = occurrences of letter j in the image of letter i.
  std::vector<std::vector<std::uint64_t>> incidence() const;
  /// Some power of the incidence matrix is positive. Powers up to sigma^2 are
  /// examined, which covers the Wielandt bound (sigma-1)^2 + 1.
  bool is_primitive() const;
  /// k when every image has length k.
  std::optional<std::size_t> uniform_length() const;

 private:
  Alphabet alphabet_;
  std::vector<std::vector<Letter>> images_;
};

/// A primitive substitution and a seed letter whose image starts with the
/// seed and is longer than one letter. Constructor validates both.
class FixedPointSpec {
 public:
  FixedPointSpec(Substitution substitution, Letter seed);

  const Substitution& substitution() const noexcept { return substitution_; }
  Letter seed() const noexcept { return seed_; }

 private:
  Substitution substitution_;
  Letter seed_;
};

/// First `length` letters of lim tau^n(seed). Throws std::invalid_argument if
/// length == 0.
Word fixed_point_prefix(const FixedPointSpec& spec, std::size_t length);

/// Substitution file format:
///   0 -> 01
///   1 -> 10
///   #seed: 0
/// The alphabet is the rule letters in file order; the seed defaults to the
/// first rule's letter.
FixedPointSpec read_substitution(std::istream& in);

}  // namespace abelsq
