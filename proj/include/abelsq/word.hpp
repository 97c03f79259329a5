#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace abelsq {

using Letter = std::uint8_t;

/// Ordered alphabet of `size()` letters, indexed 0..size()-1. Each letter has
/// a display symbol (one UTF-8 code point); the defaults are a, b, c, ...
class Alphabet {
 public:
  static constexpr std::size_t kMaxSize = 256;

  Alphabet() : Alphabet(2) {}
  explicit Alphabet(std::size_t size);
  explicit Alphabet(std::vector<std::string> symbols);

  /// "ab" -> {a, b}; "01" -> {0, 1}. Symbols are split on UTF-8 code points.
  static Alphabet from_symbols(std::string_view symbols);

  std::size_t size() const noexcept { return symbols_->size(); }
  const std::string& symbol(Letter letter) const { return (*symbols_)[letter]; }
  std::optional<Letter> index_of(std::string_view symbol) const;
  std::string symbols() const;

  friend bool operator==(const Alphabet& lhs, const Alphabet& rhs) {
    return lhs.symbols_ == rhs.symbols_ || *lhs.symbols_ == *rhs.symbols_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> symbols_;
};

/// Per-letter occurrence counts.
struct ParikhVector {
  std::vector<std::uint32_t> counts;

  std::uint64_t total() const noexcept;
  ParikhVector& operator+=(const ParikhVector& other);
  friend ParikhVector operator+(ParikhVector lhs, const ParikhVector& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
  friend auto operator<=>(const ParikhVector&, const ParikhVector&) = default;
};

/// Finite word over an Alphabet. Immutable after construction.
class Word {
 public:
  Word() = default;
  Word(Alphabet alphabet, std::vector<Letter> letters);

  /// Parses display symbols against a known alphabet.
  static Word parse(std::string_view text, const Alphabet& alphabet);
  /// Parses text, inferring the alphabet as its distinct symbols sorted by
  /// code point.
  static Word parse(std::string_view text);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word factor(std::size_t pos, std::size_t len) const;
  Word reversed() const;
  Word concat(const Word& other) const;
  std::string str() const;

  friend bool operator==(const Word& lhs, const Word& rhs) {
    return lhs.letters_ == rhs.letters_ && lhs.alphabet_ == rhs.alphabet_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

ParikhVector parikh(const Word& w);
ParikhVector parikh(std::span<const Letter> letters, std::size_t sigma);

/// Splits UTF-8 text into code points (each returned as its byte sequence).
std::vector<std::string> split_code_points(std::string_view text);

}  // namespace abelsq
