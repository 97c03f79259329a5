#include "abelsq/thue_morse.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <stdexcept>

#include "abelsq/substitution.hpp"

namespace abelsq {

Word thue_morse_prefix(std::size_t length) {
  const Alphabet binary = Alphabet::from_symbols("01");
  if (length == 0) return Word(binary, {});
  return fixed_point_prefix(FixedPointSpec(Substitution::thue_morse(), 0), length);
}

namespace {

const std::array<std::uint64_t, 4>& complexity_base() {
  static const std::array<std::uint64_t, 4> base = [] {
    const FactorIndex index(thue_morse_prefix(1000));
    return std::array<std::uint64_t, 4>{1, index.distinct_count(1), index.distinct_count(2), index.distinct_count(3)};
  }();
  return base;
}

std::uint64_t complexity(std::size_t n, std::map<std::size_t, std::uint64_t>& memo) {
  if (n <= 3) return complexity_base()[n];
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  const std::size_t k = n / 2;
  const std::uint64_t v = n % 2 == 0 ? complexity(k, memo) + complexity(k + 1, memo) : 2 * complexity(k + 1, memo);
  memo.emplace(n, v);
  return v;
}

}  // namespace

std::uint64_t tm_complexity(std::size_t n) {
  std::map<std::size_t, std::uint64_t> memo;
  return complexity(n, memo);
}

BoundaryCounts boundary_counts(const FactorIndex& prefix, std::size_t n) {
  if (n == 0) throw std::invalid_argument("boundary counts need n >= 1");
  BoundaryCounts out;
  out.n = n;
  const Word& w = prefix.word();
  for (auto pos : prefix.distinct_starts(n)) {
    const auto p = static_cast<std::size_t>(pos);
    if (w[p] == w[p + n - 1]) {
      ++out.same;
    } else {
      ++out.different;
    }
  }
  out.total = out.same + out.different;
  return out;
}

BoundaryCounts boundary_counts(const Word& prefix, std::size_t n) { return boundary_counts(FactorIndex(prefix), n); }

std::pair<Word, Word> tm_lift(const Word& u) {
  const auto mu = Substitution::thue_morse();
  if (!(u.alphabet() == mu.alphabet())) throw std::invalid_argument("tm_lift expects a word over {0, 1}");
  if (u.size() < 2) throw std::invalid_argument("tm_lift needs |u| >= 2");
  if (u[0] != u[u.size() - 1]) throw std::invalid_argument("u must begin and end with the same letter");

  // Every factor of length n occurs in any window of t of length 10n; a
  // prefix well beyond that bound contains all of them.
  const Word t = thue_morse_prefix(16 * u.size() + 64);
  const auto hay = t.letters();
  const auto needle = u.letters();
  if (std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) == hay.end()) {
    throw std::invalid_argument("u is not a factor of the Thue-Morse word");
  }
  Word square = mu.apply(u, 2);
  Word inner = square.factor(1, square.size() - 2);
  return {std::move(square), std::move(inner)};
}

}  // namespace abelsq
