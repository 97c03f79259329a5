#include "abelsq/word.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace abelsq {

namespace {

std::vector<std::string> default_symbols(std::size_t size) {
  if (size == 0) throw std::invalid_argument("alphabet size must be positive");
  if (size > 26) throw std::invalid_argument("default symbols exist for at most 26 letters");
  std::vector<std::string> out;
  out.reserve(size);
  for (std::size_t i = 0; i < size; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

std::size_t code_point_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  throw std::invalid_argument("invalid UTF-8 lead byte");
}

}  // namespace

std::vector<std::string> split_code_points(std::string_view text) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < text.size();) {
    const std::size_t len = code_point_length(static_cast<unsigned char>(text[i]));
    if (i + len > text.size()) throw std::invalid_argument("truncated UTF-8 sequence");
    out.emplace_back(text.substr(i, len));
    i += len;
  }
  return out;
}

Alphabet::Alphabet(std::size_t size)
    : symbols_(std::make_shared<const std::vector<std::string>>(default_symbols(size))) {}

Alphabet::Alphabet(std::vector<std::string> symbols) {
  if (symbols.empty()) throw std::invalid_argument("alphabet must have at least one letter");
  if (symbols.size() > kMaxSize) throw std::invalid_argument("alphabet too large");
  std::set<std::string> seen;
  for (const auto& s : symbols) {
    if (s.empty()) throw std::invalid_argument("empty display symbol");
    if (!seen.insert(s).second) throw std::invalid_argument("duplicate display symbol '" + s + "'");
  }
  symbols_ = std::make_shared<const std::vector<std::string>>(std::move(symbols));
}

Alphabet Alphabet::from_symbols(std::string_view symbols) {
  return Alphabet(split_code_points(symbols));
}

std::optional<Letter> Alphabet::index_of(std::string_view symbol) const {
  const auto& syms = *symbols_;
  for (std::size_t i = 0; i < syms.size(); ++i) {
    if (syms[i] == symbol) return static_cast<Letter>(i);
  }
  return std::nullopt;
}

std::string Alphabet::symbols() const {
  std::string out;
  for (const auto& s : *symbols_) out += s;
  return out;
}

std::uint64_t ParikhVector::total() const noexcept {
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

ParikhVector& ParikhVector::operator+=(const ParikhVector& other) {
  if (counts.size() != other.counts.size()) {
    throw std::invalid_argument("Parikh vectors over different alphabets");
  }
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
  return *this;
}

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  for (Letter l : letters_) {
    if (l >= alphabet_.size()) throw std::invalid_argument("letter index outside alphabet");
  }
}

Word Word::parse(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> letters;
  for (const auto& cp : split_code_points(text)) {
    auto idx = alphabet.index_of(cp);
    if (!idx) throw std::invalid_argument("symbol '" + cp + "' not in alphabet '" + alphabet.symbols() + "'");
    letters.push_back(*idx);
  }
  return Word(alphabet, std::move(letters));
}

Word Word::parse(std::string_view text) {
  auto cps = split_code_points(text);
  std::set<std::string> distinct(cps.begin(), cps.end());
  if (distinct.empty()) return Word(Alphabet(1), {});
  // std::set orders UTF-8 byte strings, which matches code point order.
  return parse(text, Alphabet(std::vector<std::string>(distinct.begin(), distinct.end())));
}

Word Word::factor(std::size_t pos, std::size_t len) const {
  if (pos > size() || len > size() - pos) throw std::out_of_range("factor outside word");
  return Word(alphabet_, std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

Word Word::reversed() const {
  return Word(alphabet_, std::vector<Letter>(letters_.rbegin(), letters_.rend()));
}

Word Word::concat(const Word& other) const {
  if (!(alphabet_ == other.alphabet_)) throw std::invalid_argument("concatenating words over different alphabets");
  std::vector<Letter> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(alphabet_, std::move(out));
}

std::string Word::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter l : letters_) out += alphabet_.symbol(l);
  return out;
}

ParikhVector parikh(std::span<const Letter> letters, std::size_t sigma) {
  ParikhVector pv{std::vector<std::uint32_t>(sigma, 0)};
  for (Letter l : letters) ++pv.counts[l];
  return pv;
}

ParikhVector parikh(const Word& w) { return parikh(w.letters(), w.alphabet().size()); }

}  // namespace abelsq
