#include "abelsq/word_io.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

namespace abelsq {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

constexpr std::string_view kAlphabetHeader = "#alphabet:";

}  // namespace

std::vector<Word> read_words(std::istream& in) {
  std::optional<Alphabet> declared;
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto view = trim(line);
    if (view.empty()) continue;
    if (view.starts_with(kAlphabetHeader)) {
      if (declared) throw std::invalid_argument("duplicate #alphabet header");
      declared = Alphabet::from_symbols(trim(view.substr(kAlphabetHeader.size())));
      continue;
    }
    if (view.front() == '#') throw std::invalid_argument("unknown header line: " + std::string(view));
    lines.emplace_back(view);
  }

  Alphabet alphabet = [&] {
    if (declared) return *declared;
    std::set<std::string> distinct;
    for (const auto& l : lines) {
      for (auto& cp : split_code_points(l)) distinct.insert(std::move(cp));
    }
    if (distinct.empty()) return Alphabet(1);
    return Alphabet(std::vector<std::string>(distinct.begin(), distinct.end()));
  }();

  std::vector<Word> words;
  words.reserve(lines.size());
  for (const auto& l : lines) words.push_back(Word::parse(l, alphabet));
  return words;
}

void write_words(std::ostream& out, std::span<const Word> words, bool declare_alphabet) {
  if (declare_alphabet && !words.empty()) out << kAlphabetHeader << ' ' << words.front().alphabet().symbols() << '\n';
  for (const auto& w : words) out << w.str() << '\n';
}

}  // namespace abelsq
