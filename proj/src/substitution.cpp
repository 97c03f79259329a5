#include "abelsq/substitution.hpp"

#include <istream>
#include <stdexcept>
#include <string>

namespace abelsq {

Substitution::Substitution(Alphabet alphabet, std::vector<std::vector<Letter>> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (images_.size() != alphabet_.size()) throw std::invalid_argument("one image per letter required");
  for (const auto& img : images_) {
    if (img.empty()) throw std::invalid_argument("substitution images must be non-empty");
    for (Letter l : img) {
      if (l >= alphabet_.size()) throw std::invalid_argument("image letter outside alphabet");
    }
  }
}

Substitution Substitution::thue_morse() { return Substitution(Alphabet::from_symbols("01"), {{0, 1}, {1, 0}}); }

Substitution Substitution::fibonacci() { return Substitution(Alphabet::from_symbols("ab"), {{0, 1}, {0}}); }

Word Substitution::apply(const Word& w) const {
  if (!(w.alphabet() == alphabet_)) throw std::invalid_argument("word is not over the substitution's alphabet");
  std::vector<Letter> out;
  for (Letter l : w.letters()) out.insert(out.end(), images_[l].begin(), images_[l].end());
  return Word(alphabet_, std::move(out));
}

Word Substitution::apply(const Word& w, std::size_t times) const {
  Word cur = w;
  for (std::size_t i = 0; i < times; ++i) cur = apply(cur);
  return cur;
}

std::vector<std::vector<std::uint64_t>> Substitution::incidence() const {
  const std::size_t sigma = alphabet_.size();
  std::vector<std::vector<std::uint64_t>> m(sigma, std::vector<std::uint64_t>(sigma, 0));
  for (std::size_t i = 0; i < sigma; ++i) {
    for (Letter l : images_[i]) ++m[i][l];
  }
  return m;
}

bool Substitution::is_primitive() const {
  const std::size_t sigma = alphabet_.size();
  using Matrix = std::vector<std::vector<bool>>;
  Matrix base(sigma, std::vector<bool>(sigma, false));
  const auto inc = incidence();
  for (std::size_t i = 0; i < sigma; ++i) {
    for (std::size_t j = 0; j < sigma; ++j) base[i][j] = inc[i][j] > 0;
  }
  Matrix power = base;
  for (std::size_t k = 1; k <= sigma * sigma; ++k) {
    bool positive = true;
    for (const auto& row : power) {
      for (bool b : row) positive = positive && b;
    }
    if (positive) return true;
    Matrix next(sigma, std::vector<bool>(sigma, false));
    for (std::size_t i = 0; i < sigma; ++i) {
      for (std::size_t l = 0; l < sigma; ++l) {
        if (!power[i][l]) continue;
        for (std::size_t j = 0; j < sigma; ++j) next[i][j] = next[i][j] || base[l][j];
      }
    }
    power = std::move(next);
  }
  return false;
}

std::optional<std::size_t> Substitution::uniform_length() const {
  const std::size_t k = images_.front().size();
  for (const auto& img : images_) {
    if (img.size() != k) return std::nullopt;
  }
  return k;
}

FixedPointSpec::FixedPointSpec(Substitution substitution, Letter seed)
    : substitution_(std::move(substitution)), seed_(seed) {
  if (seed_ >= substitution_.alphabet().size()) throw std::invalid_argument("seed outside alphabet");
  const auto& img = substitution_.image(seed_);
  if (img.size() < 2 || img.front() != seed_) {
    throw std::invalid_argument("substitution is not prolongable on the seed letter");
  }
  if (!substitution_.is_primitive()) throw std::invalid_argument("substitution is not primitive");
}

Word fixed_point_prefix(const FixedPointSpec& spec, std::size_t length) {
  if (length == 0) throw std::invalid_argument("prefix length must be positive");
  const auto& tau = spec.substitution();
  std::vector<Letter> cur{spec.seed()};
  // tau^k(seed) is a prefix of tau^{k+1}(seed); expand only what is needed.
  while (cur.size() < length) {
    std::vector<Letter> next;
    next.reserve(std::min(length, cur.size() * 4));
    for (Letter l : cur) {
      const auto& img = tau.image(l);
      next.insert(next.end(), img.begin(), img.end());
      if (next.size() >= length) break;
    }
    cur = std::move(next);
  }
  cur.resize(length);
  return Word(tau.alphabet(), std::move(cur));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace

FixedPointSpec read_substitution(std::istream& in) {
  std::vector<std::string> letters;
  std::vector<std::string> images;
  std::optional<std::string> seed;
  std::string line;
  while (std::getline(in, line)) {
    auto view = trim(line);
    if (view.empty()) continue;
    if (view.starts_with("#seed:")) {
      seed = std::string(trim(view.substr(6)));
      continue;
    }
    if (view.front() == '#') continue;
    const auto arrow = view.find("->");
    if (arrow == std::string_view::npos) throw std::invalid_argument("expected 'letter -> image': " + std::string(view));
    letters.emplace_back(trim(view.substr(0, arrow)));
    images.emplace_back(trim(view.substr(arrow + 2)));
    if (split_code_points(letters.back()).size() != 1) {
      throw std::invalid_argument("rule must map a single letter: " + std::string(view));
    }
  }
  if (letters.empty()) throw std::invalid_argument("substitution file has no rules");
  Alphabet alphabet(letters);
  std::vector<std::vector<Letter>> imgs;
  for (const auto& img : images) {
    auto w = Word::parse(img, alphabet);
    imgs.emplace_back(w.letters().begin(), w.letters().end());
  }
  Letter seed_letter = 0;
  if (seed) {
    auto idx = alphabet.index_of(*seed);
    if (!idx) throw std::invalid_argument("seed '" + *seed + "' is not a rule letter");
    seed_letter = *idx;
  }
  return FixedPointSpec(Substitution(std::move(alphabet), std::move(imgs)), seed_letter);
}

}  // namespace abelsq
