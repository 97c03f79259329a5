#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "abelsq/word.hpp"

namespace abelsq {

// Word text format: one word per line written with display symbols. An
// optional header line "#alphabet: ab" fixes the alphabet; without it the
// alphabet is the sorted set of symbols used anywhere in the file. Blank
// lines are skipped.

std::vector<Word> read_words(std::istream& in);
void write_words(std::ostream& out, std::span<const Word> words, bool declare_alphabet = false);

}  // namespace abelsq
