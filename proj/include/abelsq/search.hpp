#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "abelsq/word.hpp"

namespace abelsq {

enum class Objective { distinct_asf_total, inequivalent_total };

const char* objective_name(Objective objective);

/// Raised instead of starting a search longer than the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::size_t sigma, std::size_t length, std::size_t budget);
  std::size_t sigma;
  std::size_t length;
  std::size_t budget;
};

struct SearchOptions {
  /// Only words whose letters first occur in index order (a before b before c).
  bool canonical = true;
  /// 0 means hardware concurrency.
  unsigned threads = 1;
  /// Witnesses kept, in lexicographic order.
  std::size_t witness_cap = 64;
  /// Longest admissible length per alphabet size. Sizes without an entry are refused.
  std::map<std::size_t, std::size_t> budget{{2, 26}, {3, 16}, {4, 13}};
  /// JSON-lines file of finished shards; existing records are reused. Empty disables.
  std::string checkpoint_path;
};

struct SearchResult {
  std::size_t sigma = 0;
  std::size_t length = 0;
  Objective objective = Objective::distinct_asf_total;
  std::uint64_t maximum = 0;
  /// The first witness_cap maximizers in lexicographic order.
  std::vector<Word> witnesses;
  /// Number of maximizers found, including the ones over the cap.
  std::uint64_t witness_count = 0;
  std::size_t witness_cap = 0;
  std::uint64_t enumerated = 0;
};

/// Exhaustive maximum of the objective over words of length L on sigma
/// letters (2 <= sigma <= 4, 1 <= L <= 32). Every reported witness is
/// recounted with the brute-force oracle; a disagreement throws
/// std::logic_error. Throws BudgetExceeded past the configured budget and
/// std::invalid_argument for unsupported sizes.
SearchResult exhaustive_search(std::size_t sigma, std::size_t length, Objective objective,
                               const SearchOptions& options = {});
SearchResult max_asf(std::size_t sigma, std::size_t length, const SearchOptions& options = {});
SearchResult max_inequivalent(std::size_t sigma, std::size_t length, const SearchOptions& options = {});

struct AlphabetComparison {
  std::size_t length = 0;
  /// One result per alphabet size 2, 3 and, when budgeted, 4.
  std::vector<SearchResult> results;
  /// binary maximum >= every larger-alphabet maximum.
  bool binary_max_ge_larger = false;
};

/// sigma = 4 is skipped when it is over budget; sigma = 2 and 3 must fit.
AlphabetComparison compare_alphabets(std::size_t length, const SearchOptions& options = {});

/// Number of canonical words of length L on at most sigma letters
/// (sum of Stirling numbers of the second kind).
std::uint64_t canonical_word_count(std::size_t sigma, std::size_t length);

/// Objective value of a word (alphabet size <= 4, length <= 32) by the packed
/// evaluator used inside the search.
std::uint64_t packed_objective(const Word& w, Objective objective);

}  // namespace abelsq
