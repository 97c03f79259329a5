#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "abelsq/quadratic.hpp"
#include "abelsq/word.hpp"

namespace abelsq {

/// Which sides of the coding intervals are closed.
enum class Convention {
  /// I_b = [0, 1 - angle), I_a = [1 - angle, 1)
  left,
  /// I_b = (0, 1 - angle], I_a = (1 - angle, 1]
  right,
};

/// Rotation coding s_{angle, start} over {a, b}.
struct SturmianSpec {
  QuadraticIrrational angle = QuadraticIrrational::golden_conjugate();
  QuadraticIrrational start = QuadraticIrrational::golden_conjugate();
  Convention convention = Convention::left;

  /// Throws std::invalid_argument unless angle is irrational in (0, 1) and
  /// 0 <= start < 1.
  void validate() const;
};

/// The binary alphabet {a, b} used by all Sturmian words here.
const Alphabet& sturmian_alphabet();

/// First `length` letters: letter j is b iff {start + j*angle} falls in I_b.
Word sturmian_prefix(const SturmianSpec& spec, std::size_t length);

/// Letter coding the point x (already reduced to [0, 1)).
Letter rotation_letter(const QuadraticIrrational& x, const QuadraticIrrational& angle, Convention convention);

struct PartitionInterval {
  QuadraticIrrational lower;
  QuadraticIrrational upper;
  /// The length-n factor coded by every point of [lower, upper).
  Word factor;
  /// Factor has ceil(n*angle) letters a; otherwise floor(n*angle).
  bool heavy = false;
};

/// The n + 1 intervals L_0(n) .. L_n(n) cut from [0, 1) by the points
/// {-i*angle}, 1 <= i <= n.
struct IntervalPartition {
  std::size_t n = 0;
  /// 0, the sorted points, 1: n + 2 values, strictly increasing.
  std::vector<QuadraticIrrational> points;
  std::vector<PartitionInterval> intervals;
  /// {-n*angle}: intervals above it carry heavy factors.
  QuadraticIrrational threshold;
};

/// Factor labels are read off by coding the exact midpoint of each interval.
IntervalPartition interval_partition(const QuadraticIrrational& angle, std::size_t n);

/// Parikh vector (|t|_a, |t|_b) of each interval's factor, implied by the
/// heavy/light tag: a-count ceil(n*angle) for heavy, floor(n*angle) for light.
std::vector<ParikhVector> classify_parikh(const QuadraticIrrational& angle, std::size_t n);
std::vector<ParikhVector> classify_parikh(const IntervalPartition& partition, const QuadraticIrrational& angle);

/// Number of distinct abelian-square factors of length n of any Sturmian
/// word of this angle, counted arithmetically from the points {-i*angle}.
/// n = 0 gives 0; odd n throws std::invalid_argument.
std::uint64_t asf_arith(const QuadraticIrrational& angle, std::size_t n);

/// asf_arith for every even n in [0, max_n], indexed by n / 2. Reuses the
/// point set across lengths.
std::vector<std::uint64_t> asf_arith_table(const QuadraticIrrational& angle, std::size_t max_n);

}  // namespace abelsq
