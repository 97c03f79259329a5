#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "abelsq/quadratic.hpp"

namespace abelsq {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// [a0; preperiod..., (period...)], the period repeating forever. An empty
/// period denotes a finite (rational) expansion.
struct ContinuedFraction {
  std::int64_t a0 = 0;
  std::vector<std::int64_t> preperiod;
  std::vector<std::int64_t> period;

  /// Partial quotient a_k (a_0 = a0).
  std::int64_t term(std::size_t k) const;
  /// a_0 .. a_{count-1}; stops early for finite expansions.
  std::vector<std::int64_t> terms(std::size_t count) const;
  /// K = max of the partial quotients of index >= 1; 0 if there are none.
  std::int64_t bound() const;
  /// "cf:[a0;p1,p2|q1,q2]"
  std::string str() const;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

/// Eventually periodic expansion of an irrational quadratic x, found by
/// iterating the reduced (P + sqrt(D)) / Q states until one repeats.
/// Throws std::invalid_argument for rational x, std::runtime_error if no
/// period shows up within max_steps terms.
ContinuedFraction cf_expand(const QuadraticIrrational& x, std::size_t max_steps = 1'000'000);

/// Exact value of a periodic expansion. Throws std::invalid_argument if the
/// period is empty or a partial quotient of index >= 1 is not positive.
QuadraticIrrational cf_to_qi(const ContinuedFraction& cf);

/// Convergents n_k / m_k for k = 0 .. count-1.
std::vector<Rational> convergents(const ContinuedFraction& cf, std::size_t count);

/// Parses "cf:[a0;p1,p2|q1,q2]" (preperiod and period may be empty, the bar
/// is required).
ContinuedFraction parse_continued_fraction(std::string_view text);

/// Angle syntax: "qi:(p,q,r,d)", "cf:[a0;pre|period]", or a rational "n" /
/// "n/m". Throws std::invalid_argument on malformed input.
QuadraticIrrational parse_quadratic(std::string_view text);

}  // namespace abelsq
