#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace abelsq {

/// Exact element (p + q*sqrt(d)) / r of a real quadratic field.
///
/// Canonical form: r > 0, gcd(p, q, r) = 1, d > 1 squarefree when q != 0.
/// Rationals have q == 0 and d == 1. Operands of a binary operation must
/// share d unless one of them is rational; mixing fields throws
/// std::domain_error. Results that do not fit 64-bit coefficients throw
/// std::overflow_error. Ordering, floor and sign use integer arithmetic only.
class QuadraticIrrational {
 public:
  constexpr QuadraticIrrational() = default;
  QuadraticIrrational(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t d);

  static QuadraticIrrational integer(std::int64_t value) { return {value, 0, 1, 1}; }
  static QuadraticIrrational rational(std::int64_t num, std::int64_t den) { return {num, 0, den, 1}; }
  /// (sqrt(5) - 1) / 2, the golden ratio minus one.
  static QuadraticIrrational golden_conjugate() { return {-1, 1, 2, 5}; }

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }
  std::int64_t r() const noexcept { return r_; }
  std::int64_t d() const noexcept { return d_; }
  bool is_rational() const noexcept { return q_ == 0; }

  int sign() const;
  QuadraticIrrational conjugate() const { return {p_, -q_, r_, d_}; }

  friend QuadraticIrrational operator+(const QuadraticIrrational& a, const QuadraticIrrational& b);
  friend QuadraticIrrational operator-(const QuadraticIrrational& a, const QuadraticIrrational& b);
  friend QuadraticIrrational operator*(const QuadraticIrrational& a, const QuadraticIrrational& b);
  /// Throws std::domain_error on division by zero.
  friend QuadraticIrrational operator/(const QuadraticIrrational& a, const QuadraticIrrational& b);
  QuadraticIrrational operator-() const { return {-p_, -q_, r_, d_}; }

  friend std::strong_ordering operator<=>(const QuadraticIrrational& a, const QuadraticIrrational& b);
  friend bool operator==(const QuadraticIrrational& a, const QuadraticIrrational& b) noexcept {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.r_ == b.r_ && a.d_ == b.d_;
  }

  long double to_long_double() const noexcept;
  double to_double() const noexcept { return static_cast<double>(to_long_double()); }
  /// "(p,q,r,d)"
  std::string str() const;

 private:
  std::int64_t p_ = 0;
  std::int64_t q_ = 0;
  std::int64_t r_ = 1;
  std::int64_t d_ = 1;
};

std::int64_t floor(const QuadraticIrrational& x);
std::int64_t ceil(const QuadraticIrrational& x);
/// x - floor(x), in [0, 1).
QuadraticIrrational frac(const QuadraticIrrational& x);
std::strong_ordering compare(const QuadraticIrrational& a, const QuadraticIrrational& b);

namespace detail {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

/// floor(sqrt(v)) for v >= 0.
u128 isqrt(u128 v);
/// Sign of a + b*sqrt(d) for d >= 1, exact over the full 128-bit range.
int sign_of(i128 a, i128 b, std::int64_t d);

}  // namespace detail

}  // namespace abelsq
