#include "abelsq/quadratic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace abelsq {

using detail::i128;
using detail::u128;

namespace {

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i128 mul(i128 a, i128 b) {
  i128 out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("quadratic arithmetic overflow");
  return out;
}

i128 add(i128 a, i128 b) {
  i128 out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("quadratic arithmetic overflow");
  return out;
}

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("quadratic coefficient exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t common_field(const QuadraticIrrational& a, const QuadraticIrrational& b) {
  if (a.is_rational()) return b.d();
  if (b.is_rational()) return a.d();
  if (a.d() != b.d()) throw std::domain_error("operands lie in different quadratic fields");
  return a.d();
}

// 256-bit unsigned value as two 128-bit halves.
struct U256 {
  u128 hi = 0;
  u128 lo = 0;
  friend auto operator<=>(const U256&, const U256&) = default;
};

U256 mul_wide(u128 a, u128 b) {
  const u128 mask = ~static_cast<std::uint64_t>(0);
  const u128 a0 = a & mask, a1 = a >> 64, b0 = b & mask, b1 = b >> 64;
  const u128 p00 = a0 * b0, p01 = a0 * b1, p10 = a1 * b0, p11 = a1 * b1;
  const u128 mid = (p00 >> 64) + (p01 & mask) + (p10 & mask);
  U256 out;
  out.lo = (p00 & mask) | (mid << 64);
  out.hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
  return out;
}

// v * m, or nullopt-like flag when the product needs more than 256 bits.
bool mul_small(const U256& v, std::uint64_t m, U256& out) {
  const U256 lo = mul_wide(v.lo, m);
  const U256 hi = mul_wide(v.hi, m);
  if (hi.hi != 0) return false;
  out.lo = lo.lo;
  const u128 h = lo.hi + hi.lo;
  if (h < hi.lo) return false;
  out.hi = h;
  return true;
}

// Build a canonical value from wide coefficients.
QuadraticIrrational make(i128 p, i128 q, i128 r, std::int64_t d) {
  if (r == 0) throw std::domain_error("zero denominator");
  if (r < 0) {
    p = -p;
    q = -q;
    r = -r;
  }
  i128 g = gcd128(gcd128(p, q), r);
  if (g > 1) {
    p /= g;
    q /= g;
    r /= g;
  }
  return QuadraticIrrational(narrow(p), narrow(q), narrow(r), q == 0 ? 1 : d);
}

}  // namespace

namespace detail {

u128 isqrt(u128 v) {
  if (v == 0) return 0;
  u128 x = static_cast<u128>(std::sqrt(static_cast<long double>(v)));
  // Correct the floating estimate in both directions.
  while (x > 0 && (x > (~static_cast<u128>(0)) / x || x * x > v)) --x;
  while ((x + 1) <= (~static_cast<u128>(0)) / (x + 1) && (x + 1) * (x + 1) <= v) ++x;
  return x;
}

int sign_of(i128 a, i128 b, std::int64_t d) {
  const int sa = (a > 0) - (a < 0);
  const int sb = (b > 0) - (b < 0);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with b^2 d.
  const u128 ua = a < 0 ? static_cast<u128>(-(a + 1)) + 1 : static_cast<u128>(a);
  const u128 ub = b < 0 ? static_cast<u128>(-(b + 1)) + 1 : static_cast<u128>(b);
  const U256 a2 = mul_wide(ua, ua);
  U256 b2d;
  const bool fits = mul_small(mul_wide(ub, ub), static_cast<std::uint64_t>(d), b2d);
  if (!fits || b2d > a2) return sb;
  if (a2 > b2d) return sa;
  return 0;
}

}  // namespace detail

QuadraticIrrational::QuadraticIrrational(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t d) {
  if (r == 0) throw std::domain_error("zero denominator");
  if (d <= 0) throw std::domain_error("radicand must be positive");
  i128 wp = p, wq = q, wr = r;
  std::int64_t wd = d;
  if (wq != 0) {
    // Move square factors of d into q.
    for (std::int64_t f = 2; f <= wd / f; ++f) {
      while (wd % (f * f) == 0) {
        wd /= f * f;
        wq = mul(wq, f);
      }
    }
    if (wd == 1) {
      wp = add(wp, wq);
      wq = 0;
    }
  }
  if (wq == 0) wd = 1;
  if (wr < 0) {
    wp = -wp;
    wq = -wq;
    wr = -wr;
  }
  const i128 g = gcd128(gcd128(wp, wq), wr);
  if (g > 1) {
    wp /= g;
    wq /= g;
    wr /= g;
  }
  p_ = narrow(wp);
  q_ = narrow(wq);
  r_ = narrow(wr);
  d_ = wd;
}

int QuadraticIrrational::sign() const { return detail::sign_of(p_, q_, d_); }

QuadraticIrrational operator+(const QuadraticIrrational& a, const QuadraticIrrational& b) {
  const std::int64_t d = common_field(a, b);
  return make(add(mul(a.p_, b.r_), mul(b.p_, a.r_)), add(mul(a.q_, b.r_), mul(b.q_, a.r_)), mul(a.r_, b.r_), d);
}

QuadraticIrrational operator-(const QuadraticIrrational& a, const QuadraticIrrational& b) { return a + (-b); }

QuadraticIrrational operator*(const QuadraticIrrational& a, const QuadraticIrrational& b) {
  const std::int64_t d = common_field(a, b);
  const i128 p = add(mul(a.p_, b.p_), mul(mul(a.q_, b.q_), d));
  const i128 q = add(mul(a.p_, b.q_), mul(a.q_, b.p_));
  return make(p, q, mul(a.r_, b.r_), d);
}

QuadraticIrrational operator/(const QuadraticIrrational& a, const QuadraticIrrational& b) {
  const std::int64_t d = common_field(a, b);
  if (b.p_ == 0 && b.q_ == 0) throw std::domain_error("division by zero");
  // a / b = a * conj(b) * r_b / (r_a * norm), norm = p_b^2 - q_b^2 d.
  const i128 norm = add(mul(b.p_, b.p_), -mul(mul(b.q_, b.q_), d));
  const i128 p = mul(add(mul(a.p_, b.p_), -mul(mul(a.q_, b.q_), d)), b.r_);
  const i128 q = mul(add(mul(a.q_, b.p_), -mul(a.p_, b.q_)), b.r_);
  return make(p, q, mul(a.r_, norm), d);
}

std::strong_ordering operator<=>(const QuadraticIrrational& a, const QuadraticIrrational& b) {
  const std::int64_t d = common_field(a, b);
  // Denominators are positive, so sign(a - b) = sign of the cross-multiplied numerator.
  const i128 p = add(mul(a.p_, b.r_), -mul(b.p_, a.r_));
  const i128 q = add(mul(a.q_, b.r_), -mul(b.q_, a.r_));
  const int s = detail::sign_of(p, q, d);
  return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

long double QuadraticIrrational::to_long_double() const noexcept {
  return (static_cast<long double>(p_) + static_cast<long double>(q_) * std::sqrt(static_cast<long double>(d_))) /
         static_cast<long double>(r_);
}

std::string QuadraticIrrational::str() const {
  return "(" + std::to_string(p_) + "," + std::to_string(q_) + "," + std::to_string(r_) + "," + std::to_string(d_) +
         ")";
}

std::int64_t floor(const QuadraticIrrational& x) {
  if (x.is_rational()) return narrow(floor_div(x.p(), x.r()));
  // q*sqrt(d) is irrational, so it lies strictly between t and t + 1.
  const i128 q = x.q();
  const i128 q2d = mul(mul(q, q), x.d());
  const i128 s = static_cast<i128>(detail::isqrt(static_cast<u128>(q2d)));
  const i128 t = q > 0 ? s : -s - 1;
  return narrow(floor_div(add(x.p(), t), x.r()));
}

std::int64_t ceil(const QuadraticIrrational& x) { return -floor(-x); }

QuadraticIrrational frac(const QuadraticIrrational& x) { return x - QuadraticIrrational::integer(floor(x)); }

std::strong_ordering compare(const QuadraticIrrational& a, const QuadraticIrrational& b) { return a <=> b; }

}  // namespace abelsq
