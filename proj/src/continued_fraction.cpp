#include "abelsq/continued_fraction.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

namespace abelsq {

using detail::i128;
using detail::u128;

std::int64_t ContinuedFraction::term(std::size_t k) const {
  if (k == 0) return a0;
  if (k - 1 < preperiod.size()) return preperiod[k - 1];
  if (period.empty()) throw std::out_of_range("finite continued fraction has no such term");
  return period[(k - 1 - preperiod.size()) % period.size()];
}

std::vector<std::int64_t> ContinuedFraction::terms(std::size_t count) const {
  std::vector<std::int64_t> out;
  const std::size_t available = period.empty() ? 1 + preperiod.size() : count;
  for (std::size_t k = 0; k < std::min(count, available); ++k) out.push_back(term(k));
  return out;
}

std::int64_t ContinuedFraction::bound() const {
  std::int64_t k = 0;
  for (auto a : preperiod) k = std::max(k, a);
  for (auto a : period) k = std::max(k, a);
  return k;
}

std::string ContinuedFraction::str() const {
  auto join = [](const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  return "cf:[" + std::to_string(a0) + ";" + join(preperiod) + "|" + join(period) + "]";
}

namespace {

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("continued fraction term exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

ContinuedFraction cf_expand(const QuadraticIrrational& x, std::size_t max_steps) {
  if (x.is_rational()) throw std::invalid_argument("continued fraction expansion needs an irrational value");
  // x = (P + sqrt(D)) / Q with Q | D - P^2.
  const i128 r = x.r();
  const i128 q = x.q();
  const i128 D = q * q * r * r * x.d();
  i128 P = q > 0 ? static_cast<i128>(x.p()) * r : -static_cast<i128>(x.p()) * r;
  i128 Q = q > 0 ? r * r : -r * r;
  const i128 s = static_cast<i128>(detail::isqrt(static_cast<u128>(D)));

  std::vector<std::int64_t> quotients;
  std::map<std::pair<i128, i128>, std::size_t> seen;
  for (std::size_t k = 0; k < max_steps; ++k) {
    if (k >= 1) {
      auto [it, inserted] = seen.emplace(std::make_pair(P, Q), k);
      if (!inserted) {
        ContinuedFraction cf;
        cf.a0 = quotients[0];
        cf.preperiod.assign(quotients.begin() + 1, quotients.begin() + static_cast<std::ptrdiff_t>(it->second));
        cf.period.assign(quotients.begin() + static_cast<std::ptrdiff_t>(it->second), quotients.end());
        return cf;
      }
    }
    // sqrt(D) lies strictly between s and s + 1.
    const i128 a = Q > 0 ? floor_div(P + s, Q) : floor_div(-(P + s + 1), -Q);
    quotients.push_back(narrow(a));
    P = a * Q - P;
    Q = (D - P * P) / Q;
  }
  throw std::runtime_error("no period found within the step limit");
}

QuadraticIrrational cf_to_qi(const ContinuedFraction& cf) {
  if (cf.period.empty()) throw std::invalid_argument("cf_to_qi needs a non-empty period");
  for (auto a : cf.preperiod) {
    if (a < 1) throw std::invalid_argument("partial quotients of index >= 1 must be positive");
  }
  for (auto a : cf.period) {
    if (a < 1) throw std::invalid_argument("partial quotients of index >= 1 must be positive");
  }
  // y = [b1; b2, ..., bk, y] satisfies y = (h y + h') / (k y + k'), so
  // k y^2 + (k' - h) y - h' = 0 and y is the positive root.
  i128 h = 1, h_prev = 0, kk = 0, k_prev = 1;
  for (auto b : cf.period) {
    const i128 nh = b * h + h_prev;
    const i128 nk = b * kk + k_prev;
    h_prev = h;
    h = nh;
    k_prev = kk;
    kk = nk;
  }
  const i128 disc = (k_prev - h) * (k_prev - h) + 4 * kk * h_prev;
  QuadraticIrrational y(narrow(h - k_prev), 1, narrow(2 * kk), narrow(disc));
  const auto one = QuadraticIrrational::integer(1);
  QuadraticIrrational v = y;
  for (auto it = cf.preperiod.rbegin(); it != cf.preperiod.rend(); ++it) {
    v = QuadraticIrrational::integer(*it) + one / v;
  }
  return QuadraticIrrational::integer(cf.a0) + one / v;
}

std::vector<Rational> convergents(const ContinuedFraction& cf, std::size_t count) {
  std::vector<Rational> out;
  i128 h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
  for (auto a : cf.terms(count)) {
    const i128 h = a * h_prev + h_prev2;
    const i128 k = a * k_prev + k_prev2;
    out.push_back(Rational{narrow(h), narrow(k)});
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
  }
  return out;
}

namespace {

std::int64_t parse_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("expected an integer");
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("expected an integer");
  i128 v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    v = v * 10 + (s[i] - '0');
    if (v > std::numeric_limits<std::int64_t>::max()) throw std::invalid_argument("integer out of range");
  }
  return static_cast<std::int64_t>(neg ? -v : v);
}

std::vector<std::int64_t> parse_list(std::string_view s) {
  std::vector<std::int64_t> out;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    out.push_back(parse_int(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

ContinuedFraction parse_continued_fraction(std::string_view text) {
  if (!text.starts_with("cf:[") || !text.ends_with("]")) {
    throw std::invalid_argument("continued fraction syntax is cf:[a0;pre|period]");
  }
  std::string_view body = text.substr(4, text.size() - 5);
  const auto semi = body.find(';');
  const auto bar = body.find('|');
  if (semi == std::string_view::npos || bar == std::string_view::npos || bar < semi) {
    throw std::invalid_argument("continued fraction syntax is cf:[a0;pre|period]");
  }
  ContinuedFraction cf;
  cf.a0 = parse_int(body.substr(0, semi));
  cf.preperiod = parse_list(body.substr(semi + 1, bar - semi - 1));
  cf.period = parse_list(body.substr(bar + 1));
  return cf;
}

QuadraticIrrational parse_quadratic(std::string_view text) {
  if (text.starts_with("cf:")) return cf_to_qi(parse_continued_fraction(text));
  if (text.starts_with("qi:")) {
    if (text.size() < 5 || text[3] != '(' || text.back() != ')') {
      throw std::invalid_argument("quadratic syntax is qi:(p,q,r,d)");
    }
    const auto parts = parse_list(text.substr(4, text.size() - 5));
    if (parts.size() != 4) throw std::invalid_argument("quadratic syntax is qi:(p,q,r,d)");
    try {
      return QuadraticIrrational(parts[0], parts[1], parts[2], parts[3]);
    } catch (const std::domain_error& e) {
      throw std::invalid_argument(e.what());
    }
  }
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return QuadraticIrrational::integer(parse_int(text));
  const auto den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return QuadraticIrrational::rational(parse_int(text.substr(0, slash)), den);
}

}  // namespace abelsq
