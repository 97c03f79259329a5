#pragma once

// Independent brute-force oracles. Nothing here calls into the library's
// counting or arithmetic code; words are handled as plain strings.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline bool is_abelian_square(const std::string& s) {
  if (s.size() % 2 != 0) return false;
  std::map<char, int> diff;
  const std::size_t h = s.size() / 2;
  for (std::size_t i = 0; i < h; ++i) {
    ++diff[s[i]];
    --diff[s[h + i]];
  }
  for (const auto& [c, v] : diff) {
    if (v != 0) return false;
  }
  return true;
}

inline std::set<std::string> factors(const std::string& s, std::size_t n) {
  std::set<std::string> out;
  if (n > s.size()) return out;
  for (std::size_t i = 0; i + n <= s.size(); ++i) out.insert(s.substr(i, n));
  return out;
}

// length -> distinct abelian squares, for even lengths 2..max_len
inline std::map<std::size_t, std::uint64_t> asf_counts(const std::string& s, std::size_t max_len) {
  std::map<std::size_t, std::uint64_t> out;
  for (std::size_t m = 2; m <= max_len; m += 2) {
    std::uint64_t c = 0;
    for (const auto& f : factors(s, m)) c += is_abelian_square(f);
    out[m] = c;
  }
  return out;
}

inline std::uint64_t asf_total(const std::string& s) {
  std::uint64_t t = 0;
  for (const auto& [m, c] : asf_counts(s, s.size())) t += c;
  return t;
}

inline std::map<std::size_t, std::uint64_t> inequivalent_counts(const std::string& s, std::size_t max_len) {
  std::map<std::size_t, std::uint64_t> out;
  for (std::size_t m = 2; m <= max_len; m += 2) {
    std::set<std::map<char, int>> classes;
    for (const auto& f : factors(s, m)) {
      if (!is_abelian_square(f)) continue;
      std::map<char, int> pv;
      for (char c : f) ++pv[c];
      classes.insert(pv);
    }
    out[m] = classes.size();
  }
  return out;
}

inline std::uint64_t inequivalent_total(const std::string& s) {
  std::uint64_t t = 0;
  for (const auto& [m, c] : inequivalent_counts(s, s.size())) t += c;
  return t;
}

inline std::string reverse(std::string s) { return {s.rbegin(), s.rend()}; }

// --- exact floors in Q(sqrt d) ---

using i128 = __int128;

inline i128 isqrt_floor(i128 v) {
  // bisection; slow and obviously correct
  i128 lo = 0, hi = 1;
  while (hi * hi <= v) hi *= 2;
  while (hi - lo > 1) {
    const i128 mid = (lo + hi) / 2;
    (mid * mid <= v ? lo : hi) = mid;
  }
  return lo;
}

inline i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// floor((a + b*sqrt(d)) / r), r > 0
inline i128 floor_qi(i128 a, i128 b, i128 r, i128 d) {
  const i128 sq = b * b * d;
  const i128 s = isqrt_floor(sq);
  const i128 t = b >= 0 ? s : -s - (s * s != sq ? 1 : 0);
  return floor_div(a + t, r);
}

inline i128 ceil_qi(i128 a, i128 b, i128 r, i128 d) { return -floor_qi(-a, -b, r, d); }

// Mechanical word over {a, b}: alpha = (ap + aq sqrt d)/ar, rho = (rp + rq sqrt d)/rr.
// Left convention: letter j is b iff floor(rho + (j+1) alpha) == floor(rho + j alpha).
// Right convention: same with ceilings.
inline std::string mechanical(std::int64_t ap, std::int64_t aq, std::int64_t ar, std::int64_t rp, std::int64_t rq,
                              std::int64_t rr, std::int64_t d, std::size_t len, bool right = false) {
  std::string out;
  auto at = [&](i128 j) {
    // rho + j alpha over the common denominator ar * rr
    const i128 a = static_cast<i128>(rp) * ar + j * ap * rr;
    const i128 b = static_cast<i128>(rq) * ar + j * aq * rr;
    const i128 r = static_cast<i128>(ar) * rr;
    return right ? ceil_qi(a, b, r, d) : floor_qi(a, b, r, d);
  };
  for (std::size_t j = 0; j < len; ++j) out += at(static_cast<i128>(j) + 1) == at(static_cast<i128>(j)) ? 'b' : 'a';
  return out;
}

}  // namespace oracle
