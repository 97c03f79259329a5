// Compiled with -mavx2; only reached after the dispatcher has checked CPU
// support.

#include <immintrin.h>

#include <algorithm>
#include <bit>
#include <limits>

#include "abelsq/kernels.hpp"

namespace abelsq::kernels::avx2 {

namespace {

inline __m256i load(const std::int32_t* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }

// Lane mask of the 8 starts beginning at i.
inline unsigned block_mask(const PrefixChannels& prefix, const std::int32_t* lcp, std::size_t i, std::size_t half,
                           __m256i vlen) {
  __m256i ok = _mm256_cmpgt_epi32(vlen, load(lcp + i));
  const std::size_t len = 2 * half;
  for (std::size_t c = 0; c < prefix.channels; ++c) {
    const std::int32_t* p = prefix.channel(c);
    const __m256i mid = load(p + i + half);
    const __m256i ends = _mm256_add_epi32(load(p + i), load(p + i + len));
    ok = _mm256_and_si256(ok, _mm256_cmpeq_epi32(_mm256_add_epi32(mid, mid), ends));
  }
  return static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(ok)));
}

}  // namespace

std::size_t count_new_abelian_squares(const PrefixChannels& prefix, std::span<const std::int32_t> lcp_prev,
                                      std::size_t half) {
  const std::size_t n = prefix.text_length;
  const std::size_t len = 2 * half;
  if (len > n) return 0;
  const std::size_t starts = n - len + 1;
  const __m256i vlen = _mm256_set1_epi32(static_cast<int>(len));
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 8 <= starts; i += 8) count += std::popcount(block_mask(prefix, lcp_prev.data(), i, half, vlen));
  for (; i < starts; ++i) {
    bool ok = lcp_prev[i] < static_cast<std::int32_t>(len);
    for (std::size_t c = 0; ok && c < prefix.channels; ++c) {
      const std::int32_t* p = prefix.channel(c);
      ok = 2 * p[i + half] == p[i] + p[i + len];
    }
    count += ok;
  }
  return count;
}

std::size_t mark_new_abelian_squares(const PrefixChannels& prefix, std::span<const std::int32_t> lcp_prev,
                                     std::size_t half, std::span<std::uint8_t> out) {
  const std::size_t n = prefix.text_length;
  const std::size_t len = 2 * half;
  if (len > n) return 0;
  const std::size_t starts = n - len + 1;
  const __m256i vlen = _mm256_set1_epi32(static_cast<int>(len));
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 8 <= starts; i += 8) {
    const unsigned mask = block_mask(prefix, lcp_prev.data(), i, half, vlen);
    for (unsigned k = 0; k < 8; ++k) out[i + k] = (mask >> k) & 1U;
    count += std::popcount(mask);
  }
  for (; i < starts; ++i) {
    bool ok = lcp_prev[i] < static_cast<std::int32_t>(len);
    for (std::size_t c = 0; ok && c < prefix.channels; ++c) {
      const std::int32_t* p = prefix.channel(c);
      ok = 2 * p[i + half] == p[i] + p[i + len];
    }
    out[i] = ok;
    count += ok;
  }
  return count;
}

std::size_t count_new_factors(std::span<const std::int32_t> lcp_prev, std::size_t width) {
  const std::size_t n = lcp_prev.size();
  if (width > n) return 0;
  const std::size_t starts = n - width + 1;
  const __m256i vw = _mm256_set1_epi32(static_cast<int>(width));
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 8 <= starts; i += 8) {
    const __m256i ok = _mm256_cmpgt_epi32(vw, load(lcp_prev.data() + i));
    count += std::popcount(static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(ok))));
  }
  for (; i < starts; ++i) count += lcp_prev[i] < static_cast<std::int32_t>(width);
  return count;
}

WindowRange window_count_range(std::span<const std::int32_t> prefix, std::size_t width) {
  const std::size_t n = prefix.size() - 1;
  const std::size_t starts = width <= n ? n - width + 1 : 0;
  __m256i vmin = _mm256_set1_epi32(std::numeric_limits<std::int32_t>::max());
  __m256i vmax = _mm256_set1_epi32(std::numeric_limits<std::int32_t>::min());
  std::size_t i = 0;
  for (; i + 8 <= starts; i += 8) {
    const __m256i d = _mm256_sub_epi32(load(prefix.data() + i + width), load(prefix.data() + i));
    vmin = _mm256_min_epi32(vmin, d);
    vmax = _mm256_max_epi32(vmax, d);
  }
  alignas(32) std::int32_t lo[8];
  alignas(32) std::int32_t hi[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lo), vmin);
  _mm256_store_si256(reinterpret_cast<__m256i*>(hi), vmax);
  WindowRange r{*std::min_element(lo, lo + 8), *std::max_element(hi, hi + 8)};
  for (; i < starts; ++i) {
    const std::int32_t v = prefix[i + width] - prefix[i];
    r.min = std::min(r.min, v);
    r.max = std::max(r.max, v);
  }
  return r;
}

}  // namespace abelsq::kernels::avx2
