#include <arm_neon.h>

#include <algorithm>
#include <limits>

#include "abelsq/kernels.hpp"

namespace abelsq::kernels::neon {

namespace {

// All-ones lanes for the 4 starts beginning at i.
inline uint32x4_t block_mask(const PrefixChannels& prefix, const std::int32_t* lcp, std::size_t i, std::size_t half,
                             int32x4_t vlen) {
  uint32x4_t ok = vcgtq_s32(vlen, vld1q_s32(lcp + i));
  const std::size_t len = 2 * half;
  for (std::size_t c = 0; c < prefix.channels; ++c) {
    const std::int32_t* p = prefix.channel(c);
    const int32x4_t mid = vld1q_s32(p + i + half);
    const int32x4_t ends = vaddq_s32(vld1q_s32(p + i), vld1q_s32(p + i + len));
    ok = vandq_u32(ok, vceqq_s32(vaddq_s32(mid, mid), ends));
  }
  return ok;
}

inline bool scalar_hit(const PrefixChannels& prefix, std::span<const std::int32_t> lcp_prev, std::size_t i,
                       std::size_t half) {
  const std::size_t len = 2 * half;
  bool ok = lcp_prev[i] < static_cast<std::int32_t>(len);
  for (std::size_t c = 0; ok && c < prefix.channels; ++c) {
    const std::int32_t* p = prefix.channel(c);
    ok = 2 * p[i + half] == p[i] + p[i + len];
  }
  return ok;
}

}  // namespace

std::size_t count_new_abelian_squares(const PrefixChannels& prefix, std::span<const std::int32_t> lcp_prev,
                                      std::size_t half) {
  const std::size_t n = prefix.text_length;
  const std::size_t len = 2 * half;
  if (len > n) return 0;
  const std::size_t starts = n - len + 1;
  const int32x4_t vlen = vdupq_n_s32(static_cast<int>(len));
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= starts; i += 4) {
    count += vaddvq_u32(vshrq_n_u32(block_mask(prefix, lcp_prev.data(), i, half, vlen), 31));
  }
  for (; i < starts; ++i) count += scalar_hit(prefix, lcp_prev, i, half);
  return count;
}

std::size_t mark_new_abelian_squares(const PrefixChannels& prefix, std::span<const std::int32_t> lcp_prev,
                                     std::size_t half, std::span<std::uint8_t> out) {
  const std::size_t n = prefix.text_length;
  const std::size_t len = 2 * half;
  if (len > n) return 0;
  const std::size_t starts = n - len + 1;
  const int32x4_t vlen = vdupq_n_s32(static_cast<int>(len));
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= starts; i += 4) {
    alignas(16) std::uint32_t bits[4];
    vst1q_u32(bits, vshrq_n_u32(block_mask(prefix, lcp_prev.data(), i, half, vlen), 31));
    for (unsigned k = 0; k < 4; ++k) {
      out[i + k] = static_cast<std::uint8_t>(bits[k]);
      count += bits[k];
    }
  }
  for (; i < starts; ++i) {
    const bool hit = scalar_hit(prefix, lcp_prev, i, half);
    out[i] = hit;
    count += hit;
  }
  return count;
}

std::size_t count_new_factors(std::span<const std::int32_t> lcp_prev, std::size_t width) {
  const std::size_t n = lcp_prev.size();
  if (width > n) return 0;
  const std::size_t starts = n - width + 1;
  const int32x4_t vw = vdupq_n_s32(static_cast<int>(width));
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= starts; i += 4) {
    count += vaddvq_u32(vshrq_n_u32(vcgtq_s32(vw, vld1q_s32(lcp_prev.data() + i)), 31));
  }
  for (; i < starts; ++i) count += lcp_prev[i] < static_cast<std::int32_t>(width);
  return count;
}

WindowRange window_count_range(std::span<const std::int32_t> prefix, std::size_t width) {
  const std::size_t n = prefix.size() - 1;
  const std::size_t starts = width <= n ? n - width + 1 : 0;
  int32x4_t vmin = vdupq_n_s32(std::numeric_limits<std::int32_t>::max());
  int32x4_t vmax = vdupq_n_s32(std::numeric_limits<std::int32_t>::min());
  std::size_t i = 0;
  for (; i + 4 <= starts; i += 4) {
    const int32x4_t d = vsubq_s32(vld1q_s32(prefix.data() + i + width), vld1q_s32(prefix.data() + i));
    vmin = vminq_s32(vmin, d);
    vmax = vmaxq_s32(vmax, d);
  }
  WindowRange r{vminvq_s32(vmin), vmaxvq_s32(vmax)};
  for (; i < starts; ++i) {
    const std::int32_t v = prefix[i + width] - prefix[i];
    r.min = std::min(r.min, v);
    r.max = std::max(r.max, v);
  }
  return r;
}

}  // namespace abelsq::kernels::neon
