#include <algorithm>
#include <limits>

#include "abelsq/kernels.hpp"

namespace abelsq::kernels::scalar {

namespace {

inline bool is_new_square(const PrefixChannels& prefix, std::span<const std::int32_t> lcp_prev, std::size_t i,
                          std::size_t half) {
  const std::size_t len = 2 * half;
  if (lcp_prev[i] >= static_cast<std::int32_t>(len)) return false;
  for (std::size_t c = 0; c < prefix.channels; ++c) {
    const std::int32_t* p = prefix.channel(c);
    if (2 * p[i + half] != p[i] + p[i + len]) return false;
  }
  return true;
}

}  // namespace

std::size_t count_new_abelian_squares(const PrefixChannels& prefix, std::span<const std::int32_t> lcp_prev,
                                      std::size_t half) {
  const std::size_t n = prefix.text_length;
  if (2 * half > n) return 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i + 2 * half <= n; ++i) count += is_new_square(prefix, lcp_prev, i, half);
  return count;
}

std::size_t mark_new_abelian_squares(const PrefixChannels& prefix, std::span<const std::int32_t> lcp_prev,
                                     std::size_t half, std::span<std::uint8_t> out) {
  const std::size_t n = prefix.text_length;
  if (2 * half > n) return 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i + 2 * half <= n; ++i) {
    const bool hit = is_new_square(prefix, lcp_prev, i, half);
    out[i] = hit;
    count += hit;
  }
  return count;
}

std::size_t count_new_factors(std::span<const std::int32_t> lcp_prev, std::size_t width) {
  const std::size_t n = lcp_prev.size();
  if (width > n) return 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i + width <= n; ++i) count += lcp_prev[i] < static_cast<std::int32_t>(width);
  return count;
}

WindowRange window_count_range(std::span<const std::int32_t> prefix, std::size_t width) {
  const std::size_t n = prefix.size() - 1;
  WindowRange r{std::numeric_limits<std::int32_t>::max(), std::numeric_limits<std::int32_t>::min()};
  for (std::size_t i = 0; i + width <= n; ++i) {
    const std::int32_t v = prefix[i + width] - prefix[i];
    r.min = std::min(r.min, v);
    r.max = std::max(r.max, v);
  }
  return r;
}

}  // namespace abelsq::kernels::scalar
