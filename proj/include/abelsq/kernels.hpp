#pragma once

// Data-parallel inner loops of the factor-counting engine.
//
// Every kernel has a scalar reference implementation and, where the target
// supports it, an AVX2 (x86-64) or NEON (AArch64) variant. The public entry
// points dispatch at runtime to the best available variant; the per-ISA
// namespaces are exposed so tests can check them against the scalar code.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace abelsq::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa) noexcept;
bool isa_available(Isa isa) noexcept;
/// Best variant supported by both the build and the running CPU.
Isa detected_isa() noexcept;
/// Variant used by the dispatching entry points.
Isa active_isa() noexcept;
/// Overrides the dispatch target. Throws if `isa` is unavailable.
void set_active_isa(Isa isa);

class ScopedIsa {
 public:
  explicit ScopedIsa(Isa isa) : previous_(active_isa()) { set_active_isa(isa); }
  ~ScopedIsa() { set_active_isa(previous_); }
  ScopedIsa(const ScopedIsa&) = delete;
  ScopedIsa& operator=(const ScopedIsa&) = delete;

 private:
  Isa previous_;
};

/// Prefix-count channels of a text of length n: channel c holds n+1 values,
/// channel c at index i = occurrences of letter c in text[0, i). Channels are
/// stored back to back with stride n+1. A text over sigma letters needs only
/// sigma-1 channels when window lengths are fixed.
struct PrefixChannels {
  std::span<const std::int32_t> data;
  std::size_t text_length = 0;
  std::size_t channels = 0;

  const std::int32_t* channel(std::size_t c) const noexcept { return data.data() + c * (text_length + 1); }
};

/// Number of starts i in [0, n - 2*half] such that text[i, i + 2*half) is an
/// abelian square and `lcp_prev[i] < 2*half` (the factor is the
/// lexicographically first occurrence of its content among suffixes, so each
/// distinct factor is counted once). With zero channels this counts distinct
/// factors of length 2*half. `half` may be zero only together with n >= 0.
std::size_t count_new_abelian_squares(const PrefixChannels& prefix, std::span<const std::int32_t> lcp_prev,
                                      std::size_t half);

/// Same predicate as count_new_abelian_squares, written as 0/1 into
/// `out[0 .. n - 2*half]`. Returns the number of ones.
std::size_t mark_new_abelian_squares(const PrefixChannels& prefix, std::span<const std::int32_t> lcp_prev,
                                     std::size_t half, std::span<std::uint8_t> out);

/// Number of starts i in [0, n - width] with lcp_prev[i] < width.
std::size_t count_new_factors(std::span<const std::int32_t> lcp_prev, std::size_t width);

struct WindowRange {
  std::int32_t min = 0;
  std::int32_t max = 0;
};

/// Min and max of prefix[i + width] - prefix[i] over i in [0, n - width],
/// where prefix has n+1 entries. Requires width <= n.
WindowRange window_count_range(std::span<const std::int32_t> prefix, std::size_t width);

namespace scalar {
std::size_t count_new_abelian_squares(const PrefixChannels&, std::span<const std::int32_t>, std::size_t);
std::size_t mark_new_abelian_squares(const PrefixChannels&, std::span<const std::int32_t>, std::size_t,
                                     std::span<std::uint8_t>);
std::size_t count_new_factors(std::span<const std::int32_t>, std::size_t);
WindowRange window_count_range(std::span<const std::int32_t>, std::size_t);
}  // namespace scalar

namespace avx2 {
std::size_t count_new_abelian_squares(const PrefixChannels&, std::span<const std::int32_t>, std::size_t);
std::size_t mark_new_abelian_squares(const PrefixChannels&, std::span<const std::int32_t>, std::size_t,
                                     std::span<std::uint8_t>);
std::size_t count_new_factors(std::span<const std::int32_t>, std::size_t);
WindowRange window_count_range(std::span<const std::int32_t>, std::size_t);
}  // namespace avx2

namespace neon {
std::size_t count_new_abelian_squares(const PrefixChannels&, std::span<const std::int32_t>, std::size_t);
std::size_t mark_new_abelian_squares(const PrefixChannels&, std::span<const std::int32_t>, std::size_t,
                                     std::span<std::uint8_t>);
std::size_t count_new_factors(std::span<const std::int32_t>, std::size_t);
WindowRange window_count_range(std::span<const std::int32_t>, std::size_t);
}  // namespace neon

}  // namespace abelsq::kernels
