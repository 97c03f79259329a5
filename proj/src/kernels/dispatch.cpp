#include <atomic>
#include <stdexcept>
#include <string>

#include "abelsq/kernels.hpp"

namespace abelsq::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(ABELSQ_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{detected_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2: return cpu_has_avx2();
    case Isa::neon:
#if defined(ABELSQ_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() noexcept {
  if (isa_available(Isa::avx2)) return Isa::avx2;
  if (isa_available(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

Isa active_isa() noexcept { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_available(isa)) throw std::invalid_argument("kernel variant '" + std::string(isa_name(isa)) + "' unavailable");
  active().store(isa, std::memory_order_relaxed);
}

#define ABELSQ_DISPATCH(fn, ...)                         \
  switch (active_isa()) {                                \
    case Isa::avx2: return avx2::fn(__VA_ARGS__);        \
    case Isa::neon: return neon::fn(__VA_ARGS__);        \
    case Isa::scalar: break;                             \
  }                                                      \
  return scalar::fn(__VA_ARGS__)

std::size_t count_new_abelian_squares(const PrefixChannels& prefix, std::span<const std::int32_t> lcp_prev,
                                      std::size_t half) {
  ABELSQ_DISPATCH(count_new_abelian_squares, prefix, lcp_prev, half);
}

std::size_t mark_new_abelian_squares(const PrefixChannels& prefix, std::span<const std::int32_t> lcp_prev,
                                     std::size_t half, std::span<std::uint8_t> out) {
  ABELSQ_DISPATCH(mark_new_abelian_squares, prefix, lcp_prev, half, out);
}

std::size_t count_new_factors(std::span<const std::int32_t> lcp_prev, std::size_t width) {
  ABELSQ_DISPATCH(count_new_factors, lcp_prev, width);
}

WindowRange window_count_range(std::span<const std::int32_t> prefix, std::size_t width) {
  ABELSQ_DISPATCH(window_count_range, prefix, width);
}

#undef ABELSQ_DISPATCH

// Variants not compiled into this build. isa_available() keeps the
// dispatcher away from them; direct calls are a programming error.
#define ABELSQ_MISSING_VARIANT(ns)                                                                          \
  namespace ns {                                                                                            \
  [[noreturn]] static void missing() { throw std::logic_error("kernel variant " #ns " not built"); }        \
  std::size_t count_new_abelian_squares(const PrefixChannels&, std::span<const std::int32_t>, std::size_t) { \
    missing();                                                                                              \
  }                                                                                                         \
  std::size_t mark_new_abelian_squares(const PrefixChannels&, std::span<const std::int32_t>, std::size_t,   \
                                       std::span<std::uint8_t>) {                                           \
    missing();                                                                                              \
  }                                                                                                         \
  std::size_t count_new_factors(std::span<const std::int32_t>, std::size_t) { missing(); }                  \
  WindowRange window_count_range(std::span<const std::int32_t>, std::size_t) { missing(); }                 \
  }

#if !defined(ABELSQ_HAVE_AVX2)
ABELSQ_MISSING_VARIANT(avx2)
#endif
#if !defined(ABELSQ_HAVE_NEON)
ABELSQ_MISSING_VARIANT(neon)
#endif

#undef ABELSQ_MISSING_VARIANT

}  // namespace abelsq::kernels
