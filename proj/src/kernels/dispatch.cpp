#include <atomic>
#include <stdexcept>
#include <string>

#include "cmphi/kernels.hpp"
#include "variants.hpp"

namespace cmphi::kernels {
namespace {

// -1: auto-detect, otherwise the forced Isa value.
std::atomic<int> g_forced{-1};

bool cpu_has_avx2() noexcept {
#if defined(CMPHI_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  static const bool has = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return has;
#else
  return false;
#endif
}

void check_sizes(std::size_t points, std::size_t values, std::size_t mags) {
  if (values != points) throw std::invalid_argument("kernels: values span must match points span");
  if (mags != 0 && mags != points) throw std::invalid_argument("kernels: magnitudes span must be empty or match points");
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) noexcept { return isa == Isa::scalar || cpu_has_avx2(); }

Isa preferred_isa() noexcept {
  const int forced = g_forced.load(std::memory_order_relaxed);
  if (forced >= 0) return static_cast<Isa>(forced);
  return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

void force_isa(std::optional<Isa> isa) {
  if (isa && !isa_available(*isa)) {
    throw std::invalid_argument("force_isa: variant '" + std::string(isa_name(*isa)) + "' not available");
  }
  g_forced.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

void horner_dd(std::span<const DD> coeffs, std::span<const double> points, std::span<DD> values,
               std::span<double> magnitudes, Isa isa) {
  check_sizes(points.size(), values.size(), magnitudes.size());
  double* mag = magnitudes.empty() ? nullptr : magnitudes.data();
#if defined(CMPHI_HAVE_AVX2_KERNELS)
  if (isa == Isa::avx2 && cpu_has_avx2()) {
    detail::horner_dd_avx2(coeffs.data(), coeffs.size(), points.data(), points.size(), values.data(), mag);
    return;
  }
#endif
  detail::horner_dd_scalar(coeffs.data(), coeffs.size(), points.data(), points.size(), values.data(), mag);
}

void horner_comp(std::span<const double> coeffs, std::span<const double> points, std::span<double> values,
                 std::span<double> magnitudes, Isa isa) {
  check_sizes(points.size(), values.size(), magnitudes.size());
  double* mag = magnitudes.empty() ? nullptr : magnitudes.data();
#if defined(CMPHI_HAVE_AVX2_KERNELS)
  if (isa == Isa::avx2 && cpu_has_avx2()) {
    detail::horner_comp_avx2(coeffs.data(), coeffs.size(), points.data(), points.size(), values.data(), mag);
    return;
  }
#endif
  detail::horner_comp_scalar(coeffs.data(), coeffs.size(), points.data(), points.size(), values.data(), mag);
}

}  // namespace cmphi::kernels
