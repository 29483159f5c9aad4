#pragma once

// Data-parallel polynomial evaluation at many points, the inner loop of every
// grid scan (zero finding, figure data, quadrature over s).
//
// Each kernel has a scalar reference implementation and an AVX2+FMA variant
// that processes four points per step. The variants execute the same
// sequence of IEEE operations per lane, so results are bit-identical; the
// equivalence tests check exactly that.

#include <optional>
#include <span>
#include <string_view>

#include "cmphi/double_double.hpp"

namespace cmphi::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// Whether the variant was compiled in and the CPU supports it.
bool isa_available(Isa isa) noexcept;

/// Best available variant, unless overridden by force_isa().
Isa preferred_isa() noexcept;

/// Pins preferred_isa() (tests, benchmarks). std::nullopt restores
/// detection. Throws std::invalid_argument if the variant is unavailable.
void force_isa(std::optional<Isa> isa);

/// values[i] = sum_n coeffs[n] * x_i^n in double-double (Horner),
/// magnitudes[i] = sum_n |coeffs[n]| |x_i|^n in double (may be empty).
void horner_dd(std::span<const DD> coeffs, std::span<const double> points, std::span<DD> values,
               std::span<double> magnitudes, Isa isa);
inline void horner_dd(std::span<const DD> coeffs, std::span<const double> points, std::span<DD> values,
                      std::span<double> magnitudes = {}) {
  horner_dd(coeffs, points, values, magnitudes, preferred_isa());
}

/// Compensated Horner (error-free transformations on each step): the result
/// is as accurate as if computed in twice the working precision and then
/// rounded.
void horner_comp(std::span<const double> coeffs, std::span<const double> points, std::span<double> values,
                 std::span<double> magnitudes, Isa isa);
inline void horner_comp(std::span<const double> coeffs, std::span<const double> points, std::span<double> values,
                        std::span<double> magnitudes = {}) {
  horner_comp(coeffs, points, values, magnitudes, preferred_isa());
}

}  // namespace cmphi::kernels
