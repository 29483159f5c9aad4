#pragma once

#include <cstddef>

#include "cmphi/double_double.hpp"

namespace cmphi::kernels::detail {

// Raw-pointer entry points shared by the dispatcher. `mag` may be null.
void horner_dd_scalar(const DD* coeffs, std::size_t n_coeffs, const double* x, std::size_t n, DD* out, double* mag);
void horner_comp_scalar(const double* coeffs, std::size_t n_coeffs, const double* x, std::size_t n, double* out,
                        double* mag);

#if defined(CMPHI_HAVE_AVX2_KERNELS)
void horner_dd_avx2(const DD* coeffs, std::size_t n_coeffs, const double* x, std::size_t n, DD* out, double* mag);
void horner_comp_avx2(const double* coeffs, std::size_t n_coeffs, const double* x, std::size_t n, double* out,
                      double* mag);
#endif

}  // namespace cmphi::kernels::detail
