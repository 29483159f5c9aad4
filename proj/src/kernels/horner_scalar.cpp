#include <cmath>

#include "variants.hpp"

namespace cmphi::kernels::detail {

void horner_dd_scalar(const DD* coeffs, std::size_t n_coeffs, const double* x, std::size_t n, DD* out,
                      double* mag) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i];
    const double ax = std::fabs(xi);
    DD acc(0.0);
    double m = 0.0;
    for (std::size_t k = n_coeffs; k-- > 0;) {
      acc = mul_d(acc, xi) + coeffs[k];
      m = m * ax + std::fabs(coeffs[k].hi);
    }
    out[i] = acc;
    if (mag != nullptr) mag[i] = m;
  }
}

void horner_comp_scalar(const double* coeffs, std::size_t n_coeffs, const double* x, std::size_t n, double* out,
                        double* mag) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i];
    const double ax = std::fabs(xi);
    double r = 0.0;
    double c = 0.0;
    double m = 0.0;
    for (std::size_t k = n_coeffs; k-- > 0;) {
      double p, pi, sigma;
      two_prod(r, xi, p, pi);
      two_sum(p, coeffs[k], r, sigma);
      c = c * xi + (pi + sigma);
      m = m * ax + std::fabs(coeffs[k]);
    }
    out[i] = r + c;
    if (mag != nullptr) mag[i] = m;
  }
}

}  // namespace cmphi::kernels::detail
