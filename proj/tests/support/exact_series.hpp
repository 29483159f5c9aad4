#pragma once

// Exact rational partial sums of the normalized series
//   sum_{n<N} (-1)^{n+k} p_{n+k+1}(a) s^n / n!
// for rational a and s. Used as the truncation-free oracle in tests.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "cmphi/exact.hpp"

namespace cmphi::testing {

inline mpq_class exact_tilde_partial(const mpq_class& a, const mpq_class& s, std::size_t n_terms, unsigned k = 0) {
  const auto p = cmphi::p_exact(a, n_terms + k + 1);
  mpq_class power = 1, sum = 0;
  for (std::size_t n = 0; n < n_terms; ++n) {
    if (n > 0) {
      power *= s;
      power /= static_cast<unsigned long>(n);
    }
    mpq_class term = p[n + k + 1] * power;
    if (((n + k) & 1U) != 0) sum -= term;
    else sum += term;
  }
  return sum;
}

}  // namespace cmphi::testing
