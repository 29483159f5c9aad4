// AVX2+FMA variants. Compiled with -mavx2 -mfma; only reached through the
// dispatcher after a CPU feature check.

#include <immintrin.h>

#include "variants.hpp"

namespace cmphi::kernels::detail {
namespace {

struct Lanes {
  __m256d hi;
  __m256d lo;
};

inline __m256d vabs(__m256d v) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v); }

inline void two_sum(__m256d a, __m256d b, __m256d& s, __m256d& e) {
  s = _mm256_add_pd(a, b);
  const __m256d bb = _mm256_sub_pd(s, a);
  e = _mm256_add_pd(_mm256_sub_pd(a, _mm256_sub_pd(s, bb)), _mm256_sub_pd(b, bb));
}

inline void fast_two_sum(__m256d a, __m256d b, __m256d& s, __m256d& e) {
  s = _mm256_add_pd(a, b);
  e = _mm256_sub_pd(b, _mm256_sub_pd(s, a));
}

// Mirrors cmphi::mul_d.
inline Lanes mul_d(const Lanes& a, __m256d b) {
  const __m256d p = _mm256_mul_pd(a.hi, b);
  __m256d e = _mm256_fmsub_pd(a.hi, b, p);
  e = _mm256_fmadd_pd(a.lo, b, e);
  Lanes r;
  fast_two_sum(p, e, r.hi, r.lo);
  return r;
}

// Mirrors cmphi::operator+(DD, DD).
inline Lanes add(const Lanes& a, __m256d bhi, __m256d blo) {
  __m256d s, e, t, f;
  two_sum(a.hi, bhi, s, e);
  two_sum(a.lo, blo, t, f);
  e = _mm256_add_pd(e, t);
  fast_two_sum(s, e, s, e);
  e = _mm256_add_pd(e, f);
  Lanes r;
  fast_two_sum(s, e, r.hi, r.lo);
  return r;
}

}  // namespace

void horner_dd_avx2(const DD* coeffs, std::size_t n_coeffs, const double* x, std::size_t n, DD* out, double* mag) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x + i);
    const __m256d ax = vabs(xv);
    Lanes acc{_mm256_setzero_pd(), _mm256_setzero_pd()};
    __m256d m = _mm256_setzero_pd();
    for (std::size_t k = n_coeffs; k-- > 0;) {
      const __m256d chi = _mm256_set1_pd(coeffs[k].hi);
      const __m256d clo = _mm256_set1_pd(coeffs[k].lo);
      acc = add(mul_d(acc, xv), chi, clo);
      m = _mm256_add_pd(_mm256_mul_pd(m, ax), vabs(chi));
    }
    alignas(32) double hi[4];
    alignas(32) double lo[4];
    _mm256_store_pd(hi, acc.hi);
    _mm256_store_pd(lo, acc.lo);
    for (int l = 0; l < 4; ++l) out[i + static_cast<std::size_t>(l)] = DD(hi[l], lo[l]);
    if (mag != nullptr) _mm256_storeu_pd(mag + i, m);
  }
  if (i < n) horner_dd_scalar(coeffs, n_coeffs, x + i, n - i, out + i, mag != nullptr ? mag + i : nullptr);
}

void horner_comp_avx2(const double* coeffs, std::size_t n_coeffs, const double* x, std::size_t n, double* out,
                      double* mag) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x + i);
    const __m256d ax = vabs(xv);
    __m256d r = _mm256_setzero_pd();
    __m256d c = _mm256_setzero_pd();
    __m256d m = _mm256_setzero_pd();
    for (std::size_t k = n_coeffs; k-- > 0;) {
      const __m256d ck = _mm256_set1_pd(coeffs[k]);
      const __m256d p = _mm256_mul_pd(r, xv);
      const __m256d pi = _mm256_fmsub_pd(r, xv, p);
      __m256d sigma;
      two_sum(p, ck, r, sigma);
      c = _mm256_add_pd(_mm256_mul_pd(c, xv), _mm256_add_pd(pi, sigma));
      m = _mm256_add_pd(_mm256_mul_pd(m, ax), vabs(ck));
    }
    _mm256_storeu_pd(out + i, _mm256_add_pd(r, c));
    if (mag != nullptr) _mm256_storeu_pd(mag + i, m);
  }
  if (i < n) horner_comp_scalar(coeffs, n_coeffs, x + i, n - i, out + i, mag != nullptr ? mag + i : nullptr);
}

}  // namespace cmphi::kernels::detail
