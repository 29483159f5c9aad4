#pragma once

// Complex evaluation of
//   h_a(z) = (1 + 1/z)^{a z} := exp(a z Log(1 + 1/z)),   f_a(z) = e^a - h_a(z),
// on C \ [-1, 0], where the principal-branch formula is the holomorphic
// extension of f_a beyond the cut plane.
//
// For |z| > 2 the exponent is rewritten with w = 1/z as
//   a z Log(1 + 1/z) = a (1 + L(w)),   L(w) = Log(1+w)/w - 1 = sum_{k>=1} (-w)^k/(k+1),
// and f = -e^a expm1(a L(w)). This keeps full relative accuracy in f, which
// decays like (a/2) e^a / z.

#include <complex>
#include <cstddef>

namespace cmphi {

using cplx = std::complex<double>;

/// True when z lies on the closed segment [-1, 0] of the real axis.
bool on_cut_segment(cplx z) noexcept;

/// A point of C \ [-1, 0]. Construction validates.
class CutPlanePoint {
 public:
  explicit CutPlanePoint(cplx z);
  [[nodiscard]] cplx value() const noexcept { return z_; }

 private:
  cplx z_;
};

/// Principal-branch h_alpha; DomainError on [-1, 0].
cplx h_alpha(cplx alpha, cplx z);

/// f_alpha = e^alpha - h_alpha. z = 0 returns the continuous limit
/// e^alpha - 1; the rest of [-1, 0] is a DomainError.
cplx f_alpha(cplx alpha, cplx z);
inline cplx f_alpha(cplx alpha, CutPlanePoint z) { return f_alpha(alpha, z.value()); }

/// g_alpha(w) = e^alpha - exp(alpha Log(1+w)/w) on the unit disk, g(0) = 0.
/// f_alpha(z) = g_alpha(1/z) for |z| > 1. DomainError for |w| >= 1.
cplx g_alpha(cplx alpha, cplx w);

/// expm1 for complex arguments, accurate near 0.
cplx expm1(cplx x) noexcept;

struct LaurentValue {
  cplx value;
  double tail_bound = 0.0;  // e^{|a|} p_{N+1}(|a|) / (|z|^{N+1} (1 - a^/|z|))
  std::size_t n_terms = 0;
};

/// Partial Laurent sum e^a sum_{n=1..N} (-1)^{n-1} p_n(a) / z^n.
/// Requires |z| > max(1, ratio_bound(|a|)).
LaurentValue laurent_f(cplx alpha, cplx z, std::size_t n_terms);

/// Im f_alpha(-x + i r). As r -> 0+ this tends to
/// -(x/(1-x))^{alpha x} sin(alpha pi x), positive when 1 < alpha x < 2, which
/// a Stieltjes function cannot produce.
double im_boundary_probe(double alpha, double x, double r);

}  // namespace cmphi
