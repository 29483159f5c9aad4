#pragma once

// Integral representations for 0 < alpha <= 1 with the density
//
//   u(alpha, x) = (x/(1-x))^{alpha x} sin(alpha pi x),   0 < x < 1,
//
//   phi_alpha(s) = (1/pi) int_0^1 u e^{-sx} dx            (0 < alpha < 1)
//   phi_1(s)     = e^{-s} + (1/pi) int_0^1 u e^{-sx} dx   (unit atom at x = 1)
//
// and the matching Stieltjes transform of f_alpha and Hausdorff moments of
// (p_{n+1}(alpha)).
//
// Near x = 1, u behaves like t^{-alpha} G(t) with t = 1 - x; for alpha close
// to 1 this is barely integrable. Every integral subtracts the leading
// t^{-alpha} G(0) and adds its exact integral G(0)/(1 - alpha) back.

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "cmphi/analytic.hpp"
#include "cmphi/quadrature.hpp"
#include "cmphi/series.hpp"

namespace cmphi {

/// u(alpha, x) for 0 < alpha <= 1, 0 < x < 1 (DomainError otherwise).
double density(double alpha, double x);

/// (1/pi) int_0^1 u(alpha, x) w(x) dx for 0 < alpha <= 1, without any atom.
/// w must be finite and smooth on [0, 1].
QuadResult density_integral(double alpha, const std::function<cplx(double)>& w, double tol = 1e-13);

PhiValue phi_stieltjes(double alpha, cplx s, double tol = 1e-13);

/// f_alpha(z) = (1/pi) int u/(x+z) dx, plus 1/(z+1) at alpha = 1.
cplx f_stieltjes(double alpha, CutPlanePoint z, double tol = 1e-13);

/// n >= 0: (e^{-alpha}/pi) int u x^n dx (+ e^{-1} at alpha = 1), equal to p_{n+1}(alpha).
/// n = -1: the same with x^{-1}, equal to 1 - e^{-alpha}, not p_0 = 1.
double moment(double alpha, int n, double tol = 1e-13);

struct HankelReport {
  double alpha = 0.0;
  std::size_t m = 0;
  double tol = 0.0;             // absolute eigenvalue tolerance used
  double max_entry = 0.0;
  double min_eig_h0 = 0.0;      // [p_{i+j+1}]
  double min_eig_h1 = 0.0;      // [p_{i+j+2}]
  double min_difference = 0.0;  // min_n p_{n+1} - p_{n+2}, n <= 2m
  bool h0_psd = false;
  bool h1_psd = false;
  bool hausdorff_ok = false;

  [[nodiscard]] bool positive() const { return h0_psd && h1_psd && hausdorff_ok; }
};

/// Hankel positivity of the moment candidates p_{n+1}(alpha), m <= 8.
/// rel_tol scales with the largest matrix entry.
HankelReport hankel_psd_check(double alpha, std::size_t m, double rel_tol = 1e-10);

}  // namespace cmphi
