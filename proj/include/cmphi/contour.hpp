#pragma once

// phi_alpha(s) from contour integrals of f_alpha(z) e^{sz}:
//
//   rectangle      (1/2 pi i) int_C f_alpha(z) e^{sz} dz, C the positively
//                  oriented rectangle with corners -c +- ir, +- ir (c > 1);
//   decomposition  for alpha > 1,
//                  phi = (1/pi) int_0^{1/alpha} u(x) e^{-sx} dx - Phi(alpha, s),
//                  u(x) = (x/(1-x))^{alpha x} sin(alpha pi x), and Phi the
//                  integral of h_alpha(z) e^{sz}/(2 pi i) over the circle
//                  |z + 1| = 1 - 1/alpha.
//
// The circle passes through -1/alpha, inside the cut of Log(1 + 1/z), where
// h_alpha jumps. The upper half of the circle uses the limit from above, the
// lower half the limit from below; in the angle parametrization the jump sits
// at theta = 0 = 2 pi, so the integral is taken over the open interval
// (0, 2 pi) with Gauss-Legendre panels instead of a periodic rule.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "cmphi/quadrature.hpp"
#include "cmphi/series.hpp"

namespace cmphi {

struct ContourSpec {
  enum class Kind { rectangle, circle };
  Kind kind = Kind::rectangle;
  double r = 1.0;       // rectangle half-height
  double c = 2.0;       // rectangle left edge at -c
  double radius = 0.5;  // circle about -1

  static ContourSpec rectangle(double r = 1.0, double c = 2.0);
  /// The circle of radius 1 - 1/alpha; DomainError unless alpha > 1.
  static ContourSpec circle_for(double alpha);

  /// Throws std::invalid_argument for r <= 0, c <= 1 or radius outside (0, 1).
  void validate() const;
};

struct ContourOptions {
  double tol = 1e-12;
  std::size_t order = 32;
  int max_doublings = 6;  // panel doublings allowed beyond the default budget
  unsigned ds_order = 0;  // k > 0 gives the k-th s-derivative (integrand times z^k)
};

/// Rectangle contour. Error bound is the a posteriori quadrature estimate.
PhiValue phi_rect(cplx alpha, cplx s, const ContourSpec& spec = ContourSpec::rectangle(),
                  const ContourOptions& opts = {});

/// Rectangle rule at many real s with shared integrand values; panel
/// counts are sized for max |s|. No refinement loop: the estimate per point
/// is the coarse/fine difference.
struct ContourGrid {
  std::vector<cplx> values;
  std::vector<double> error_estimate;
  std::size_t n_nodes = 0;
};
ContourGrid phi_rect_grid(cplx alpha, std::span<const double> s, const ContourSpec& spec = ContourSpec::rectangle(),
                       const ContourOptions& opts = {});

/// (1/2 pi i) over |z - center| = radius (positive orientation) of g(z),
/// Gauss-Legendre in theta on (0, 2 pi) with n_nodes ~ panels * order, plus
/// panels graded geometrically toward theta = 0 and 2 pi.
QuadResult circle_integral(const std::function<cplx(cplx)>& g, cplx center, double radius, std::size_t n_nodes,
                           std::size_t order = 32);

/// Default node budget max(256, 16 (1 + |s|)), rounded to whole panels.
std::size_t circle_nodes(cplx s);

/// Phi(alpha, s) for real alpha > 1. n_nodes = 0 picks circle_nodes(s).
QuadResult phi_circle_term(double alpha, cplx s, std::size_t n_nodes = 0);

/// (1/pi) int_0^{1/alpha} x^k u(x) e^{-sx} dx = (-1)^k d^k/ds^k of the
/// completely monotone part; positive for real s and alpha > 1.
QuadResult cm_part(double alpha, cplx s, unsigned k = 0, double tol = 1e-13);

/// Completely monotone part minus Phi. alpha > 1.
PhiValue phi_decomposed(double alpha, cplx s, double tol = 1e-11);

/// Decomposition at many real s with shared nodes: graded Gauss-Legendre on
/// (0, 1/alpha) for the completely monotone part and the circle rule sized for
/// max |s|. k > 0 gives the k-th s-derivative. alpha > 1.
ContourGrid phi_decomposed_grid(double alpha, std::span<const double> s, unsigned k = 0);

/// Series in double-double when cancellation leaves the requested accuracy
/// intact, otherwise the rectangle contour.
PhiValue phi_auto(cplx alpha, cplx s, double tol = 1e-12);

}  // namespace cmphi
