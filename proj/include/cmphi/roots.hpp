#pragma once

// Positive zeros of phi_alpha, the double zero (alpha*, s*), and the limit
// objects the zeros tend to: J_1 zeros for alpha -> inf and the points
// xi_k with 1 + xi = e^xi for alpha -> 0.

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "cmphi/double_double.hpp"
#include "cmphi/series.hpp"

namespace cmphi {

struct Zero {
  double s = 0.0;
  int multiplicity = 1;
  double residual = 0.0;            // |phi_alpha(s)|
  double derivative_at_zero = 0.0;  // phi_alpha'(s)
};

struct ZeroReport {
  double alpha = 0.0;
  std::vector<Zero> zeros;
  std::pair<double, double> scan_range{0.0, 0.0};  // (0, s_max]
  double grid_step = 0.0;                           // final step after any halvings
  int halvings = 0;
  double series_limit = 0.0;  // series used on (0, series_limit], contour beyond

  [[nodiscard]] std::size_t count() const { return zeros.size(); }
};

struct ZeroScanOptions {
  double s_max = 50.0;
  double grid_step = 0.0;            // 0: min(0.25, 1/(2 alpha))
  double double_zero_threshold = 1e-8;  // relative to the neighbouring grid values
  int max_halvings = 10;
};

/// Sign-change scan on a grid, bracketing refinement, and polishing of local
/// extrema of |phi| so that close pairs and double zeros are not missed.
/// Throws ToleranceError if extrema stay unresolved after max_halvings.
ZeroReport positive_zeros(double alpha, const ZeroScanOptions& opts = {});

/// phi~_alpha(s) = e^{-alpha} phi_alpha(s) and its s-derivatives at real
/// points, from the series where its cancellation is harmless; elsewhere
/// from the decomposition (alpha > 1) or the rectangle contour.
class TildeField {
 public:
  explicit TildeField(double alpha, double s_max = 50.0);
  [[nodiscard]] double alpha() const { return alpha_; }
  /// Largest s at which the double-double series is used.
  [[nodiscard]] double series_limit() const { return s_cut_; }
  [[nodiscard]] double value(double s, unsigned k = 0) const;
  [[nodiscard]] std::vector<double> grid(const std::vector<double>& s) const;

 private:
  double alpha_;
  double s_cut_;
};

enum class SolveMode { double_precision, double_double };

struct CriticalPoint {
  DD alpha_star;
  DD s_star;
  double residual_value = 0.0;  // |phi(alpha*, s*)|
  double residual_ds = 0.0;     // |phi'(alpha*, s*)|
  int iterations = 0;
  bool converged = false;
  SolveMode mode = SolveMode::double_precision;
};

/// Newton on F(a, s) = (phi~, d phi~/ds). In double_precision mode the
/// iterate and Jacobian are doubles and the residual is evaluated in
/// double-double (plain double leaves ~1e-11 on alpha from the series'
/// cancellation); double_double mode is double-double throughout.
CriticalPoint alpha_star(SolveMode mode = SolveMode::double_precision, std::pair<double, double> seed = {2.3, 5.3},
                         int max_iterations = 50);

/// First k_max positive zeros of J_1 (k_max <= 20), by bracketing on the
/// power series evaluated in 256-bit floating point.
std::vector<double> bessel_j1_zeros(std::size_t k_max);

/// J_1 from its power series in 256-bit arithmetic.
double bessel_j1(double x);

struct LambertPoint {
  cplx value;
  double residual = 0.0;  // |1 + xi - e^xi|
  int iterations = 0;
  bool converged = false;
};

/// xi_k, k not in {-1, 0}: Newton on 1 + s - e^s from ln(2 pi k) - i(2 pi k + pi/2)
/// for k >= 1; xi_{-k-1} = conj(xi_k).
LambertPoint lambert_xi(int k);

/// alpha * s_k(alpha). Throws ToleranceError if fewer than k zeros are found
/// in the scan window sized from j_{k+1}^2 / (2 alpha).
double scaled_zero_check(double alpha, std::size_t k);

}  // namespace cmphi
