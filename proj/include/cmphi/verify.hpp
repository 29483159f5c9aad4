#pragma once

// Identity checks that tie the evaluators together: the Laplace transform of
// phi against f_alpha, the total mass of phi against e^alpha - 1, and a
// complete-monotonicity verdict from the zero scan.

#include <string>
#include <vector>

#include "cmphi/roots.hpp"
#include "cmphi/series.hpp"

namespace cmphi {

struct CheckResult {
  std::string name;
  cplx measured;
  cplx expected;
  double tolerance = 0.0;
  bool passed = false;  // componentwise |measured - expected| <= tolerance
  double runtime_ms = 0.0;
  double est_error = 0.0;  // quadrature estimate plus any tail contribution, reported not used
  std::string note;
};

CheckResult make_check(std::string name, cplx measured, cplx expected, double tolerance);

/// int_0^s_cut e^{-sx} phi_alpha(s) ds against f_alpha(x). s_cut = 0 picks
/// 40/x + 40; the remainder is bounded by max|phi| on the last panel times
/// e^{-s_cut x}/x and reported in est_error.
CheckResult laplace_identity(double alpha, double x, double s_cut = 0.0, double tol = 1e-7);

/// int_0^inf phi_alpha = e^alpha - 1 for 0 < alpha <= 2.3. The head [0, 50]
/// uses phi values; the tail beyond 50 comes from the integral
/// representation (density for alpha <= 1, decomposition above).
CheckResult mass_identity(double alpha, double tol = 1e-6);

enum class CmVerdict { completely_monotonic, not_cm, boundary };
const char* verdict_name(CmVerdict v);

struct CmClassification {
  CmVerdict verdict = CmVerdict::completely_monotonic;
  double min_s = 0.0;      // where phi~ is smallest on the scan grid, or the touch point
  double min_value = 0.0;  // phi~ there
  ZeroReport zeros;
};

CmClassification cm_classify(double alpha, double s_max = 50.0, double grid_step = 0.0);

/// The fixed suite run by `cmphi verify`.
std::vector<CheckResult> default_suite();

}  // namespace cmphi
