#pragma once

// Integration rules shared by the contour and Stieltjes code.
//
// Every rule returns an a posteriori error estimate: the difference between
// the two finest refinement levels. These are estimates, not enclosures.

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "cmphi/errors.hpp"

namespace cmphi {

struct QuadResult {
  std::complex<double> value;
  double est_error = 0.0;
  std::size_t nodes_used = 0;

  QuadResult& operator+=(const QuadResult& o) {
    value += o.value;
    est_error += o.est_error;
    nodes_used += o.nodes_used;
    return *this;
  }
};

/// Gauss-Legendre nodes and weights on [-1, 1], computed once per order
/// (Newton on the Legendre recurrence) and cached. Orders 1..128.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_rule(std::size_t order);

namespace detail {

inline std::complex<double> as_complex(double v) { return {v, 0.0}; }
inline std::complex<double> as_complex(std::complex<double> v) { return v; }

inline void check_finite(std::complex<double> v, double x, const char* rule) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw QuadratureError(std::string(rule) + ": non-finite integrand at x = " + std::to_string(x));
  }
}

template <class F>
std::complex<double> gauss_panel(F& f, const GaussRule& rule, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = mid + half * rule.nodes[i];
    const auto v = as_complex(f(x));
    check_finite(v, x, "gauss_legendre");
    sum += rule.weights[i] * v;
  }
  return half * sum;
}

}  // namespace detail

/// Composite Gauss-Legendre over the panels [breaks[i], breaks[i+1]]. The
/// estimate compares against every panel split in half; the finer value is
/// returned.
template <class F>
QuadResult gauss_legendre_panels(F&& f, std::span<const double> breaks, std::size_t order) {
  if (breaks.size() < 2) throw std::invalid_argument("gauss_legendre: need at least one panel");
  const GaussRule& rule = gauss_rule(order);
  std::complex<double> coarse = 0.0, fine = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i], b = breaks[i + 1];
    const double m = 0.5 * (a + b);
    coarse += detail::gauss_panel(f, rule, a, b);
    fine += detail::gauss_panel(f, rule, a, m) + detail::gauss_panel(f, rule, m, b);
  }
  return {fine, std::abs(fine - coarse), 3 * order * (breaks.size() - 1)};
}

/// Composite Gauss-Legendre with `panels` equal panels; order in [8, 64].
template <class F>
QuadResult gauss_legendre(F&& f, double a, double b, std::size_t panels, std::size_t order) {
  if (order < 8 || order > 64) throw std::invalid_argument("gauss_legendre: order must be in [8, 64]");
  if (panels == 0) throw std::invalid_argument("gauss_legendre: panels must be positive");
  std::vector<double> breaks(panels + 1);
  for (std::size_t i = 0; i <= panels; ++i) breaks[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(panels);
  breaks.back() = b;
  return gauss_legendre_panels(f, std::span<const double>(breaks), order);
}

struct TanhSinhOptions {
  double tol = 1e-12;
  int max_level = 12;
};

/// Double-exponential rule on (0, 1). The integrand is called as f(x, 1 - x)
/// with the complement computed without cancellation, so endpoint
/// singularities at 1 can be evaluated from the small distance directly.
/// Throws ToleranceError if the level cap is reached first.
template <class F>
QuadResult tanh_sinh(F&& f, const TanhSinhOptions& opts = {}) {
  constexpr double kHalfPi = 1.5707963267948966;
  // |u| <= 350 keeps both x and 1 - x above the double underflow threshold.
  const double t_max = std::asinh(350.0 / kHalfPi);
  std::size_t nodes = 0;

  auto node = [&](double t) -> std::complex<double> {
    const double u = kHalfPi * std::sinh(t);
    const double x = 1.0 / (1.0 + std::exp(-2.0 * u));
    const double xc = 1.0 / (1.0 + std::exp(2.0 * u));
    const double ch = std::cosh(u);
    const double w = 0.5 * kHalfPi * std::cosh(t) / (ch * ch);
    if (x <= 0.0 || xc <= 0.0 || w == 0.0) return 0.0;
    ++nodes;
    const auto v = detail::as_complex(f(x, xc));
    detail::check_finite(v, x, "tanh_sinh");
    return w * v;
  };

  // Level 0: step 1.
  std::complex<double> sum = node(0.0);
  for (double t = 1.0; t <= t_max; t += 1.0) sum += node(t) + node(-t);
  double h = 1.0;
  std::complex<double> prev = h * sum;
  double est = std::abs(prev);
  for (int level = 1; level <= opts.max_level; ++level) {
    h *= 0.5;
    for (double t = h; t <= t_max; t += 2.0 * h) sum += node(t) + node(-t);
    const std::complex<double> cur = h * sum;
    est = std::abs(cur - prev);
    prev = cur;
    if (level >= 3 && est <= opts.tol) return {cur, est, nodes};
  }
  throw ToleranceError("tanh_sinh: estimate " + std::to_string(est) + " above tolerance " + std::to_string(opts.tol) +
                       " after level " + std::to_string(opts.max_level));
}

/// Trapezoid rule on [0, 2 pi) with n equispaced nodes, compared with 2n.
template <class F>
QuadResult periodic_trapezoid(F&& f, std::size_t n) {
  if (n == 0) throw std::invalid_argument("periodic_trapezoid: n must be positive");
  constexpr double kTwoPi = 6.283185307179586;
  auto rule = [&](std::size_t m, std::size_t stride, std::size_t first) {
    std::complex<double> s = 0.0;
    for (std::size_t j = first; j < m; j += stride) {
      const double th = kTwoPi * static_cast<double>(j) / static_cast<double>(m);
      const auto v = detail::as_complex(f(th));
      detail::check_finite(v, th, "periodic_trapezoid");
      s += v;
    }
    return s;
  };
  const std::complex<double> even = rule(2 * n, 2, 0);
  const std::complex<double> odd = rule(2 * n, 2, 1);
  const std::complex<double> coarse = kTwoPi * even / static_cast<double>(n);
  const std::complex<double> fine = kTwoPi * (even + odd) / static_cast<double>(2 * n);
  return {fine, std::abs(fine - coarse), 2 * n};
}

}  // namespace cmphi
