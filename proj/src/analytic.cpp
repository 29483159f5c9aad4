#include "cmphi/analytic.hpp"

#include <cmath>
#include <algorithm>
#include <limits>
#include <string>

#include "cmphi/errors.hpp"
#include "cmphi/polynomials.hpp"

namespace cmphi {
namespace {

constexpr double kLargeZ = 2.0;  // |1/z| < 1/2 switches to the w-series

/// L(w) = Log(1+w)/w - 1 for |w| <= 1/2, by its power series.
cplx log1p_ratio_minus_one(cplx w) {
  cplx term = 1.0;
  cplx sum = 0.0;
  const double eps = std::numeric_limits<double>::epsilon() * 0.25;
  for (int k = 1; k < 200; ++k) {
    term *= -w;
    const cplx t = term / static_cast<double>(k + 1);
    sum += t;
    if (std::abs(t) <= eps * std::abs(sum)) break;
  }
  return sum;
}

void require_off_segment(cplx z, const char* who) {
  if (on_cut_segment(z)) {
    throw DomainError(std::string(who) + ": z on the singular segment [-1, 0]");
  }
}

}  // namespace

bool on_cut_segment(cplx z) noexcept { return z.imag() == 0.0 && z.real() >= -1.0 && z.real() <= 0.0; }

CutPlanePoint::CutPlanePoint(cplx z) : z_(z) { require_off_segment(z, "CutPlanePoint"); }

cplx expm1(cplx x) noexcept {
  const double re = x.real();
  const double im = x.imag();
  if (im == 0.0) return {std::expm1(re), 0.0};
  const double s = std::sin(0.5 * im);
  return {std::expm1(re) * std::cos(im) - 2.0 * s * s, std::exp(re) * std::sin(im)};
}

cplx h_alpha(cplx alpha, cplx z) {
  require_off_segment(z, "h_alpha");
  if (std::abs(z) > kLargeZ) return std::exp(alpha * (1.0 + log1p_ratio_minus_one(1.0 / z)));
  return std::exp(alpha * z * std::log(1.0 + 1.0 / z));
}

cplx f_alpha(cplx alpha, cplx z) {
  if (z == cplx(0.0, 0.0)) return std::exp(alpha) - 1.0;
  require_off_segment(z, "f_alpha");
  if (std::abs(z) > kLargeZ) return -std::exp(alpha) * expm1(alpha * log1p_ratio_minus_one(1.0 / z));
  return std::exp(alpha) - std::exp(alpha * z * std::log(1.0 + 1.0 / z));
}

cplx g_alpha(cplx alpha, cplx w) {
  if (!(std::abs(w) < 1.0)) throw DomainError("g_alpha: requires |w| < 1");
  if (w == cplx(0.0, 0.0)) return 0.0;
  if (std::abs(w) < 1.0 / kLargeZ) return -std::exp(alpha) * expm1(alpha * log1p_ratio_minus_one(w));
  return std::exp(alpha) - std::exp(alpha * std::log(1.0 + w) / w);
}

LaurentValue laurent_f(cplx alpha, cplx z, std::size_t n_terms) {
  const double mod_alpha = std::abs(alpha);
  const double hat = ratio_bound(mod_alpha);
  const double rz = std::abs(z);
  if (!(rz > std::max(1.0, hat))) throw DomainError("laurent_f: requires |z| > max(1, ratio bound)");

  const auto p = p_eval(alpha, n_terms + 1);
  const auto pabs = p_eval(mod_alpha, n_terms + 1);
  cplx sum = 0.0;
  cplx zpow = 1.0;
  for (std::size_t n = 1; n <= n_terms; ++n) {
    zpow /= z;
    const cplx term = p.values[n] * zpow;
    sum += (n % 2 == 1) ? term : -term;
  }
  LaurentValue out;
  out.n_terms = n_terms;
  out.value = std::exp(alpha) * sum;
  out.tail_bound = std::exp(mod_alpha) * pabs.values[n_terms + 1] /
                   (std::pow(rz, static_cast<double>(n_terms + 1)) * (1.0 - hat / rz));
  return out;
}

double im_boundary_probe(double alpha, double x, double r) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("im_boundary_probe: x must lie in (0, 1)");
  if (!(r > 0.0)) throw DomainError("im_boundary_probe: r must be > 0");
  return f_alpha(alpha, cplx(-x, r)).imag();
}

}  // namespace cmphi
