#include "cmphi/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>

#include "cmphi/analytic.hpp"
#include "cmphi/contour.hpp"
#include "cmphi/errors.hpp"
#include "cmphi/quadrature.hpp"
#include "cmphi/stieltjes.hpp"

namespace cmphi {
namespace {

constexpr double kPi = 3.141592653589793;
constexpr double kAlphaStar = 2.2996564432534613;  // nearest double

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Gauss-Legendre nodes for panels and for every panel split in half, so one
// batch of phi~ values gives both the value and the estimate.
struct PanelNodes {
  std::vector<double> s_coarse, w_coarse, s_fine, w_fine;
};

PanelNodes panel_nodes(const std::vector<double>& breaks, std::size_t order) {
  const GaussRule& rule = gauss_rule(order);
  PanelNodes p;
  auto add = [&](std::vector<double>& s, std::vector<double>& w, double a, double b) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      s.push_back(mid + half * rule.nodes[i]);
      w.push_back(half * rule.weights[i]);
    }
  };
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double m = 0.5 * (breaks[i] + breaks[i + 1]);
    add(p.s_coarse, p.w_coarse, breaks[i], breaks[i + 1]);
    add(p.s_fine, p.w_fine, breaks[i], m);
    add(p.s_fine, p.w_fine, m, breaks[i + 1]);
  }
  return p;
}

std::vector<double> unit_breaks(double end) {
  const auto n = static_cast<std::size_t>(std::ceil(end));
  std::vector<double> br(n + 1);
  for (std::size_t i = 0; i <= n; ++i) br[i] = end * static_cast<double>(i) / static_cast<double>(n);
  return br;
}

struct HeadIntegral {
  double value = 0.0;
  double estimate = 0.0;
  double last_panel_max = 0.0;  // max |phi| over the last panel's nodes
};

// int_0^end weight(s) phi_alpha(s) ds from phi~ on panel nodes.
HeadIntegral head_integral(double alpha, double end, const std::function<double(double)>& weight) {
  const TildeField field(alpha, end);
  const PanelNodes p = panel_nodes(unit_breaks(end), 32);
  const auto vc = field.grid(p.s_coarse);
  const auto vf = field.grid(p.s_fine);
  const double scale = std::exp(alpha);
  HeadIntegral h;
  double coarse = 0.0, fine = 0.0;
  for (std::size_t i = 0; i < vc.size(); ++i) coarse += p.w_coarse[i] * weight(p.s_coarse[i]) * vc[i];
  for (std::size_t i = 0; i < vf.size(); ++i) fine += p.w_fine[i] * weight(p.s_fine[i]) * vf[i];
  h.value = fine * scale;
  h.estimate = std::fabs(fine - coarse) * scale;
  for (std::size_t i = vf.size() - 64; i < vf.size(); ++i) h.last_panel_max = std::max(h.last_panel_max, std::fabs(vf[i]) * scale);
  return h;
}

// int_S^inf phi_alpha from the integral representations.
QuadResult mass_tail(double alpha, double S) {
  if (alpha <= 1.0) {
    QuadResult q = density_integral(alpha, [S](double x) { return cplx(std::exp(-S * x) / x); }, 1e-15);
    if (alpha == 1.0) q.value += std::exp(-S);
    return q;
  }
  TanhSinhOptions o;
  o.tol = 1e-15;
  // x = t/alpha; u/x stays bounded at 0.
  QuadResult cm = tanh_sinh(
      [&](double t, double tc) {
        const double x = t / alpha;
        const double u = std::exp(alpha * x * (std::log(x) - std::log1p(-x))) * std::sin(kPi * std::min(t, tc));
        return u * std::exp(-S * x) / (x * kPi * alpha);
      },
      o);
  // int_S^inf e^{sz} ds = -e^{Sz}/z on the circle, where Re z < 0.
  const QuadResult circ = circle_integral([&](cplx z) { return -h_alpha(alpha, z) * std::exp(S * z) / z; },
                                          cplx(-1.0, 0.0), ContourSpec::circle_for(alpha).radius, 2 * circle_nodes(S));
  cm.value -= circ.value;
  cm.est_error += circ.est_error;
  return cm;
}

template <class F>
CheckResult timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r = f();
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

CheckResult make_check(std::string name, cplx measured, cplx expected, double tolerance) {
  CheckResult r;
  r.name = std::move(name);
  r.measured = measured;
  r.expected = expected;
  r.tolerance = tolerance;
  r.passed = std::fabs(measured.real() - expected.real()) <= tolerance &&
             std::fabs(measured.imag() - expected.imag()) <= tolerance;
  return r;
}

CheckResult laplace_identity(double alpha, double x, double s_cut, double tol) {
  if (!(x > 0.0)) throw DomainError("laplace_identity: requires x > 0");
  if (s_cut <= 0.0) s_cut = 40.0 / x + 40.0;
  return timed([&] {
    const HeadIntegral h = head_integral(alpha, s_cut, [x](double s) { return std::exp(-s * x); });
    const double tail = h.last_panel_max * std::exp(-s_cut * x) / x;
    CheckResult r = make_check("laplace[alpha=" + fmt(alpha) + ",x=" + fmt(x) + "]", h.value,
                               f_alpha(alpha, x), tol);
    r.est_error = h.estimate + tail;
    r.note = "tail beyond s=" + fmt(s_cut) + " bounded by " + fmt(tail);
    return r;
  });
}

CheckResult mass_identity(double alpha, double tol) {
  if (!(alpha > 0.0 && alpha <= kAlphaStar)) throw DomainError("mass_identity: requires 0 < alpha <= alpha*");
  return timed([&] {
    constexpr double kHead = 50.0;
    const HeadIntegral h = head_integral(alpha, kHead, [](double) { return 1.0; });
    const QuadResult tail = mass_tail(alpha, kHead);
    CheckResult r =
        make_check("mass[alpha=" + fmt(alpha) + "]", h.value + tail.value.real(), std::expm1(alpha), tol);
    r.est_error = h.estimate + tail.est_error;
    r.note = "tail beyond s=50 from the integral representation: " + fmt(tail.value.real());
    return r;
  });
}

const char* verdict_name(CmVerdict v) {
  switch (v) {
    case CmVerdict::completely_monotonic:
      return "completely_monotonic";
    case CmVerdict::not_cm:
      return "not_cm";
    case CmVerdict::boundary:
      return "boundary";
  }
  return "?";
}

CmClassification cm_classify(double alpha, double s_max, double grid_step) {
  ZeroScanOptions o;
  o.s_max = s_max;
  o.grid_step = grid_step;
  CmClassification c;
  c.zeros = positive_zeros(alpha, o);
  const TildeField field(alpha, s_max);
  for (const auto& z : c.zeros.zeros) {
    if (z.multiplicity == 2) {
      c.verdict = CmVerdict::boundary;
      c.min_s = z.s;
      c.min_value = field.value(z.s);
      return c;
    }
  }
  std::vector<double> s;
  for (double v = 0.0; v < s_max; v += c.zeros.grid_step) s.push_back(v);
  s.push_back(s_max);
  const auto v = field.grid(s);
  const auto it = std::min_element(v.begin(), v.end());
  c.min_s = s[static_cast<std::size_t>(it - v.begin())];
  c.min_value = *it;
  c.verdict = c.zeros.count() == 0 && *it > 0.0 ? CmVerdict::completely_monotonic : CmVerdict::not_cm;
  return c;
}

std::vector<CheckResult> default_suite() {
  std::vector<CheckResult> out;
  const double e = std::exp(1.0);
  const SeriesOptions dd{Precision::extended, 0};

  out.push_back(timed([&] { return make_check("phi_anchor[alpha=1,s=0]", phi(1.0, 0.0).value, e / 2, 1e-14); }));
  out.push_back(timed([&] {
    return make_check("rectangle_vs_series[alpha=2.3,s=5]", phi_rect(2.3, 5.0).value * std::exp(-2.3),
                      phi(2.3, 5.0, 1e-30, dd).value * std::exp(-2.3), 1e-8);
  }));
  out.push_back(timed([&] {
    return make_check("decomposition_vs_series[alpha=5,s=1]", phi_decomposed(5.0, 1.0).value * std::exp(-5.0),
                      phi(5.0, 1.0, 1e-30, dd).value * std::exp(-5.0), 1e-8);
  }));
  out.push_back(timed([&] {
    return make_check("stieltjes_vs_series[alpha=0.5,s=1]", phi_stieltjes(0.5, 1.0).value,
                      phi(0.5, 1.0, 1e-30, dd).value, 1e-10);
  }));

  out.push_back(laplace_identity(1.0, 1.0, 0.0, 1e-8));
  out.push_back(laplace_identity(2.3, 0.5, 0.0, 1e-7));
  out.push_back(laplace_identity(0.5, 3.0, 0.0, 1e-9));

  out.push_back(mass_identity(1.0, 1e-7));
  out.push_back(mass_identity(0.5, 1e-8));
  out.push_back(mass_identity(2.29, 1e-6));

  out.push_back(timed([&] {
    return make_check("density_integral[alpha=1]",
                      density_integral(1.0, [](double) { return cplx(1.0); }).value, e / 2 - 1, 1e-10);
  }));
  for (double a : {0.25, 0.5, 0.75}) {
    out.push_back(timed([&] {
      return make_check("density_integral[alpha=" + fmt(a) + "]",
                        density_integral(a, [](double) { return cplx(1.0); }).value, a / 2 * std::exp(a), 1e-10);
    }));
  }
  out.push_back(timed([&] { return make_check("moment[alpha=0.5,n=0]", moment(0.5, 0), 0.25, 1e-10); }));
  out.push_back(timed([&] { return make_check("moment[alpha=0.5,n=-1]", moment(0.5, -1), -std::expm1(-0.5), 1e-10); }));

  out.push_back(timed([&] {
    const auto c = alpha_star(SolveMode::double_precision);
    CheckResult r = make_check("alpha_star[double]", to_double(c.alpha_star), 2.2996564432534613, 1e-12);
    r.note = "s* = " + to_string(c.s_star, 17);
    return r;
  }));
  const std::pair<double, int> counts[] = {{1.0, 0}, {2.29, 0}, {2.31, 2}, {3.0, 2}, {5.9, 2}, {6.1, 4}};
  for (const auto& [a, n] : counts) {
    out.push_back(timed([&] {
      return make_check("zero_count[alpha=" + fmt(a) + "]", static_cast<double>(positive_zeros(a).count()), n, 0.0);
    }));
  }
  const std::pair<double, CmVerdict> verdicts[] = {
      {1.0, CmVerdict::completely_monotonic}, {3.0, CmVerdict::not_cm}, {kAlphaStar, CmVerdict::boundary}};
  for (const auto& [a, v] : verdicts) {
    out.push_back(timed([&] {
      const auto c = cm_classify(a);
      CheckResult r = make_check("cm_classify[alpha=" + fmt(a) + ",expect=" + verdict_name(v) + "]",
                                 c.verdict == v ? 1.0 : 0.0, 1.0, 0.0);
      r.note = std::string(verdict_name(c.verdict)) + " at s=" + fmt(c.min_s);
      return r;
    }));
  }
  out.push_back(timed([&] {
    return make_check("hankel_positive[alpha=0.5,m=4]", hankel_psd_check(0.5, 4).positive() ? 1.0 : 0.0, 1.0, 0.0);
  }));
  out.push_back(timed([&] {
    return make_check("hankel_negative[alpha=2.5,m=6]", hankel_psd_check(2.5, 6).positive() ? 0.0 : 1.0, 1.0, 0.0);
  }));
  out.push_back(timed([&] {
    const auto x = lambert_xi(1);
    return make_check("lambert_residual[k=1]", x.residual, 0.0, 1e-12);
  }));
  out.push_back(timed([&] {
    return make_check("bessel_j1_zero[k=1]", bessel_j1_zeros(1)[0], 3.8317059702075123, 1e-12);
  }));
  return out;
}

}  // namespace cmphi
