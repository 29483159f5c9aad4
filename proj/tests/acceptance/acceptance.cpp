// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cmphi/contour.hpp"
#include "cmphi/double_double.hpp"
#include "cmphi/exact.hpp"
#include "cmphi/polynomials.hpp"
#include "cmphi/roots.hpp"
#include "cmphi/series.hpp"
#include "cmphi/stieltjes.hpp"
#include "cmphi/verify.hpp"

using namespace cmphi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void note(const std::string& what) {
    if (pass) detail += (detail.empty() ? "" : "; ") + what;
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double dd_abs_diff(const DD& a, const DD& b) {
  const DD d = a - b;
  return std::fabs(d.hi + d.lo);
}

// Criteria 1 and 2 share one pair of solves.
struct StarRun {
  CriticalPoint dbl, ext;
  double seconds = 0.0;
};

const StarRun& star_run() {
  static const StarRun run = [] {
    StarRun r;
    const auto t0 = std::chrono::steady_clock::now();
    r.dbl = alpha_star(SolveMode::double_precision);
    r.ext = alpha_star(SolveMode::double_double);
    r.seconds = seconds_since(t0);
    return r;
  }();
  return run;
}

Outcome c1_alpha_star() {
  Outcome o;
  const auto& r = star_run();
  const DD ref20 = dd_from_string("2.29965644325346130332");
  const double e_dbl = std::fabs(r.dbl.alpha_star.hi - 2.2996564432534);
  const double e_ext = dd_abs_diff(r.ext.alpha_star, ref20);
  o.require(r.dbl.converged && r.ext.converged, "solver did not converge");
  o.require(e_dbl <= 1e-12, "double alpha* off by " + fmt("%.3g", e_dbl));
  o.require(e_ext <= 1e-17, "double-double alpha* off by " + fmt("%.3g", e_ext));
  o.require(r.seconds < 10.0, "runtime " + fmt("%.3f", r.seconds) + " s");
  o.note("double " + to_string(r.dbl.alpha_star, 17) + ", dd " + to_string(r.ext.alpha_star, 24) + ", " +
         fmt("%.3f", r.seconds) + " s");
  return o;
}

Outcome c2_s_star() {
  Outcome o;
  const auto& r = star_run();
  const double ref = 5.270048752276;
  const double e_ext = std::fabs((r.ext.s_star.hi - ref) + r.ext.s_star.lo);
  const double e_dbl = std::fabs(r.dbl.s_star.hi - ref);
  o.require(e_ext <= 1e-11, "double-double s* off by " + fmt("%.3g", e_ext));
  o.require(e_dbl <= 1e-9, "double s* off by " + fmt("%.3g", e_dbl));
  o.note("dd " + to_string(r.ext.s_star, 20) + ", double " + to_string(r.dbl.s_star, 17));
  return o;
}

Outcome c3_cross_methods() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (double a : {0.5, 1.0, 2.3, 5.0}) {
    const double scale = std::exp(-a);
    for (double s : {0.0, 1.0, 5.0, 20.0}) {
      std::vector<std::pair<const char*, double>> v;
      v.emplace_back("series", scale * phi(a, s, 1e-12 / scale, {Precision::extended, 0}).real());
      ContourOptions copt;
      copt.tol = 1e-10 / scale;
      v.emplace_back("rectangle", scale * phi_rect(a, s, ContourSpec::rectangle(), copt).real());
      if (a <= 1.0) v.emplace_back("stieltjes", scale * phi_stieltjes(a, s).real());
      if (a > 1.0) v.emplace_back("decomposition", scale * phi_decomposed(a, s, 1e-10 / scale).real());
      for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
          const double d = std::fabs(v[i].second - v[j].second);
          worst = std::max(worst, d);
          o.require(d <= 1e-8, std::string(v[i].first) + " vs " + v[j].first + " at alpha=" + fmt("%g", a) +
                                   ", s=" + fmt("%g", s) + ": " + fmt("%.3g", d));
        }
    }
  }
  const double t = seconds_since(t0);
  o.require(t < 60.0, "runtime " + fmt("%.1f", t) + " s");
  o.note("max pair difference " + fmt("%.3g", worst) + ", " + fmt("%.2f", t) + " s");
  return o;
}

Outcome c4_laplace() {
  Outcome o;
  for (const auto& [a, x] : {std::pair{0.5, 3.0}, std::pair{1.0, 1.0}, std::pair{2.3, 0.5}}) {
    const auto r = laplace_identity(a, x, 0.0, 1e-7);
    const double d = std::abs(r.measured - r.expected);
    o.require(r.passed, r.name + " diff " + fmt("%.3g", d));
    o.note(r.name + " " + fmt("%.2g", d));
  }
  // closed-form side at (1, 1) is e - 2
  o.require(std::fabs(f_alpha(1.0, 1.0).real() - (std::exp(1.0) - 2.0)) <= 4e-16, "f_1(1) != e - 2");
  return o;
}

Outcome c5_moments() {
  Outcome o;
  double worst = 0.0;
  const CoeffTable table = coeff_table(13);
  for (double a : {0.3, 0.7, 1.0}) {
    const mpq_class qa(a);  // exact binary value of a
    for (int n = 0; n <= 12; ++n) {
      const double ref = mpq_class(table.evaluate(static_cast<std::size_t>(n + 1), qa)).get_d();
      const double d = std::fabs(moment(a, n) - ref);
      worst = std::max(worst, d);
      o.require(d <= 1e-10, "moment(" + fmt("%g", a) + ", " + std::to_string(n) + ") off by " + fmt("%.3g", d));
    }
    const double m1 = moment(a, -1);
    o.require(std::fabs(m1 - (-std::expm1(-a))) <= 1e-10, "n=-1 moment at alpha=" + fmt("%g", a) + " is " + fmt("%.12g", m1));
    o.require(std::fabs(m1 - 1.0) > 0.1, "n=-1 moment equals p_0");
  }
  o.note("max |moment - p_{n+1}| " + fmt("%.3g", worst));
  return o;
}

Outcome c6_integrals() {
  Outcome o;
  const auto one = [](double) { return cplx(1.0, 0.0); };
  const double i2 = density_integral(1.0, one).value.real();
  const double d2 = std::fabs(i2 - (std::exp(1.0) / 2 - 1));
  o.require(d2 <= 1e-10, "alpha=1 integral off by " + fmt("%.3g", d2));
  double worst = d2;
  for (double a : {0.25, 0.5, 0.75}) {
    const double d = std::fabs(density_integral(a, one).value.real() - a / 2 * std::exp(a));
    worst = std::max(worst, d);
    o.require(d <= 1e-10, "alpha=" + fmt("%g", a) + " integral off by " + fmt("%.3g", d));
  }
  o.note("max error " + fmt("%.3g", worst));
  return o;
}

Outcome c7_zero_structure() {
  Outcome o;
  const std::vector<std::pair<double, std::size_t>> counts = {{1.0, 0}, {2.29, 0}, {2.31, 2}, {3.0, 2}, {5.9, 2}, {6.1, 4}};
  std::string seen;
  for (const auto& [a, want] : counts) {
    const auto r = positive_zeros(a);
    seen += fmt("%g:", a) + std::to_string(r.count()) + " ";
    o.require(r.count() == want, "alpha=" + fmt("%g", a) + " has " + std::to_string(r.count()) + " zeros");
  }
  double prev = INFINITY;
  for (double a : {2.35, 2.5, 3.0, 4.0, 6.0, 10.0, 20.0, 40.0}) {
    const auto r = positive_zeros(a);
    if (r.zeros.empty()) {
      o.require(false, "no zeros at alpha=" + fmt("%g", a));
      continue;
    }
    const Zero& z = r.zeros.front();
    o.require(z.s < prev, "s_1 not decreasing at alpha=" + fmt("%g", a));
    o.require(z.derivative_at_zero < 0.0, "phi'(s_1) >= 0 at alpha=" + fmt("%g", a));
    prev = z.s;
  }
  o.note("counts " + seen + "s_1(40)=" + fmt("%.6g", prev));
  return o;
}

Outcome c8_limits() {
  Outcome o;
  // (a) alpha -> 0: phi_alpha/(alpha e^alpha) -> w
  const auto sup_small = [](double a) {
    double m = 0.0;
    for (int i = 0; i <= 200; ++i) {
      const double s = 0.05 * i;
      m = std::max(m, std::fabs(phi(a, s).real() / (a * std::exp(a)) - limit_w(s).real()));
    }
    return m;
  };
  const double a1 = sup_small(1e-4), a2 = sup_small(5e-5);
  o.require(a1 <= 1e-3, "(a) sup " + fmt("%.3g", a1));
  o.require(a2 < a1, "(a) no shrink on halving");

  // (b) alpha -> inf: phi_alpha(s/alpha)/(alpha e^alpha) -> J_1(sqrt(2s))/sqrt(2s); e^alpha overflows, so use phi~
  const auto sup_large = [](double a) {
    double m = 0.0;
    for (int i = 0; i <= 200; ++i) {
      const double s = 0.2 * i;
      m = std::max(m, std::fabs(phi_tilde(a, s / a, 0, 1e-14).real() / a - bessel_kernel(s).real()));
    }
    return m;
  };
  const double b1 = sup_large(1e4), b2 = sup_large(2e4);
  o.require(b1 <= 1e-3, "(b) sup " + fmt("%.3g", b1));
  o.require(b2 < b1, "(b) no shrink on doubling");

  // (c) alpha s_1(alpha) -> j_1^2/2
  const double j1 = bessel_j1_zeros(1).front();
  const double target = j1 * j1 / 2;
  double prev = INFINITY, last = 0.0;
  for (double a : {50.0, 100.0, 200.0}) {
    const double dev = std::fabs(scaled_zero_check(a, 1) - target);
    o.require(dev < prev, "(c) deviation not decreasing at alpha=" + fmt("%g", a));
    prev = last = dev;
  }
  o.require(last <= 0.02 * target, "(c) relative deviation " + fmt("%.3g", last / target));
  o.note("(a) " + fmt("%.2g", a1) + "->" + fmt("%.2g", a2) + ", (b) " + fmt("%.2g", b1) + "->" + fmt("%.2g", b2) +
         ", (c) " + fmt("%.2g", last / target));
  return o;
}

Outcome c9_polynomials() {
  Outcome o;
  const CoeffTable table = coeff_table(15);
  const StirlingTable st(30);
  for (std::size_t n = 1; n <= 12; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      o.require(coeff_stirling(n, k, st) == table.at(n, k), "Stirling mismatch at c_{" + std::to_string(n) + "," +
                                                                 std::to_string(k) + "}");

  // addition formula at random rationals, exactly
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 17);
  for (int trial = 0; trial < 6; ++trial) {
    mpq_class a(num(rng), den(rng)), b(num(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    const auto pa = p_exact(a, 15), pb = p_exact(b, 15), pab = p_exact(mpq_class(a + b), 15);
    for (std::size_t n = 0; n <= 15; ++n) {
      mpq_class sum = 0;
      for (std::size_t k = 0; k <= n; ++k) sum += pa[k] * pb[n - k];
      o.require(sum == pab[n], "addition formula fails at n=" + std::to_string(n));
    }
  }

  for (double a : {0.3, 1.0, 1.5, 2.0, 5.0}) {
    const auto p = p_eval<double>(a, 201);
    const double bound = ratio_bound(a);
    for (std::size_t n = 1; n <= 200; ++n)
      if (p.values[n + 1] > bound * p.values[n] * (1 + 1e-14)) {
        o.require(false, "ratio bound fails at alpha=" + fmt("%g", a) + ", n=" + std::to_string(n));
        break;
      }
  }

  // five-decimal reference values, truncated
  const std::vector<cplx> ref = {{2.08884, -7.46148}, {2.66406, -13.87905}};
  for (int k = 1; k <= 2; ++k) {
    const auto x = lambert_xi(k);
    const cplx r = ref[static_cast<std::size_t>(k - 1)];
    const double de = std::max(std::fabs(x.value.real() - r.real()), std::fabs(x.value.imag() - r.imag()));
    o.require(x.converged && de < 1e-5, "xi_" + std::to_string(k) + " off by " + fmt("%.3g", de));
    o.require(x.residual <= 1e-12, "xi_" + std::to_string(k) + " residual " + fmt("%.3g", x.residual));
  }
  o.note("Stirling n<=12, addition n<=15, ratio bound n<=200, xi_1 xi_2");
  return o;
}

Outcome c10_hankel() {
  Outcome o;
  for (double a : {0.5, 1.0})
    for (std::size_t m = 1; m <= 8; ++m)
      o.require(hankel_psd_check(a, m).positive(), "alpha=" + fmt("%g", a) + " not PSD at m=" + std::to_string(m));
  bool found = false;
  for (std::size_t m = 1; m <= 8 && !found; ++m) {
    const auto r = hankel_psd_check(2.5, m);
    if (std::min(r.min_eig_h0, r.min_eig_h1) < -r.tol) {
      found = true;
      o.note("alpha=2.5: eigenvalue " + fmt("%.4g", std::min(r.min_eig_h0, r.min_eig_h1)) + " at m=" + std::to_string(m));
    }
  }
  o.require(found, "no negative eigenvalue for alpha=2.5 with m<=8");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria = {c1_alpha_star, c2_s_star,     c3_cross_methods, c4_laplace,
                                                          c5_moments,    c6_integrals,  c7_zero_structure, c8_limits,
                                                          c9_polynomials, c10_hankel};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += o.pass ? 0 : 1;
    std::printf("criterion %zu %s %s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
