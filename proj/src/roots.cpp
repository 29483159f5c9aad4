#include "cmphi/roots.hpp"

#include <boost/math/tools/toms748_solve.hpp>
#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "cmphi/contour.hpp"
#include "cmphi/errors.hpp"

namespace cmphi {
namespace {

constexpr double kPi = 3.141592653589793;

// Series cancellation budget: sum |terms| of phi~ up to this keeps the
// double-double error near 1e-16 absolute.
constexpr double kSeriesMagnitude = 1e15;

const SeriesOptions kExtended{Precision::extended, 0};

// Sum |terms| of phi~_alpha(s) is phi~_alpha(-s) for alpha > 0.
double series_magnitude(double alpha, double s) {
  return phi_tilde(alpha, -s, 0, 1e-3, SeriesOptions{}).real();
}

template <class F>
double bracket_root(F&& f, double a, double b, double fa, double fb, int bits) {
  std::uintmax_t iters = 200;
  const auto r = boost::math::tools::toms748_solve(f, a, b, fa, fb, boost::math::tools::eps_tolerance<double>(bits), iters);
  return 0.5 * (r.first + r.second);
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

TildeField::TildeField(double alpha, double s_max) : alpha_(alpha), s_cut_(s_max) {
  if (!(alpha > 0.0)) throw DomainError("TildeField: requires alpha > 0");
  if (series_magnitude(alpha, s_max) <= kSeriesMagnitude) return;
  double lo = 0.0, hi = std::min(s_max, 0.05);
  while (series_magnitude(alpha, hi) <= kSeriesMagnitude) {
    lo = hi;
    hi = std::min(s_max, 2.0 * hi);
  }
  for (int i = 0; i < 40 && hi - lo > 1e-3 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (series_magnitude(alpha, mid) <= kSeriesMagnitude ? lo : hi) = mid;
  }
  s_cut_ = lo;
}

double TildeField::value(double s, unsigned k) const {
  if (std::fabs(s) <= s_cut_) return phi_tilde(alpha_, s, k, 1e-30, kExtended).real();
  if (alpha_ > 1.0) {
    const double one[] = {s};
    return phi_decomposed_grid(alpha_, one, k).values[0].real() * std::exp(-alpha_);
  }
  ContourOptions o;
  o.ds_order = k;
  o.tol = 1e-13 * std::exp(alpha_);
  return phi_rect(alpha_, s, ContourSpec::rectangle(), o).real() * std::exp(-alpha_);
}

std::vector<double> TildeField::grid(const std::vector<double>& s) const {
  std::vector<double> low, high;
  std::vector<std::size_t> low_idx, high_idx;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (std::fabs(s[i]) <= s_cut_) {
      low.push_back(s[i]);
      low_idx.push_back(i);
    } else {
      high.push_back(s[i]);
      high_idx.push_back(i);
    }
  }
  std::vector<double> out(s.size());
  if (!low.empty()) {
    const auto g = phi_tilde_grid(alpha_, low, 0, Precision::extended);
    for (std::size_t j = 0; j < low.size(); ++j) out[low_idx[j]] = g.values[j];
  }
  if (!high.empty()) {
    const auto g = alpha_ > 1.0 ? phi_decomposed_grid(alpha_, high) : phi_rect_grid(alpha_, high);
    const double scale = std::exp(-alpha_);
    for (std::size_t j = 0; j < high.size(); ++j) out[high_idx[j]] = g.values[j].real() * scale;
  }
  return out;
}

ZeroReport positive_zeros(double alpha, const ZeroScanOptions& opts) {
  if (!(alpha > 0.0)) throw DomainError("positive_zeros: requires alpha > 0");
  if (!(opts.s_max > 0.0)) throw std::invalid_argument("positive_zeros: s_max must be positive");
  double h = opts.grid_step > 0.0 ? opts.grid_step : std::min(0.25, 1.0 / (2.0 * alpha));
  const TildeField field(alpha, opts.s_max);
  auto f = [&](double s) { return field.value(s, 0); };
  auto fs = [&](double s) { return field.value(s, 1); };

  for (int halving = 0; halving <= opts.max_halvings; ++halving, h *= 0.5) {
    const auto m = static_cast<std::size_t>(std::ceil(opts.s_max / h));
    std::vector<double> s(m + 1);
    for (std::size_t i = 0; i <= m; ++i) s[i] = std::min(opts.s_max, static_cast<double>(i) * h);
    const std::vector<double> v = field.grid(s);

    std::vector<Zero> zeros;
    bool unresolved = false;
    auto add_simple = [&](double a, double b, double fa, double fb) {
      Zero z;
      z.s = bracket_root(f, a, b, fa, fb, 50);
      zeros.push_back(z);
    };

    for (std::size_t i = 1; i <= m; ++i) {
      if (v[i] == 0.0) {
        zeros.push_back({s[i], 1, 0.0, 0.0});
        continue;
      }
      if (v[i - 1] != 0.0 && sign_of(v[i]) != sign_of(v[i - 1])) add_simple(s[i - 1], s[i], v[i - 1], v[i]);
    }
    // Extrema of |phi~| between grid points that keep their sign: a hidden
    // pair of zeros, a double zero, or nothing.
    for (std::size_t i = 1; i < m; ++i) {
      const double a = std::fabs(v[i - 1]), b = std::fabs(v[i]), c = std::fabs(v[i + 1]);
      if (!(b < a && b <= c)) continue;
      if (sign_of(v[i - 1]) != sign_of(v[i]) || sign_of(v[i]) != sign_of(v[i + 1]) || v[i] == 0.0) continue;
      const double da = fs(s[i - 1]), db = fs(s[i + 1]);
      if (sign_of(da) == sign_of(db)) {
        unresolved = true;
        break;
      }
      const double se = bracket_root(fs, s[i - 1], s[i + 1], da, db, 36);
      const double ve = f(se);
      const double scale = std::max(a, c);
      // Below the threshold a sign flip is within rounding of a touch.
      if (std::fabs(ve) <= opts.double_zero_threshold * scale) {
        zeros.push_back({se, 2, 0.0, 0.0});
      } else if (sign_of(ve) != sign_of(v[i])) {
        add_simple(s[i - 1], se, v[i - 1], ve);
        add_simple(se, s[i + 1], ve, v[i + 1]);
      }
    }
    if (unresolved) continue;

    std::sort(zeros.begin(), zeros.end(), [](const Zero& x, const Zero& y) { return x.s < y.s; });
    const double ea = std::exp(alpha);
    for (auto& z : zeros) {
      z.residual = std::fabs(f(z.s)) * ea;
      z.derivative_at_zero = fs(z.s) * ea;
    }
    ZeroReport rep;
    rep.alpha = alpha;
    rep.zeros = std::move(zeros);
    rep.scan_range = {0.0, opts.s_max};
    rep.grid_step = h;
    rep.halvings = halving;
    rep.series_limit = field.series_limit();
    return rep;
  }
  throw ToleranceError("positive_zeros: extrema unresolved after " + std::to_string(opts.max_halvings) +
                       " step halvings");
}

namespace {

template <class T>
struct NewtonStep {
  T da, ds;
  TildeJet<T> at;
};

template <class T>
void solve2(const T& a11, const T& a12, const T& a21, const T& a22, const T& b1, const T& b2, T& x1, T& x2) {
  const T det = a11 * a22 - a12 * a21;
  x1 = (b1 * a22 - a12 * b2) / det;
  x2 = (a11 * b2 - a21 * b1) / det;
}

}  // namespace

CriticalPoint alpha_star(SolveMode mode, std::pair<double, double> seed, int max_iterations) {
  CriticalPoint cp;
  cp.mode = mode;
  if (mode == SolveMode::double_precision) {
    double a = seed.first, s = seed.second;
    for (int it = 1; it <= max_iterations; ++it) {
      cp.iterations = it;
      const auto jac = phi_tilde_jet<double>(a, s, 1e-20);
      const auto res = phi_tilde_jet<DD>(DD(a), DD(s), 1e-34);
      double da, ds;
      solve2(jac.dalpha, jac.ds, jac.dalpha_ds, jac.dss, to_double(res.value), to_double(res.ds), da, ds);
      if (!std::isfinite(da) || !std::isfinite(ds)) break;
      a -= da;
      s -= ds;
      if (std::fabs(da) <= 2e-16 * std::fabs(a) && std::fabs(ds) <= 2e-16 * std::fabs(s)) {
        cp.converged = true;
        break;
      }
    }
    cp.alpha_star = DD(a);
    cp.s_star = DD(s);
  } else {
    DD a(seed.first), s(seed.second);
    for (int it = 1; it <= max_iterations; ++it) {
      cp.iterations = it;
      const auto j = phi_tilde_jet<DD>(a, s, 1e-34);
      DD da, ds;
      solve2(j.dalpha, j.ds, j.dalpha_ds, j.dss, j.value, j.ds, da, ds);
      if (!isfinite(da) || !isfinite(ds)) break;
      a -= da;
      s -= ds;
      // Rounding in the residual (sum |terms| ~ 500 at s*) leaves steps near 1e-29.
      if (std::fabs(da.hi) <= 1e-26 * std::fabs(a.hi) && std::fabs(ds.hi) <= 1e-26 * std::fabs(s.hi)) {
        cp.converged = true;
        break;
      }
    }
    cp.alpha_star = a;
    cp.s_star = s;
  }
  const auto fin = phi_tilde_jet<DD>(cp.alpha_star, cp.s_star, 1e-34);
  const double ea = std::exp(to_double(cp.alpha_star));
  cp.residual_value = std::fabs(to_double(fin.value)) * ea;
  cp.residual_ds = std::fabs(to_double(fin.ds)) * ea;
  return cp;
}

double bessel_j1(double x) {
  constexpr mp_bitcnt_t kBits = 320;
  const mpf_class xf(x, kBits);
  mpf_class half(xf / 2, kBits);
  mpf_class q(-(half * half), kBits);
  mpf_class term(half, kBits);
  mpf_class sum(term, kBits);
  const mpf_class eps(1e-40, kBits);
  for (unsigned long n = 1; n < 10000; ++n) {
    term *= q;
    term /= n * (n + 1);
    sum += term;
    if (static_cast<double>(n) > std::fabs(x) && abs(term) < eps) break;
  }
  return sum.get_d();
}

std::vector<double> bessel_j1_zeros(std::size_t k_max) {
  if (k_max > 20) throw std::invalid_argument("bessel_j1_zeros: k_max <= 20");
  std::vector<double> out;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const double kk = static_cast<double>(k);
    const double a = (kk - 0.25) * kPi, b = (kk + 0.5) * kPi;
    const double fa = bessel_j1(a), fb = bessel_j1(b);
    if (sign_of(fa) == sign_of(fb)) throw ToleranceError("bessel_j1_zeros: no sign change for k = " + std::to_string(k));
    out.push_back(bracket_root([](double x) { return bessel_j1(x); }, a, b, fa, fb, 53));
  }
  return out;
}

LambertPoint lambert_xi(int k) {
  if (k == 0 || k == -1) throw DomainError("lambert_xi: k must not be 0 or -1");
  if (k <= -2) {
    LambertPoint p = lambert_xi(-k - 1);
    p.value = std::conj(p.value);
    return p;
  }
  const double t = 2.0 * kPi * k;
  cplx s(std::log(t), -(t + 0.5 * kPi));
  LambertPoint p;
  for (int it = 1; it <= 100; ++it) {
    p.iterations = it;
    const cplx e = std::exp(s);
    const cplx step = (1.0 + s - e) / (1.0 - e);
    s -= step;
    if (std::abs(step) <= 1e-15 * std::abs(s)) {
      p.converged = true;
      break;
    }
  }
  p.value = s;
  p.residual = std::abs(1.0 + s - std::exp(s));
  return p;
}

double scaled_zero_check(double alpha, std::size_t k) {
  if (k == 0 || k >= 20) throw std::invalid_argument("scaled_zero_check: 1 <= k < 20");
  const auto j = bessel_j1_zeros(k + 1);
  ZeroScanOptions o;
  o.s_max = 0.25 * (j[k - 1] * j[k - 1] + j[k] * j[k]) / alpha;
  const ZeroReport rep = positive_zeros(alpha, o);
  if (rep.count() < k) {
    throw ToleranceError("scaled_zero_check: found " + std::to_string(rep.count()) + " zeros, need " +
                         std::to_string(k));
  }
  return alpha * rep.zeros[k - 1].s;
}

}  // namespace cmphi
