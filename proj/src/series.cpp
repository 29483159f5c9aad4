#include "cmphi/series.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

#include "cmphi/errors.hpp"
#include "cmphi/kernels.hpp"
#include "cmphi/polynomials.hpp"

namespace cmphi {

std::string_view precision_name(Precision p) noexcept { return p == Precision::extended ? "dd" : "double"; }

std::string_view method_name(Method m) noexcept {
  switch (m) {
    case Method::series: return "series";
    case Method::rectangle: return "rectangle";
    case Method::stieltjes: return "stieltjes";
    case Method::decomposition: return "decomposition";
  }
  return "?";
}

namespace {

constexpr double kUnitDouble = 0x1p-53;
constexpr double kUnitDD = 0x1p-104;

// Which coefficient sequence c_n multiplies s^n/n!.
//   shift k:       (-1)^{n+k} p_{n+k+1}
//   dalpha_phi:    (-1)^n (p_{n+1} + q_{n+1})   (d/dalpha of e^a phi~, without e^a)
//   dalpha_tilde:  (-1)^n q_{n+1}
enum class Kind { shift, dalpha_phi, dalpha_tilde };

struct Request {
  Kind kind = Kind::shift;
  unsigned k = 0;
};

bool needs_q(const Request& r) { return r.kind != Kind::shift; }
std::size_t top_index(const Request& r, std::size_t n) { return r.kind == Kind::shift ? n + r.k + 1 : n + 1; }

struct Plan {
  std::size_t n_terms = 0;  // terms 0..n_terms-1 are summed
  double bound = 0.0;       // remainder bound on phi~
  bool rigorous = false;
};

std::size_t default_cap(double abs_alpha, double abs_s) {
  return static_cast<std::size_t>(std::ceil(10.0 * ratio_bound(abs_alpha) * abs_s)) + 500;
}

// Majorant coefficients |c_n| <= P_{n+k+1}(|a|) (+ Q(|a|)), with p and q at |a|
// having nonnegative coefficients.
double majorant_coeff(const PolySequence<double>& abs_seq, const Request& r, std::size_t n) {
  const std::size_t i = top_index(r, n);
  switch (r.kind) {
    case Kind::shift: return abs_seq.values[i];
    case Kind::dalpha_phi: return abs_seq.values[i] + abs_seq.derivs[i];
    case Kind::dalpha_tilde: return abs_seq.derivs[i];
  }
  return 0.0;
}

// Picks N. In the alternating regime (real a >= 0, real s >= 0, plain
// s-derivatives) the first omitted term is a rigorous bound once n >= a^ s.
// Otherwise a geometric tail on the majorant is used.
Plan plan_terms(double abs_alpha, double abs_s, const Request& r, bool alternating, double tol, std::size_t cap) {
  const double a_hat = ratio_bound(abs_alpha);
  const double threshold = a_hat * abs_s;
  std::size_t guess = static_cast<std::size_t>(std::ceil(threshold)) + 64;
  Plan plan;
  plan.rigorous = alternating;
  for (;;) {
    const std::size_t limit = std::min(guess, cap);
    const auto seq = p_eval<double>(abs_alpha, top_index(r, limit) + 1, needs_q(r));
    // log of |s|^n / n!, kept in log space so that large |s| does not overflow.
    const double log_s = abs_s > 0.0 ? std::log(abs_s) : -std::numeric_limits<double>::infinity();
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n <= limit; ++n) {
      const double c = majorant_coeff(seq, r, n);
      double term;
      if (n == 0) term = c;
      else if (abs_s == 0.0 || c == 0.0) term = 0.0;
      else term = c * std::exp(static_cast<double>(n) * log_s - std::lgamma(static_cast<double>(n) + 1.0));
      if (static_cast<double>(n) >= threshold) {
        double bound;
        if (alternating) {
          bound = term;
        } else {
          double rho = threshold / (static_cast<double>(n) + 1.0);
          if (r.kind != Kind::shift && prev > 0.0 && std::isfinite(prev) && term > 0.0) {
            rho = std::max(rho, term / prev);
          }
          bound = rho < 1.0 ? term / (1.0 - rho) : std::numeric_limits<double>::infinity();
        }
        if (bound <= tol) {
          plan.n_terms = n;
          plan.bound = bound;
          return plan;
        }
      }
      prev = term;
    }
    if (limit >= cap) {
      throw ToleranceError("series: tolerance " + std::to_string(tol) + " not reached within " +
                           std::to_string(cap) + " terms");
    }
    guess *= 2;
  }
}

// Compensated (Neumaier) accumulation for double and complex<double>;
// double-double is summed directly.
struct Neumaier {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    double s, e;
    two_sum(sum, x, s, e);
    sum = s;
    comp += e;
  }
  [[nodiscard]] double result() const { return sum + comp; }
};

template <class T>
struct Accumulator;

template <>
struct Accumulator<double> {
  Neumaier acc;
  void add(double x) { acc.add(x); }
  [[nodiscard]] double result() const { return acc.result(); }
};

template <>
struct Accumulator<cplx> {
  Neumaier re, im;
  void add(cplx x) {
    re.add(x.real());
    im.add(x.imag());
  }
  [[nodiscard]] cplx result() const { return {re.result(), im.result()}; }
};

template <>
struct Accumulator<DD> {
  DD acc;
  void add(const DD& x) { acc += x; }
  [[nodiscard]] DD result() const { return acc; }
};

double magnitude_of(double x) { return std::fabs(x); }
double magnitude_of(const cplx& x) { return std::abs(x); }
double magnitude_of(const DD& x) { return std::fabs(x.hi); }

template <class T>
T from_index(std::size_t n) {
  return T(static_cast<double>(n));
}

template <class T>
T coeff(const PolySequence<T>& seq, const Request& r, std::size_t n) {
  const std::size_t i = top_index(r, n);
  const bool odd = ((r.kind == Kind::shift ? n + r.k : n) & 1U) != 0;
  T c{};
  switch (r.kind) {
    case Kind::shift: c = seq.values[i]; break;
    case Kind::dalpha_phi: c = seq.values[i] + seq.derivs[i]; break;
    case Kind::dalpha_tilde: c = seq.derivs[i]; break;
  }
  return odd ? T(-c) : c;
}

struct Summed {
  cplx value;
  double magnitude = 0.0;
};

template <class T>
Summed sum_series(T alpha, T s, const Request& r, std::size_t n_terms) {
  const auto seq = p_eval<T>(alpha, top_index(r, n_terms) + 1, needs_q(r));
  Accumulator<T> acc;
  double mag = 0.0;
  T power(1.0);  // s^n / n!
  for (std::size_t n = 0; n < n_terms; ++n) {
    if (n > 0) power = power * s / from_index<T>(n);
    const T term = coeff(seq, r, n) * power;
    acc.add(term);
    mag += magnitude_of(term);
  }
  Summed out;
  if constexpr (std::is_same_v<T, cplx>) out.value = acc.result();
  else out.value = cplx(to_double(acc.result()), 0.0);
  out.magnitude = mag;
  return out;
}

bool is_real(cplx z) { return z.imag() == 0.0; }

// Evaluates the normalized series (no e^a factor) with tolerance tol on it.
PhiValue eval_tilde(cplx alpha, cplx s, const Request& r, double tol, const SeriesOptions& opts) {
  if (!(tol > 0.0)) throw std::invalid_argument("series: tol must be positive");
  const bool real_in = is_real(alpha) && is_real(s);
  if (opts.precision == Precision::extended && !real_in) {
    throw std::invalid_argument("series: double-double precision needs real alpha and s");
  }
  const double abs_alpha = std::abs(alpha);
  const double abs_s = std::abs(s);
  const bool alternating = r.kind == Kind::shift && real_in && alpha.real() >= 0.0 && s.real() >= 0.0;
  const std::size_t cap = opts.term_cap != 0 ? opts.term_cap : default_cap(abs_alpha, abs_s);
  const Plan plan = plan_terms(abs_alpha, abs_s, r, alternating, tol, cap);

  Summed sum;
  if (opts.precision == Precision::extended) {
    sum = sum_series<DD>(DD(alpha.real()), DD(s.real()), r, plan.n_terms);
  } else if (real_in) {
    sum = sum_series<double>(alpha.real(), s.real(), r, plan.n_terms);
  } else {
    sum = sum_series<cplx>(alpha, s, r, plan.n_terms);
  }

  PhiValue out;
  out.value = sum.value;
  out.error_bound = plan.bound;
  out.rigorous = plan.rigorous;
  out.n_used = plan.n_terms;
  out.method = Method::series;
  out.magnitude = sum.magnitude;
  return out;
}

PhiValue scale_by_exp(PhiValue v, cplx alpha) {
  const cplx e = std::exp(alpha);
  const double ae = std::abs(e);
  v.value *= e;
  v.error_bound *= ae;
  v.magnitude *= ae;
  return v;
}

double tilde_tol(double tol, cplx alpha) { return tol / std::exp(alpha.real()); }

}  // namespace

PhiValue phi(cplx alpha, cplx s, double tol, const SeriesOptions& opts) {
  return scale_by_exp(eval_tilde(alpha, s, {Kind::shift, 0}, tilde_tol(tol, alpha), opts), alpha);
}

PhiValue phi_ds(cplx alpha, cplx s, unsigned k, double tol, const SeriesOptions& opts) {
  if (k == 0) throw std::invalid_argument("phi_ds: k must be >= 1");
  return scale_by_exp(eval_tilde(alpha, s, {Kind::shift, k}, tilde_tol(tol, alpha), opts), alpha);
}

PhiValue phi_dalpha(cplx alpha, cplx s, double tol, const SeriesOptions& opts) {
  PhiValue v = scale_by_exp(eval_tilde(alpha, s, {Kind::dalpha_phi, 0}, tilde_tol(tol, alpha), opts), alpha);
  v.rigorous = false;
  return v;
}

PhiValue phi_tilde(cplx alpha, cplx s, unsigned k, double tol, const SeriesOptions& opts) {
  return eval_tilde(alpha, s, {Kind::shift, k}, tol, opts);
}

template <class T>
TildeJet<T> phi_tilde_jet(T alpha, T s, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("phi_tilde_jet: tol must be positive");
  const double a = std::fabs(to_double(alpha));
  const double x = std::fabs(to_double(s));
  const std::size_t cap = default_cap(a, x);
  // The longest series of the five decides N.
  std::size_t n = plan_terms(a, x, {Kind::shift, 2}, false, tol, cap).n_terms;
  n = std::max(n, plan_terms(a, x, {Kind::dalpha_tilde, 1}, false, tol, cap).n_terms);
  n = std::max(n, plan_terms(a, x, {Kind::shift, 0}, false, tol, cap).n_terms);

  // Need p_{n+3} and q_{n+2}.
  const auto seq = p_eval<T>(alpha, n + 3, true);
  TildeJet<T> jet;
  Accumulator<T> v, vs, vss, va, vas;
  double mag = 0.0;
  T power(1.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) power = power * s / T(static_cast<double>(i));
    const T sign((i & 1U) != 0 ? -1.0 : 1.0);
    const T sp = sign * power;
    const T t0 = seq.values[i + 1] * sp;
    v.add(t0);
    vs.add(T(-(seq.values[i + 2] * sp)));
    vss.add(seq.values[i + 3] * sp);
    va.add(seq.derivs[i + 1] * sp);
    vas.add(T(-(seq.derivs[i + 2] * sp)));
    mag += magnitude_of(t0);
  }
  jet.value = v.result();
  jet.ds = vs.result();
  jet.dss = vss.result();
  jet.dalpha = va.result();
  jet.dalpha_ds = vas.result();
  jet.n_used = n;
  jet.magnitude = mag;
  return jet;
}

template TildeJet<double> phi_tilde_jet<double>(double, double, double);
template TildeJet<DD> phi_tilde_jet<DD>(DD, DD, double);

TildeGrid phi_tilde_grid(double alpha, std::span<const double> s, unsigned k, Precision precision) {
  TildeGrid grid;
  const std::size_t m = s.size();
  grid.values.assign(m, 0.0);
  grid.error_estimate.assign(m, 0.0);
  grid.magnitude.assign(m, 0.0);
  if (m == 0) return grid;

  double s_max = 0.0;
  for (double x : s) {
    if (!std::isfinite(x)) throw std::invalid_argument("phi_tilde_grid: non-finite point");
    s_max = std::max(s_max, std::fabs(x));
  }
  if (s_max > 512.0) throw std::invalid_argument("phi_tilde_grid: |s| > 512 is out of range for the series");

  // Power-of-two scale: x_i = s_i / sigma is exact and |x_i| <= 1, and the
  // scaled coefficients c_n sigma^n / n! stay representable.
  const double sigma = std::exp2(std::ceil(std::log2(std::max(s_max, 1.0))));
  const double u = precision == Precision::extended ? kUnitDD : kUnitDouble;
  const double abs_alpha = std::fabs(alpha);
  const Request r{Kind::shift, k};
  const Plan plan = plan_terms(abs_alpha, s_max, r, false, u * 1e-2, default_cap(abs_alpha, s_max));
  const std::size_t n = std::max<std::size_t>(plan.n_terms, 1);
  grid.n_terms = n;

  std::vector<double> x(m);
  for (std::size_t i = 0; i < m; ++i) x[i] = s[i] / sigma;
  std::vector<double> mag(m);

  if (precision == Precision::extended) {
    const auto seq = p_eval<DD>(DD(alpha), top_index(r, n) + 1);
    std::vector<DD> c(n);
    DD scale(1.0);
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) scale = mul_d(scale, sigma) / DD(static_cast<double>(i));
      c[i] = coeff(seq, r, i) * scale;
    }
    std::vector<DD> out(m);
    kernels::horner_dd(c, x, out, mag);
    for (std::size_t i = 0; i < m; ++i) grid.values[i] = to_double(out[i]);
  } else {
    const auto seq = p_eval<double>(alpha, top_index(r, n) + 1);
    std::vector<double> c(n);
    DD scale(1.0);
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) scale = mul_d(scale, sigma) / DD(static_cast<double>(i));
      c[i] = to_double(DD(coeff(seq, r, i)) * scale);
    }
    kernels::horner_comp(c, x, grid.values, mag);
  }

  const double roundoff = 4.0 * std::sqrt(static_cast<double>(n)) * u;
  for (std::size_t i = 0; i < m; ++i) {
    grid.magnitude[i] = mag[i];
    grid.error_estimate[i] = plan.bound + roundoff * mag[i] + kUnitDouble * std::fabs(grid.values[i]);
  }
  return grid;
}

cplx limit_w(cplx s) {
  if (std::abs(s) < 0.5) {
    // sum (-1)^n s^n / ((n+2) n!)
    cplx power(1.0, 0.0);
    cplx sum(0.5, 0.0);
    for (int n = 1; n < 40; ++n) {
      power *= -s / static_cast<double>(n);
      const cplx term = power / static_cast<double>(n + 2);
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  return (1.0 - (1.0 + s) * std::exp(-s)) / (s * s);
}

cplx bessel_kernel(cplx s) {
  // t_n = (-1)^n s^n / (2^{n+1} n! (n+1)!), t_n = t_{n-1} * (-s) / (2 n (n+1))
  cplx term(0.5, 0.0);
  Accumulator<cplx> acc;
  acc.add(term);
  const double bound = std::abs(s);
  for (int n = 1; n < 2000; ++n) {
    term *= -s / (2.0 * n * (n + 1.0));
    acc.add(term);
    if (static_cast<double>(n) * (n + 1.0) > bound && std::abs(term) < 1e-20 * std::max(1.0, std::abs(acc.result()))) {
      break;
    }
  }
  return acc.result();
}

}  // namespace cmphi
