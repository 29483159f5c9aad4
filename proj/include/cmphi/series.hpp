#pragma once

// phi_alpha(s) = e^alpha sum_{n>=0} (-1)^n p_{n+1}(alpha) s^n / n!
//
// and its derivatives in s and alpha, evaluated from the Taylor series.
//
// Truncation: for real alpha > 0 and real s >= 0 the terms decrease in
// magnitude from n >= a^ s on (a^ = ratio_bound(alpha)), so the series
// alternates with decreasing terms and the first omitted term bounds the
// remainder. That bound is reported as rigorous. Everywhere else the
// remainder is bounded with the majorant |p_n(alpha)| <= p_n(|alpha|) and a
// geometric tail, labelled heuristic.
//
// Most of the internals work on the normalized series
//   phi~_alpha(s) = e^{-alpha} phi_alpha(s),
// which stays O(alpha) even when e^alpha overflows.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "cmphi/analytic.hpp"
#include "cmphi/double_double.hpp"

namespace cmphi {

enum class Precision { standard, extended };  // double / double-double
enum class Method { series, rectangle, stieltjes, decomposition };

std::string_view precision_name(Precision p) noexcept;
std::string_view method_name(Method m) noexcept;

struct PhiValue {
  cplx value;
  double error_bound = 0.0;  // truncation (series) or a posteriori (quadrature) error
  bool rigorous = false;
  std::size_t n_used = 0;    // series terms, or quadrature nodes
  Method method = Method::series;
  double magnitude = 0.0;    // |scale| * sum |terms|; roundoff is ~ eps * magnitude

  [[nodiscard]] double real() const { return value.real(); }
};

struct SeriesOptions {
  Precision precision = Precision::standard;
  /// Maximum number of terms; 0 selects 10 a^ |s| + 500.
  std::size_t term_cap = 0;
};

/// phi_alpha(s) to absolute tolerance `tol`. Throws ToleranceError when the
/// term cap is reached first. Extended precision needs real alpha and s.
PhiValue phi(cplx alpha, cplx s, double tol = 1e-15, const SeriesOptions& opts = {});

/// k-th s-derivative e^alpha sum (-1)^{n+k} p_{n+k+1} s^n/n!, k >= 1.
PhiValue phi_ds(cplx alpha, cplx s, unsigned k, double tol = 1e-15, const SeriesOptions& opts = {});

/// d/dalpha phi_alpha(s) = e^alpha sum (-1)^n (p_{n+1} + q_{n+1}) s^n/n!.
PhiValue phi_dalpha(cplx alpha, cplx s, double tol = 1e-15, const SeriesOptions& opts = {});

/// Same three, for the normalized phi~ = e^{-alpha} phi (tol applies to phi~).
/// k = 0 is the function itself.
PhiValue phi_tilde(cplx alpha, cplx s, unsigned k = 0, double tol = 1e-16, const SeriesOptions& opts = {});

/// All first and second order data the double-zero solver needs, at a real
/// point, in double or double-double.
template <class T>
struct TildeJet {
  T value{};      // phi~
  T ds{};         // d phi~/ds
  T dss{};        // d^2 phi~/ds^2
  T dalpha{};     // d phi~/dalpha
  T dalpha_ds{};  // d^2 phi~/dalpha ds
  std::size_t n_used = 0;
  double magnitude = 0.0;
};

template <class T>
TildeJet<T> phi_tilde_jet(T alpha, T s, double tol);

extern template TildeJet<double> phi_tilde_jet<double>(double, double, double);
extern template TildeJet<DD> phi_tilde_jet<DD>(DD, DD, double);

/// phi~^{(k)} for real alpha on many real points at once through the
/// vectorized Horner kernels. `error_estimate` combines the truncation bound
/// with a roundoff estimate proportional to the term magnitudes.
struct TildeGrid {
  std::vector<double> values;
  std::vector<double> error_estimate;
  std::vector<double> magnitude;
  std::size_t n_terms = 0;
};

TildeGrid phi_tilde_grid(double alpha, std::span<const double> s, unsigned k = 0,
                         Precision precision = Precision::extended);

/// lim_{alpha->0} phi_alpha(s)/(alpha e^alpha) = (1 - (1+s) e^{-s})/s^2, = 1/2 at 0.
cplx limit_w(cplx s);

/// lim_{|alpha|->inf} phi_alpha(s/alpha)/(alpha e^alpha) = J_1(sqrt(2s))/sqrt(2s),
/// summed as sum (-1)^n s^n / (2^{n+1} n! (n+1)!).
cplx bessel_kernel(cplx s);

}  // namespace cmphi
