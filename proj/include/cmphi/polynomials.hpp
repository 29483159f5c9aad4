#pragma once

// The polynomial family p_n(alpha):
//
//   p_0 = 1,   p_{n+1}(a) = a/(n+1) * sum_{k=0..n} (k+1)/(k+2) * p_{n-k}(a).
//
// Every Taylor coefficient of phi_alpha is e^alpha (-1)^n p_{n+1}(alpha)/n!,
// so this recursion is the workhorse of the whole library. Values are always
// computed from the recursion at the given alpha; the exact coefficient table
// in exact.hpp exists to check it.

#include <complex>
#include <cstddef>
#include <vector>

#include "cmphi/double_double.hpp"

namespace cmphi {

namespace detail {

template <class T>
struct ScalarOps {
  static T from_ratio(long num, long den) { return T(static_cast<double>(num) / static_cast<double>(den)); }
};

template <>
struct ScalarOps<DD> {
  static DD from_ratio(long num, long den) { return DD(static_cast<double>(num)) / DD(static_cast<double>(den)); }
};

template <>
struct ScalarOps<std::complex<double>> {
  static std::complex<double> from_ratio(long num, long den) {
    return {static_cast<double>(num) / static_cast<double>(den), 0.0};
  }
};

}  // namespace detail

/// p_0..p_N at a fixed alpha, optionally with q_n = dp_n/dalpha.
template <class T>
struct PolySequence {
  T alpha{};
  std::vector<T> values;
  std::vector<T> derivs;  // empty unless requested

  [[nodiscard]] bool has_derivs() const { return !derivs.empty(); }
  [[nodiscard]] std::size_t n_max() const { return values.empty() ? 0 : values.size() - 1; }
};

/// Runs the recursion up to n_max in O(n_max^2). With `with_derivs`, also
/// q_{n+1} = 1/(n+1) sum_k (k+1)/(k+2) (p_{n-k} + alpha q_{n-k}).
/// Overflow shows up as non-finite entries; nothing is clamped.
template <class T>
PolySequence<T> p_eval(T alpha, std::size_t n_max, bool with_derivs = false) {
  using Ops = detail::ScalarOps<T>;
  PolySequence<T> seq;
  seq.alpha = alpha;
  seq.values.assign(n_max + 1, T(0.0));
  seq.values[0] = T(1.0);
  if (with_derivs) seq.derivs.assign(n_max + 1, T(0.0));

  std::vector<T> weight(n_max + 1);
  for (std::size_t k = 0; k <= n_max; ++k) weight[k] = Ops::from_ratio(static_cast<long>(k + 1), static_cast<long>(k + 2));

  auto& p = seq.values;
  auto& q = seq.derivs;
  for (std::size_t n = 0; n < n_max; ++n) {
    T acc_p(0.0);
    T acc_q(0.0);
    for (std::size_t k = 0; k <= n; ++k) {
      acc_p += weight[k] * p[n - k];
      if (with_derivs) acc_q += weight[k] * (p[n - k] + alpha * q[n - k]);
    }
    const T inv = Ops::from_ratio(1, static_cast<long>(n + 1));
    p[n + 1] = alpha * acc_p * inv;
    if (with_derivs) q[n + 1] = acc_q * inv;
  }
  return seq;
}

/// Arithmetic means M_n = (p_0 + ... + p_n)/(n+1) for real alpha, built with
/// M_n = (n M_{n-1} + p_n)/(n+1).
struct MeanSequence {
  double alpha = 0.0;
  std::vector<double> values;
};

MeanSequence mean_values(double alpha, std::size_t n_max);

/// Upper bound on p_{n+1}(alpha)/p_n(alpha): 1 on [0,1], 2 alpha on (1,2),
/// alpha on [2, inf). Throws DomainError for negative alpha.
double ratio_bound(double alpha);

/// Shape of (p_n(alpha))_{n>=1} for real alpha > 0: the index where the
/// sequence stops decreasing. Diagnostic only; used to look at the
/// unresolved 1 < alpha < 2 regime.
struct MonotonicityProfile {
  double alpha = 0.0;
  std::size_t n_max = 0;
  std::size_t turning_index = 0;   // first n >= 1 with p_{n+1} >= p_n, or n_max
  bool increasing_after_turn = false;  // p_n non-decreasing for all n >= turning_index
};

MonotonicityProfile monotonicity_scan(double alpha, std::size_t n_max);

}  // namespace cmphi
