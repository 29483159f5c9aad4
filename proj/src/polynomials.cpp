#include "cmphi/polynomials.hpp"

#include <string>

#include "cmphi/errors.hpp"

namespace cmphi {

MeanSequence mean_values(double alpha, std::size_t n_max) {
  const auto p = p_eval(alpha, n_max);
  MeanSequence m;
  m.alpha = alpha;
  m.values.resize(n_max + 1);
  m.values[0] = p.values[0];
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto dn = static_cast<double>(n);
    m.values[n] = (dn * m.values[n - 1] + p.values[n]) / (dn + 1.0);
  }
  return m;
}

double ratio_bound(double alpha) {
  if (!(alpha >= 0.0)) throw DomainError("ratio_bound: alpha must be >= 0, got " + std::to_string(alpha));
  if (alpha <= 1.0) return 1.0;
  if (alpha < 2.0) return 2.0 * alpha;
  return alpha;
}

MonotonicityProfile monotonicity_scan(double alpha, std::size_t n_max) {
  if (!(alpha > 0.0)) throw DomainError("monotonicity_scan: alpha must be > 0");
  const auto p = p_eval(alpha, n_max);
  MonotonicityProfile prof;
  prof.alpha = alpha;
  prof.n_max = n_max;
  prof.turning_index = n_max;
  for (std::size_t n = 1; n < n_max; ++n) {
    if (p.values[n + 1] >= p.values[n]) {
      prof.turning_index = n;
      break;
    }
  }
  prof.increasing_after_turn = true;
  for (std::size_t n = prof.turning_index; n < n_max; ++n) {
    if (p.values[n + 1] < p.values[n]) {
      prof.increasing_after_turn = false;
      break;
    }
  }
  return prof;
}

}  // namespace cmphi
