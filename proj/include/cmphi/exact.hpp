#pragma once

// Exact rational constructions of the coefficients c_{n,k} in
// p_n(alpha) = sum_{k=1..n} c_{n,k} alpha^k, used as test oracles for the
// floating-point recursion.
//
// Two independent routes:
//   * coeff_table   runs the p_n recursion symbolically in alpha;
//   * coeff_stirling evaluates the closed form in signed Stirling numbers of
//     the first kind,
//       c_{n,k} = (-1)^{n-k} sum_{m=1..k} (-1)^m s(n+m, m) / ((n+m)! (k-m)!).

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <vector>

namespace cmphi {

struct ExactOptions {
  /// Maximum numerator+denominator size of a single rational, in bits.
  std::size_t bit_budget = std::size_t{8} * 1024 * 1024;  // 1 MiB
};

class CoeffTable {
 public:
  CoeffTable() = default;
  explicit CoeffTable(std::vector<std::vector<mpq_class>> rows) : rows_(std::move(rows)) {}

  [[nodiscard]] std::size_t n_max() const { return rows_.empty() ? 0 : rows_.size() - 1; }

  /// c_{n,k}; k = 0 is the constant term (1 for n = 0, else 0).
  [[nodiscard]] const mpq_class& at(std::size_t n, std::size_t k) const { return rows_.at(n).at(k); }
  [[nodiscard]] const std::vector<mpq_class>& row(std::size_t n) const { return rows_.at(n); }

  /// p_n(alpha) evaluated exactly.
  [[nodiscard]] mpq_class evaluate(std::size_t n, const mpq_class& alpha) const;
  /// p_n(alpha) by Horner in floating point (oracle use only: it cancels for
  /// complex alpha and overflows the factorial scale for large n).
  [[nodiscard]] std::complex<double> evaluate(std::size_t n, std::complex<double> alpha) const;

 private:
  std::vector<std::vector<mpq_class>> rows_;
};

CoeffTable coeff_table(std::size_t n_max, const ExactOptions& opts = {});

/// Signed Stirling numbers of the first kind s(p, m), 0 <= m <= p <= p_max,
/// built by s(p+1, m) = s(p, m-1) - p s(p, m). Immutable after construction,
/// so one table can be shared between threads.
class StirlingTable {
 public:
  explicit StirlingTable(std::size_t p_max);
  [[nodiscard]] std::size_t p_max() const { return rows_.size() - 1; }
  [[nodiscard]] const mpz_class& operator()(std::size_t p, std::size_t m) const { return rows_.at(p).at(m); }

 private:
  std::vector<std::vector<mpz_class>> rows_;
};

/// c_{n,k} from the Stirling closed form; requires 1 <= k <= n.
mpq_class coeff_stirling(std::size_t n, std::size_t k, const StirlingTable& table, const ExactOptions& opts = {});
mpq_class coeff_stirling(std::size_t n, std::size_t k, const ExactOptions& opts = {});

/// p_0..p_{n_max} at a rational alpha, by the recursion in exact arithmetic.
std::vector<mpq_class> p_exact(const mpq_class& alpha, std::size_t n_max, const ExactOptions& opts = {});

/// H_m = 1 + 1/2 + ... + 1/m.
mpq_class harmonic(std::size_t m);

}  // namespace cmphi
