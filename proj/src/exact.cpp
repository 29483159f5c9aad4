#include "cmphi/exact.hpp"

#include <string>

#include "cmphi/errors.hpp"

namespace cmphi {
namespace {

void check_budget(const mpq_class& q, const ExactOptions& opts) {
  const std::size_t bits = mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
  if (bits > opts.bit_budget) {
    throw ResourceError("exact rational needs " + std::to_string(bits) + " bits, budget is " +
                        std::to_string(opts.bit_budget));
  }
}

mpq_class weight(std::size_t k) { return mpq_class(static_cast<unsigned long>(k + 1), static_cast<unsigned long>(k + 2)); }

mpz_class factorial(std::size_t n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

}  // namespace

mpq_class CoeffTable::evaluate(std::size_t n, const mpq_class& alpha) const {
  const auto& c = rows_.at(n);
  mpq_class acc = 0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * alpha + c[k];
  return acc;
}

std::complex<double> CoeffTable::evaluate(std::size_t n, std::complex<double> alpha) const {
  const auto& c = rows_.at(n);
  std::complex<double> acc = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * alpha + c[k].get_d();
  return acc;
}

CoeffTable coeff_table(std::size_t n_max, const ExactOptions& opts) {
  std::vector<std::vector<mpq_class>> rows(n_max + 1);
  rows[0] = {mpq_class(1)};
  for (std::size_t n = 0; n < n_max; ++n) {
    // c_{n+1, j} = 1/(n+1) sum_k w_k c_{n-k, j-1}
    std::vector<mpq_class> next(n + 2, mpq_class(0));
    for (std::size_t k = 0; k <= n; ++k) {
      const auto& src = rows[n - k];
      const mpq_class w = weight(k);
      for (std::size_t j = 0; j < src.size(); ++j) next[j + 1] += w * src[j];
    }
    const mpq_class inv(1, static_cast<unsigned long>(n + 1));
    for (auto& c : next) {
      c *= inv;
      c.canonicalize();
      check_budget(c, opts);
    }
    rows[n + 1] = std::move(next);
  }
  return CoeffTable(std::move(rows));
}

StirlingTable::StirlingTable(std::size_t p_max) : rows_(p_max + 1) {
  rows_[0] = {mpz_class(1)};
  for (std::size_t p = 0; p < p_max; ++p) {
    auto& next = rows_[p + 1];
    next.assign(p + 2, mpz_class(0));
    const auto& cur = rows_[p];
    const mpz_class pp(static_cast<unsigned long>(p));
    for (std::size_t m = 0; m <= p + 1; ++m) {
      if (m >= 1) next[m] += cur[m - 1];
      if (m <= p) next[m] -= pp * cur[m];
    }
  }
}

mpq_class coeff_stirling(std::size_t n, std::size_t k, const StirlingTable& table, const ExactOptions& opts) {
  if (k < 1 || k > n) throw DomainError("coeff_stirling: need 1 <= k <= n");
  if (table.p_max() < n + k) throw DomainError("coeff_stirling: Stirling table too small");
  mpq_class acc = 0;
  for (std::size_t m = 1; m <= k; ++m) {
    mpq_class term(table(n + m, m), factorial(n + m) * factorial(k - m));
    term.canonicalize();
    if (m % 2 == 1) acc -= term;
    else acc += term;
  }
  if ((n - k) % 2 == 1) acc = -acc;
  check_budget(acc, opts);
  return acc;
}

mpq_class coeff_stirling(std::size_t n, std::size_t k, const ExactOptions& opts) {
  if (k < 1 || k > n) throw DomainError("coeff_stirling: need 1 <= k <= n");
  const StirlingTable table(n + k);
  return coeff_stirling(n, k, table, opts);
}

std::vector<mpq_class> p_exact(const mpq_class& alpha, std::size_t n_max, const ExactOptions& opts) {
  std::vector<mpq_class> p(n_max + 1);
  p[0] = 1;
  for (std::size_t n = 0; n < n_max; ++n) {
    mpq_class acc = 0;
    for (std::size_t k = 0; k <= n; ++k) acc += weight(k) * p[n - k];
    p[n + 1] = alpha * acc / mpq_class(static_cast<unsigned long>(n + 1));
    p[n + 1].canonicalize();
    check_budget(p[n + 1], opts);
  }
  return p;
}

mpq_class harmonic(std::size_t m) {
  mpq_class h = 0;
  for (std::size_t j = 1; j <= m; ++j) h += mpq_class(1, static_cast<unsigned long>(j));
  return h;
}

}  // namespace cmphi
