#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "cmphi/errors.hpp"
#include "cmphi/roots.hpp"
#include "cmphi/series.hpp"

using cmphi::cplx;
using cmphi::DD;

namespace {
const DD kAlphaStar = cmphi::dd_from_string("2.29965644325346130332");
const DD kSStar = cmphi::dd_from_string("5.27004875227613237103");

void check_report(const cmphi::ZeroReport& r) {
  const cmphi::TildeField field(r.alpha, r.scan_range.second);
  for (std::size_t i = 0; i < r.zeros.size(); ++i) {
    const auto& z = r.zeros[i];
    CHECK(z.s > 0.0);
    if (i > 0) CHECK(z.s > r.zeros[i - 1].s);
    if (z.multiplicity == 2) CHECK(i + 1 == r.zeros.size());
    CHECK(z.residual <= 1e-10 * std::exp(r.alpha) * std::max(1.0, std::fabs(z.derivative_at_zero)));
    if (z.multiplicity == 1) {
      CHECK(z.derivative_at_zero != 0.0);
      const double d = 1e-6 * std::max(1.0, z.s);
      CHECK(field.value(z.s - d) * field.value(z.s + d) < 0.0);
    }
  }
}
}  // namespace

TEST_CASE("zero counts") {
  for (double alpha : {0.5, 1.0, 2.0, 2.29}) CHECK(cmphi::positive_zeros(alpha).count() == 0);
  for (double alpha : {2.31, 3.0, 5.0}) {
    const auto r = cmphi::positive_zeros(alpha);
    CHECK(r.count() >= 2);
    check_report(r);
  }
  const auto r24 = cmphi::positive_zeros(2.4);
  REQUIRE(r24.count() == 2);
  CHECK(r24.zeros[0].multiplicity == 1);
  CHECK(r24.zeros[1].multiplicity == 1);
  CHECK(r24.zeros[0].s < 5.27);
  CHECK(r24.zeros[0].s > 4.0);
  CHECK(cmphi::positive_zeros(5.9).count() == 2);
  const auto r61 = cmphi::positive_zeros(6.1);
  CHECK(r61.count() == 4);
  check_report(r61);
  const auto r40 = cmphi::positive_zeros(40.0);
  CHECK(r40.count() >= 10);
  check_report(r40);
}

TEST_CASE("first zero is simple with negative slope and decreases in alpha") {
  double prev = INFINITY;
  for (double alpha : {2.35, 2.5, 3.0, 4.0, 6.0, 10.0, 20.0, 40.0}) {
    const auto r = cmphi::positive_zeros(alpha);
    REQUIRE(r.count() >= 1);
    CHECK(r.zeros[0].multiplicity == 1);
    CHECK(r.zeros[0].derivative_at_zero < 0.0);
    CHECK(r.zeros[0].s < prev);
    prev = r.zeros[0].s;
  }
}

TEST_CASE("zero scan options") {
  cmphi::ZeroScanOptions o;
  o.s_max = 10.0;
  o.grid_step = 0.5;
  const auto r = cmphi::positive_zeros(3.0, o);
  CHECK(r.count() == 2);
  CHECK(r.scan_range.second == 10.0);
  CHECK(r.grid_step <= 0.5);
  const auto fine = cmphi::positive_zeros(3.0);
  for (std::size_t i = 0; i < 2; ++i) CHECK(std::fabs(r.zeros[i].s - fine.zeros[i].s) < 1e-12 * fine.zeros[i].s);
  CHECK_THROWS_AS(cmphi::positive_zeros(0.0), cmphi::DomainError);
  o.s_max = -1.0;
  CHECK_THROWS_AS(cmphi::positive_zeros(3.0, o), std::invalid_argument);
}

TEST_CASE("field agrees with the series in its range") {
  const cmphi::TildeField field(6.1, 50.0);
  CHECK(field.series_limit() > 5.0);
  CHECK(field.series_limit() < 50.0);
  const cmphi::SeriesOptions dd{cmphi::Precision::extended, 0};
  for (double s : {0.5, 3.0, field.series_limit() - 1.0}) {
    CHECK(std::fabs(field.value(s) - cmphi::phi_tilde(6.1, s, 0, 1e-30, dd).real()) < 1e-15);
  }
  const std::vector<double> s{0.0, 2.0, field.series_limit() + 1.0, 45.0};
  const auto g = field.grid(s);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(std::fabs(g[i] - field.value(s[i])) < 1e-14);
}

TEST_CASE("double zero in double mode") {
  const auto c = cmphi::alpha_star(cmphi::SolveMode::double_precision);
  CHECK(c.converged);
  CHECK(std::fabs(to_double(c.alpha_star - kAlphaStar)) <= 1e-12);
  CHECK(std::fabs(to_double(c.s_star - kSStar)) <= 1e-11);
  const double bound = 1e-12 * std::exp(to_double(c.alpha_star));
  CHECK(c.residual_value <= bound);
  CHECK(c.residual_ds <= bound);
  CHECK(c.iterations < 10);
}

TEST_CASE("double zero in double-double mode") {
  const auto c = cmphi::alpha_star(cmphi::SolveMode::double_double);
  CHECK(c.converged);
  CHECK(std::fabs(to_double(c.alpha_star - kAlphaStar)) <= 1e-18);
  CHECK(std::fabs(to_double(c.s_star - kSStar)) <= 1e-18);
  CHECK(c.mode == cmphi::SolveMode::double_double);
}

TEST_CASE("zeros appear across the double zero") {
  const double a = to_double(kAlphaStar);
  CHECK(cmphi::positive_zeros(a - 1e-6).count() == 0);
  const auto above = cmphi::positive_zeros(a + 1e-6);
  REQUIRE(above.count() == 2);
  CHECK(std::fabs(above.zeros[0].s - to_double(kSStar)) < 0.01);
  CHECK(std::fabs(above.zeros[1].s - to_double(kSStar)) < 0.01);
}

TEST_CASE("Bessel J1 zeros") {
  const auto j = cmphi::bessel_j1_zeros(20);
  REQUIRE(j.size() == 20);
  CHECK(std::fabs(j[0] - 3.8317059702) < 1e-9);
  for (std::size_t k = 0; k < j.size(); ++k) {
    CHECK(std::fabs(cmphi::bessel_j1(j[k])) <= 1e-12);
    CHECK(std::fabs(std::cyl_bessel_j(1.0, j[k])) <= 1e-12);
    if (k > 0) CHECK(j[k] > j[k - 1]);
  }
  for (double x : {0.3, 2.0, 11.7, 40.0}) CHECK(std::fabs(cmphi::bessel_j1(x) - std::cyl_bessel_j(1.0, x)) < 1e-14);
  for (std::size_t k = 0; k < 5; ++k) CHECK(std::abs(cmphi::bessel_kernel(j[k] * j[k] / 2)) < 1e-10);
  CHECK_THROWS_AS(cmphi::bessel_j1_zeros(21), std::invalid_argument);
}

TEST_CASE("Lambert points") {
  const auto x1 = cmphi::lambert_xi(1);
  CHECK(x1.converged);
  // the reference digits are truncated, not rounded
  CHECK(std::fabs(x1.value.real() - 2.08884) < 1e-5);
  CHECK(std::fabs(x1.value.imag() + 7.46148) < 1e-5);
  CHECK(x1.residual <= 1e-12);
  const auto x2 = cmphi::lambert_xi(2);
  CHECK(std::fabs(x2.value.real() - 2.66406) < 1e-5);
  CHECK(std::fabs(x2.value.imag() + 13.87905) < 1e-5);
  for (int k : {1, 2, 3, 7}) {
    const auto a = cmphi::lambert_xi(k);
    const auto b = cmphi::lambert_xi(-k - 1);
    CHECK(b.value == std::conj(a.value));
    CHECK(b.residual <= 1e-12);
    CHECK(std::abs(1.0 + a.value - std::exp(a.value)) <= 1e-12);
  }
  CHECK(std::abs(cmphi::limit_w(x1.value)) <= 1e-10 * std::abs(x1.value));
  CHECK_THROWS_AS(cmphi::lambert_xi(0), cmphi::DomainError);
  CHECK_THROWS_AS(cmphi::lambert_xi(-1), cmphi::DomainError);
}

TEST_CASE("scaled zeros approach Bessel zeros") {
  const auto j = cmphi::bessel_j1_zeros(2);
  const double target1 = j[0] * j[0] / 2;
  const double target2 = j[1] * j[1] / 2;
  double prev = INFINITY;
  for (double alpha : {50.0, 100.0, 200.0}) {
    const double dev = std::fabs(cmphi::scaled_zero_check(alpha, 1) - target1);
    CHECK(dev < prev);
    prev = dev;
  }
  CHECK(prev < 0.02 * target1);
  CHECK(std::fabs(cmphi::scaled_zero_check(100.0, 2) - target2) < 0.05 * target2);
  CHECK_THROWS_AS(cmphi::scaled_zero_check(100.0, 0), std::invalid_argument);
}
