#include <doctest.h>

#include <cmath>
#include <complex>

#include "cmphi/analytic.hpp"
#include "cmphi/errors.hpp"
#include "gen.hpp"

using cmphi::cplx;
using cmphi::testing::rel_err;

namespace {
const double kE = std::exp(1.0);
const double kPi = 3.141592653589793;
}  // namespace

TEST_CASE("h_alpha at simple points") {
  CHECK(std::abs(cmphi::h_alpha(1.0, 1.0) - 2.0) < 1e-15);
  CHECK(std::abs(cmphi::h_alpha(3.0, 1.0) - 8.0) < 1e-14);
  const cplx want = std::exp(kPi / 4) * cplx(std::cos(0.5 * std::log(2.0)), std::sin(0.5 * std::log(2.0)));
  CHECK(rel_err(cmphi::h_alpha(1.0, cplx(0, 1)), want) < 1e-15);
  CHECK_THROWS_AS(cmphi::h_alpha(1.0, -0.5), cmphi::DomainError);
  CHECK_THROWS_AS(cmphi::CutPlanePoint(cplx(-1.0, 0.0)), cmphi::DomainError);
  CHECK_NOTHROW(cmphi::CutPlanePoint(cplx(-0.5, 1e-300)));
}

TEST_CASE("f_alpha values and limits") {
  CHECK(std::abs(cmphi::f_alpha(1.0, 1.0) - (kE - 2.0)) < 1e-15);
  CHECK(std::abs(cmphi::f_alpha(2.0, 0.0) - (std::exp(2.0) - 1.0)) < 1e-14);
  CHECK(std::abs(cmphi::f_alpha(2.0, cplx(1e-12, 1e-12)) - (std::exp(2.0) - 1.0)) < 1e-9);
  CHECK_THROWS_AS(cmphi::f_alpha(1.0, -0.25), cmphi::DomainError);
  const cplx far = cmphi::f_alpha(1.0, 100.0);
  CHECK(std::abs(far.real() / (0.5 * kE / 100.0) - 1.0) < 0.02);
  // Large |z|: relative accuracy against the convergent Laurent series.
  for (double r : {10.0, 1e3, 1e8}) {
    const cplx z = std::polar(r, 0.7);
    const auto l = cmphi::laurent_f(1.3, z, 60);
    CHECK(rel_err(cmphi::f_alpha(1.3, z), l.value) < 1e-13);
  }
}

TEST_CASE("g_alpha") {
  CHECK(cmphi::g_alpha(1.0, 0.0) == cplx(0.0, 0.0));
  CHECK(std::abs(cmphi::g_alpha(1.0, 0.5) - (kE - 2.25)) < 1e-15);
  CHECK_THROWS_AS(cmphi::g_alpha(1.0, 1.0), cmphi::DomainError);
  cmphi::testing::Gen g(31);
  for (int i = 0; i < 200; ++i) {
    const cplx a = g.disk(3.0);
    const cplx w = std::polar(0.3, g.uniform(-kPi, kPi));
    CHECK(std::abs(cmphi::g_alpha(a, w) - cmphi::f_alpha(a, 1.0 / w)) <= 1e-13 * std::max(1.0, std::abs(std::exp(a))));
  }
}

TEST_CASE("Laurent expansion") {
  const auto l = cmphi::laurent_f(1.0, 10.0, 30);
  CHECK(std::abs(l.value - cmphi::f_alpha(1.0, 10.0)) < 1e-12);
  CHECK(l.tail_bound < 1e-12);
  CHECK(cmphi::laurent_f(0.0, cplx(3, 4), 10).value == cplx(0.0, 0.0));
  const double lead = std::exp(2.0) / 50.0;
  CHECK(std::abs(cmphi::f_alpha(2.0, 50.0).real() / lead - 1.0) < 0.03);
  CHECK_THROWS_AS(cmphi::laurent_f(5.0, 4.0, 10), cmphi::DomainError);
}

TEST_CASE("reflection, multiplicativity, boundary decay") {
  cmphi::testing::Gen g(32);
  for (int i = 0; i < 300; ++i) {
    const double a = g.uniform(-3.0, 6.0);
    const cplx z = g.annulus(0.05, 20.0);
    if (cmphi::on_cut_segment(z)) continue;
    CHECK(std::abs(cmphi::f_alpha(a, std::conj(z)) - std::conj(cmphi::f_alpha(a, z))) <=
          1e-13 * std::max(1.0, std::exp(a)));
    const cplx alpha = g.disk(2.0), beta = g.disk(2.0);
    CHECK(rel_err(cmphi::h_alpha(alpha + beta, z), cmphi::h_alpha(alpha, z) * cmphi::h_alpha(beta, z)) < 1e-12);
  }
  for (double a : {0.5, 2.0}) {
    double prev = 1e300;
    for (double y : {1e2, 1e3, 1e4}) {
      const cplx f = cmphi::f_alpha(a, cplx(0.0, y));
      const cplx lead = 0.5 * a * std::exp(a) / cplx(0.0, y);
      CHECK(std::abs(f) < prev);
      CHECK(std::abs(f - lead) <= 2.0 * std::abs(lead) / y * (1 + a * a));
      prev = std::abs(f);
    }
  }
}

TEST_CASE("boundary probe") {
  CHECK(cmphi::im_boundary_probe(3.0, 0.5, 1e-4) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(cmphi::im_boundary_probe(0.5, 0.5, 1e-4) == doctest::Approx(-std::sin(0.25 * kPi)).epsilon(1e-3));
  double prev = 1e300;
  for (double r : {1e-2, 1e-3, 1e-4}) {
    const double d = std::fabs(cmphi::im_boundary_probe(3.0, 0.5, r) - 1.0);
    CHECK(d < prev);
    prev = d;
  }
}

TEST_CASE("complex expm1") {
  const cplx x(1e-10, 1e-10);
  CHECK(std::abs(cmphi::expm1(x) - (x + x * x / 2.0)) < 1e-29);
  CHECK(rel_err(cmphi::expm1(cplx(1.0, 2.0)), std::exp(cplx(1.0, 2.0)) - 1.0) < 1e-15);
}
