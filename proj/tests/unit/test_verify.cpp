#include <doctest.h>

#include <cmath>
#include <set>

#include "cmphi/verify.hpp"

using namespace cmphi;

TEST_CASE("make_check is componentwise") {
  CHECK(make_check("a", {1.0, 0.0}, {1.0 + 5e-8, 0.0}, 1e-7).passed);
  CHECK_FALSE(make_check("a", {1.0, 2e-7}, {1.0, 0.0}, 1e-7).passed);
  CHECK_FALSE(make_check("a", {1.0, 0.0}, {1.0, 0.0}, 1e-7).name.empty());
}

TEST_CASE("laplace identity") {
  // (alpha, x): examples from the validation set
  for (const auto& [a, x] : {std::pair{0.5, 1.0}, std::pair{1.0, 1.0}, std::pair{2.0, 3.0}}) {
    const auto r = laplace_identity(a, x);
    INFO(r.name, " measured ", r.measured.real(), " expected ", r.expected.real());
    CHECK(r.passed);
    CHECK(std::fabs(r.measured.real() - r.expected.real()) <= 1e-7);
    CHECK(r.est_error < 1e-7);
  }
  // a tiny cutoff leaves most of the mass out
  CHECK_FALSE(laplace_identity(1.0, 1.0, 1.0).passed);
  CHECK_THROWS(laplace_identity(1.0, -1.0));
}

TEST_CASE("mass identity") {
  for (const auto& [a, tol] : {std::pair{0.5, 1e-7}, std::pair{1.0, 1e-8}, std::pair{2.29, 1e-6}}) {
    const auto r = mass_identity(a, tol);
    INFO(r.name, " measured ", r.measured.real(), " expected ", r.expected.real());
    CHECK(r.passed);
    CHECK(r.expected.real() == doctest::Approx(std::expm1(a)).epsilon(1e-15));
  }
  CHECK_THROWS(mass_identity(0.0));
  CHECK_THROWS(mass_identity(3.0));
}

TEST_CASE("cm classification") {
  const auto one = cm_classify(1.0);
  CHECK(one.verdict == CmVerdict::completely_monotonic);
  CHECK(one.zeros.zeros.empty());
  CHECK(one.min_value > 0);

  const auto three = cm_classify(3.0);
  CHECK(three.verdict == CmVerdict::not_cm);
  CHECK(three.zeros.zeros.size() == 2);
  CHECK(three.min_value < 0);

  const auto star = cm_classify(2.2996564432534613);
  CHECK(star.verdict == CmVerdict::boundary);
  CHECK(star.min_s == doctest::Approx(5.27004875227613).epsilon(1e-6));
  CHECK(std::string(verdict_name(star.verdict)) == "boundary");
}

TEST_CASE("default suite") {
  const auto suite = default_suite();
  CHECK(suite.size() >= 20);
  std::set<std::string> names;
  for (const auto& c : suite) {
    INFO(c.name, " ", c.note);
    CHECK(c.passed);
    CHECK(c.name.find(' ') == std::string::npos);
    CHECK(c.runtime_ms >= 0.0);
    names.insert(c.name);
  }
  CHECK(names.size() == suite.size());
}
