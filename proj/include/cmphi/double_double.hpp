#pragma once

// Double-double arithmetic: an unevaluated sum hi + lo of two doubles with
// |lo| <= ulp(hi)/2, giving roughly 106 bits of significand.
//
// All building blocks are error-free transformations (two_sum, two_prod via
// fma). The translation units using this header must be compiled without
// floating-point contraction (-ffp-contract=off), otherwise the compiler may
// fuse the residual computations and break exactness.

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace cmphi {

/// s + e == a + b exactly, s = fl(a + b).
inline void two_sum(double a, double b, double& s, double& e) noexcept {
  s = a + b;
  const double bb = s - a;
  e = (a - (s - bb)) + (b - bb);
}

/// Requires |a| >= |b| (or a == 0).
inline void fast_two_sum(double a, double b, double& s, double& e) noexcept {
  s = a + b;
  e = b - (s - a);
}

/// p + e == a * b exactly, p = fl(a * b).
inline void two_prod(double a, double b, double& p, double& e) noexcept {
  p = a * b;
  e = std::fma(a, b, -p);
}

struct DD {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DD() = default;
  constexpr DD(double h) : hi(h), lo(0.0) {}  // NOLINT: implicit widening is intended
  constexpr DD(double h, double l) : hi(h), lo(l) {}

  explicit constexpr operator double() const { return hi + lo; }

  DD& operator+=(const DD& b) noexcept;
  DD& operator-=(const DD& b) noexcept;
  DD& operator*=(const DD& b) noexcept;
  DD& operator/=(const DD& b) noexcept;
};

inline DD renorm(double hi, double lo) noexcept {
  DD r;
  fast_two_sum(hi, lo, r.hi, r.lo);
  return r;
}

inline DD operator-(const DD& a) noexcept { return {-a.hi, -a.lo}; }

inline DD operator+(const DD& a, const DD& b) noexcept {
  double s, e, t, f;
  two_sum(a.hi, b.hi, s, e);
  two_sum(a.lo, b.lo, t, f);
  e += t;
  fast_two_sum(s, e, s, e);
  e += f;
  return renorm(s, e);
}

inline DD operator-(const DD& a, const DD& b) noexcept { return a + (-b); }

/// DD times a double.
inline DD mul_d(const DD& a, double b) noexcept {
  double p, e;
  two_prod(a.hi, b, p, e);
  e = std::fma(a.lo, b, e);
  return renorm(p, e);
}

inline DD operator*(const DD& a, const DD& b) noexcept {
  double p, e;
  two_prod(a.hi, b.hi, p, e);
  e += a.hi * b.lo + a.lo * b.hi;
  return renorm(p, e);
}

inline DD operator/(const DD& a, const DD& b) noexcept {
  const double q1 = a.hi / b.hi;
  DD r = a - b * DD(q1);
  const double q2 = r.hi / b.hi;
  r -= b * DD(q2);
  const double q3 = r.hi / b.hi;
  DD q = renorm(q1, q2);
  return q + DD(q3);
}

inline DD& DD::operator+=(const DD& b) noexcept { return *this = *this + b; }
inline DD& DD::operator-=(const DD& b) noexcept { return *this = *this - b; }
inline DD& DD::operator*=(const DD& b) noexcept { return *this = *this * b; }
inline DD& DD::operator/=(const DD& b) noexcept { return *this = *this / b; }

inline bool operator==(const DD& a, const DD& b) noexcept { return a.hi == b.hi && a.lo == b.lo; }
inline std::partial_ordering operator<=>(const DD& a, const DD& b) noexcept {
  if (auto c = a.hi <=> b.hi; c != 0) return c;
  return a.lo <=> b.lo;
}

inline DD abs(const DD& a) noexcept { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? -a : a; }
inline bool isfinite(const DD& a) noexcept { return std::isfinite(a.hi) && std::isfinite(a.lo); }
inline double to_double(const DD& a) noexcept { return a.hi + a.lo; }
inline double to_double(double a) noexcept { return a; }

inline DD sqrt(const DD& a) {
  if (a.hi <= 0.0) return DD(std::sqrt(a.hi));
  const double x = std::sqrt(a.hi);
  // One Newton step in DD: x + (a - x^2) / (2x).
  DD x2;
  two_prod(x, x, x2.hi, x2.lo);
  const DD corr = (a - x2) / DD(2.0 * x);
  return DD(x) + corr;
}

/// Parses a plain decimal literal ("-2.2996564432534613033", "1e-3").
DD dd_from_string(std::string_view text);

/// Formats with `digits` significant decimal digits in scientific-free form
/// when the exponent is small.
std::string to_string(const DD& a, int digits = 32);

}  // namespace cmphi
