#include "cmphi/stieltjes.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cmphi/errors.hpp"
#include "cmphi/polynomials.hpp"

namespace cmphi {
namespace {

constexpr double kPi = 3.141592653589793;

void require_alpha(double alpha, const char* who) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError(std::string(who) + ": requires 0 < alpha <= 1");
}

// sin(alpha pi x), with the argument reduced against 1 when alpha x is near 1.
double sin_part(double alpha, double x, double t) {
  if (x <= 0.5) return std::sin(alpha * kPi * x);
  return std::sin(kPi * ((1.0 - alpha) + alpha * t));
}

// u(alpha, x) given both x and t = 1 - x.
double density_xt(double alpha, double x, double t) {
  const double expo = alpha * x * (std::log(x) - std::log(t));
  return std::exp(expo) * sin_part(alpha, x, t);
}

}  // namespace

double density(double alpha, double x) {
  require_alpha(alpha, "density");
  if (!(x > 0.0 && x < 1.0)) throw DomainError("density: requires 0 < x < 1");
  return density_xt(alpha, x, 1.0 - x);
}

QuadResult density_integral(double alpha, const std::function<cplx(double)>& w, double tol) {
  require_alpha(alpha, "density_integral");
  TanhSinhOptions o;
  o.tol = tol;
  // G(0) = lim t^alpha u w = sin(alpha pi) w(1); zero at alpha = 1.
  const bool subtract = alpha > 0.5 && alpha < 1.0;
  const cplx g0 = subtract ? std::sin(kPi * (1.0 - alpha)) * w(1.0) : cplx(0.0);
  QuadResult q = tanh_sinh(
      [&](double x, double t) -> cplx {
        cplx v = density_xt(alpha, x, t) * w(x);
        if (subtract) v -= std::pow(t, -alpha) * g0;
        return v / kPi;
      },
      o);
  if (subtract) q.value += g0 / ((1.0 - alpha) * kPi);
  return q;
}

PhiValue phi_stieltjes(double alpha, cplx s, double tol) {
  require_alpha(alpha, "phi_stieltjes");
  const QuadResult q = density_integral(alpha, [s](double x) { return std::exp(-s * x); }, tol);
  PhiValue out;
  out.value = q.value;
  if (alpha == 1.0) out.value += std::exp(-s);
  out.error_bound = q.est_error;
  out.rigorous = false;
  out.n_used = q.nodes_used;
  out.method = Method::stieltjes;
  out.magnitude = std::abs(out.value);
  return out;
}

cplx f_stieltjes(double alpha, CutPlanePoint zp, double tol) {
  require_alpha(alpha, "f_stieltjes");
  const cplx z = zp.value();
  cplx v = density_integral(alpha, [z](double x) { return 1.0 / (x + z); }, tol).value;
  if (alpha == 1.0) v += 1.0 / (z + 1.0);
  return v;
}

double moment(double alpha, int n, double tol) {
  require_alpha(alpha, "moment");
  if (n < -1) throw std::invalid_argument("moment: requires n >= -1");
  QuadResult q;
  if (n == -1) {
    // u/x stays bounded at 0 (u ~ alpha pi x).
    q = density_integral(alpha, [](double x) { return cplx(1.0 / x); }, tol);
  } else {
    q = density_integral(alpha, [n](double x) { return cplx(std::pow(x, n)); }, tol);
  }
  double v = std::exp(-alpha) * q.value.real();
  if (alpha == 1.0) v += std::exp(-1.0);
  return v;
}

HankelReport hankel_psd_check(double alpha, std::size_t m, double rel_tol) {
  if (!(alpha >= 0.0)) throw DomainError("hankel_psd_check: requires alpha >= 0");
  if (m == 0 || m > 8) throw std::invalid_argument("hankel_psd_check: requires 1 <= m <= 8");
  const auto seq = p_eval<DD>(DD(alpha), 2 * m + 2);
  std::vector<double> p(seq.values.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = to_double(seq.values[i]);

  Eigen::MatrixXd h0(m, m), h1(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      h0(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = p[i + j + 1];
      h1(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = p[i + j + 2];
    }

  HankelReport r;
  r.alpha = alpha;
  r.m = m;
  r.max_entry = std::max(h0.cwiseAbs().maxCoeff(), h1.cwiseAbs().maxCoeff());
  r.tol = rel_tol * r.max_entry;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> e0(h0, Eigen::EigenvaluesOnly), e1(h1, Eigen::EigenvaluesOnly);
  r.min_eig_h0 = e0.eigenvalues().minCoeff();
  r.min_eig_h1 = e1.eigenvalues().minCoeff();
  r.h0_psd = r.min_eig_h0 >= -r.tol;
  r.h1_psd = r.min_eig_h1 >= -r.tol;
  r.min_difference = p[1] - p[2];
  for (std::size_t n = 0; n + 2 < p.size(); ++n) r.min_difference = std::min(r.min_difference, p[n + 1] - p[n + 2]);
  r.hausdorff_ok = r.min_difference >= -r.tol;
  return r;
}

}  // namespace cmphi
