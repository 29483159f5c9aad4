#include "cmphi/contour.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmphi/analytic.hpp"
#include "cmphi/errors.hpp"

namespace cmphi {
namespace {

constexpr double kPi = 3.141592653589793;
constexpr double kTwoPi = 6.283185307179586;
const cplx kI(0.0, 1.0);

std::size_t edge_panels(double s_abs, double length) {
  return static_cast<std::size_t>(std::ceil((1.0 + s_abs) * length / 4.0));
}

std::vector<double> uniform_breaks(double a, double b, std::size_t panels) {
  std::vector<double> br(panels + 1);
  for (std::size_t i = 0; i <= panels; ++i) br[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(panels);
  br.back() = b;
  return br;
}

// [0, r] with the first panel refined geometrically toward 0, where f(iy)
// has a y log|y| term.
std::vector<double> graded_breaks(double r, std::size_t panels, int levels = 48) {
  const double first = r / static_cast<double>(panels);
  std::vector<double> br{0.0};
  for (int k = levels; k >= 1; --k) br.push_back(std::ldexp(first, -k));
  const auto rest = uniform_breaks(0.0, r, panels);
  br.insert(br.end(), rest.begin() + 1, rest.end());
  return br;
}

// (0, 2 pi) refined toward both ends. theta = 0 is where the circle meets the
// cut nearest the origin; h_alpha changes on the scale 1/alpha there.
std::vector<double> circle_breaks(std::size_t panels) {
  const std::size_t half = std::max<std::size_t>(1, panels / 2);
  auto br = graded_breaks(kPi, half, 24);
  for (std::size_t i = br.size() - 1; i-- > 0;) br.push_back(kTwoPi - br[i]);
  return br;
}

}  // namespace

ContourSpec ContourSpec::rectangle(double r, double c) {
  ContourSpec s;
  s.kind = Kind::rectangle;
  s.r = r;
  s.c = c;
  s.validate();
  return s;
}

ContourSpec ContourSpec::circle_for(double alpha) {
  if (!(alpha > 1.0)) throw DomainError("circle contour needs alpha > 1");
  ContourSpec s;
  s.kind = Kind::circle;
  s.radius = 1.0 - 1.0 / alpha;
  return s;
}

void ContourSpec::validate() const {
  if (kind == Kind::rectangle) {
    if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("rectangle contour: r must be positive");
    if (!(c > 1.0) || !std::isfinite(c)) throw std::invalid_argument("rectangle contour: c must exceed 1");
  } else if (!(radius > 0.0 && radius < 1.0)) {
    throw std::invalid_argument("circle contour: radius must lie in (0, 1)");
  }
}

namespace {

// Quadrature nodes on the rectangle, weights including dz/(2 pi i).
struct Node {
  cplx z;
  cplx w;
};

void add_panel_nodes(std::vector<Node>& out, const GaussRule& rule, double a, double b,
                     const std::function<cplx(double)>& path, cplx dz) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    out.push_back({path(mid + half * rule.nodes[i]), rule.weights[i] * half * dz / (kTwoPi * kI)});
  }
}

void add_edge(std::vector<Node>& coarse, std::vector<Node>& fine, const GaussRule& rule,
              const std::vector<double>& breaks, const std::function<cplx(double)>& path, cplx dz) {
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i], b = breaks[i + 1], m = 0.5 * (a + b);
    add_panel_nodes(coarse, rule, a, b, path, dz);
    add_panel_nodes(fine, rule, a, m, path, dz);
    add_panel_nodes(fine, rule, m, b, path, dz);
  }
}

// Positively oriented: right edge up, top edge left, left edge down, bottom edge right.
void rect_nodes(double r, double c, double s_abs, std::size_t scale, std::size_t order, std::vector<Node>& coarse,
                std::vector<Node>& fine) {
  const GaussRule& rule = gauss_rule(order);
  const std::size_t pv = edge_panels(s_abs, r) * scale;
  const std::size_t ph = edge_panels(s_abs, c) * scale;
  const std::size_t pl = edge_panels(s_abs, 2 * r) * scale;
  const auto g = graded_breaks(r, pv);
  add_edge(coarse, fine, rule, g, [](double y) { return cplx(0.0, y); }, kI);
  add_edge(coarse, fine, rule, g, [](double y) { return cplx(0.0, -y); }, kI);  // y -> -y flips the limits too
  const auto bh = uniform_breaks(-c, 0.0, ph);
  add_edge(coarse, fine, rule, bh, [r](double x) { return cplx(x, r); }, -1.0);
  add_edge(coarse, fine, rule, uniform_breaks(-r, r, pl), [c](double y) { return cplx(-c, y); }, -kI);
  add_edge(coarse, fine, rule, bh, [r](double x) { return cplx(x, -r); }, 1.0);
}

struct NodeValues {
  std::vector<cplx> z;
  std::vector<cplx> wf;  // w * f(z) * z^k
};

NodeValues prepare(cplx alpha, const std::vector<Node>& nodes, unsigned k) {
  NodeValues nv;
  nv.z.reserve(nodes.size());
  nv.wf.reserve(nodes.size());
  for (const auto& n : nodes) {
    cplx v = n.w * f_alpha(alpha, n.z);
    for (unsigned j = 0; j < k; ++j) v *= n.z;
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw QuadratureError("phi_rect: non-finite integrand");
    nv.z.push_back(n.z);
    nv.wf.push_back(v);
  }
  return nv;
}

cplx contour_sum(const NodeValues& nv, cplx s) {
  cplx sum = 0.0;
  for (std::size_t i = 0; i < nv.z.size(); ++i) sum += nv.wf[i] * std::exp(s * nv.z[i]);
  return sum;
}

}  // namespace

PhiValue phi_rect(cplx alpha, cplx s, const ContourSpec& spec, const ContourOptions& opts) {
  spec.validate();
  if (spec.kind != ContourSpec::Kind::rectangle) throw std::invalid_argument("phi_rect: needs a rectangle spec");
  cplx value;
  double est = 0.0;
  std::size_t used = 0;
  for (int d = 0; d <= opts.max_doublings; ++d) {
    std::vector<Node> coarse, fine;
    rect_nodes(spec.r, spec.c, std::abs(s), std::size_t{1} << d, opts.order, coarse, fine);
    const cplx vc = contour_sum(prepare(alpha, coarse, opts.ds_order), s);
    value = contour_sum(prepare(alpha, fine, opts.ds_order), s);
    est = std::abs(value - vc);
    used = coarse.size() + fine.size();
    if (est <= opts.tol) break;
    if (d == opts.max_doublings) {
      throw ToleranceError("phi_rect: estimate " + std::to_string(est) + " above tolerance " +
                           std::to_string(opts.tol));
    }
  }
  PhiValue out;
  out.value = value;
  out.error_bound = est;
  out.rigorous = false;
  out.n_used = used;
  out.method = Method::rectangle;
  out.magnitude = std::abs(out.value);
  return out;
}

ContourGrid phi_rect_grid(cplx alpha, std::span<const double> s, const ContourSpec& spec, const ContourOptions& opts) {
  spec.validate();
  ContourGrid g;
  g.values.resize(s.size());
  g.error_estimate.resize(s.size());
  if (s.empty()) return g;
  double s_max = 0.0;
  for (double x : s) s_max = std::max(s_max, std::fabs(x));
  std::vector<Node> coarse, fine;
  rect_nodes(spec.r, spec.c, s_max, 1, opts.order, coarse, fine);
  const NodeValues nc = prepare(alpha, coarse, opts.ds_order);
  const NodeValues nf = prepare(alpha, fine, opts.ds_order);
  g.n_nodes = coarse.size() + fine.size();
  for (std::size_t i = 0; i < s.size(); ++i) {
    g.values[i] = contour_sum(nf, s[i]);
    g.error_estimate[i] = std::abs(g.values[i] - contour_sum(nc, s[i]));
  }
  return g;
}

QuadResult circle_integral(const std::function<cplx(cplx)>& g, cplx center, double radius, std::size_t n_nodes,
                           std::size_t order) {
  if (!(radius > 0.0)) throw std::invalid_argument("circle_integral: radius must be positive");
  const std::size_t panels = std::max<std::size_t>(1, (n_nodes + order - 1) / order);
  const auto br = circle_breaks(panels);
  QuadResult q = gauss_legendre_panels(
      [&](double th) {
        const cplx e = std::polar(1.0, th);
        return g(center + radius * e) * radius * e;  // dz = i radius e dth; the i cancels 1/(2 pi i)
      },
      br, order);
  q.value /= kTwoPi;
  q.est_error /= kTwoPi;
  return q;
}

std::size_t circle_nodes(cplx s) {
  const double n = std::max(256.0, 16.0 * (1.0 + std::abs(s)));
  return static_cast<std::size_t>(std::ceil(n / 32.0)) * 32;
}

QuadResult phi_circle_term(double alpha, cplx s, std::size_t n_nodes) {
  const ContourSpec spec = ContourSpec::circle_for(alpha);
  if (n_nodes == 0) n_nodes = circle_nodes(s);
  return circle_integral([&](cplx z) { return h_alpha(alpha, z) * std::exp(s * z); }, cplx(-1.0, 0.0), spec.radius,
                         n_nodes);
}

QuadResult cm_part(double alpha, cplx s, unsigned k, double tol) {
  if (!(alpha > 1.0)) throw DomainError("cm_part: needs alpha > 1");
  TanhSinhOptions o;
  o.tol = tol;
  // x = t/alpha on t in (0, 1); sin(alpha pi x) = sin(pi t) = sin(pi (1 - t)).
  QuadResult q = tanh_sinh(
      [&](double t, double tc) {
        const double x = t / alpha;
        const double logratio = std::log(x) - std::log1p(-x);
        const double u = std::exp(alpha * x * logratio) * std::sin(kPi * std::min(t, tc));
        return std::pow(x, static_cast<double>(k)) * u * std::exp(-s * x) / (kPi * alpha);
      },
      o);
  return q;
}

PhiValue phi_decomposed(double alpha, cplx s, double tol) {
  const QuadResult first = cm_part(alpha, s, 0, tol * 0.1);
  std::size_t n = circle_nodes(s);
  QuadResult circ = phi_circle_term(alpha, s, n);
  for (int d = 0; d < 6 && circ.est_error > 0.5 * tol; ++d) {
    n *= 2;
    circ = phi_circle_term(alpha, s, n);
  }
  PhiValue out;
  out.value = first.value - circ.value;
  out.error_bound = first.est_error + circ.est_error;
  out.rigorous = false;
  out.n_used = first.nodes_used + circ.nodes_used;
  out.method = Method::decomposition;
  out.magnitude = std::abs(first.value) + std::abs(circ.value);
  return out;
}

ContourGrid phi_decomposed_grid(double alpha, std::span<const double> s, unsigned k) {
  if (!(alpha > 1.0)) throw DomainError("phi_decomposed_grid: needs alpha > 1");
  ContourGrid g;
  g.values.resize(s.size());
  g.error_estimate.resize(s.size());
  if (s.empty()) return g;
  double s_max = 0.0;
  for (double x : s) s_max = std::max(s_max, std::fabs(x));
  constexpr std::size_t kOrder = 32;
  const GaussRule& rule = gauss_rule(kOrder);

  // Nodes and weights with the s-independent factor folded in; e^{s t} at each node.
  struct Sum {
    std::vector<cplx> t, wf;
  };
  Sum cm_coarse, cm_fine, ci_coarse, ci_fine;
  const double end = 1.0 / alpha;
  auto cm_panel = [&](Sum& out, double a, double b) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double x = mid + half * rule.nodes[i];
      const double u = std::exp(alpha * x * (std::log(x) - std::log1p(-x))) * std::sin(kPi * alpha * (end - x));
      out.t.push_back(-x);
      out.wf.push_back(rule.weights[i] * half * std::pow(-x, static_cast<double>(k)) * u / kPi);
    }
  };
  const auto br = graded_breaks(end, edge_panels(s_max * end, 8.0));
  for (std::size_t i = 0; i + 1 < br.size(); ++i) {
    const double m = 0.5 * (br[i] + br[i + 1]);
    cm_panel(cm_coarse, br[i], br[i + 1]);
    cm_panel(cm_fine, br[i], m);
    cm_panel(cm_fine, m, br[i + 1]);
  }
  const double radius = 1.0 - 1.0 / alpha;
  auto ci_panel = [&](Sum& out, double a, double b) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const cplx e = std::polar(1.0, mid + half * rule.nodes[i]);
      const cplx z = -1.0 + radius * e;
      cplx v = rule.weights[i] * half * radius * e * h_alpha(alpha, z) / kTwoPi;
      for (unsigned j = 0; j < k; ++j) v *= z;
      out.t.push_back(z);
      out.wf.push_back(-v);
    }
  };
  const std::size_t panels = circle_nodes(s_max) / kOrder;
  const auto bc = circle_breaks(panels);
  for (std::size_t i = 0; i + 1 < bc.size(); ++i) {
    const double m = 0.5 * (bc[i] + bc[i + 1]);
    ci_panel(ci_coarse, bc[i], bc[i + 1]);
    ci_panel(ci_fine, bc[i], m);
    ci_panel(ci_fine, m, bc[i + 1]);
  }
  g.n_nodes = cm_coarse.t.size() + cm_fine.t.size() + ci_coarse.t.size() + ci_fine.t.size();
  auto eval = [](const Sum& sum, double sv) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < sum.t.size(); ++i) acc += sum.wf[i] * std::exp(sv * sum.t[i]);
    return acc;
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    const cplx fine = eval(cm_fine, s[i]) + eval(ci_fine, s[i]);
    const cplx coarse = eval(cm_coarse, s[i]) + eval(ci_coarse, s[i]);
    g.values[i] = fine;
    g.error_estimate[i] = std::abs(fine - coarse);
  }
  return g;
}

PhiValue phi_auto(cplx alpha, cplx s, double tol) {
  const bool real_in = alpha.imag() == 0.0 && s.imag() == 0.0;
  constexpr double kDDUnit = 0x1p-104;
  constexpr double kDoubleUnit = 0x1p-53;
  try {
    SeriesOptions so;
    so.precision = real_in ? Precision::extended : Precision::standard;
    const double unit = real_in ? kDDUnit : kDoubleUnit;
    PhiValue v = phi(alpha, s, tol * 0.1, so);
    const double roundoff = 16.0 * std::sqrt(static_cast<double>(v.n_used) + 1.0) * unit * v.magnitude;
    if (roundoff <= 0.5 * tol) {
      v.error_bound += roundoff;
      return v;
    }
  } catch (const ToleranceError&) {
    // Too many terms for the cap: fall through to the contour.
  }
  ContourOptions co;
  co.tol = tol;
  return phi_rect(alpha, s, ContourSpec::rectangle(), co);
}

}  // namespace cmphi
