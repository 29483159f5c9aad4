#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmphi/contour.hpp"
#include "cmphi/errors.hpp"
#include "cmphi/polynomials.hpp"
#include "cmphi/roots.hpp"
#include "cmphi/series.hpp"
#include "cmphi/stieltjes.hpp"
#include "cmphi/verify.hpp"

namespace cmphi::cli {
namespace {

using json = nlohmann::json;

struct RunConfig {
  std::string precision = "double";
  double tol = 0.0;  // 0: per-command default
  double s_max = 50.0;
  std::string out = ".";
  std::string format = "text";
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string num(cplx v) {
  if (v.imag() == 0.0) return num(v.real());
  return num(v.real()) + (v.imag() < 0 ? "-" : "+") + num(std::fabs(v.imag())) + "i";
}

json to_json(cplx v) {
  if (v.imag() == 0.0) return v.real();
  return json{{"re", v.real()}, {"im", v.imag()}};
}

// ---- eval ----

struct EvalRow {
  std::string method;
  PhiValue v;
};

int cmd_eval(double alpha, double s, const std::string& method, const RunConfig& cfg, std::ostream& out) {
  const bool dd = cfg.precision == "dd";
  std::vector<EvalRow> rows;
  auto run = [&](const std::string& m) {
    if (m == "series") {
      const double tol = cfg.tol > 0 ? cfg.tol : (dd ? 1e-30 : 1e-15);
      rows.push_back({m, phi(alpha, s, tol, SeriesOptions{dd ? Precision::extended : Precision::standard, 0})});
    } else if (m == "rectangle") {
      ContourOptions o;
      if (cfg.tol > 0) o.tol = cfg.tol;
      rows.push_back({m, phi_rect(alpha, s, ContourSpec::rectangle(), o)});
    } else if (m == "stieltjes") {
      rows.push_back({m, phi_stieltjes(alpha, s, cfg.tol > 0 ? cfg.tol : 1e-13)});
    } else if (m == "decomposition") {
      rows.push_back({m, phi_decomposed(alpha, s, cfg.tol > 0 ? cfg.tol : 1e-11)});
    } else if (m == "auto") {
      rows.push_back({m, phi_auto(alpha, s, cfg.tol > 0 ? cfg.tol : 1e-12)});
    }
  };
  if (method == "all") {
    run("series");
    run("rectangle");
    if (alpha > 0.0 && alpha <= 1.0) run("stieltjes");
    if (alpha > 1.0) run("decomposition");
  } else {
    run(method);
  }
  double disc = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j) disc = std::max(disc, std::abs(rows[i].v.value - rows[j].v.value));

  if (cfg.format == "json") {
    json j{{"alpha", alpha}, {"s", s}, {"results", json::array()}};
    for (const auto& r : rows) {
      j["results"].push_back({{"method", r.method},
                              {"value", to_json(r.v.value)},
                              {"error_bound", r.v.error_bound},
                              {"n_used", r.v.n_used},
                              {"rigorous", r.v.rigorous},
                              {"magnitude", r.v.magnitude}});
    }
    if (rows.size() > 1) j["max_discrepancy"] = disc;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : rows) {
      out << "method=" << r.method << " value=" << num(r.v.value) << " error_bound=" << num(r.v.error_bound)
          << " n_used=" << r.v.n_used << " rigorous=" << (r.v.rigorous ? "true" : "false")
          << " magnitude=" << num(r.v.magnitude) << "\n";
    }
    if (rows.size() > 1) out << "max_discrepancy=" << num(disc) << "\n";
  }
  return kOk;
}

// ---- figures ----

struct Record {
  double alpha, s, phi;
};

std::vector<double> span_grid(double a, double b, double h) {
  std::vector<double> s;
  const auto n = static_cast<std::size_t>(std::llround((b - a) / h));
  for (std::size_t i = 0; i <= n; ++i) s.push_back(a + static_cast<double>(i) * h);
  return s;
}

void add_curve(std::vector<Record>& recs, double alpha, const std::vector<double>& s) {
  const double end = *std::max_element(s.begin(), s.end());
  const TildeField field(alpha, std::max(end, 1.0));
  const auto v = field.grid(s);
  const double scale = std::exp(alpha);
  for (std::size_t i = 0; i < s.size(); ++i) recs.push_back({alpha, s[i], v[i] * scale});
}

void write_records(const std::filesystem::path& path, const std::vector<Record>& recs, bool as_json) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  if (as_json) {
    json j = json::array();
    for (const auto& r : recs) j.push_back({{"alpha", r.alpha}, {"s", r.s}, {"phi", r.phi}});
    f << j.dump(1) << "\n";
  } else {
    f << "alpha,s,phi\n";
    for (const auto& r : recs) f << num(r.alpha) << "," << num(r.s) << "," << num(r.phi) << "\n";
  }
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

int cmd_figures(const RunConfig& cfg, std::ostream& out) {
  const bool as_json = cfg.format == "json";
  const std::filesystem::path dir(cfg.out);
  std::filesystem::create_directories(dir);
  const double a_star = to_double(alpha_star(SolveMode::double_precision).alpha_star);

  std::vector<std::vector<Record>> figs(6);
  for (double a : {0.8, 1.0, 1.2}) add_curve(figs[0], a, span_grid(0.0, 10.0, 0.05));
  for (double a : {a_star - 0.1, a_star, a_star + 0.1}) add_curve(figs[1], a, span_grid(0.0, 12.0, 0.01));
  for (double a : {2.31, 2.35, 2.4, 2.5, 2.75, 3.0, 3.5, 4.0, 5.0, 6.0, 8.0, 10.0, 15.0, 20.0, 30.0, 40.0}) {
    const auto r = positive_zeros(a);
    const double s1 = r.zeros.at(0).s;
    figs[2].push_back({a, s1, TildeField(a, s1 + 1.0).value(s1) * std::exp(a)});
  }
  for (double a : {5.9, 5.95, 5.988, 6.0, 6.1}) add_curve(figs[3], a, span_grid(0.0, 16.0, 0.02));
  for (double a : {8.0, 12.0, 16.0, 20.0}) add_curve(figs[4], a, span_grid(0.0, 30.0, 0.05));
  {
    auto s = span_grid(0.0, 5.0, 0.005);
    for (double x : span_grid(5.0, 20.0, 0.01)) if (x > 5.0) s.push_back(x);
    for (double x : span_grid(20.0, 50.0, 0.02)) if (x > 20.0) s.push_back(x);
    add_curve(figs[5], 40.0, s);
  }
  for (std::size_t i = 0; i < figs.size(); ++i) {
    const auto path = dir / ("fig" + std::to_string(i + 1) + (as_json ? ".json" : ".csv"));
    write_records(path, figs[i], as_json);
    out << "wrote " << path.string() << " (" << figs[i].size() << " rows)\n";
  }
  return kOk;
}

// ---- alpha-star, zeros, verify, moments ----

int cmd_alpha_star(const RunConfig& cfg, std::ostream& out) {
  const bool dd = cfg.precision == "dd";
  const auto c = alpha_star(dd ? SolveMode::double_double : SolveMode::double_precision);
  const int digits = dd ? 30 : 17;
  if (cfg.format == "json") {
    out << json{{"alpha_star", to_string(c.alpha_star, digits)},
                {"s_star", to_string(c.s_star, digits)},
                {"precision", cfg.precision},
                {"iterations", c.iterations},
                {"converged", c.converged},
                {"residual_phi", c.residual_value},
                {"residual_dphi", c.residual_ds}}
               .dump(2)
        << "\n";
  } else {
    out << "alpha_star=" << to_string(c.alpha_star, digits) << "\n"
        << "s_star=" << to_string(c.s_star, digits) << "\n"
        << "precision=" << cfg.precision << " iterations=" << c.iterations
        << " converged=" << (c.converged ? "true" : "false") << "\n"
        << "residual_phi=" << num(c.residual_value) << " residual_dphi=" << num(c.residual_ds) << "\n";
  }
  return c.converged ? kOk : kCheckFailure;
}

int cmd_zeros(double alpha, const RunConfig& cfg, std::ostream& out) {
  ZeroScanOptions o;
  o.s_max = cfg.s_max;
  const auto r = positive_zeros(alpha, o);
  if (cfg.format == "json") {
    json j{{"alpha", alpha}, {"s_max", cfg.s_max}, {"grid_step", r.grid_step}, {"zeros", json::array()}};
    for (const auto& z : r.zeros) {
      j["zeros"].push_back({{"s", z.s},
                            {"multiplicity", z.multiplicity},
                            {"residual", z.residual},
                            {"derivative", z.derivative_at_zero}});
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  if (r.zeros.empty()) {
    out << "no positive zeros in (0, " << num(cfg.s_max) << "]\n";
    return kOk;
  }
  for (std::size_t k = 0; k < r.zeros.size(); ++k) {
    const auto& z = r.zeros[k];
    out << "zero " << k + 1 << " s=" << num(z.s) << " multiplicity=" << z.multiplicity
        << " residual=" << num(z.residual) << " derivative=" << num(z.derivative_at_zero) << "\n";
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto results = default_suite();
  bool ok = true;
  json j = json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (cfg.format == "json") {
      j.push_back({{"name", r.name},
                   {"passed", r.passed},
                   {"measured", to_json(r.measured)},
                   {"expected", to_json(r.expected)},
                   {"tol", r.tolerance},
                   {"est_error", r.est_error},
                   {"runtime_ms", r.runtime_ms},
                   {"note", r.note}});
    } else {
      out << "CHECK " << r.name << " " << (r.passed ? "PASS" : "FAIL") << " measured=" << num(r.measured)
          << " expected=" << num(r.expected) << " tol=" << num(r.tolerance) << "\n";
    }
  }
  if (cfg.format == "json") out << j.dump(2) << "\n";
  return ok ? kOk : kCheckFailure;
}

int cmd_moments(double alpha, int n_max, const RunConfig& cfg, std::ostream& out) {
  const double tol = cfg.tol > 0 ? cfg.tol : 1e-13;
  const auto p = p_eval<double>(alpha, static_cast<std::size_t>(n_max) + 2);
  json j = json::array();
  for (int n = -1; n <= n_max; ++n) {
    const double m = moment(alpha, n, tol);
    // n = -1 is compared with 1 - e^{-alpha}, not p_0
    const double ref = n < 0 ? -std::expm1(-alpha) : p.values[static_cast<std::size_t>(n) + 1];
    if (cfg.format == "json") {
      j.push_back({{"n", n}, {"moment", m}, {"reference", ref}, {"difference", m - ref}});
    } else {
      out << "n=" << n << " moment=" << num(m) << " reference=" << num(ref) << " difference=" << num(m - ref) << "\n";
    }
  }
  if (cfg.format == "json") out << j.dump(2) << "\n";
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"phi_alpha evaluation, zeros, the double zero alpha*, and identity checks"};
  app.require_subcommand(1);
  RunConfig cfg;
  double alpha = 0.0, s = 0.0;
  int n_max = 5;
  std::string method = "series";

  auto precision_opt = [&](CLI::App* c) {
    c->add_option("--precision", cfg.precision, "double or dd")->check(CLI::IsMember({"double", "dd"}));
  };
  auto format_opt = [&](CLI::App* c, std::vector<std::string> allowed) {
    c->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(allowed));
  };
  auto tol_opt = [&](CLI::App* c) { c->add_option("--tol", cfg.tol, "tolerance")->check(CLI::PositiveNumber); };

  auto* eval = app.add_subcommand("eval", "evaluate phi_alpha(s)");
  eval->add_option("--alpha", alpha, "alpha")->required();
  eval->add_option("--s", s, "s")->required();
  eval->add_option("--method", method, "series, rectangle, stieltjes, decomposition, auto or all")
      ->check(CLI::IsMember({"series", "rectangle", "stieltjes", "decomposition", "auto", "all"}));
  precision_opt(eval);
  tol_opt(eval);
  format_opt(eval, {"text", "json"});

  auto* figures = app.add_subcommand("figures", "write fig1..fig6 data");
  figures->add_option("--out", cfg.out, "output directory");
  std::string fig_format = "csv";
  figures->add_option("--format", fig_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* astar = app.add_subcommand("alpha-star", "solve for the double zero (alpha*, s*)");
  precision_opt(astar);
  format_opt(astar, {"text", "json"});

  auto* zeros = app.add_subcommand("zeros", "positive zeros of phi_alpha");
  zeros->add_option("--alpha", alpha, "alpha")->required()->check(CLI::PositiveNumber);
  zeros->add_option("--smax", cfg.s_max, "scan range (0, smax]")->check(CLI::PositiveNumber);
  format_opt(zeros, {"text", "json"});

  auto* verify = app.add_subcommand("verify", "run the identity suite");
  format_opt(verify, {"text", "json"});

  auto* moments = app.add_subcommand("moments", "Hausdorff moments against p_{n+1}");
  moments->add_option("--alpha", alpha, "alpha in (0, 1]")->required();
  moments->add_option("--n", n_max, "largest n")->check(CLI::Range(0, 40));
  tol_opt(moments);
  format_opt(moments, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }
  if (figures->parsed()) cfg.format = fig_format;

  try {
    if (eval->parsed()) return cmd_eval(alpha, s, method, cfg, out);
    if (figures->parsed()) return cmd_figures(cfg, out);
    if (astar->parsed()) return cmd_alpha_star(cfg, out);
    if (zeros->parsed()) return cmd_zeros(alpha, cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (moments->parsed()) return cmd_moments(alpha, n_max, cfg, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailure;
  }
  return kUsageError;
}

}  // namespace cmphi::cli
