// diskt: verification suite, closed-form transforms and norm estimates.
//
//   diskt verify [--max-degree D] [--format json|csv|table] ...
//   diskt transform P "1 + w*conj(w)"
//   diskt norm {2|pinf|1|rt} [--p P] [--grid radial:N]
//
// Exit codes: 0 all checks pass, 1 a check fails or a computation errors,
// 2 configuration or parse error.

#include <cmath>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "diskt/checks.hpp"
#include "diskt/extremal.hpp"
#include "diskt/polynomial_io.hpp"
#include "diskt/spectral.hpp"
#include "diskt/transforms.hpp"
#include "json.hpp"
#include "report.hpp"

namespace {

using namespace diskt;
using cli::Cell;
using cli::Report;

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_p(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "Inf") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double p = 0.0;
  try {
    p = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size()) throw ConfigError("--p: expected a number or 'inf', got '" + s + "'");
  return p;
}

std::vector<cplx> parse_grid(const std::string& s) {
  const std::string prefix = "radial:";
  if (s.rfind(prefix, 0) == 0) {
    const std::string n = s.substr(prefix.size());
    if (!n.empty() && n.find_first_not_of("0123456789") == std::string::npos) {
      const int count = std::stoi(n);
      if (count >= 1 && count <= 1000) return radial_grid(count, 1.0 / count);
    }
  }
  throw ConfigError("--grid: expected radial:N with 1 <= N <= 1000, got '" + s + "'");
}

std::string w_text(cplx w) {
  std::string s = cli::cell_text(w.real());
  if (w.imag() != 0.0) s += (w.imag() < 0 ? "-" : "+") + cli::cell_text(std::abs(w.imag())) + "i";
  return s;
}

int cmd_verify(const RunConfig& cfg, const std::string& format) {
  const auto rows = run_all(cfg);
  Report r{{"check_id", "paper_anchor", "expected", "computed", "abs_err", "tol", "status"}, {}};
  bool ok = true;
  for (const auto& row : rows) {
    ok = ok && !failed(row);
    r.rows.push_back({"AC" + std::to_string(row.criterion) + "." + row.check_id, row.paper_anchor, row.expected,
                      row.computed, row.abs_err, row.tol, std::string(to_string(row.status))});
  }
  cli::write(std::cout, r, format);
  return ok ? 0 : kExitFail;
}

int cmd_transform(const std::string& op, const std::string& text, const std::string& format) {
  const TransformKind kind = parse_transform(op);
  const ExactPolynomial out = apply(kind, parse_polynomial(text));
  const std::string pretty = to_pretty(out);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["operator"] = std::string(name(kind));
    j["input"] = text;
    auto& terms = j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [k, a] : out.terms())
      terms.push_back({{"m", k.m}, {"n", k.n}, {"re", a.re.get_str()}, {"im", a.im.get_str()}});
    j["pretty"] = pretty;
    std::cout << j.dump(2) << '\n';
  } else if (format == "csv") {
    Report r{{"m", "n", "re", "im"}, {}};
    for (const auto& [k, a] : out.terms())
      r.rows.push_back({long(k.m), long(k.n), a.re.get_str(), a.im.get_str()});
    cli::write_csv(std::cout, r);
  } else {
    std::cout << format_tuples(out) << pretty << '\n';
  }
  return 0;
}

struct NormParams {
  std::string kind;
  std::string p = "inf";
  std::string grid = "radial:5";
};

Report norm_report(const NormParams& np, const RunConfig& cfg) {
  Report r{{"quantity", "w", "estimate", "reference", "abs_err", "err_estimate", "truncation", "tol", "flag"}, {}};
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double eight_pi = 8.0 / std::numbers::pi;
  auto add = [&](std::string q, std::string w, double est, double ref, double err, std::string trunc, double tol,
                 std::string flag) {
    const double abs_err = std::isnan(ref) ? nan : std::abs(est - ref);
    r.rows.push_back({std::move(q), std::move(w), est, ref, abs_err, err, std::move(trunc), tol, std::move(flag)});
  };

  auto galerkin_rows = [&] {
    const double alpha = solve_alpha();
    add("alpha", "", alpha, 1.086, nan, "", 1e-13, "ROOT");
    std::vector<int> degrees;
    for (int d = 10; d < cfg.max_degree; d += 10) degrees.push_back(d);
    degrees.push_back(cfg.max_degree);
    for (int d : degrees) {
      const NormEstimate e = estimate_P_norm({d, std::nullopt}, cfg.eigen_tol);
      add("P_norm_2.galerkin", "", e.value, alpha, e.residual, "max_total_degree=" + std::to_string(d), cfg.eigen_tol,
          e.multiple ? "LOWER_BOUND;MULTIPLE" : "LOWER_BOUND");
    }
  };

  if (np.kind == "2") {
    galerkin_rows();
  } else if (np.kind == "pinf") {
    const double p = parse_p(np.p);
    if (std::isnan(p) || !(p > 2.0)) throw ConfigError("norm pinf: P does not map L^p into L^inf for p <= 2");
    const double closed = norm_p_to_inf(p);
    add("P_norm_p_to_inf.closed_form", "", closed, std::isinf(p) ? eight_pi : nan, nan, "p=" + np.p, 0.0, "EXACT");
    for (double z : {0.9, 0.99, 0.999})
      add("P_norm_p_to_inf.extremal_ratio", w_text(z), extremal_ratio_pinf(p, z, cfg.quad_tol * 0.1, 2 * cfg.budget),
          closed, nan, "p=" + np.p, cfg.quad_tol, "WITNESS");
  } else if (np.kind == "1") {
    const auto grid = parse_grid(np.grid);
    const L1Result l1 = l1_at_zero();
    add("P_norm_1.elliptic_form", "0", l1.value, 2.10441, l1.err_estimate, "r<=1-1e-8", 1e-10, "CONJECTURE");
    const L1Scan scan = l1_integrand_scan(grid, cfg.quad_tol, 2 * cfg.budget);
    for (std::size_t i = 0; i < scan.rows.size(); ++i) {
      const auto& row = scan.rows[i];
      std::string flag = row.w == cplx(0.0) ? "CONJECTURE" : "";
      if (i == scan.argmax) flag += flag.empty() ? "ARGMAX" : ";ARGMAX";
      add("P_norm_1.F", w_text(row.w), row.value, nan, row.err_estimate, np.grid, cfg.quad_tol, flag);
    }
  } else if (np.kind == "rt") {
    const double p = parse_p(np.p);
    if (std::isnan(p) || !(p >= 2.0)) throw ConfigError("norm rt: p must be >= 2");
    const double alpha = solve_alpha();
    const double ref = p == 2.0 ? alpha : std::isinf(p) ? eight_pi : nan;
    add("P_norm_p.riesz_thorin", "", riesz_thorin_bound(p, alpha), ref, nan, "p=" + np.p, 0.0, "UPPER_BOUND");
    if (p == 2.0) galerkin_rows();
    if (std::isinf(p)) add("P_norm_p_to_inf.closed_form", "", norm_p_to_inf(p), eight_pi, nan, "p=inf", 0.0, "EXACT");
  } else {
    throw ConfigError("norm: kind must be one of 2, pinf, 1, rt");
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-form disk operators, kernel quadrature and norm estimates"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "table";
  app.add_option("--max-degree", cfg.max_degree, "Galerkin truncation degree")->capture_default_str();
  app.add_option("--tol-quad", cfg.quad_tol, "Quadrature tolerance")->capture_default_str();
  app.add_option("--tol-eigen", cfg.eigen_tol, "Eigensolver tolerance")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--budget", cfg.budget, "Quadrature evaluation budget")->capture_default_str();
  app.add_option("--samples", cfg.samples, "Random samples per exact identity")->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run every check and report PASS/FAIL");

  std::string op, poly;
  auto* transform = app.add_subcommand("transform", "Apply an operator to a polynomial in w and conj(w)");
  transform->add_option("operator", op, "C, J0, J0star, P, S, B, H or T")->required();
  transform->add_option("polynomial", poly, "e.g. \"2*w^2*conj(w) - (1+2i)\" or \"(1, 0, 1, 0)\"")->required();

  NormParams np;
  auto* norm = app.add_subcommand("norm", "Norm estimates: 2, pinf, 1 or rt");
  norm->add_option("kind", np.kind, "2 | pinf | 1 | rt")->required()->check(CLI::IsMember({"2", "pinf", "1", "rt"}));
  norm->add_option("--p", np.p, "Exponent for pinf and rt; 'inf' allowed")->capture_default_str();
  norm->add_option("--grid", np.grid, "Grid for kind 1, radial:N")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    cfg.validate();
  } catch (const DomainError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (*verify) return cmd_verify(cfg, format);
    if (*transform) return cmd_transform(op, poly, format);
    if (*norm) {
      const Report r = norm_report(np, cfg);
      cli::write(std::cout, r, format);
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitFail;
}
