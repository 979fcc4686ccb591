// hypcheck: run verification suites, print constants, tabulate kernels.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "hyp/report_io.hpp"
#include "hyp/suites.hpp"
#include "hyp/tabulate.hpp"

namespace {

using namespace hyp;

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + num17(v[i]);
  return s;
}

void print_failures(const Report& rep) {
  for (const auto& r : rep.failures())
    std::cerr << "FAIL " << r.check_id << " [" << r.ref << "] lhs=" << num17(r.lhs) << " rhs=" << num17(r.rhs)
              << " rel_err=" << num17(r.rel_err) << " tol=" << num17(r.tol) << (r.note.empty() ? "" : " : " + r.note)
              << "\n";
}

int run_verify(const RunConfig& cfg) {
  ReportHeader h{{"suite", cfg.suite}, {"seed", std::to_string(cfg.seed)}, {"n", std::to_string(cfg.n)},
                 {"k", std::to_string(cfg.k)}, {"eps", join(cfg.eps)}, {"kmax", std::to_string(cfg.kmax)},
                 {"lambda", num17(cfg.lambda)}};
  std::filesystem::path out = cfg.out.empty() ? report_dir() / (cfg.suite + "." + cfg.format) : std::filesystem::path(cfg.out);
  Report rep;
  try {
    rep = run_suite(cfg);
  } catch (const std::exception& e) {
    rep.add(flag_row("suite.error", "none", false, 0, 0, e.what()));
  }
  write_report(out, rep, h, cfg.format);
  std::size_t bad = rep.failures().size();
  std::cout << cfg.suite << ": " << rep.rows.size() - bad << "/" << rep.rows.size() << " checks pass; report "
            << out.string() << "\n";
  print_failures(rep);
  return bad == 0 ? 0 : 1;
}

int run_constants(int n, int k) {
  check_sobolev_order(n, k);
  std::printf("S_{%d,%d}      = %.17g\n", n, k, sobolev_constant(n, k));
  std::printf("C_{%d,%d}      = %.17g\n", n, n - 2 * k, hls_constant(n, n - 2.0 * k));
  std::printf("gamma(%d)     = %.17g  (n = %d)\n", 2 * k, gamma_riesz(2.0 * k, n), n);
  std::printf("closed form   = %.17g\n", sobolev_constant_closed_form(n, k));
  auto rep = constants_checks(n, k);
  rep.sort();
  for (const auto& r : rep.rows)
    if (r.check_id == "constants.s3")
      std::printf("S_3 check     : gamma(2)/C_{3,1} = %.17g vs 3(pi/2)^(4/3) = %.17g  %s\n", r.lhs, r.rhs,
                  r.pass ? "PASS" : "FAIL");
  print_failures(rep);
  return rep.all_pass() ? 0 : 1;
}

KernelSpec make_spec(const std::string& kind, int n, double t, double lambda0, double alpha, int k) {
  if (kind == "heat") return {HeatSpec{t}, n};
  if (kind == "resolvent") return {ResolventSpec{lambda0}, n};
  if (kind == "limiting_green") return {LimitingGreenSpec{}, n};
  if (kind == "conformal_green") return {ConformalGreenSpec{}, n};
  if (kind == "frac_resolvent_h3") return {FracResolventH3Spec{alpha}, n};
  if (kind == "product_resolvent_h5") return {ProductResolventH5Spec{}, n};
  if (kind == "qk_inverse") return {QkInverseSpec{k}, n};
  throw domain_error("unknown kernel: " + kind);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification of hyperbolic-space kernels, transforms and inequalities"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto* verify = app.add_subcommand("verify", "run a verification suite and write a report");
  verify->add_option("--suite", cfg.suite, "geometry|kernels|transform|exact|inequalities|constants|all")
      ->check(CLI::IsMember({"geometry", "kernels", "transform", "exact", "inequalities", "constants", "all"}));
  verify->add_option("--n", cfg.n, "dimension for the inequality and constants checks");
  verify->add_option("--k", cfg.k, "order for the inequality and constants checks");
  verify->add_option("--lambda", cfg.lambda, "HLS exponent on H^3");
  verify->add_option("--eps", cfg.eps, "bubble concentration grid")->delimiter(',');
  verify->add_option("--kmax", cfg.kmax, "highest order in the sinh recursion check");
  verify->add_option("--seed", cfg.seed, "seed for randomized point batteries");
  verify->add_option("--format", cfg.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  verify->add_option("--out", cfg.out, "report path (default $HYP_REPORT_DIR/<suite>.<format>)");

  int cn = 5, ck = 2;
  auto* constants = app.add_subcommand("constants", "print sharp constants");
  constants->add_option("--n", cn);
  constants->add_option("--k", ck);

  std::string kind = "heat", tab_out;
  int tn = 3, tk = 2;
  double t = 1.0, lambda0 = 0.0, alpha = 2.0;
  std::vector<double> rhos{0.1, 0.5, 1.0, 2.0, 5.0};
  auto* tab = app.add_subcommand("tabulate_kernel", "tabulate a kernel with its reference values");
  tab->add_option("--kernel", kind,
                  "heat|resolvent|limiting_green|conformal_green|frac_resolvent_h3|product_resolvent_h5|qk_inverse");
  tab->add_option("--n", tn);
  tab->add_option("--t", t, "heat time");
  tab->add_option("--lambda0", lambda0, "resolvent shift");
  tab->add_option("--alpha", alpha, "fractional order");
  tab->add_option("--k", tk, "Q_k order");
  tab->add_option("--rho", rhos, "radii")->delimiter(',')->expected(0, -1);
  tab->add_option("--out", tab_out, "table path (default $HYP_REPORT_DIR/kernel_<name>.csv)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      cfg.validate();
      return run_verify(cfg);
    }
    if (*constants) return run_constants(cn, ck);
    if (*tab) {
      auto spec = make_spec(kind, tn, t, lambda0, alpha, tk);
      auto rows = tabulate_kernel(spec, rhos);
      std::filesystem::path out = tab_out.empty() ? report_dir() / ("kernel_" + spec.name() + ".csv") : std::filesystem::path(tab_out);
      if (out.has_parent_path()) std::filesystem::create_directories(out.parent_path());
      std::ofstream f(out, std::ios::binary);
      if (!f) throw domain_error("cannot open " + out.string());
      write_table_csv(f, rows);
      std::cout << rows.size() << " rows -> " << out.string() << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
