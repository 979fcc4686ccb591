// Prints one PASS/FAIL line per acceptance criterion.
//
//   acceptance [--seed S] [--expect-fail 7,...] [--out path]
//
// Exit status is 0 when the failing criteria are exactly the expected ones.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "hyp/report_io.hpp"
#include "hyp/suites.hpp"

using namespace hyp;

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  unsigned long long seed = 1;
  std::vector<int> expect_fail;
  std::string out;
  app.add_option("--seed", seed);
  app.add_option("--expect-fail", expect_fail, "criteria known to fail")->delimiter(',');
  app.add_option("--out", out, "report path (default $HYP_REPORT_DIR/acceptance.csv)");
  CLI11_PARSE(app, argc, argv);

  std::vector<double> eps{0.4, 0.2, 0.1, 0.05};
  struct Criterion {
    std::string title;
    std::function<Report()> run;
  };
  std::vector<Criterion> cs{
      {"resolvent quadrature vs closed forms", [] { return resolvent_checks(); }},
      {"H^5 product kernel: resolvent difference and bound", [] { return product_kernel_checks(); }},
      {"heat kernel: closed form, mass, semigroup", [] { return heat_checks(); }},
      {"Plancherel isometry, round trip, densities", [] { return transform_checks(); }},
      {"exact recursion, conjugation sweep, ball identity", [&] { return exact_checks(8, seed); }},
      {"constants S_3, gamma(4)", [] { return constants_checks(5, 2); }},
      {"sharpness probe (5,2) and deficit battery", [&] { return sharpness_checks(5, 2, eps); }},
      {"HLS battery and concentrating family", [] { return hls_checks(1.0, {0.4, 0.2, 0.1}); }},
      {"Riesz composition bound and Euclidean identity", [] { return riesz_checks(); }},
      {"fractional kernels, biharmonic identity, gap ratio",
       [] {
         Report r = fractional_kernel_checks();
         r.append(biharmonic_checks());
         return r;
       }},
      {"Q_k inverse kernel routes and bound", [] { return qk_inverse_checks(); }},
  };

  Report all;
  std::set<int> failed;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    int id = static_cast<int>(i) + 1;
    auto t0 = std::chrono::steady_clock::now();
    Report r;
    try {
      r = cs[i].run();
    } catch (const std::exception& e) {
      r.add(flag_row("criterion" + std::to_string(id) + ".error", "none", false, 0, 0, e.what()));
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = r.all_pass();
    if (!ok) failed.insert(id);
    std::printf("criterion %2d: %s  %s (%zu rows, %.1fs)\n", id, ok ? "PASS" : "FAIL", cs[i].title.c_str(), r.rows.size(), dt);
    for (const auto& row : r.failures())
      std::printf("    %s lhs=%.10g rhs=%.10g rel_err=%.3g tol=%.3g %s\n", row.check_id.c_str(), row.lhs, row.rhs,
                  row.rel_err, row.tol, row.note.c_str());
    std::fflush(stdout);
    for (auto row : r.rows) {
      row.check_id = "c" + std::string(id < 10 ? "0" : "") + std::to_string(id) + "." + row.check_id;
      all.add(row);
    }
  }
  all.sort();
  write_report(out.empty() ? report_dir() / "acceptance.csv" : std::filesystem::path(out), all,
               {{"seed", std::to_string(seed)}, {"suite", "acceptance"}}, "csv");

  std::set<int> expected(expect_fail.begin(), expect_fail.end());
  std::printf("%zu/%zu criteria pass\n", cs.size() - failed.size(), cs.size());
  if (!expected.empty() && failed == expected) std::printf("failures match the documented set\n");
  return failed == expected ? 0 : 1;
}
