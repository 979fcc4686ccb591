#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "hyp/report_io.hpp"
#include "hyp/suites.hpp"
#include "hyp/tabulate.hpp"

using namespace hyp;

namespace {

Report sample_report() {
  Report r;
  r.add(agree_row("b.second", "ref-b", 1.0, 1.0 + 1e-12, 1e-9));
  r.add(bound_row("a.first", "ref-a", 2.0, 1.0, 0.0, "note, with comma"));
  r.sort();
  return r;
}

}  // namespace

TEST(ReportIo, CsvColumnsAndOrder) {
  std::ostringstream os;
  write_csv(os, sample_report(), {{"seed", "7"}});
  std::istringstream is(os.str());
  std::string l;
  std::getline(is, l);
  EXPECT_EQ(l, "# seed=7");
  std::getline(is, l);
  EXPECT_EQ(l, "check_id,anchor,lhs,rhs,tol,rel_err,pass");
  std::getline(is, l);
  EXPECT_EQ(l.rfind("a.first,ref-a,2,1,0,1,false", 0), 0u);
  std::getline(is, l);
  EXPECT_EQ(l.rfind("b.second,ref-b,", 0), 0u);
  EXPECT_NE(l.find(",true"), std::string::npos);
}

TEST(ReportIo, JsonRoundTrip) {
  std::ostringstream os;
  write_json(os, sample_report(), {{"seed", "7"}});
  auto j = nlohmann::json::parse(os.str());
  EXPECT_EQ(j["header"]["seed"], "7");
  ASSERT_EQ(j["rows"].size(), 2u);
  EXPECT_EQ(j["rows"][0]["check_id"], "a.first");
  EXPECT_EQ(j["rows"][0]["note"], "note, with comma");
  EXPECT_FALSE(j["all_pass"].get<bool>());
}

TEST(ReportIo, NonFiniteValuesStayValidJson) {
  Report r;
  r.add(agree_row("x", "y", std::nan(""), 1.0, 1e-9));
  std::ostringstream os;
  write_json(os, r, {});
  auto j = nlohmann::json::parse(os.str());
  EXPECT_FALSE(j["rows"][0]["pass"].get<bool>());
}

TEST(ReportIo, EnvironmentOverridesDirectory) {
  ::setenv(report_dir_env, "/tmp/hyp-x", 1);
  EXPECT_EQ(report_dir().string(), "/tmp/hyp-x");
  ::unsetenv(report_dir_env);
  EXPECT_EQ(report_dir().string(), "reports");
}

TEST(Tabulate, EmptyListGivesHeaderOnly) {
  std::ostringstream os;
  write_table_csv(os, tabulate_kernel(KernelSpec{HeatSpec{1.0}, 3}, {}));
  EXPECT_EQ(os.str(), "rho,value,reference,rel_err\n");
}

TEST(Tabulate, HeatAgainstClosedForm) {
  auto rows = tabulate_kernel(KernelSpec{HeatSpec{1.0}, 3}, {0.1, 1.0, 3.0});
  for (const auto& r : rows) {
    ASSERT_TRUE(r.reference.has_value());
    EXPECT_LT(r.rel_err(), 1e-12);
  }
}

TEST(Tabulate, ProductResolventTwoRoutes) {
  std::vector<double> rho;
  for (double r = 0.1; r <= 5.0 + 1e-12; r += 0.1) rho.push_back(r);
  for (const auto& r : tabulate_kernel(KernelSpec{ProductResolventH5Spec{}, 5}, rho)) EXPECT_LT(r.rel_err(), 1e-9) << r.rho;
}

TEST(Tabulate, NoReferenceLeavesBlank) {
  auto rows = tabulate_kernel(KernelSpec{HeatSpec{1.0}, 4}, {1.0});
  EXPECT_FALSE(rows[0].reference.has_value());
  std::ostringstream os;
  write_table_csv(os, rows);
  EXPECT_NE(os.str().find(",,\n"), std::string::npos);
  EXPECT_THROW(tabulate_kernel(KernelSpec{HeatSpec{1.0}, 3}, {-1.0}), domain_error);
}

TEST(RunConfig, Validation) {
  RunConfig c;
  EXPECT_NO_THROW(c.validate());
  c.suite = "nope";
  EXPECT_THROW(c.validate(), domain_error);
  c = RunConfig{};
  c.k = 3;
  EXPECT_THROW(c.validate(), domain_error);
  c = RunConfig{};
  c.eps = {0.1, 1.5};
  EXPECT_THROW(c.validate(), domain_error);
  c = RunConfig{};
  c.format = "xml";
  EXPECT_THROW(c.validate(), domain_error);
}

TEST(Suites, GeometryDeterministicInSeed) {
  auto a = geometry_checks(3), b = geometry_checks(3);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) EXPECT_EQ(a.rows[i].lhs, b.rows[i].lhs);
  EXPECT_TRUE(a.all_pass());
}

TEST(Suites, ByteIdenticalReports) {
  RunConfig c;
  c.suite = "exact";
  c.kmax = 4;
  std::ostringstream a, b;
  write_csv(a, run_suite(c), {{"seed", "1"}});
  write_csv(b, run_suite(c), {{"seed", "1"}});
  EXPECT_EQ(a.str(), b.str());
}

TEST(Suites, ConstantsAndMisprintRows) {
  auto r = constants_checks(5, 2);
  EXPECT_TRUE(r.all_pass());
  int misprints = 0;
  for (const auto& row : r.rows) misprints += row.check_id.rfind("misprint.", 0) == 0;
  EXPECT_EQ(misprints, 4);
}

TEST(Suites, RowsSorted) {
  RunConfig c;
  c.suite = "constants";
  auto r = run_suite(c);
  for (std::size_t i = 1; i < r.rows.size(); ++i) EXPECT_LE(r.rows[i - 1].check_id, r.rows[i].check_id);
}
