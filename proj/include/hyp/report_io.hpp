#pragma once

// CSV and JSON writers for reports. Numbers are printed with %.17g so that
// identical runs give byte-identical files.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <string>

#include <json.hpp>

#include "hyp/errors.hpp"
#include "hyp/report.hpp"

namespace hyp {

using ReportHeader = std::map<std::string, std::string>;

inline constexpr const char* report_dir_env = "HYP_REPORT_DIR";

// Output directory: $HYP_REPORT_DIR when set, else ./reports.
inline std::filesystem::path report_dir() {
  const char* e = std::getenv(report_dir_env);
  return (e && *e) ? std::filesystem::path(e) : std::filesystem::path("reports");
}

inline std::string num17(double x) {
  char b[40];
  std::snprintf(b, sizeof b, "%.17g", x);
  return b;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char c : s) {
    if (c == '"') o += '"';
    o += c;
  }
  return o + "\"";
}

inline void write_csv(std::ostream& os, const Report& rep, const ReportHeader& header) {
  for (const auto& [k, v] : header) os << "# " << k << "=" << v << "\n";
  os << "check_id,anchor,lhs,rhs,tol,rel_err,pass\n";
  for (const auto& r : rep.rows)
    os << csv_field(r.check_id) << ',' << csv_field(r.ref) << ',' << num17(r.lhs) << ',' << num17(r.rhs) << ','
       << num17(r.tol) << ',' << num17(r.rel_err) << ',' << (r.pass ? "true" : "false") << "\n";
}

inline nlohmann::ordered_json report_json(const Report& rep, const ReportHeader& header) {
  nlohmann::ordered_json j;
  j["header"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : header) j["header"][k] = v;
  j["rows"] = nlohmann::ordered_json::array();
  // non-finite values have no JSON literal; they are written as strings
  auto val = [](double x) -> nlohmann::ordered_json {
    if (std::isfinite(x)) return x;
    return num17(x);
  };
  for (const auto& r : rep.rows) {
    nlohmann::ordered_json o;
    o["check_id"] = r.check_id;
    o["anchor"] = r.ref;
    o["lhs"] = val(r.lhs);
    o["rhs"] = val(r.rhs);
    o["tol"] = val(r.tol);
    o["rel_err"] = val(r.rel_err);
    o["pass"] = r.pass;
    o["note"] = r.note;
    j["rows"].push_back(std::move(o));
  }
  j["all_pass"] = rep.all_pass();
  return j;
}

inline void write_json(std::ostream& os, const Report& rep, const ReportHeader& header) {
  os << report_json(rep, header).dump(2) << "\n";
}

inline void write_report(const std::filesystem::path& path, const Report& rep, const ReportHeader& header,
                         const std::string& format) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw domain_error("cannot open report file " + path.string());
  if (format == "json")
    write_json(f, rep, header);
  else
    write_csv(f, rep, header);
}

}  // namespace hyp
