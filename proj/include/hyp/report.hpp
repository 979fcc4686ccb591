#pragma once

// One verification row and helpers shared by suites.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace hyp {

struct CheckRow {
  std::string check_id;
  std::string ref;  // short anchor for the statement being checked
  double lhs = 0.0;
  double rhs = 0.0;
  double tol = 0.0;
  double rel_err = 0.0;
  bool pass = false;
  std::string note;
};

inline double rel_diff(double a, double b) {
  double d = std::abs(a - b);
  double s = std::max(std::abs(a), std::abs(b));
  if (s == 0.0) return 0.0;
  return d / s;
}

// Relative agreement row.
inline CheckRow agree_row(std::string id, std::string ref, double lhs, double rhs, double tol, std::string note = {}) {
  CheckRow r{std::move(id), std::move(ref), lhs, rhs, tol, rel_diff(lhs, rhs), false, std::move(note)};
  r.pass = std::isfinite(r.rel_err) && r.rel_err <= tol;
  return r;
}

// lhs <= rhs * (1 + tol)
inline CheckRow bound_row(std::string id, std::string ref, double lhs, double rhs, double tol, std::string note = {}) {
  double excess = (rhs != 0.0) ? (lhs - rhs) / std::abs(rhs) : lhs - rhs;
  CheckRow r{std::move(id), std::move(ref), lhs, rhs, tol, excess, false, std::move(note)};
  r.pass = std::isfinite(lhs) && std::isfinite(rhs) && excess <= tol;
  return r;
}

inline CheckRow flag_row(std::string id, std::string ref, bool ok, double lhs = 0.0, double rhs = 0.0,
                         std::string note = {}) {
  CheckRow r{std::move(id), std::move(ref), lhs, rhs, 0.0, ok ? 0.0 : 1.0, ok, std::move(note)};
  return r;
}

struct Report {
  std::vector<CheckRow> rows;
  void add(CheckRow r) { rows.push_back(std::move(r)); }
  void append(const Report& o) { rows.insert(rows.end(), o.rows.begin(), o.rows.end()); }
  bool all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
  }
  std::vector<CheckRow> failures() const {
    std::vector<CheckRow> f;
    for (const auto& r : rows)
      if (!r.pass) f.push_back(r);
    return f;
  }
  void sort() {
    std::stable_sort(rows.begin(), rows.end(), [](const CheckRow& a, const CheckRow& b) { return a.check_id < b.check_id; });
  }
};

}  // namespace hyp
