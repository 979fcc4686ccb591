#pragma once

// Kernel tables: value at each rho and an independent reference where one exists.

#include <cmath>
#include <optional>
#include <ostream>
#include <vector>

#include "hyp/kernels.hpp"
#include "hyp/report_io.hpp"

namespace hyp {

// Closed form or second route for the kernel, when available.
inline std::optional<double> kernel_reference(const KernelSpec& spec, double rho) {
  int n = spec.n;
  return std::visit(
      [&](const auto& v) -> std::optional<double> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, HeatSpec>) {
          if (n != 3) return std::nullopt;
          double ratio = rho < 1e-8 ? 1.0 : rho / std::sinh(rho);
          return std::pow(4 * pi * v.t, -1.5) * ratio * std::exp(-v.t - rho * rho / (4 * v.t));
        } else if constexpr (std::is_same_v<T, ResolventSpec>) {
          if (n == 3) return std::exp(-std::sqrt(v.lambda0 + 1.0) * rho) / (4 * pi * std::sinh(rho));
          double s3 = 8 * pi * pi * std::pow(std::sinh(rho), 3);
          if (n == 5 && v.lambda0 == -3.0) return 1.0 / s3;
          if (n == 5 && v.lambda0 == -4.0) return std::cosh(rho) / s3;
          if (v.lambda0 == -n * (n - 2) / 4.0) return conformal_green(rho, n);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, LimitingGreenSpec>) {
          if (n == 3) return 1.0 / (4 * pi * std::sinh(rho));
          if (n == 5) return std::cosh(rho) / (8 * pi * pi * std::pow(std::sinh(rho), 3));
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, ConformalGreenSpec>) {
          return resolvent_kernel(-n * (n - 2) / 4.0, rho, n);
        } else if constexpr (std::is_same_v<T, FracResolventH3Spec>) {
          if (v.alpha == 2.0) return 1.0 / (4 * pi * std::sinh(rho));
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, ProductResolventH5Spec>) {
          return resolvent_kernel(-4.0, rho, 5) - resolvent_kernel(-3.0, rho, 5);
        } else {
          // Q_2 on H^5 splits as (4/9)(G - R(-7/4))
          if (n == 5 && v.k == 2) return 4.0 / 9.0 * (limiting_green_kernel(rho, 5) - resolvent_kernel(-1.75, rho, 5));
          return std::nullopt;
        }
      },
      spec.variant);
}

struct TableRow {
  double rho = 0.0;
  double value = 0.0;
  std::optional<double> reference;
  double rel_err() const { return reference ? rel_diff(value, *reference) : std::nan(""); }
};

inline std::vector<TableRow> tabulate_kernel(const KernelSpec& spec, const std::vector<double>& rhos) {
  spec.validate();
  std::vector<TableRow> out;
  for (double r : rhos) {
    if (!(r > 0.0) || !std::isfinite(r)) throw domain_error("tabulate_kernel: rho must be positive");
    out.push_back({r, spec(r), kernel_reference(spec, r)});
  }
  return out;
}

inline void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows) {
  os << "rho,value,reference,rel_err\n";
  for (const auto& r : rows)
    os << num17(r.rho) << ',' << num17(r.value) << ',' << (r.reference ? num17(*r.reference) : "") << ','
       << (r.reference ? num17(r.rel_err()) : "") << "\n";
}

}  // namespace hyp
