#pragma once

// Sharp Hardy-Littlewood-Sobolev and Sobolev constants, Riesz potential
// normalisations.

#include <cmath>

#include "hyp/errors.hpp"
#include "hyp/special.hpp"

namespace hyp {

// Best HLS constant on R^n for the kernel |x - y|^{-lambda}.
inline double hls_constant(int n, double lambda) {
  check_dim(n, 1, 64);
  if (!(lambda > 0.0 && lambda < n)) throw domain_error("hls_constant: lambda must lie in (0, n)");
  double l = std::lgamma(0.5 * n - 0.5 * lambda) - std::lgamma(n - 0.5 * lambda) +
             (-1.0 + lambda / n) * (std::lgamma(0.5 * n) - std::lgamma(double(n)));
  return std::pow(pi, 0.5 * lambda) * std::exp(l);
}

// gamma(alpha) = pi^{n/2} 2^alpha Gamma(alpha/2) / Gamma(n/2 - alpha/2), so that
// (-Delta)^{-alpha/2} on R^n has kernel |x|^{alpha-n} / gamma(alpha).
inline double gamma_riesz(double alpha, int n) {
  check_dim(n, 1, 64);
  if (!(alpha > 0.0 && alpha < n)) throw domain_error("gamma_riesz: alpha must lie in (0, n)");
  return std::pow(pi, 0.5 * n) * std::pow(2.0, alpha) * std::exp(std::lgamma(0.5 * alpha) - std::lgamma(0.5 * (n - alpha)));
}

inline void check_sobolev_order(int n, int k) {
  check_dim(n, 3, 64);
  if (!(k >= 1 && 2 * k < n)) throw domain_error("sobolev order: need 1 <= k < n/2");
}

// Best k-th order Sobolev constant, gamma(2k) / C_{n, n-2k}.
inline double sobolev_constant(int n, int k) {
  check_sobolev_order(n, k);
  return gamma_riesz(2.0 * k, n) / hls_constant(n, n - 2.0 * k);
}

// The same constant after cancelling Gamma(k):
//   2^{2k} pi^k Gamma(n/2 + k) / Gamma(n/2 - k) * (Gamma(n/2) / Gamma(n))^{2k/n}.
inline double sobolev_constant_closed_form(int n, int k) {
  check_sobolev_order(n, k);
  double l = std::lgamma(0.5 * n + k) - std::lgamma(0.5 * n - k) +
             (2.0 * k / n) * (std::lgamma(0.5 * n) - std::lgamma(double(n)));
  return std::pow(4.0 * pi, k) * std::exp(l);
}

// prod_{i=1}^k (2i-1)^2 / 4, the Poincare constant of P_k.
inline double pk_poincare_constant(int k) {
  require(k >= 1, "pk_poincare_constant: k >= 1");
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c *= (2.0 * i - 1) * (2.0 * i - 1) / 4.0;
  return c;
}

// Bottom of the L^2 spectrum of -Delta_H.
inline double spectral_gap(int n) {
  check_dim(n);
  return (n - 1.0) * (n - 1.0) / 4.0;
}

}  // namespace hyp
