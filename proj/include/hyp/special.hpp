#pragma once

// Gamma-type special functions, the c-function, Plancherel density and the
// spherical function phi_lambda.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "hyp/errors.hpp"
#include "hyp/quadrature.hpp"

namespace hyp {

using cplx = std::complex<double>;
inline constexpr double pi = std::numbers::pi;

inline void check_dim(int n, int lo = 2, int hi = 64) {
  if (n < lo || n > hi) throw domain_error("dimension n out of supported range");
}

// |S^{n-1}| = 2 pi^{n/2} / Gamma(n/2)
inline double sphere_area(int n) {
  check_dim(n, 1);
  return 2.0 * std::pow(pi, 0.5 * n) / std::tgamma(0.5 * n);
}

// Volume of the Euclidean unit ball in R^n.
inline double unit_ball_volume(int n) { return sphere_area(n) / n; }

// x^{k/2} for integer k, using sqrt for the half part.
inline double hpow(double x, int twice) {
  int whole = twice >= 0 ? twice / 2 : -((-twice + 1) / 2);
  double r = 1.0;
  double b = whole >= 0 ? x : 1.0 / x;
  for (int e = std::abs(whole); e > 0; e >>= 1, b *= b)
    if (e & 1) r *= b;
  if (twice - 2 * whole == 1) r *= std::sqrt(x);
  return r;
}

// coth with the series 1/x + x/3 - x^3/45 below 1e-3.
inline double coth(double x) {
  if (std::abs(x) < 1e-3) {
    double x2 = x * x;
    return 1.0 / x + x / 3.0 - x * x2 / 45.0 + 2.0 * x * x2 * x2 / 945.0;
  }
  return 1.0 / std::tanh(x);
}

// log sinh(x) for x > 0 without overflow.
inline double log_sinh(double x) {
  if (x > 20.0) return x - std::log(2.0) + std::log1p(-std::exp(-2.0 * x));
  return std::log(std::sinh(x));
}

namespace detail {

inline cplx lanczos_lgamma(cplx z) {
  static const double c[9] = {0.99999999999980993227684700473478,  676.520368121885098567009190444019,
                              -1259.13921672240287047156078755283, 771.3234287776530788486528258894,
                              -176.61502916214059906584551354,     12.507343278686904814458936853,
                              -0.13857109526572011689554707,       9.984369578019570859563e-6,
                              1.50563273514931155834e-7};
  z -= 1.0;
  cplx a = c[0];
  for (int k = 1; k < 9; ++k) a += c[k] / (z + double(k));
  cplx t = z + 7.5;
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

}  // namespace detail

// Principal branch of log Gamma.  Re z < 1/2 is shifted upward with the
// recurrence, which preserves the principal branch off the negative axis.
inline cplx log_gamma_complex(cplx z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    throw domain_error("log_gamma_complex: pole at a nonpositive integer");
  if (z.real() >= 0.5) return detail::lanczos_lgamma(z);
  int shift = static_cast<int>(std::ceil(0.5 - z.real()));
  cplx acc = 0.0;
  for (int k = 0; k < shift; ++k) acc += std::log(z + double(k));
  return detail::lanczos_lgamma(z + double(shift)) - acc;
}

// c(lambda) = 2^{n-1-i lambda} Gamma(n/2) Gamma(i lambda) / (Gamma((n-1+i lambda)/2) Gamma((1+i lambda)/2))
inline cplx harish_chandra_c(double lambda, int n) {
  check_dim(n);
  if (lambda == 0.0) throw domain_error("harish_chandra_c: pole at lambda = 0");
  const cplx i(0.0, 1.0);
  cplx lg = cplx(n - 1.0, -lambda) * std::log(2.0) + std::lgamma(0.5 * n) + log_gamma_complex(i * lambda) -
            log_gamma_complex(0.5 * cplx(n - 1.0, lambda)) - log_gamma_complex(0.5 * cplx(1.0, lambda));
  return std::exp(lg);
}

// |c(lambda)|^{-2}, written through |Gamma(iy)|^2 = pi/(y sinh pi y) and
// |Gamma((1+iy)/2)|^2 = pi/cosh(pi y/2):
//   2 |y| sinh(pi|y|/2) |Gamma((n-1+iy)/2)|^2 / (4^{n-1} Gamma(n/2)^2)
inline double plancherel_density(double lambda, int n) {
  check_dim(n);
  double y = std::abs(lambda);
  if (y == 0.0) return 0.0;
  double lg = 2.0 * log_gamma_complex(0.5 * cplx(n - 1.0, y)).real();
  double l = std::log(2.0 * y) + log_sinh(0.5 * pi * y) + lg - (n - 1.0) * std::log(4.0) - 2.0 * std::lgamma(0.5 * n);
  return std::exp(l);
}

// Constant in front of the inversion and Plancherel integrals, as printed:
// D_n = 1 / (2^{3-n} pi |S^{n-1}|).
inline double inversion_constant(int n) { return std::pow(2.0, n - 3.0) / (pi * sphere_area(n)); }

// |S^{n-2}| / |S^{n-1}| = Gamma(n/2) / (sqrt(pi) Gamma((n-1)/2))
inline double abel_constant(int n) {
  return std::exp(std::lgamma(0.5 * n) - std::lgamma(0.5 * (n - 1.0))) / std::sqrt(pi);
}

// W(rho, v) = [(1 - e^{-(rho+v)})(1 - e^{-(rho-v)})]^{(n-3)/2}, given
// p = rho + v and m = rho - v directly so that small m stays exact.
inline double abel_weight(double p, double m, int n) {
  double base = std::expm1(-p) * std::expm1(-m);
  return hpow(base, n - 3);
}

// e^{rho (n-3)/2} / sinh^{n-2} rho
inline double abel_prefactor(double rho, int n) {
  if (rho > 30.0)
    return std::exp(0.5 * (n - 3.0) * rho - (n - 2.0) * (rho - std::log(2.0) + std::log1p(-std::exp(-2.0 * rho))));
  return std::exp(0.5 * (n - 3.0) * rho) / std::pow(std::sinh(rho), n - 2.0);
}

// Spherical function
//   phi_lambda(rho) = c_n e^{rho(n-3)/2} sinh^{2-n}(rho) int_{-rho}^{rho} cos(lambda v/2) W(rho, v) dv,
// the sphere average of e_{lambda,zeta} reduced to one variable.
inline double spherical_function(double lambda, double rho, int n) {
  check_dim(n);
  require(rho >= 0.0 && std::isfinite(rho), "spherical_function: rho must be >= 0");
  if (rho == 0.0) return 1.0;
  double y = std::abs(lambda);
  double hmax = std::min(1.0, 8.0 / std::max(y, 1e-300));
  double L = std::min(rho, hmax);
  std::vector<QNode> body, tip;
  append_panels(body, 0.0, rho - L, hmax, 20);
  append_right_sqrt(tip, rho - L, rho, 24);
  double s = 0.0;
  for (const auto& q : body) s += q.w * std::cos(0.5 * y * q.x) * abel_weight(rho + q.x, rho - q.x, n);
  for (const auto& q : tip) s += q.w * std::cos(0.5 * y * q.x) * abel_weight(rho + q.x, q.from_hi, n);
  return 2.0 * abel_constant(n) * abel_prefactor(rho, n) * s;
}

}  // namespace hyp
