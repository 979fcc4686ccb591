#pragma once

// Heat kernels, resolvents, the limiting Green function and related closed
// forms on H^n, all as functions of the geodesic distance rho.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <variant>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hyp/convolution.hpp"
#include "hyp/errors.hpp"
#include "hyp/laurent.hpp"
#include "hyp/radial.hpp"
#include "hyp/report.hpp"
#include "hyp/special.hpp"
#include "hyp/spectral.hpp"

namespace hyp {

using Real50 = boost::multiprecision::cpp_bin_float_50;

namespace detail {

struct GaussTerm {
  int a, b, p, e;
  double c;
  Real50 cb;
};

struct SinhTerm {
  int p, e;
  double c;
};

// D^m exp(-tau r^2 / 2) as a flat term list.
inline const std::vector<GaussTerm>& heat_terms(int m) {
  static std::mutex mu;
  static std::map<int, std::vector<GaussTerm>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  auto g = GaussLaurent::gaussian();
  for (int i = 0; i < m; ++i) g = g.derivative_op();
  std::vector<GaussTerm> t;
  for (const auto& [k, c] : g.terms()) t.push_back({k[0], k[1], k[2], k[3], static_cast<double>(c), static_cast<Real50>(c)});
  return cache.emplace(m, std::move(t)).first->second;
}

// D^j (1/sinh); every coefficient is positive.
inline const std::vector<SinhTerm>& green_terms(int j) {
  static std::mutex mu;
  static std::map<int, std::vector<SinhTerm>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(j);
  if (it != cache.end()) return it->second;
  auto e = laurent_derivative_op(LaurentElement::monomial(-1), j);
  std::vector<SinhTerm> t;
  for (const auto& [k, c] : e.terms()) t.push_back({k.first, k.second, static_cast<double>(c)});
  return cache.emplace(j, std::move(t)).first->second;
}

template <class Real>
Real eval_heat_terms(const std::vector<GaussTerm>& T, const Real& r, const Real& tau) {
  using std::cosh;
  using std::exp;
  using std::pow;
  using std::sinh;
  Real s = sinh(r), ch = cosh(r), acc = 0;
  for (const auto& t : T) {
    Real c;
    if constexpr (std::is_same_v<Real, double>)
      c = t.c;
    else
      c = static_cast<Real>(t.cb);
    Real term = c * pow(r, t.a) * pow(tau, t.b) * pow(s, t.p);
    if (t.e) term *= ch;
    acc += term;
  }
  return acc * exp(-tau * r * r / 2);
}

// Below this radius the double expansion of D^m E loses more than about
// four digits to cancellation.
inline double heat_cancellation_radius(int m) { return m >= 2 ? std::pow(10.0, -2.0 / (m - 1)) : 0.0; }

// With w = cosh r - 1 one has D = -d/dw and r^2 = g(w) = arccosh(1 + w)^2,
// where (w^2 + 2w) g'' + (1 + w) g' = 2 gives g = sum a_k w^k with
// a_1 = 2, a_{k+1} = -k^2 a_k / ((k+1)(2k+1)).  The series of
// exp(-tau g / 2) is then differentiated m times termwise.
inline double heat_derivative_series(int m, double w, double tau) {
  constexpr int K = 48;
  double h[K + 1], e[K + 1];
  double a = 2.0;
  h[0] = 0.0;
  for (int k = 1; k <= K; ++k) {
    h[k] = -0.5 * tau * a;
    a = -double(k) * k * a / ((k + 1.0) * (2.0 * k + 1.0));
  }
  e[0] = 1.0;
  for (int k = 1; k <= K; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += j * h[j] * e[k - j];
    e[k] = s / k;
  }
  double acc = 0.0, wp = 1.0;
  for (int k = m; k <= K; ++k) {
    double fall = 1.0;
    for (int i = 0; i < m; ++i) fall *= (k - i);
    double term = fall * e[k] * wp;
    acc += term;
    wp *= w;
    if (k > m + 8 && std::abs(term) < 1e-18 * std::abs(acc)) break;
  }
  return (m % 2 ? -1.0 : 1.0) * acc;
}

inline double heat_derivative(int m, double r, double tau) {
  double w = 2.0 * std::sinh(0.5 * r) * std::sinh(0.5 * r);
  if (m >= 1 && r < 0.5 && tau * w < 2.0) return heat_derivative_series(m, w, tau);
  r = std::max(r, 1e-6);
  if (r < heat_cancellation_radius(m))
    return static_cast<double>(eval_heat_terms<Real50>(heat_terms(m), Real50(r), Real50(tau)));
  return eval_heat_terms<double>(heat_terms(m), r, tau);
}

inline double green_derivative(int j, double r) {
  if (r > 700.0) return 0.0;
  double s = std::sinh(r), ch = std::cosh(r), acc = 0.0;
  for (const auto& t : green_terms(j)) {
    double term = t.c * std::pow(s, t.p);
    if (t.e) term *= ch;
    acc += term;
  }
  return acc;
}

// int_rho^inf sinh(r) / sqrt(cosh r - cosh rho) phi(r) dr with r = rho + y^2,
// cosh r - cosh rho = 2 sinh(rho + y^2/2) sinh(y^2/2), dr = 2y dy.
template <class Phi>
double abel_tail(double rho, double span, const Phi& phi) {
  double Y = std::sqrt(span);
  auto f = [&](double y) {
    if (y <= 0.0) return 0.0;
    double y2 = y * y, r = rho + y2;
    double den = std::sqrt(2.0 * std::sinh(rho + 0.5 * y2) * std::sinh(0.5 * y2));
    return 2.0 * y * std::sinh(r) / den * phi(r);
  };
  double err = 0.0;
  double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, 0.0, Y, 15, 1e-12, &err);
  return v;
}

}  // namespace detail

// Heat kernel e^{t Delta}(rho) on H^n, 2 <= n <= 7.
inline double heat_kernel(double t, double rho, int n) {
  check_dim(n, 2, 7);
  if (!(t > 0.0) || !std::isfinite(t)) throw domain_error("heat_kernel: t must be positive");
  if (!(rho >= 0.0)) throw domain_error("heat_kernel: rho must be >= 0");
  double tau = 0.5 / t;
  double gap = std::exp(-(n - 1.0) * (n - 1.0) * t / 4.0);
  if (n % 2 == 1) {
    int m = (n - 1) / 2;
    double pref = std::pow(2.0, -m - 1.0) * std::pow(pi, -m - 0.5) / std::sqrt(t) * gap;
    return pref * detail::heat_derivative(m, rho, tau);
  }
  int m = n / 2;
  double pref = std::pow(2.0 * pi, -(n + 1) / 2.0) / std::sqrt(t) * gap;
  double span = std::min(std::sqrt(rho * rho + 200.0 * t) - rho, 90.0) + 1.0;
  return pref * detail::abel_tail(rho, span, [&](double r) { return detail::heat_derivative(m, r, tau); });
}

// Green function of -Delta - (n-1)^2/4 (bottom of the spectrum), n >= 3.
inline double limiting_green_kernel(double rho, int n) {
  check_dim(n, 3, 7);
  if (!(rho > 0.0)) throw domain_error("limiting_green_kernel: rho must be > 0");
  if (n % 2 == 1) {
    int m = (n - 1) / 2;
    return std::pow(2.0, -m - 1.0) * std::pow(pi, -m) * detail::green_derivative(m - 1, rho);
  }
  int m = n / 2;
  double pref = std::sqrt(pi) * std::pow(2.0 * pi, -(n + 1) / 2.0);
  double span = 60.0 / (n - 1.5) + 1.0;
  return pref * detail::abel_tail(rho, span, [&](double r) { return detail::green_derivative(m - 1, r); });
}

// theta = sqrt(lambda0 + (n-1)^2/4) - 1/2
inline double resolvent_theta(double lambda0, int n) {
  double g = lambda0 + (n - 1.0) * (n - 1.0) / 4.0;
  return std::sqrt(std::max(g, 0.0)) - 0.5;
}

// Kernel of (-Delta + lambda0)^{-1} for lambda0 >= -(n-1)^2/4:
//   A_n sinh^{2-n}(rho) int_0^pi (cosh rho + cos t)^{(n-4)/2 - theta} sin^{2 theta + 1}(t) dt.
inline double resolvent_kernel(double lambda0, double rho, int n) {
  check_dim(n, 3, 64);
  double gap = -(n - 1.0) * (n - 1.0) / 4.0;
  if (!(lambda0 >= gap - 1e-12) || !std::isfinite(lambda0))
    throw domain_error("resolvent_kernel: lambda0 below -(n-1)^2/4");
  if (!(rho > 0.0) || !std::isfinite(rho)) throw domain_error("resolvent_kernel: rho must be > 0");
  double th = resolvent_theta(lambda0, n);
  double a = 0.5 * (n - 4.0) - th, b = 2.0 * th + 1.0;
  double An = std::pow(2.0 * pi, -0.5 * n) * std::exp(std::lgamma(0.5 * n + th) - std::lgamma(th + 1.0)) /
              std::pow(2.0, th + 1.0);
  double sech = rho > 700.0 ? 0.0 : 1.0 / std::cosh(rho);
  double lo_base = rho > 700.0 ? 1.0 : 2.0 * std::sinh(0.5 * rho) * std::sinh(0.5 * rho) * sech;
  // (cosh rho + cos t) / cosh rho, with t near pi written through u = pi - t
  auto f = [&](double, double tc) {
    double base, s;
    if (tc >= 0.0) {
      double u = tc, h = std::sin(0.5 * u);
      base = lo_base + 2.0 * h * h * sech;
      s = std::sin(u);
    } else {
      double x = -tc;
      base = 1.0 + std::cos(x) * sech;
      s = std::sin(x);
    }
    if (s <= 0.0) return 0.0;
    return std::pow(base, a) * (b == 0.0 ? 1.0 : std::pow(s, b));
  };
  static thread_local boost::math::quadrature::tanh_sinh<double> ts(15);
  double I = ts.integrate(f, 0.0, pi, 1e-13);
  double log_cosh = rho + std::log1p(std::exp(-2.0 * rho)) - std::log(2.0);
  return An * std::exp(a * log_cosh - (n - 2.0) * log_sinh(rho)) * I;
}

// Green function of the conformal Laplacian -Delta - n(n-2)/4.
inline double conformal_green(double rho, int n) {
  check_dim(n, 3, 64);
  if (!(rho > 0.0)) throw domain_error("conformal_green: rho must be > 0");
  double s = std::pow(2.0 * std::sinh(0.5 * rho), 2.0 - n);
  double c = std::pow(2.0 * std::cosh(0.5 * rho), 2.0 - n);
  return (s - c) / (n * (n - 2.0) * unit_ball_volume(n));
}

// Kernel of (-Delta - 1)^{-alpha/2} on H^3.
inline double frac_resolvent_h3(double alpha, double rho) {
  if (!(alpha >= 1.0 && alpha < 3.0)) throw domain_error("frac_resolvent_h3: alpha must lie in [1, 3)");
  if (!(rho > 0.0)) throw domain_error("frac_resolvent_h3: rho must be > 0");
  double c = std::pow(2.0, -alpha) * std::pow(pi, -1.5) * std::tgamma(0.5 * (3.0 - alpha)) / std::tgamma(0.5 * alpha);
  return c / (std::pow(rho, 2.0 - alpha) * std::sinh(rho));
}

// Ratio of the H^3 fractional kernel to its Euclidean comparison.
inline double psi_alpha(double alpha, double rho) {
  if (rho == 0.0) return 1.0;
  double r = rho < 1e-4 ? 1.0 + rho * rho / 24.0 : 2.0 * std::sinh(0.5 * rho) / rho;
  return std::pow(r, 2.0 - alpha) / std::cosh(0.5 * rho);
}

// Kernel of ((-Delta - 4)(-Delta - 3))^{-1} on H^5, the difference of the
// two resolvents cosh/(8 pi^2 sinh^3) - 1/(8 pi^2 sinh^3):
//   1/(16 pi^2) * 1/(2 sinh(rho/2)) * 1/cosh^3(rho/2).
inline double product_resolvent_h5(double rho) {
  if (!(rho > 0.0)) throw domain_error("product_resolvent_h5: rho must be > 0");
  double c = std::cosh(0.5 * rho);
  return 1.0 / (16.0 * pi * pi) / (2.0 * std::sinh(0.5 * rho)) / (c * c * c);
}

// The same expression with cosh^2(rho/2) in place of cosh^3(rho/2); kept for
// reporting only.
inline double product_resolvent_h5_printed(double rho) {
  double c = std::cosh(0.5 * rho);
  return 1.0 / (16.0 * pi * pi) / (2.0 * std::sinh(0.5 * rho)) / (c * c);
}

// ---- comparison functions for the kernel bounds ----

inline double resolvent_bound(double lambda0, double rho, int n) {
  double e = 1.0 + 2.0 * std::sqrt(std::max(lambda0 + (n - 1.0) * (n - 1.0) / 4.0, 0.0));
  return std::pow(1.0 / std::sinh(0.5 * rho), n - 2.0) * std::pow(1.0 / std::cosh(0.5 * rho), e);
}

inline double sinh_derivative_bound(int m, double rho) {
  return std::pow(1.0 / std::sinh(0.5 * rho), 2.0 * m + 1.0) / std::cosh(0.5 * rho);
}

inline double limiting_green_bound(double rho, int n) {
  return std::pow(1.0 / std::sinh(0.5 * rho), n - 2.0) / std::cosh(0.5 * rho);
}

inline double qk_inverse_bound(double rho, int n, int k) { return std::pow(1.0 / std::sinh(0.5 * rho), n - 2.0 * k); }

// |D^m (1/sinh)(rho)|
inline double sinh_derivative(int m, double rho) {
  require(m >= 0, "sinh_derivative: m >= 0");
  return detail::green_derivative(m, rho);
}

// Maximum of a ratio on a log-spaced grid and on its refinement.
struct FittedConstant {
  double C = 0.0;
  double C_refined = 0.0;
  double drift = 0.0;
  bool finite = false;
  bool stable = false;
};

inline FittedConstant fit_constant(const std::function<double(double)>& ratio, double lo = 1e-3, double hi = 15.0,
                                   int points = 200) {
  auto sweep = [&](int N) {
    double m = 0.0;
    for (int i = 0; i < N; ++i) {
      double r = lo * std::pow(hi / lo, static_cast<double>(i) / (N - 1));
      double v = std::abs(ratio(r));
      if (!std::isfinite(v)) return std::numeric_limits<double>::infinity();
      m = std::max(m, v);
    }
    return m;
  };
  FittedConstant f;
  f.C = sweep(points);
  f.C_refined = sweep(2 * points - 1);
  f.finite = std::isfinite(f.C) && std::isfinite(f.C_refined);
  f.drift = f.finite ? std::abs(f.C_refined - f.C) / std::max(f.C_refined, 1e-300) : 1.0;
  f.stable = f.finite && f.drift < 0.05;
  return f;
}

// Strict decrease on a log grid over [lo, hi].
inline bool decreasing_on(const std::function<double(double)>& k, double lo, double hi, int points = 200) {
  double prev = std::numeric_limits<double>::infinity();
  for (int i = 0; i < points; ++i) {
    double r = lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1));
    double v = k(r);
    if (!(v < prev)) return false;
    prev = v;
  }
  return true;
}

// ---- Q_k^{-1} ----

inline void check_qk(int k, int n) {
  check_dim(n, 3, 7);
  if (!(k >= 2 && 2 * k < n)) throw domain_error("Q_k inverse: need 2 <= k < n/2");
}

// Shift lambda0 with P_1 + i(i-1) = -Delta + lambda0.
inline double qk_shift(int i, int n) { return (i - 0.5) * (i - 0.5) - (n - 1.0) * (n - 1.0) / 4.0; }

struct QkOptions {
  double cutoff = 200.0;   // spectral truncation for odd n
  double window = 800.0;   // smooth roll-off scale for even n
  double panel = 1.0;      // spectral panel width
  int check_points = 20;   // cross-check radii in [0.1, 5]
  double tol = 1e-3;
};

namespace detail {

// Polynomial in x with ascending coefficients.
using Poly1 = std::vector<double>;

inline Poly1 poly_mul_linear(const Poly1& p, double root_shift) {
  Poly1 r(p.size() + 1, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    r[i] += root_shift * p[i];
    r[i + 1] += p[i];
  }
  return r;
}

inline double poly_eval(const Poly1& p, double x) {
  double s = 0.0;
  for (std::size_t i = p.size(); i-- > 0;) s = s * x + p[i];
  return s;
}

// Long division by a monic D.
inline void poly_divmod(Poly1 N, const Poly1& D, Poly1& q, Poly1& r) {
  std::size_t dn = N.size() - 1, dd = D.size() - 1;
  if (dn < dd) {
    q = {0.0};
    r = N;
    return;
  }
  q.assign(dn - dd + 1, 0.0);
  for (std::size_t i = dn + 1; i-- > dd;) {
    double c = N[i];
    q[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) N[i - dd + j] -= c * D[j];
  }
  r.assign(N.begin(), N.begin() + dd);
  if (r.empty()) r = {0.0};
}

}  // namespace detail

// Route (a): inverse spectral transform of |c|^{-2}/Q_k.
inline RadialFunction qk_inverse_spectral(int k, const RadialGrid& grid, int n, const QkOptions& o = {}) {
  check_qk(k, n);
  auto Q = Multiplier::qk(k);
  if (n % 2 == 0) {
    auto sg = SpectralGrid::make(1.7 * o.window, o.panel);
    SphericalTransform T(grid, sg, n);
    SpectralFunction F{sg, {}, n};
    for (double l : sg.nodes()) F.values.push_back(1.0 / Q(l));
    InverseOptions io;
    io.check_decay = false;
    io.window = o.window;
    return T.inverse(F, io);
  }
  // density / Q_k = N(x) / (x D(x)) * x with x = lambda^2/4; the factor x cancels
  int M = (n - 1) / 2;
  double K = pi / (std::pow(4.0, n - 2.0) * std::tgamma(0.5 * n) * std::tgamma(0.5 * n));
  detail::Poly1 N{K}, D{1.0};
  for (int j = 1; j < M; ++j) N = detail::poly_mul_linear(N, j * double(j));
  for (int i = 2; i <= k; ++i) D = detail::poly_mul_linear(D, (2.0 * i - 1) * (2.0 * i - 1) / 4.0);
  {
    double l = 1.3, x = l * l / 4.0;
    double want = plancherel_density(l, n) / Q(l);
    double have = detail::poly_eval(N, x) / detail::poly_eval(D, x);
    if (std::abs(have - want) > 1e-10 * std::abs(want)) throw convergence_error("qk_inverse_spectral: density factorisation");
  }
  detail::Poly1 q, r;
  detail::poly_divmod(N, D, q, r);
  if (q.size() > 2) throw domain_error("qk_inverse_spectral: polynomial part of degree > 1");
  double c_inf = (r.size() + 1 == D.size()) ? 4.0 * r.back() : 0.0;
  auto Hr = [&](double l) {
    double x = l * l / 4.0;
    return detail::poly_eval(r, x) / detail::poly_eval(D, x);
  };
  auto sg = SpectralGrid::make(o.cutoff, o.panel);
  SphericalTransform T(grid, sg, n);
  std::vector<double> H(sg.size());
  for (std::size_t j = 0; j < sg.size(); ++j) {
    double l = sg.nodes()[j];
    H[j] = sg.weights()[j] * (Hr(l) - c_inf / (l * l + 1.0));
  }
  auto G = T.cosine_sum(H);
  for (std::size_t i = 0; i < G.size(); ++i) G[i] += c_inf * 0.5 * pi * std::exp(-0.5 * grid.node(i));
  auto out = T.from_cosine_transform(std::move(G));
  // polynomial part: x^j cos(lambda v/2) = (-1)^j d^{2j}/dv^{2j} cos(lambda v/2)
  double mu = 0.5 * (n - 3.0);
  double cn = 2.0 * pi * inversion_constant(n) * abel_constant(n);
  std::vector<double> v = out.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    double rho = grid.node(i);
    double A0 = std::expm1(-rho) * std::expm1(-rho);
    double W = hpow(A0, n - 3);
    double s = q[0] * W;
    if (q.size() > 1) {
      double W2 = mu == 0.0 ? 0.0 : mu * std::pow(A0, mu - 1.0) * (-2.0 * std::exp(-rho));
      s -= q[1] * W2;
    }
    v[i] += cn * abel_prefactor(rho, n) * s;
  }
  return RadialFunction(grid, std::move(v), n);
}

namespace detail {

// A kernel tabulated as sinh^e(rho) times its value, zero beyond the grid.
struct TabulatedKernel {
  RadialFunction reg;
  int e;
  double operator()(double r) const {
    if (r >= reg.grid().rho_max()) return 0.0;
    return reg(r) / std::pow(std::sinh(r), e);
  }
};

template <class F>
std::shared_ptr<TabulatedKernel> tabulate_regularized(const F& f, int n, int e, const RadialGrid& grid) {
  std::vector<double> v(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    double r = grid.node(j);
    v[j] = f(r) * std::pow(std::sinh(r), e);
  }
  return std::make_shared<TabulatedKernel>(TabulatedKernel{RadialFunction(grid, std::move(v), n), e});
}

// Limiting Green kernel and R(lambda_2) * ... * R(lambda_k), cached per (k, n).
struct QkFactors {
  std::shared_ptr<TabulatedKernel> green, rest;
};

inline const QkFactors& qk_factors(int k, int n, const ConvolutionOptions& o) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, QkFactors> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({k, n});
  if (it != cache.end()) return it->second;
  auto grid = RadialGrid::standard(30.0, 1024);
  QkFactors q;
  q.green = tabulate_regularized([n](double r) { return limiting_green_kernel(r, n); }, n, n - 2, grid);
  q.rest = tabulate_regularized([n](double r) { return resolvent_kernel(qk_shift(2, n), r, n); }, n, n - 2, grid);
  for (int i = 3; i <= k; ++i) {
    auto Ri = tabulate_regularized([n, i](double r) { return resolvent_kernel(qk_shift(i, n), r, n); }, n, n - 2, grid);
    auto prev = q.rest;
    int e = std::max(n - 2 * (i - 1), 0);
    auto coarse = RadialGrid::standard(30.0, 512);
    q.rest = tabulate_regularized(
        [&](double r) { return convolve_at(r, [&](double x) { return (*prev)(x); }, [&](double x) { return (*Ri)(x); }, n, o); },
        n, e, coarse);
  }
  return cache.emplace(std::make_pair(k, n), std::move(q)).first->second;
}

}  // namespace detail

// Route (b) at one radius: G_lim * R(lambda_2) * ... * R(lambda_k), with the
// factors tabulated once per (k, n).
inline double qk_inverse_convolution_at(int k, double rho, int n, ConvolutionOptions o = {}) {
  check_qk(k, n);
  o.s_max = std::min(o.s_max, 30.0);
  const auto& q = detail::qk_factors(k, n, o);
  auto G = [&](double r) { return (*q.green)(r); };
  auto K = [&](double r) { return (*q.rest)(r); };
  return convolve_at(rho, G, K, n, o);
}

struct QkInverseResult {
  RadialFunction kernel;             // route (a) on the requested grid
  std::vector<double> check_radii;
  std::vector<double> spectral;      // route (a) at the check radii
  std::vector<double> convolution;   // route (b) at the check radii
  double max_rel_diff = 0.0;
};

inline QkInverseResult qk_inverse_cross_checked(int k, const RadialGrid& grid, int n, const QkOptions& o = {}) {
  check_qk(k, n);
  QkInverseResult res{qk_inverse_spectral(k, grid, n, o), {}, {}, {}, 0.0};
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (grid.node(i) >= 0.1 && grid.node(i) <= 5.0) idx.push_back(i);
  if (idx.empty()) throw domain_error("qk_inverse_kernel: grid has no nodes in [0.1, 5]");
  std::size_t stride = std::max<std::size_t>(1, idx.size() / o.check_points);
  for (std::size_t j = 0; j < idx.size(); j += stride) {
    double r = grid.node(idx[j]);
    double a = res.kernel[idx[j]], b = qk_inverse_convolution_at(k, r, n);
    res.check_radii.push_back(r);
    res.spectral.push_back(a);
    res.convolution.push_back(b);
    res.max_rel_diff = std::max(res.max_rel_diff, rel_diff(a, b));
  }
  return res;
}

// Q_k^{-1} on the grid from the spectral route, checked against the
// convolution route on [0.1, 5].
inline RadialFunction qk_inverse_kernel(int k, const RadialGrid& grid, int n, const QkOptions& o = {}) {
  auto res = qk_inverse_cross_checked(k, grid, n, o);
  if (!(res.max_rel_diff <= o.tol))
    throw convergence_error("qk_inverse_kernel: routes disagree by " + std::to_string(res.max_rel_diff));
  return std::move(res.kernel);
}

// ---- kernel specifications ----

struct HeatSpec { double t; };
struct ResolventSpec { double lambda0; };
struct LimitingGreenSpec {};
struct ConformalGreenSpec {};
struct FracResolventH3Spec { double alpha; };
struct ProductResolventH5Spec {};
struct QkInverseSpec { int k; };

struct KernelSpec {
  std::variant<HeatSpec, ResolventSpec, LimitingGreenSpec, ConformalGreenSpec, FracResolventH3Spec,
               ProductResolventH5Spec, QkInverseSpec>
      variant;
  int n;

  void validate() const {
    std::visit(
        [this](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, HeatSpec>) {
            check_dim(n, 2, 7);
            if (!(v.t > 0.0)) throw domain_error("heat: t must be positive");
          } else if constexpr (std::is_same_v<T, ResolventSpec>) {
            check_dim(n, 3, 7);
            if (!(v.lambda0 > -(n - 1.0) * (n - 1.0) / 4.0))
              throw domain_error("resolvent: lambda0 must exceed -(n-1)^2/4; use the limiting Green kernel at the boundary");
          } else if constexpr (std::is_same_v<T, FracResolventH3Spec>) {
            if (n != 3) throw domain_error("fractional resolvent: n must be 3");
            if (!(v.alpha >= 1.0 && v.alpha < 3.0)) throw domain_error("fractional resolvent: alpha in [1, 3)");
          } else if constexpr (std::is_same_v<T, ProductResolventH5Spec>) {
            if (n != 5) throw domain_error("product resolvent: n must be 5");
          } else if constexpr (std::is_same_v<T, QkInverseSpec>) {
            check_qk(v.k, n);
          } else {
            check_dim(n, 3, 7);
          }
        },
        variant);
  }

  std::string name() const {
    return std::visit(
        [](const auto& v) -> std::string {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, HeatSpec>) return "heat";
          else if constexpr (std::is_same_v<T, ResolventSpec>) return "resolvent";
          else if constexpr (std::is_same_v<T, LimitingGreenSpec>) return "limiting_green";
          else if constexpr (std::is_same_v<T, ConformalGreenSpec>) return "conformal_green";
          else if constexpr (std::is_same_v<T, FracResolventH3Spec>) return "frac_resolvent_h3";
          else if constexpr (std::is_same_v<T, ProductResolventH5Spec>) return "product_resolvent_h5";
          else return "qk_inverse";
        },
        variant);
  }

  // Pointwise value; Q_k^{-1} goes through the convolution route.
  double operator()(double rho) const {
    return std::visit(
        [&](const auto& v) -> double {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, HeatSpec>) return heat_kernel(v.t, rho, n);
          else if constexpr (std::is_same_v<T, ResolventSpec>) return resolvent_kernel(v.lambda0, rho, n);
          else if constexpr (std::is_same_v<T, LimitingGreenSpec>) return limiting_green_kernel(rho, n);
          else if constexpr (std::is_same_v<T, ConformalGreenSpec>) return conformal_green(rho, n);
          else if constexpr (std::is_same_v<T, FracResolventH3Spec>) return frac_resolvent_h3(v.alpha, rho);
          else if constexpr (std::is_same_v<T, ProductResolventH5Spec>) return product_resolvent_h5(rho);
          else return qk_inverse_convolution_at(v.k, rho, n);
        },
        variant);
  }
};

inline RadialFunction tabulate(const KernelSpec& spec, const RadialGrid& grid) {
  spec.validate();
  if (auto q = std::get_if<QkInverseSpec>(&spec.variant)) return qk_inverse_kernel(q->k, grid, spec.n);
  return RadialFunction::sample(grid, spec.n, [&](double r) { return spec(r); });
}

}  // namespace hyp
