#pragma once

// Deficit functionals for the hyperbolic Sobolev, Poincare-Sobolev,
// Hardy-Sobolev-Maz'ya and HLS inequalities, concentrating trial families
// and the numerical checks of the lemmas behind them.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <boost/math/differentiation/autodiff.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "hyp/constants.hpp"
#include "hyp/convolution.hpp"
#include "hyp/errors.hpp"
#include "hyp/kernels.hpp"
#include "hyp/radial.hpp"
#include "hyp/report.hpp"
#include "hyp/spectral.hpp"

namespace hyp {

// ---- trial functions ----

// Smooth step equal to 1 for r <= a and 0 for r >= b.
template <class Real>
Real smooth_cutoff(const Real& r, double a, double b) {
  using std::exp;
  if (r <= a) return Real(1.0);
  if (r >= b) return Real(0.0);
  Real t = (r - a) / (b - a);
  Real p = exp(-1.0 / (1.0 - t)), q = exp(-1.0 / t);
  return p / (p + q);
}

struct BubbleFamily {
  double eps;
  int n;
  int k;
  double r_in = 0.8;   // cutoff starts (ball radius)
  double r_out = 0.9;  // support ends
  double power = 1.0;  // the profile is raised to this power

  void validate() const {
    if (!(eps > 0.0)) throw domain_error("bubble: eps must be > 0");
    check_sobolev_order(n, k);
    if (!(0.0 < r_in && r_in < r_out && r_out < 1.0)) throw domain_error("bubble: cutoff must sit inside the ball");
    if (!(power > 0.0)) throw domain_error("bubble: power must be > 0");
  }

  double exponent() const { return 0.5 * (n - 2.0 * k) * power; }

  // Euclidean profile w_eps(r) cut off, raised to power.
  template <class Real>
  Real euclidean(const Real& r2) const {
    using std::pow;
    using std::sqrt;
    if (r2 >= r_out * r_out) return Real(0.0);
    Real w = pow(eps / (eps * eps + r2), exponent());
    Real c = smooth_cutoff(Real(sqrt(r2)), r_in, r_out);
    return power == 1.0 ? Real(w * c) : Real(w * pow(c, power));
  }

  // Hyperbolic profile as a function of A = cosh(rho) - 1, so that
  // r^2 = A / (A + 2) and (1 - r^2)/2 = 1/(A + 2).
  template <class Real>
  Real of_cosh_minus_one(const Real& A) const {
    using std::pow;
    Real r2 = A / (A + 2.0);
    return pow(1.0 / (A + 2.0), exponent()) * euclidean(r2);
  }

  double operator()(double rho) const {
    double s = std::sinh(0.5 * rho);
    return of_cosh_minus_one(2.0 * s * s);
  }

  double rho_support() const { return 2.0 * std::atanh(r_out); }

  RadialGrid grid(double h = 0.025) const {
    return RadialGrid::graded(rho_support(), h, 16, std::min(1e-3, eps / 64.0));
  }

  RadialFunction sample(double h = 0.025) const {
    validate();
    return RadialFunction::sample(grid(h), n, [this](double r) { return (*this)(r); });
  }
};

inline RadialFunction bubble_family(double eps, int n, int k) { return BubbleFamily{eps, n, k}.sample(); }

// Spectral grid matched to bubble grids of panel width 0.025: the cosine
// sums stay resolved up to lambda of about 1000.
inline SpectralGrid bubble_spectral_grid() { return SpectralGrid::make(800.0, 1.0); }

// Spectral cutoff a radial grid can carry: cos(lambda rho / 2) must stay
// resolved on its widest panel.
inline SpectralGrid spectral_grid_for(const RadialGrid& g) {
  double h = 0.0;
  const auto& br = g.breaks();
  for (std::size_t i = 0; i + 1 < br.size(); ++i) h = std::max(h, br[i + 1] - br[i]);
  double lmax = std::clamp(20.0 / h, 40.0, 800.0);
  return SpectralGrid::make(lmax, 1.0);
}

// ---- inequality specifications ----

enum class Inequality { Poincare, PoincarePk, QkSobolev, PkDeficit, HardyMazya, SharpSobolev, HLS, H5Biharmonic };

inline std::string to_string(Inequality v) {
  switch (v) {
    case Inequality::Poincare: return "poincare";
    case Inequality::PoincarePk: return "poincare_pk";
    case Inequality::QkSobolev: return "qk_sobolev";
    case Inequality::PkDeficit: return "pk_deficit";
    case Inequality::HardyMazya: return "hardy_mazya";
    case Inequality::SharpSobolev: return "sharp_sobolev";
    case Inequality::HLS: return "hls";
    case Inequality::H5Biharmonic: return "h5_biharmonic";
  }
  return "?";
}

struct InequalitySpec {
  Inequality kind = Inequality::SharpSobolev;
  int n = 5;
  int k = 1;
  double p = 0.0;       // 0 selects the critical exponent
  double lambda = 0.0;  // HLS only
  double constant = std::numeric_limits<double>::quiet_NaN();  // NaN selects the default

  static InequalitySpec poincare(int n) { return {Inequality::Poincare, n, 1, 2.0}; }
  static InequalitySpec poincare_pk(int n, int k) { return {Inequality::PoincarePk, n, k, 2.0}; }
  static InequalitySpec qk_sobolev(int n, int k, double p = 0.0) { return {Inequality::QkSobolev, n, k, p}; }
  static InequalitySpec pk_deficit(int n, int k, double p = 0.0) { return {Inequality::PkDeficit, n, k, p}; }
  static InequalitySpec hardy_mazya(int n, int k, double p = 0.0) { return {Inequality::HardyMazya, n, k, p}; }
  static InequalitySpec sharp_sobolev(int n, int k) { return {Inequality::SharpSobolev, n, k}; }
  static InequalitySpec hls(int n, double lambda) { return {Inequality::HLS, n, 1, 0.0, lambda}; }
  static InequalitySpec h5_biharmonic() { return {Inequality::H5Biharmonic, 5, 2}; }

  InequalitySpec with_constant(double c) const {
    auto s = *this;
    s.constant = c;
    return s;
  }

  double critical_exponent() const {
    if (kind == Inequality::HLS) return 2.0 * n / (2.0 * n - lambda);
    if (kind == Inequality::Poincare || kind == Inequality::PoincarePk) return 2.0;
    return 2.0 * n / (n - 2.0 * k);
  }
  double exponent() const { return p > 0.0 ? p : critical_exponent(); }

  // weight exponent of x1 on the half-space side
  double gamma() const { return 0.5 * (n - 2.0 * k) * exponent() - n; }

  void validate() const {
    check_dim(n, 2, 64);
    switch (kind) {
      case Inequality::Poincare:
        break;
      case Inequality::PoincarePk:
        require(k >= 1, "PoincarePk: k >= 1");
        break;
      case Inequality::HLS:
        if (!(lambda > 0.0 && lambda < n)) throw domain_error("HLS: lambda must lie in (0, n)");
        break;
      case Inequality::H5Biharmonic:
        if (n != 5 || k != 2) throw domain_error("H5Biharmonic: n = 5, k = 2 only");
        break;
      case Inequality::QkSobolev:
        if (!(k >= 2 && 2 * k < n)) throw domain_error("QkSobolev: need 2 <= k < n/2");
        break;
      default:
        check_sobolev_order(n, k);
    }
    if (kind == Inequality::QkSobolev || kind == Inequality::PkDeficit || kind == Inequality::HardyMazya) {
      double e = exponent();
      if (!(e > 2.0 && e <= critical_exponent() * (1.0 + 1e-14))) throw domain_error("inequality: need 2 < p <= 2n/(n-2k)");
    }
  }

  Multiplier multiplier() const {
    switch (kind) {
      case Inequality::Poincare: return Multiplier::fractional_laplacian(1.0, n);
      case Inequality::PoincarePk:
      case Inequality::SharpSobolev: return Multiplier::gjms(k);
      case Inequality::QkSobolev: return Multiplier::qk(k);
      case Inequality::PkDeficit:
      case Inequality::HardyMazya: return Multiplier::pk_minus_constant(k);
      case Inequality::H5Biharmonic: return Multiplier::h5_product();
      case Inequality::HLS: break;
    }
    throw domain_error("inequality: no multiplier for HLS");
  }

  // Sharp constants where known, 1 for the existence statements.
  double default_constant() const {
    switch (kind) {
      case Inequality::Poincare: return spectral_gap(n);
      case Inequality::PoincarePk: return pk_poincare_constant(k);
      case Inequality::SharpSobolev:
      case Inequality::H5Biharmonic: return sobolev_constant(n, k);
      case Inequality::HLS: return 1.0;
      default: return 1.0;
    }
  }
  double constant_used() const { return std::isnan(constant) ? default_constant() : constant; }

  std::string name() const { return to_string(kind) + "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")"; }
};

struct DeficitReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double constant_used = 0.0;
  double deficit = 0.0;
  double ratio = 0.0;  // 0 when rhs vanishes
};

inline DeficitReport make_deficit(double lhs, double rhs, double c) {
  DeficitReport d{lhs, rhs, c, lhs - c * rhs, rhs != 0.0 ? lhs / rhs : 0.0};
  return d;
}

// ---- HLS bilinear form ----

namespace detail {

// int_{|rho-s|}^{rho+s} (2 sinh(d/2))^{-lambda} sinh(d) dd, written with
// x = cosh d - 1 as 2^{-lambda/2} int_a^b x^{-lambda/2} dx.
inline double hls_shell_n3(double rho, double s, double lambda) {
  double sa = std::sinh(0.5 * (rho - s)), sb = std::sinh(0.5 * (rho + s));
  double a = 2.0 * sa * sa, b = 2.0 * sb * sb;
  double q = 1.0 - 0.5 * lambda;
  double scale = std::pow(2.0, -0.5 * lambda);
  double lr = a > 0.0 ? std::log(a / b) : -std::numeric_limits<double>::infinity();
  if (std::abs(q) < 1e-12) return -scale * lr;
  return scale * std::pow(b, q) * -std::expm1(q * lr) / q;
}

}  // namespace detail

// int int f(x) g(y) (2 sinh(rho(x,y)/2))^{-lambda} dV dV for radial f, g:
// spherical means over the angle between x and y leave a (rho, s) double
// integral.  For n = 3 the angular integral is elementary; otherwise it is
// done by quadrature inside convolve_at.
inline double hls_bilinear(const RadialFunction& f, const RadialFunction& g, double lambda) {
  int n = f.dim();
  if (g.dim() != n) throw mismatch_error("hls_bilinear: dimension mismatch");
  if (!(lambda > 0.0 && lambda < n)) throw domain_error("hls_bilinear: lambda must lie in (0, n)");
  const auto& gr = g.grid();
  const auto& fg = f.grid();
  double smax = fg.rho_max();
  if (n == 3) {
    const auto& gl = gauss_legendre(12);
    double total = 0.0;
    for (std::size_t i = 0; i < gr.size(); ++i) {
      if (g[i] == 0.0) continue;
      double r = gr.node(i);
      std::vector<double> pts(fg.breaks());
      double w = 0.5 * std::min(r, 0.5);
      for (int j = 0; j < 20; ++j) {
        double e = w * std::ldexp(1.0, -j);
        pts.push_back(r - e);
        pts.push_back(r + e);
      }
      pts.push_back(r);
      auto br = merge_breaks(0.0, smax, pts, 0.1);
      double acc = 0.0;
      for (std::size_t p = 0; p + 1 < br.size(); ++p) {
        double a = br[p], b = br[p + 1], h = 0.5 * (b - a), c = 0.5 * (a + b);
        for (int j = 0; j < 12; ++j) {
          double s = c + h * gl.x[j];
          acc += h * gl.w[j] * f(s) * std::sinh(s) * detail::hls_shell_n3(r, s, lambda);
        }
      }
      total += gr.weights()[i] * g[i] * std::sinh(r) * acc;
    }
    return sphere_area(3) * sphere_area(2) * total;
  }
  auto kern = [lambda](double d) { return std::pow(2.0 * std::sinh(0.5 * d), -lambda); };
  auto fi = [&f](double r) { return f(r); };
  ConvolutionOptions o;
  o.g_singular = false;
  o.s_max = smax;
  double s = 0.0;
  for (std::size_t i = 0; i < gr.size(); ++i) {
    if (g[i] == 0.0) continue;
    double r = gr.node(i);
    s += gr.weights()[i] * g[i] * convolve_at(r, kern, fi, n, o) * sinh_pow(r, n - 1);
  }
  return sphere_area(n) * s;
}

inline DeficitReport hls_deficit(const RadialFunction& f, const RadialFunction& g, double lambda) {
  int n = f.dim();
  double p = 2.0 * n / (2.0 * n - lambda);
  double B = std::abs(hls_bilinear(f, g, lambda));
  double N = lp_norm(f, p) * lp_norm(g, p);
  // lhs = C ||f|| ||g||, rhs = |B|, so the deficit is the HLS slack
  return make_deficit(hls_constant(n, lambda) * N, B, 1.0);
}

// ---- deficits ----

inline DeficitReport deficit(const RadialFunction& u, const InequalitySpec& spec, const SpectralGrid& sg) {
  spec.validate();
  if (u.dim() != spec.n) throw mismatch_error("deficit: dimension of u differs from the spec");
  if (spec.kind == Inequality::HLS) return hls_deficit(u, u, spec.lambda);
  double lhs = quadratic_form(u, spec.multiplier(), sg);
  double nrm = lp_norm(u, spec.exponent());
  return make_deficit(lhs, nrm * nrm, spec.constant_used());
}

inline DeficitReport deficit(const RadialFunction& u, const InequalitySpec& spec) {
  return deficit(u, spec, spectral_grid_for(u.grid()));
}

// The half-space Hardy-Sobolev-Maz'ya inequality for v = x1^{n/2-k} u is
// evaluated through its ball-side form, which is the P_k deficit of u; the
// weight x1^gamma becomes dV exactly at gamma = (n-2k)p/2 - n.
inline InequalitySpec ball_side(const InequalitySpec& spec) {
  if (spec.kind != Inequality::HardyMazya) throw domain_error("halfspace_deficit: spec must be HardyMazya");
  auto s = spec;
  s.kind = Inequality::PkDeficit;
  return s;
}

inline DeficitReport halfspace_deficit(const RadialFunction& u_ball, const InequalitySpec& spec, const SpectralGrid& sg) {
  return deficit(u_ball, ball_side(spec), sg);
}

inline DeficitReport halfspace_deficit(const RadialFunction& u_ball, const InequalitySpec& spec) {
  return deficit(u_ball, ball_side(spec));
}

// Direct half-space value of int |grad v|^2 - 1/4 int v^2/x1^2 over R^3_+ for
// v = x1^{-1/2} u(rho(x, e1)) with u a bubble profile on H^3.
inline double halfspace_hardy_direct_n3(const BubbleFamily& b) {
  using boost::math::differentiation::make_ftuple;
  using boost::math::quadrature::gauss_kronrod;
  if (b.n != 3 || b.k != 1) throw domain_error("halfspace_hardy_direct_n3: n = 3, k = 1 only");
  double R = b.rho_support();
  double Amax = std::cosh(R) - 1.0;
  double x_lo = 1.0 + Amax - std::sqrt(Amax * Amax + 2.0 * Amax);
  double x_hi = 1.0 + Amax + std::sqrt(Amax * Amax + 2.0 * Amax);
  auto integrand = [&](double x1, double s) {
    auto vars = make_ftuple<double, 1, 1>(x1, s);
    const auto& X = std::get<0>(vars);
    const auto& S = std::get<1>(vars);
    auto A = ((X - 1.0) * (X - 1.0) + S * S) / (2.0 * X);
    auto v = b.of_cosh_minus_one(A) / sqrt(X);
    double vx = v.derivative(1, 0), vs = v.derivative(0, 1), v0 = v.derivative(0, 0);
    return (vx * vx + vs * vs - 0.25 * v0 * v0 / (x1 * x1)) * 2.0 * pi * s;
  };
  auto inner = [&](double t) {
    double x1 = std::exp(t);
    double s2 = 2.0 * x1 * Amax - (x1 - 1.0) * (x1 - 1.0);
    if (s2 <= 0.0) return 0.0;
    double v = gauss_kronrod<double, 61>::integrate([&](double s) { return integrand(x1, s); }, 0.0, std::sqrt(s2), 12, 1e-11);
    return v * x1;
  };
  return gauss_kronrod<double, 61>::integrate(inner, std::log(x_lo), std::log(x_hi), 12, 1e-10);
}

// ---- best-constant estimation ----

struct BestConstantEstimate {
  double estimate = 0.0;   // min ratio over the family
  double at = 0.0;         // parameter achieving it
  std::vector<double> params;
  std::vector<double> ratios;
  double richardson = std::numeric_limits<double>::quiet_NaN();  // two smallest parameters, error ~ eps^2
  bool non_increasing = true;  // ratios along decreasing parameter
};

using TrialFamily = std::function<RadialFunction(double)>;

inline TrialFamily bubble_trials(const InequalitySpec& spec) {
  return [spec](double eps) { return BubbleFamily{eps, spec.n, std::max(spec.k, 1)}.sample(); };
}

// Two-point Richardson extrapolation to eps = 0 assuming an eps^2 error.
inline double richardson_eps2(double e1, double r1, double e2, double r2) {
  return (e1 * e1 * r2 - e2 * e2 * r1) / (e1 * e1 - e2 * e2);
}

inline BestConstantEstimate estimate_best_constant(const InequalitySpec& spec, std::vector<double> grid,
                                                   TrialFamily family = {}) {
  if (grid.empty()) throw domain_error("estimate_best_constant: empty parameter grid");
  if (!family) family = bubble_trials(spec);
  std::sort(grid.begin(), grid.end(), std::greater<double>());
  BestConstantEstimate est;
  est.estimate = std::numeric_limits<double>::infinity();
  for (double e : grid) {
    auto d = deficit(family(e), spec);
    est.params.push_back(e);
    est.ratios.push_back(d.ratio);
    if (d.ratio < est.estimate) {
      est.estimate = d.ratio;
      est.at = e;
    }
  }
  for (std::size_t i = 1; i < est.ratios.size(); ++i)
    if (est.ratios[i] > est.ratios[i - 1]) est.non_increasing = false;
  std::size_t m = est.ratios.size();
  if (m >= 2) est.richardson = richardson_eps2(est.params[m - 2], est.ratios[m - 2], est.params[m - 1], est.ratios[m - 1]);
  return est;
}

// Euclidean Rayleigh quotient int |Delta w|^2 / ||w||_{2n/(n-2)}^2 of the
// cut-off bubble for k = 2, by 1-D radial quadrature with exact derivatives.
inline double euclidean_bubble_ratio_k2(const BubbleFamily& b) {
  using boost::math::differentiation::make_fvar;
  using boost::math::quadrature::gauss_kronrod;
  if (b.k != 2) throw domain_error("euclidean_bubble_ratio_k2: k = 2 only");
  int n = b.n;
  double p = 2.0 * n / (n - 4.0);
  auto lap = [&](double r) {
    auto R = make_fvar<double, 2>(r);
    auto w = b.euclidean(R * R);
    return w.derivative(2) + (n - 1.0) / r * w.derivative(1);
  };
  auto energy = [&](double r) {
    double l = lap(r);
    return l * l * std::pow(r, n - 1);
  };
  auto mass = [&](double r) { return std::pow(std::abs(b.euclidean(r * r)), p) * std::pow(r, n - 1); };
  double E = 0.0, M = 0.0;
  std::vector<double> br{0.0, std::min(b.eps, b.r_out), std::min(4.0 * b.eps, b.r_out), b.r_in,
                         0.5 * (b.r_in + b.r_out), b.r_out};
  std::sort(br.begin(), br.end());
  for (std::size_t i = 0; i + 1 < br.size(); ++i) {
    if (br[i + 1] <= br[i]) continue;
    E += gauss_kronrod<double, 61>::integrate(energy, br[i], br[i + 1], 15, 1e-13);
    M += gauss_kronrod<double, 61>::integrate(mass, br[i], br[i + 1], 15, 1e-13);
  }
  double S = sphere_area(n);
  return S * E / std::pow(S * M, 2.0 / p);
}

// ---- Riesz composition and its hyperbolic transplant ----

namespace detail {

// (a + b)^e - d^e with d = |a - b| > 0 supplied exactly, without cancellation.
inline double pow_sum_minus_diff(double a, double b, double e, double d) {
  double m = std::max(a, b), t = std::min(a, b) / m;
  if (t < 0.5) return std::pow(m, e) * std::pow(d / m, e) * std::expm1(e * (std::log1p(t) - std::log1p(-t)));
  return std::pow(d, e) * std::expm1(e * std::log((a + b) / d));
}

inline double pow_sum_minus_diff(double a, double b, double e) { return pow_sum_minus_diff(a, b, e, std::abs(a - b)); }

}  // namespace detail

// int_{R^n} |x|^{alpha-n} |y-x|^{beta-n} dx at |y| = 1 for n = 3, by radial
// quadrature of the exact angular integral.
inline double euclidean_riesz_composition_n3(double alpha, double beta) {
  using boost::math::quadrature::tanh_sinh;
  if (!(alpha > 0 && beta > 0 && alpha + beta < 3.0) || std::abs(beta - 1.0) < 1e-12)
    throw domain_error("euclidean_riesz_composition_n3: need alpha, beta > 0, alpha + beta < 3, beta != 1");
  // int_{-1}^{1} (r^2 + 1 - 2 r t)^{(beta-3)/2} dt is elementary; near r = 1
  // the distance |r - 1| comes from the rule's endpoint complement
  auto g = [&](double r, double rc) {
    double d = std::abs(r - 1.0) < 0.5 ? std::abs(rc) : std::abs(r - 1.0);
    return 2.0 * pi * std::pow(r, alpha - 1.0) * detail::pow_sum_minus_diff(r, 1.0, beta - 1.0, d) / ((beta - 1.0) * r);
  };
  tanh_sinh<double> ts;
  double a = ts.integrate(g, 0.0, 1.0, 1e-14);
  double b = ts.integrate(g, 1.0, 2.0, 1e-14);
  // r = 1/t on the tail leaves an integrable endpoint power at t = 0
  auto tail = [&](double t) {
    if (t <= 0.0) return 0.0;
    return 2.0 * pi * std::pow(t, 2.0 - alpha - beta) * (detail::pow_sum_minus_diff(1.0, t, beta - 1.0) / t) / (beta - 1.0);
  };
  double c = ts.integrate(tail, 0.0, 0.5, 1e-14);
  return a + b + c;
}

inline double riesz_ratio(double alpha, double beta, int n) {
  return gamma_riesz(alpha, n) * gamma_riesz(beta, n) / gamma_riesz(alpha + beta, n);
}

struct RieszTransplant {
  std::vector<double> rho, conv, bound;
  double worst_ratio = 0.0;  // max conv/bound
  double worst_rho = 0.0;
};

// [(sinh rho/2)^{alpha-n} (cosh rho/2)^{-alpha-beta}] * (sinh rho/2)^{beta-n}
// against 2^n gamma(alpha) gamma(beta) / gamma(alpha+beta)
// (sinh rho/2)^{alpha+beta-n} (cosh rho/2)^{-alpha}.
inline RieszTransplant riesz_transplant(double alpha, double beta, int n, const std::vector<double>& rhos) {
  check_dim(n, 2, 64);
  if (!(alpha > 0 && beta > 0 && alpha + beta < n)) throw domain_error("riesz_transplant: need alpha, beta > 0, alpha + beta < n");
  auto K1 = [=](double d) { return std::pow(std::sinh(0.5 * d), alpha - n) * std::pow(std::cosh(0.5 * d), -alpha - beta); };
  auto K2 = [=](double s) { return std::pow(std::sinh(0.5 * s), beta - n); };
  double c = std::pow(2.0, n) * riesz_ratio(alpha, beta, n);
  RieszTransplant out;
  ConvolutionOptions o;
  o.s_max = 60.0;
  // the graded cells drop a piece of size (2^-levels)^min(alpha, beta)
  o.levels = std::min(100, static_cast<int>(std::ceil(32.0 / std::min(alpha, beta))));
  for (double r : rhos) {
    double v = convolve_at(r, K1, K2, n, o);
    double b = c * std::pow(std::sinh(0.5 * r), alpha + beta - n) * std::pow(std::cosh(0.5 * r), -alpha);
    out.rho.push_back(r);
    out.conv.push_back(v);
    out.bound.push_back(b);
    if (v / b > out.worst_ratio) {
      out.worst_ratio = v / b;
      out.worst_rho = r;
    }
  }
  return out;
}

// The same convolution written on the ball, n = 3:
//   2^n cosh^{beta-n}(rho/2) int_{|x|<1} |x|^{alpha-n} |x-y|^{beta-n} dx,  |y| = tanh(rho/2).
inline double riesz_transplant_ball_n3(double alpha, double beta, double rho) {
  using boost::math::quadrature::tanh_sinh;
  if (std::abs(beta - 1.0) < 1e-12) throw domain_error("riesz_transplant_ball_n3: beta != 1");
  double y = std::tanh(0.5 * rho);
  auto f = [&](double r) {
    double ang = detail::pow_sum_minus_diff(r, y, beta - 1.0) / ((beta - 1.0) * r * y);
    return 2.0 * pi * std::pow(r, alpha - 1.0) * ang;
  };
  tanh_sinh<double> ts;
  double I = ts.integrate(f, 0.0, y, 1e-14) + ts.integrate(f, y, 1.0, 1e-14);
  return 8.0 * std::pow(std::cosh(0.5 * rho), beta - 3.0) * I;
}

inline Report riesz_composition_check(double alpha, double beta, int n) {
  Report rep;
  std::vector<double> rhos;
  for (int i = 0; i <= 40; ++i) rhos.push_back(0.05 * std::pow(200.0, i / 40.0));
  auto t = riesz_transplant(alpha, beta, n, rhos);
  char id[96];
  std::snprintf(id, sizeof id, "riesz_transplant.n%d.a%g.b%g", n, alpha, beta);
  rep.add(bound_row(id, "riesz-transplant-bound", t.worst_ratio, 1.0, 0.0,
                    "max conv/bound on [0.05, 10] at rho = " + std::to_string(t.worst_rho)));
  return rep;
}

// ---- Q_k duality chain ----

struct QkDualityChain {
  double kernel_constant = 0.0;  // sup Q_k^{-1} / (sinh rho/2)^{2k-n}
  double kernel_drift = 0.0;
  double hls = 0.0;              // C_{n, n-2k}
  double chain_constant = 0.0;   // kernel_constant 2^{n-2k} C_{n,n-2k}
  double norm_sq = 0.0;          // ||f||_{2n/(n-2k)}^2
  double form = 0.0;             // <Q_k f, f>
  bool holds = false;
};

inline QkDualityChain qk_duality_chain(const RadialFunction& f, int k) {
  int n = f.dim();
  check_qk(k, n);
  QkDualityChain c;
  auto fit = fit_constant([&](double r) { return qk_inverse_convolution_at(k, r, n) / qk_inverse_bound(r, n, k); },
                          1e-3, 15.0, 40);
  if (!fit.finite) throw convergence_error("qk_duality_chain: kernel ratio not finite");
  c.kernel_constant = std::max(fit.C, fit.C_refined);
  c.kernel_drift = fit.drift;
  c.hls = hls_constant(n, n - 2.0 * k);
  c.chain_constant = c.kernel_constant * std::pow(2.0, n - 2.0 * k) * c.hls;
  double nrm = lp_norm(f, 2.0 * n / (n - 2.0 * k));
  c.norm_sq = nrm * nrm;
  c.form = quadratic_form(f, Multiplier::qk(k), spectral_grid_for(f.grid()));
  c.holds = c.norm_sq <= c.chain_constant * c.form;
  return c;
}

// int |u|^p <= (int |u|^pt)^{s/pt} (int |u|^{p*})^{t/p*} with
// s = (1 - p/p*) / (1/pt - 1/p*), t = p - s, p* = 2n/(n-2k).
struct HolderInterpolation {
  double lhs = 0.0, rhs = 0.0, s = 0.0, t = 0.0;
};

inline HolderInterpolation holder_interpolation(const RadialFunction& u, int k, double p, double pt) {
  int n = u.dim();
  double ps = 2.0 * n / (n - 2.0 * k);
  if (!(2.0 < pt && pt < p && p <= ps)) throw domain_error("holder_interpolation: need 2 < pt < p <= p*");
  HolderInterpolation h;
  h.s = (1.0 - p / ps) / (1.0 / pt - 1.0 / ps);
  h.t = p - h.s;
  h.lhs = std::pow(lp_norm(u, p), p);
  h.rhs = std::pow(lp_norm(u, pt), h.s) * std::pow(lp_norm(u, ps), h.t);
  return h;
}

// ---- the biharmonic Hardy identity on R^5_+ and its spectral side ----

// int |Delta_H f + 3 f|^2 dV on H^5 from the radial Laplacian, and the
// quadratic form with symbol ((lambda^2 + 4)/4)^2.
struct SpectralSide {
  double direct = 0.0, spectral = 0.0;
};

inline SpectralSide biharmonic_shift_spectral(const RadialFunction& f, const SpectralGrid& sg = SpectralGrid::standard()) {
  if (f.dim() != 5) throw mismatch_error("biharmonic_shift_spectral: n = 5 only");
  auto L = radial_laplacian(f);
  auto sq = f;
  for (std::size_t i = 0; i < sq.values().size(); ++i) {
    double v = L[i] + 3.0 * f[i];
    sq.values()[i] = v * v;
  }
  auto m = Multiplier::custom("biharmonic_shift", [](double l) {
    double a = (l * l + 4.0) / 4.0;
    return a * a;
  });
  return {integrate_radial(sq), quadratic_form(f, m, sg)};
}

// Separable u = x1^{1/2} a(x1) b(|x'|) on R^5_+, a(x) = x^2 e^{-x},
// b(r) = e^{-r^2}.  euclidean = int |Delta u + u/(4 x1^2)|^2 dx,
// hyperbolic = int |Delta_H f + 3 f|^2 dV with f = x1^{1/2} u and
// Delta_H = x1^2 Delta - 3 x1 d/dx1.
struct HalfSpaceSide {
  double euclidean = 0.0, hyperbolic = 0.0;
};

inline HalfSpaceSide biharmonic_hardy_halfspace(double scale = 1.0) {
  using boost::math::differentiation::make_ftuple;
  using boost::math::quadrature::gauss_kronrod;
  auto parts = [scale](double x, double r) {
    auto vars = make_ftuple<double, 2, 2>(x, r);
    const auto& X = std::get<0>(vars);
    const auto& R = std::get<1>(vars);
    auto u = scale * sqrt(X) * X * X * exp(-X) * exp(-R * R);
    auto f = sqrt(X) * u;
    auto lap = [r](const auto& g) { return g.derivative(2, 0) + g.derivative(0, 2) + 3.0 / r * g.derivative(0, 1); };
    double e = lap(u) + u.derivative(0, 0) / (4.0 * x * x);
    double h = x * x * lap(f) - 3.0 * x * f.derivative(1, 0) + 3.0 * f.derivative(0, 0);
    double w = 2.0 * pi * pi * r * r * r;  // |S^3| r^3
    return std::pair<double, double>{e * e * w, h * h * w / std::pow(x, 5)};
  };
  auto integrate2 = [&](int which) {
    auto outer = [&](double x) {
      return gauss_kronrod<double, 61>::integrate(
          [&](double r) {
            auto p = parts(x, r);
            return which == 0 ? p.first : p.second;
          },
          0.0, 8.0, 10, 1e-12);
    };
    double lo = gauss_kronrod<double, 61>::integrate(outer, 0.0, 1.0, 12, 1e-11);
    double hi = gauss_kronrod<double, 61>::integrate(outer, 1.0, 60.0, 12, 1e-11);
    return lo + hi;
  };
  return {integrate2(0), integrate2(1)};
}

inline Report biharmonic_hardy_check() {
  Report rep;
  auto rg = RadialGrid::standard(8.0, 1024);
  auto f = RadialFunction::sample(rg, 5, [](double r) { return std::exp(-r * r) * smooth_cutoff(r, 5.0, 7.0); });
  auto s = biharmonic_shift_spectral(f);
  rep.add(agree_row("biharmonic_hardy.spectral", "biharmonic-hardy-identity", s.direct, s.spectral, 1e-6,
                    "f = exp(-rho^2) cutoff on H^5"));
  auto h = biharmonic_hardy_halfspace();
  rep.add(agree_row("biharmonic_hardy.halfspace", "biharmonic-hardy-identity", h.euclidean, h.hyperbolic, 1e-3,
                    "u = x1^(1/2) x1^2 e^(-x1) e^(-|x'|^2) on R^5_+"));
  auto z = biharmonic_hardy_halfspace(0.0);
  rep.add(flag_row("biharmonic_hardy.zero", "biharmonic-hardy-identity", z.euclidean == 0.0 && z.hyperbolic == 0.0,
                   z.euclidean, z.hyperbolic));
  return rep;
}

// inf over the grid of ((lambda^4 + 10 lambda^2)/16) / ((lambda^2 + 4)^2/16):
// the P_2 deficit symbol against that of (Delta_H + 3)^2.
inline double spectral_gap_ratio(double lambda) {
  double l2 = lambda * lambda;
  return (l2 * l2 + 10.0 * l2) / ((l2 + 4.0) * (l2 + 4.0));
}

inline double spectral_gap_ratio_inf(const std::vector<double>& grid) {
  if (grid.empty()) throw domain_error("spectral_gap_ratio_inf: empty grid");
  double m = std::numeric_limits<double>::infinity();
  for (double l : grid) m = std::min(m, spectral_gap_ratio(l));
  return m;
}

}  // namespace hyp
