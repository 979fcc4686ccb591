#pragma once

// Verification suites. Each group returns report rows; the CLI and the
// acceptance driver assemble them.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "hyp/constants.hpp"
#include "hyp/convolution.hpp"
#include "hyp/exact.hpp"
#include "hyp/geometry.hpp"
#include "hyp/inequalities.hpp"
#include "hyp/kernels.hpp"
#include "hyp/report.hpp"
#include "hyp/spectral.hpp"

namespace hyp {

struct RunConfig {
  std::string suite = "all";
  int n = 5;
  int k = 2;
  double lambda = 1.0;  // HLS exponent on H^3
  std::vector<double> eps{0.4, 0.2, 0.1, 0.05};
  int kmax = 8;
  unsigned long long seed = 1;
  std::string format = "csv";
  std::string out;

  void validate() const {
    static const std::vector<std::string> suites{"geometry", "kernels", "transform", "exact",
                                                 "inequalities", "constants", "all"};
    if (std::find(suites.begin(), suites.end(), suite) == suites.end()) throw domain_error("unknown suite: " + suite);
    check_sobolev_order(n, k);
    if (n > 9) throw domain_error("--n: bubble checks support n <= 9");
    if (!(lambda > 0.0 && lambda < 3.0)) throw domain_error("--lambda must lie in (0, 3)");
    if (eps.empty()) throw domain_error("--eps: need at least one value");
    for (double e : eps)
      if (!(e > 0.0 && e < 1.0)) throw domain_error("--eps values must lie in (0, 1)");
    if (kmax < 0 || kmax > 8) throw domain_error("--kmax must lie in [0, 8]");
    if (format != "csv" && format != "json") throw domain_error("--format must be csv or json");
  }
};

namespace detail {

inline std::string fmt(const char* f, double a) {
  char b[64];
  std::snprintf(b, sizeof b, f, a);
  return b;
}

inline std::string tag(double x) { return fmt("%g", x); }

// Random point of the ball of radius r0.
inline BallPoint random_ball_point(std::mt19937_64& rng, int n, double r0) {
  std::normal_distribution<double> nd;
  std::uniform_real_distribution<double> ud;
  std::vector<double> x(n);
  double s = 0.0;
  for (double& v : x) {
    v = nd(rng);
    s += v * v;
  }
  double r = r0 * std::pow(ud(rng), 1.0 / n);
  for (double& v : x) v *= r / std::sqrt(s);
  return BallPoint(std::move(x));
}

}  // namespace detail

// ---- geometry ----

inline Report geometry_checks(unsigned long long seed) {
  Report rep;
  std::mt19937_64 rng(seed);
  double to_origin = 0, involution = 0, norm_vs_dist = 0, invariance = 0, models = 0, model_dist = 0;
  for (int n = 2; n <= 6; ++n)
    for (int t = 0; t < 40; ++t) {
      auto a = detail::random_ball_point(rng, n, 0.9);
      auto x = detail::random_ball_point(rng, n, 0.9);
      auto y = detail::random_ball_point(rng, n, 0.9);
      to_origin = std::max(to_origin, mobius_shift(a, a).norm());
      auto back = mobius_shift(a, mobius_shift(a, x));
      involution = std::max(involution, std::sqrt(detail::dist2(back.coords(), x.coords())));
      double rho = geodesic_distance(a, x);
      norm_vs_dist = std::max(norm_vs_dist, rel_diff(mobius_shift(a, x).norm(), std::tanh(0.5 * rho)));
      invariance = std::max(invariance, rel_diff(geodesic_distance(mobius_shift(a, x), mobius_shift(a, y)),
                                                 geodesic_distance(x, y)));
      auto h = to_half_space(x);
      models = std::max(models, std::sqrt(detail::dist2(to_ball(h).coords(), x.coords())));
      model_dist = std::max(model_dist, rel_diff(geodesic_distance(h, to_half_space(y)), geodesic_distance(x, y)));
    }
  rep.add(flag_row("geometry.mobius.sends_a_to_origin", "mobius-shift", to_origin <= 1e-12, to_origin, 0.0));
  rep.add(flag_row("geometry.mobius.involution", "mobius-shift", involution <= 1e-10, involution, 0.0));
  rep.add(flag_row("geometry.mobius.norm_is_tanh_half_distance", "distance-formula", norm_vs_dist <= 1e-10,
                   norm_vs_dist, 0.0));
  rep.add(flag_row("geometry.mobius.isometry", "distance-formula", invariance <= 1e-9, invariance, 0.0));
  rep.add(flag_row("geometry.models.round_trip", "ball-half-space-isometry", models <= 1e-12, models, 0.0));
  rep.add(flag_row("geometry.models.distance", "ball-half-space-isometry", model_dist <= 1e-9, model_dist, 0.0));
  // volume element: 2^n at the origin, and the half-space density at e1 is 1
  rep.add(agree_row("geometry.volume.origin", "ball-volume-element", volume_density(BallPoint::origin(4)), 16.0, 1e-15));
  return rep;
}

// ---- kernels ----

// Resolvent by quadrature against the conformal Green function and the H^5 closed forms.
inline Report resolvent_checks() {
  Report rep;
  for (int n : {3, 4, 5, 6})
    for (double r : {0.1, 1.0, 5.0}) {
      double l0 = -n * (n - 2) / 4.0;
      rep.add(agree_row("resolvent.conformal.n" + std::to_string(n) + ".rho" + detail::tag(r), "resolvent-quadrature",
                        resolvent_kernel(l0, r, n), conformal_green(r, n), 1e-8));
    }
  for (double r : {0.1, 1.0, 5.0}) {
    double s3 = std::pow(std::sinh(r), 3);
    rep.add(agree_row("resolvent.h5.lambda-3.rho" + detail::tag(r), "h5-resolvent-closed-forms",
                      resolvent_kernel(-3.0, r, 5), 1.0 / (8 * pi * pi * s3), 1e-10));
    rep.add(agree_row("resolvent.h5.lambda-4.rho" + detail::tag(r), "h5-resolvent-closed-forms",
                      resolvent_kernel(-4.0, r, 5), std::cosh(r) / (8 * pi * pi * s3), 1e-10));
  }
  return rep;
}

// ((-Delta - 4)(-Delta - 3))^{-1} on H^5.
inline Report product_kernel_checks() {
  Report rep;
  // the difference cancels like rho^2 near 0, so it is measured against R(-4)
  double worst_diff = 0, worst_at = 0, worst_bound = -1, bound_at = 0, worst_printed = 0;
  for (int i = 0; i <= 300; ++i) {
    double r = 1e-3 * std::pow(15.0 / 1e-3, i / 300.0);
    double k = product_resolvent_h5(r);
    double r4 = resolvent_kernel(-4.0, r, 5);
    double d = std::abs(k - (r4 - resolvent_kernel(-3.0, r, 5))) / r4;
    if (d > worst_diff) {
      worst_diff = d;
      worst_at = r;
    }
    double b = k / (1.0 / (16 * pi * pi) / (2 * std::sinh(0.5 * r)));
    if (b > worst_bound) {
      worst_bound = b;
      bound_at = r;
    }
    worst_printed = std::max(worst_printed, rel_diff(product_resolvent_h5_printed(r) / k, std::cosh(0.5 * r)));
  }
  rep.add(flag_row("product_kernel.resolvent_difference", "product-resolvent-h5", worst_diff <= 1e-12, worst_diff, 1e-12,
                   "max |K - (R(-4) - R(-3))| / R(-4) on [1e-3, 15] at rho = " + detail::fmt("%.4g", worst_at)));
  rep.add(bound_row("product_kernel.upper_bound", "product-resolvent-h5", worst_bound, 1.0, 0.0,
                    "max kernel / ((16 pi^2)^-1 (2 sinh(rho/2))^-1) at rho = " + detail::fmt("%.4g", bound_at)));
  rep.add(flag_row("misprint.product_kernel_cosh_power", "product-resolvent-h5", worst_printed <= 1e-12, worst_printed, 0.0,
                   "printed cosh^2(rho/2) denominator exceeds the true kernel by exactly cosh(rho/2)"));
  return rep;
}

inline Report heat_checks() {
  Report rep;
  auto heat3 = [](double t, double r) {
    double ratio = r < 1e-8 ? 1.0 : r / std::sinh(r);
    return std::pow(4 * pi * t, -1.5) * ratio * std::exp(-t - r * r / (4 * t));
  };
  double worst = 0;
  for (double t : {0.1, 1.0, 3.0})
    for (double r : {0.0, 0.3, 1.0, 4.0}) worst = std::max(worst, rel_diff(heat_kernel(t, r, 3), heat3(t, r)));
  rep.add(flag_row("heat.closed_form.n3", "heat-kernel", worst <= 1e-12, worst, 1e-12));
  auto rg = RadialGrid::standard(30.0, 1024);
  for (int n : {3, 4, 5})
    for (double t : {0.1, 1.0}) {
      auto h = RadialFunction::sample(rg, n, [&](double r) { return heat_kernel(t, r, n); });
      rep.add(agree_row("heat.mass.n" + std::to_string(n) + ".t" + detail::tag(t), "heat-kernel", integrate_radial(h), 1.0,
                        1e-6));
    }
  ConvolutionOptions o;
  o.f_singular = o.g_singular = false;
  o.s_max = 20.0;
  for (int n : {3, 5}) {
    auto h = [n](double r) { return heat_kernel(0.5, r, n); };
    double m = 0;
    for (double r = 0.1; r <= 3.0 + 1e-12; r += 0.1) m = std::max(m, rel_diff(convolve_at(r, h, h, n, o), heat_kernel(1.0, r, n)));
    rep.add(flag_row("heat.semigroup.n" + std::to_string(n), "heat-kernel", m <= 1e-4, m, 1e-4,
                     "max rel err of heat(0.5)*heat(0.5) - heat(1) on [0.1, 3]"));
  }
  return rep;
}

// Fractional resolvent on H^3 and the decay profile Psi_alpha.
inline Report fractional_kernel_checks() {
  Report rep;
  double worst = 0;
  for (double r : {0.01, 0.1, 1.0, 5.0, 12.0})
    worst = std::max(worst, rel_diff(frac_resolvent_h3(2.0, r), 1.0 / (4 * pi * std::sinh(r))));
  rep.add(flag_row("fractional.alpha2_is_newtonian", "fractional-resolvent-h3", worst <= 1e-12, worst, 1e-12));
  for (double a : {1.0, 1.5, 2.0, 2.5}) {
    double mx = 0;
    for (int i = 0; i <= 200; ++i) mx = std::max(mx, psi_alpha(a, 1e-3 * std::pow(15.0 / 1e-3, i / 200.0)));
    bool dec = decreasing_on([a](double r) { return psi_alpha(a, r); }, 1e-3, 15.0);
    rep.add(flag_row("fractional.psi.alpha" + detail::tag(a), "fractional-resolvent-h3", mx <= 1.0 && dec, mx, 1.0,
                     dec ? "max on [1e-3, 15], decreasing" : "not decreasing"));
  }
  return rep;
}

inline Report qk_inverse_checks() {
  Report rep;
  int n = 5, k = 2;
  auto rg = RadialGrid::standard(20.0, 2048);
  auto res = qk_inverse_cross_checked(k, rg, n);
  rep.add(flag_row("qk_inverse.n5k2.routes", "qk-inverse-kernel", res.max_rel_diff <= 1e-3, res.max_rel_diff, 1e-3,
                   std::to_string(res.check_radii.size()) + " radii in [0.1, 5]"));
  auto f = fit_constant([&](double r) { return res.kernel(r) / qk_inverse_bound(r, n, k); }, 1e-3, 15.0, 100);
  rep.add(flag_row("qk_inverse.n5k2.bound_constant", "qk-inverse-bound", f.finite && f.drift < 0.05, f.C_refined, f.C,
                   "drift " + detail::fmt("%.3g", f.drift) + " under grid doubling"));
  return rep;
}

// ---- transform ----

inline Report transform_checks() {
  Report rep;
  auto rg = RadialGrid::standard(12.0);
  std::vector<std::pair<std::string, std::function<double(double)>>> battery{
      {"gauss", [](double r) { return std::exp(-r * r); }},
      {"gauss_cosh", [](double r) { return std::exp(-2 * r * r) * std::cosh(r); }},
      {"gauss_sech2", [](double r) { return std::exp(-r * r) / std::pow(std::cosh(r), 2); }},
      {"r2gauss", [](double r) { return r * r * std::exp(-r * r); }},
      {"gauss_cos", [](double r) { return std::exp(-0.5 * r * r) * std::cos(2 * r); }}};
  for (int n : {3, 4, 5})
    for (const auto& [name, g] : battery) {
      auto f = RadialFunction::sample(rg, n, g);
      auto p = plancherel_check(f);
      std::string id = "transform.n" + std::to_string(n) + "." + name;
      rep.add(agree_row(id + ".isometry", "plancherel", p.lhs, p.rhs, 1e-6));
      auto back = inverse_transform(forward_transform(f), rg);
      double err = 0, scale = 0;
      for (std::size_t i = 0; i < rg.size(); ++i) {
        err = std::max(err, std::abs(back[i] - f[i]));
        scale = std::max(scale, std::abs(f[i]));
      }
      rep.add(flag_row(id + ".round_trip", "inversion-formula", err / scale <= 1e-6, err / scale, 1e-6,
                       "max |F^-1 F f - f| / max |f|"));
    }
  double w3 = 0, w5 = 0;
  for (double l : {0.1, 0.5, 1.0, 2.0, 7.0}) {
    w3 = std::max(w3, rel_diff(plancherel_density(l, 3), l * l / 4));
    w5 = std::max(w5, rel_diff(plancherel_density(l, 5), l * l * (l * l + 4) / 576));
  }
  rep.add(flag_row("transform.density.n3", "plancherel-density", w3 <= 1e-12, w3, 1e-12, "lambda^2/4"));
  rep.add(flag_row("transform.density.n5", "plancherel-density", w5 <= 1e-12, w5, 1e-12, "lambda^2(lambda^2+4)/576"));
  return rep;
}

// ---- exact ----

inline Report exact_checks(int kmax, unsigned long long seed) {
  Report rep;
  rep.append(verify_sinh_recursion(kmax));
  rep.append(exact_sweep(3, 12, 6));
  struct Case {
    int n, k;
    Poly f;
  };
  std::vector<Case> cases{{3, 1, Poly::var(3, 0)},
                          {5, 1, Poly::constant(5, 1.0) + Poly::var(5, 0) * Poly::var(5, 1) + 2.0 * Poly::var(5, 2)},
                          {5, 2, Poly::constant(5, 1.0) + Poly::var(5, 0) * Poly::var(5, 1)}};
  for (const auto& c : cases) {
    auto pts = ball_conjugation_numeric_check(c.k, c.f, 20, static_cast<unsigned>(seed));
    double scale = 0, err = 0;
    for (const auto& p : pts) scale = std::max(scale, std::abs(p.rhs));
    for (const auto& p : pts) err = std::max(err, std::abs(p.lhs - p.rhs));
    rep.add(flag_row("ball_conjugation.n" + std::to_string(c.n) + "k" + std::to_string(c.k), "ball-gjms-conjugation",
                     err / scale <= 1e-4, err / scale, 1e-4, "20 points, finite differences"));
  }
  return rep;
}

// ---- constants ----

inline Report constants_checks(int n = 5, int k = 2) {
  Report rep;
  rep.add(agree_row("constants.s3", "sobolev-constant-s3", gamma_riesz(2.0, 3) / hls_constant(3, 1.0),
                    3.0 * std::pow(pi / 2.0, 4.0 / 3.0), 1e-12, "gamma(2) / C_{3,1}"));
  double g4 = gamma_riesz(4.0, 5);
  rep.add(agree_row("constants.gamma4.n5", "riesz-normalisation", g4, 16 * pi * pi, 1e-12));
  rep.add(flag_row("misprint.gamma4_reciprocal", "riesz-normalisation", rel_diff(1.0 / (16 * pi * pi), 1.0 / g4) <= 1e-12,
                   1.0 / (16 * pi * pi), g4,
                   "the product-kernel proof prints gamma(4) = 1/(16 pi^2); the Riesz normalisation gives 16 pi^2"));
  double s = sobolev_constant(n, k);
  std::string nk = "n" + std::to_string(n) + "k" + std::to_string(k);
  rep.add(agree_row("constants.sobolev." + nk + ".closed_form", "sharp-sobolev-constant", sobolev_constant_closed_form(n, k),
                    s, 1e-12, "gamma(2k) / C_{n,n-2k} against the simplified Gamma form"));
  double printed = std::pow(4.0, k) * std::pow(pi, k) * std::exp(std::lgamma(0.5 * n + k)) / (0.5 * n - k) *
                   std::pow(std::exp(std::lgamma(0.5 * n) - std::lgamma(double(n))), 2.0 * k / n);
  rep.add(flag_row("misprint.sobolev_gamma_denominator", "sharp-sobolev-constant", rel_diff(printed, s) > 1e-3, printed, s,
                   "printed denominator (n/2 - k) instead of Gamma(n/2 - k); the printed value differs"));
  rep.add(agree_row("constants.sobolev.n5k2", "sharp-sobolev-constant", sobolev_constant(5, 2), 102.38327344058295, 1e-12));
  rep.add(agree_row("constants.hls.n5.lambda1", "sharp-hls-constant", hls_constant(5, 1.0),
                    16 * pi * pi / 102.38327344058295, 1e-12, "C_{5,1} = gamma(4) / S_{5,2}"));
  rep.add(agree_row("constants.hls.n3.lambda1", "sharp-hls-constant", hls_constant(3, 1.0), 2.2940107035415993, 1e-14));
  // the n = 5 eigenvalue (16 + lambda^2)/4 gives (x - 4)(x - 3) = lambda^2 (lambda^2 + 4) / 16
  double worst = 0;
  for (double l : {0.5, 1.0, 3.0}) {
    double x = (16.0 + l * l) / 4.0;
    worst = std::max(worst, rel_diff(Multiplier::h5_product()(l), (x - 4.0) * (x - 3.0)));
  }
  rep.add(flag_row("misprint.h5_symbol", "h5-biharmonic-symbol", worst <= 1e-14, worst, 0.0,
                   "symbol is lambda^2(lambda^2+4)/16, printed lambda^2(lambda^2+1)/16"));
  rep.add(flag_row("misprint.h5_exponent", "h5-biharmonic-exponent",
                   InequalitySpec::h5_biharmonic().critical_exponent() == 10.0, 10.0, 10.0 / 3.0,
                   "scaling forces exponent 2n/(n-2k) = 10; printed 10/3"));
  return rep;
}

// ---- inequalities ----

// Ratios of the bubble family against S_{n,k} and the deficit battery.
inline Report sharpness_checks(int n, int k, std::vector<double> eps) {
  Report rep;
  std::sort(eps.begin(), eps.end(), std::greater<double>());
  std::string nk = "n" + std::to_string(n) + "k" + std::to_string(k);
  double S = sobolev_constant(n, k);
  auto est = estimate_best_constant(InequalitySpec::sharp_sobolev(n, k), eps);
  std::string table;
  for (std::size_t i = 0; i < est.params.size(); ++i)
    table += (i ? "; " : "") + detail::fmt("%g", est.params[i]) + ":" + detail::fmt("%.8g", est.ratios[i]);
  rep.add(flag_row("sharpness." + nk + ".non_increasing", "sharp-sobolev-constant", est.non_increasing, est.ratios.back(),
                   est.ratios.front(), table));
  rep.add(bound_row("sharpness." + nk + ".above_constant", "sharp-sobolev-constant", S, est.estimate, 0.0,
                    "S_{n,k} <= min ratio"));
  if (est.params.size() >= 2) {
    std::string note = "eps^2 Richardson on the two smallest eps";
    if (est.params.size() >= 3) {
      // odd-power fit r = S + a eps + b eps^3 through the three smallest eps
      std::size_t m = est.params.size();
      double e[3] = {est.params[m - 3], est.params[m - 2], est.params[m - 1]};
      double r[3] = {est.ratios[m - 3], est.ratios[m - 2], est.ratios[m - 1]};
      Eigen::Matrix3d A;
      Eigen::Vector3d b;
      for (int i = 0; i < 3; ++i) {
        A(i, 0) = 1.0;
        A(i, 1) = e[i];
        A(i, 2) = e[i] * e[i] * e[i];
        b(i) = r[i];
      }
      double odd = A.colPivHouseholderQr().solve(b)(0);
      note += "; fit S + a eps + b eps^3 gives " + detail::fmt("%.6g", odd) +
              "; cutoff band [0.8, 0.9] leaves an O(eps^(n-2k)) remainder";
    }
    rep.add(agree_row("sharpness." + nk + ".extrapolated", "sharp-sobolev-constant", est.richardson, S, 0.02, note));
  }
  if (k == 2) {
    // independent Euclidean-side value of the same quotient
    double e = eps[eps.size() / 2];
    BubbleFamily b{e, n, k};
    auto d = deficit(b.sample(), InequalitySpec::sharp_sobolev(n, k));
    rep.add(agree_row("sharpness." + nk + ".euclidean_side.eps" + detail::tag(e), "conformal-covariance", d.ratio,
                      euclidean_bubble_ratio_k2(b), 1e-6));
  }
  std::vector<InequalitySpec> specs{InequalitySpec::pk_deficit(n, k), InequalitySpec::hardy_mazya(n, k)};
  if (k >= 2) specs.push_back(InequalitySpec::qk_sobolev(n, k));
  if (n == 5 && k == 2) specs.push_back(InequalitySpec::h5_biharmonic());
  for (double e : eps) {
    auto u = BubbleFamily{e, n, k}.sample();
    for (const auto& s : specs) {
      auto d = s.kind == Inequality::HardyMazya ? halfspace_deficit(u, s) : deficit(u, s);
      rep.add(bound_row("deficit." + to_string(s.kind) + "." + nk + ".eps" + detail::tag(e), "deficit-" + to_string(s.kind),
                        d.constant_used * d.rhs, d.lhs, 1e-8, "C " + detail::fmt("%.8g", d.constant_used)));
    }
  }
  return rep;
}

inline Report hls_checks(double lambda, std::vector<double> eps) {
  Report rep;
  double C = hls_constant(3, lambda);
  std::string lt = ".lambda" + detail::tag(lambda);
  auto rg = RadialGrid::standard(8.0, 512);
  auto mk = [&](auto f) { return RadialFunction::sample(rg, 3, f); };
  std::vector<RadialFunction> fs{mk([](double r) { return std::exp(-r * r); }),
                                 mk([](double r) { return 1.0 / std::pow(std::cosh(r), 4); }),
                                 mk([](double r) { return std::exp(-3 * r) * smooth_cutoff(r, 6.0, 7.5); })};
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i; j < fs.size(); ++j) {
      auto d = hls_deficit(fs[i], fs[j], lambda);
      rep.add(bound_row("hls.battery" + lt + ".pair" + std::to_string(i) + std::to_string(j), "hyperbolic-hls",
                        C * d.rhs / d.lhs, C, 1e-6, "bilinear / (||f|| ||g||)"));
    }
  std::sort(eps.begin(), eps.end(), std::greater<double>());
  double last = 0;
  for (double e : eps) {
    BubbleFamily b{e, 3, 1};
    b.power = 6.0 - lambda;
    auto f = b.sample();
    auto d = hls_deficit(f, f, lambda);
    last = C * d.rhs / d.lhs;
    rep.add(flag_row("hls.concentrating" + lt + ".eps" + detail::tag(e) + ".strict", "hyperbolic-hls", last < C, last, C,
                     "strictly below the sharp constant"));
  }
  rep.add(agree_row("hls.concentrating" + lt + ".approach", "hyperbolic-hls", last, C, 0.05,
                    "smallest eps " + detail::tag(eps.back())));
  return rep;
}

inline Report riesz_checks() {
  Report rep;
  for (auto [n, a, b] : {std::tuple{5, 1.0, 2.0}, std::tuple{5, 2.0, 2.0}, std::tuple{4, 1.0, 1.0}})
    rep.append(riesz_composition_check(a, b, n));
  for (auto [a, b] : {std::pair{1.0, 1.5}, std::pair{0.5, 0.7}, std::pair{2.0, 0.5}})
    rep.add(agree_row("riesz_euclidean.n3.a" + detail::tag(a) + ".b" + detail::tag(b), "riesz-composition",
                      euclidean_riesz_composition_n3(a, b), riesz_ratio(a, b, 3), 1e-6, "|y| = 1"));
  return rep;
}

inline Report biharmonic_checks() {
  Report rep = biharmonic_hardy_check();
  double g = spectral_gap_ratio(1e-3);
  rep.add(bound_row("biharmonic_hardy.gap_ratio", "no-uniform-lower-bound", g, 1e-5, 0.0,
                    "(lambda^4 + 10 lambda^2) / (lambda^2 + 4)^2 at lambda = 1e-3"));
  return rep;
}

// Duality chain, interpolation and the n = 3 half-space identity.
inline Report auxiliary_inequality_checks() {
  Report rep;
  auto u = bubble_family(0.3, 5, 2);
  auto c = qk_duality_chain(u, 2);
  rep.add(bound_row("qk_duality.n5k2.chain", "qk-sobolev-duality", c.norm_sq, c.chain_constant * c.form, 0.0,
                    "kernel constant " + detail::fmt("%.6g", c.kernel_constant)));
  auto h = holder_interpolation(u, 2, 10.0 / 3.0, 3.0);
  rep.add(bound_row("qk_duality.n5k2.holder", "interpolation", h.lhs, h.rhs, 1e-12));
  BubbleFamily b{0.3, 3, 1};
  auto d = halfspace_deficit(b.sample(), InequalitySpec::hardy_mazya(3, 1, 4.0));
  rep.add(agree_row("halfspace.n3k1.direct", "hardy-mazya-half-space", halfspace_hardy_direct_n3(b), d.lhs, 1e-3,
                    "R^3_+ quadrature of x1^(-1/2) u against the ball form"));
  return rep;
}

// ---- suites ----

inline Report run_suite(const RunConfig& cfg) {
  cfg.validate();
  Report rep;
  auto want = [&](const char* s) { return cfg.suite == "all" || cfg.suite == s; };
  if (want("geometry")) rep.append(geometry_checks(cfg.seed));
  if (want("kernels")) {
    rep.append(resolvent_checks());
    rep.append(product_kernel_checks());
    rep.append(heat_checks());
    rep.append(fractional_kernel_checks());
    rep.append(qk_inverse_checks());
  }
  if (want("transform")) rep.append(transform_checks());
  if (want("exact")) rep.append(exact_checks(cfg.kmax, cfg.seed));
  if (want("constants")) rep.append(constants_checks(cfg.n, cfg.k));
  if (want("inequalities")) {
    rep.append(sharpness_checks(cfg.n, cfg.k, cfg.eps));
    rep.append(hls_checks(cfg.lambda, {0.4, 0.2, 0.1}));
    rep.append(riesz_checks());
    rep.append(biharmonic_checks());
    rep.append(auxiliary_inequality_checks());
  }
  rep.sort();
  return rep;
}

}  // namespace hyp
