#pragma once

// Convolution of radial functions on H^n.
//
// With x at radius rho and y at radius s, the angle between them is traded
// for the distance d = rho(x, y):
//   (f*g)(rho) = |S^{n-2}| / sinh^{n-2}(rho)
//                * int_0^inf g(s) sinh(s) int_{|rho-s|}^{rho+s} f(d) sinh(d) B^{(n-3)/2} dd ds,
//   B = (cosh d - cosh(rho-s)) (cosh(rho+s) - cosh d),
// which is symmetric in (f, s) <-> (g, d).

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "hyp/errors.hpp"
#include "hyp/quadrature.hpp"
#include "hyp/radial.hpp"
#include "hyp/special.hpp"

namespace hyp {

struct ConvolutionOptions {
  double s_max = 40.0;   // truncation of the outer integral
  double f_support = std::numeric_limits<double>::infinity();  // f vanishes beyond this
  double hmax = 0.5;     // widest panel
  int order = 12;        // Gauss points per panel
  int levels = 24;       // geometric grading depth at singular points
  bool f_singular = true;
  bool g_singular = true;
  double self_check_tol = 1e-8;
};

namespace detail {

// Inner rule on [lo, hi] with exact offsets to both ends.
// Square-root endpoint rules are used only when B carries a half-integer power.
inline void inner_rule(std::vector<QNode>& out, double lo, double hi, const ConvolutionOptions& o, bool sqrt_ends) {
  out.clear();
  std::vector<double> br{lo};
  double mid = 0.5 * (lo + hi);
  if (o.f_singular && lo < 0.25 * (hi - lo)) {
    double x = 2.0 * lo;
    if (x <= lo) x = lo + 1e-300;
    // start no lower than mid * 2^-levels
    x = std::max(x, lo + (mid - lo) * std::ldexp(1.0, -o.levels));
    while (x < mid) {
      br.push_back(x);
      x = lo + 2.0 * (x - lo);
    }
  }
  double a = br.back();
  int np = std::max(1, static_cast<int>(std::ceil((hi - a) / o.hmax - 1e-12)));
  for (int p = 1; p < np; ++p) br.push_back(a + (hi - a) * p / np);
  br.push_back(hi);
  if (br.size() == 2) br.insert(br.begin() + 1, mid);
  std::size_t P = br.size() - 1;
  for (std::size_t p = 0; p < P; ++p) {
    std::size_t start = out.size();
    if (p == 0 && sqrt_ends)
      append_left_sqrt(out, br[0], br[1], o.order);
    else if (p + 1 == P && sqrt_ends)
      append_right_sqrt(out, br[p], br[p + 1], o.order);
    else
      append_gauss(out, br[p], br[p + 1], o.order);
    for (std::size_t i = start; i < out.size(); ++i) {
      if (p > 0) out[i].from_lo = out[i].x - lo;
      if (p + 1 < P) out[i].from_hi = hi - out[i].x;
    }
  }
}

inline std::vector<double> outer_breaks(double rho, double smax, const ConvolutionOptions& o) {
  std::vector<double> pts;
  double w = 0.5 * std::min(rho, 1.0);
  if (o.g_singular)
    for (int j = 0; j < o.levels; ++j) pts.push_back(w * std::ldexp(1.0, -j));
  if (o.f_singular && rho < smax)
    for (int j = 0; j < o.levels; ++j) {
      double e = w * std::ldexp(1.0, -j);
      pts.push_back(rho - e);
      pts.push_back(rho + e);
    }
  pts.push_back(rho);
  // outward grading when rho is small against the panel width
  for (double x = 2.0 * rho; x < 4.0 * o.hmax; x *= 2.0) pts.push_back(x);
  return merge_breaks(0.0, smax, pts, o.hmax);
}

}  // namespace detail

// (f*g)(rho) for profiles given as callables.
template <class F, class G>
double convolve_at(double rho, const F& f, const G& g, int n, const ConvolutionOptions& o = {}) {
  check_dim(n);
  require(rho >= 0.0 && std::isfinite(rho), "convolve_at: rho must be >= 0");
  if (rho == 0.0) {
    // (f*g)(0) = int f g dV
    std::vector<QNode> nodes;
    auto br = detail::outer_breaks(1e-300, o.s_max, o);
    for (std::size_t p = 0; p + 1 < br.size(); ++p) append_gauss(nodes, br[p], br[p + 1], o.order);
    double s = 0.0;
    for (const auto& q : nodes) s += q.w * f(q.x) * g(q.x) * std::pow(std::sinh(q.x), n - 1);
    return sphere_area(n) * s;
  }
  auto br = detail::outer_breaks(rho, o.s_max, o);
  std::vector<QNode> inner;
  const auto& gl = gauss_legendre(o.order);
  double total = 0.0;
  for (std::size_t p = 0; p + 1 < br.size(); ++p) {
    double a = br[p], b = br[p + 1], h = 0.5 * (b - a), c = 0.5 * (a + b);
    for (int j = 0; j < o.order; ++j) {
      double s = c + h * gl.x[j];
      double gs = g(s);
      if (gs == 0.0) continue;
      double lo = std::abs(rho - s), hi = rho + s;
      if (lo >= o.f_support) continue;
      double top = std::min(hi, o.f_support);
      detail::inner_rule(inner, lo, top, o, n % 2 == 0);
      if (top < hi)
        for (auto& q : inner) q.from_hi += hi - top;
      double acc = 0.0;
      for (const auto& q : inner) {
        double d = q.x;
        double B = 4.0 * std::sinh(0.5 * (d + lo)) * std::sinh(0.5 * q.from_lo) * std::sinh(0.5 * (hi + d)) *
                   std::sinh(0.5 * q.from_hi);
        acc += q.w * f(d) * std::sinh(d) * hpow(B, n - 3);
      }
      total += h * gl.w[j] * gs * std::sinh(s) * acc;
    }
  }
  return sphere_area(n - 1) * total / std::pow(std::sinh(rho), n - 2);
}

// Convolution of two sampled radial functions, evaluated on the grid of f.
// The order is raised until two successive orders agree at a probe node.
inline RadialFunction radial_convolution(const RadialFunction& f, const RadialFunction& g, ConvolutionOptions o = {}) {
  if (f.dim() != g.dim()) throw mismatch_error("radial_convolution: dimension mismatch");
  int n = f.dim();
  auto support = [](const RadialFunction& u) {
    double big = 0.0;
    for (double v : u.values()) big = std::max(big, std::abs(v));
    std::size_t last = 0;
    for (std::size_t i = 0; i < u.values().size(); ++i)
      if (std::abs(u[i]) > 1e-17 * big) last = i;
    const auto& gr = u.grid();
    return gr.breaks()[std::min(gr.panel_of(gr.node(last)) + 1, gr.breaks().size() - 1)];
  };
  o.s_max = std::min(o.s_max, support(g));
  o.f_support = std::min(o.f_support, support(f));
  auto fi = [&](double r) { return f(r); };
  auto gi = [&](double r) { return g(r); };
  const auto& grid = f.grid();
  double probe = grid.node(grid.size() / 3);
  for (int attempt = 0; attempt < 3; ++attempt) {
    auto o2 = o;
    o2.order = o.order + 4;
    double a = convolve_at(probe, fi, gi, n, o), b = convolve_at(probe, fi, gi, n, o2);
    if (std::abs(a - b) <= o.self_check_tol * std::max(std::abs(b), 1e-300)) break;
    o.order *= 2;
  }
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = convolve_at(grid.node(i), fi, gi, n, o);
  return RadialFunction(grid, std::move(v), n);
}

}  // namespace hyp
