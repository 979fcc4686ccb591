#pragma once

// Radial grids and functions on H^n, volume integrals, L^p norms and the
// radial Laplace-Beltrami operator.

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "hyp/errors.hpp"
#include "hyp/quadrature.hpp"
#include "hyp/special.hpp"

namespace hyp {

// Composite Gauss grid on [0, rho_max]: panels given by their breaks, a
// fixed number of nodes per panel.
class RadialGrid {
 public:
  RadialGrid(std::vector<double> breaks, int order) {
    require(order >= 2 && order <= 64, "RadialGrid: panel order out of range");
    require(breaks.size() >= 2, "RadialGrid: need at least one panel");
    require(breaks.front() == 0.0, "RadialGrid: first break must be 0");
    for (std::size_t i = 1; i < breaks.size(); ++i)
      require(breaks[i] > breaks[i - 1], "RadialGrid: breaks must increase strictly");
    auto d = std::make_shared<Data>();
    d->breaks = std::move(breaks);
    d->q = order;
    const auto& g = gauss_legendre(order);
    for (std::size_t p = 0; p + 1 < d->breaks.size(); ++p) {
      double a = d->breaks[p], b = d->breaks[p + 1], h = 0.5 * (b - a), c = 0.5 * (a + b);
      for (int j = 0; j < order; ++j) {
        d->nodes.push_back(c + h * g.x[j]);
        d->weights.push_back(h * g.w[j]);
      }
    }
    d_ = std::move(d);
  }

  // One panel on [0, rho_min], geometric panels on [rho_min, 1], uniform
  // panels on [1, rho_max].
  static RadialGrid standard(double rho_max = 20.0, int nodes = 2048, int order = 16, double rho_min = 1e-4) {
    require(rho_max > 1.0, "RadialGrid::standard: rho_max must exceed 1");
    int panels = std::max(4, nodes / order);
    int geo = std::max(2, (panels - 1) / 5);
    int uni = std::max(1, panels - 1 - geo);
    std::vector<double> br{0.0};
    for (int i = 0; i <= geo; ++i) br.push_back(rho_min * std::pow(1.0 / rho_min, double(i) / geo));
    for (int i = 1; i <= uni; ++i) br.push_back(1.0 + (rho_max - 1.0) * i / uni);
    return RadialGrid(std::move(br), order);
  }

  // Geometric refinement towards 0 plus panels of width <= h up to rho_max.
  static RadialGrid graded(double rho_max, double h, int order = 16, double rho_min = 1e-4, double ratio = 2.0) {
    std::vector<double> br{0.0};
    double r = rho_min;
    double top = std::min(h, rho_max);
    while (r < top) {
      br.push_back(r);
      r *= ratio;
    }
    int np = std::max(1, static_cast<int>(std::ceil((rho_max - br.back()) / h - 1e-12)));
    double a = br.back();
    for (int i = 1; i <= np; ++i) br.push_back(a + (rho_max - a) * i / np);
    return RadialGrid(std::move(br), order);
  }

  // Every panel split in two.
  RadialGrid refined() const {
    std::vector<double> br{0.0};
    for (std::size_t p = 0; p + 1 < d_->breaks.size(); ++p) {
      br.push_back(0.5 * (d_->breaks[p] + d_->breaks[p + 1]));
      br.push_back(d_->breaks[p + 1]);
    }
    return RadialGrid(std::move(br), d_->q);
  }

  std::size_t size() const { return d_->nodes.size(); }
  const std::vector<double>& nodes() const { return d_->nodes; }
  const std::vector<double>& weights() const { return d_->weights; }
  const std::vector<double>& breaks() const { return d_->breaks; }
  double node(std::size_t i) const { return d_->nodes[i]; }
  int order() const { return d_->q; }
  std::size_t panels() const { return d_->breaks.size() - 1; }
  double rho_max() const { return d_->breaks.back(); }

  // Panel containing rho (clamped to the grid).
  std::size_t panel_of(double rho) const {
    auto it = std::upper_bound(d_->breaks.begin(), d_->breaks.end(), rho);
    std::size_t p = (it == d_->breaks.begin()) ? 0 : static_cast<std::size_t>(it - d_->breaks.begin()) - 1;
    return std::min(p, panels() - 1);
  }

  bool same_as(const RadialGrid& o) const {
    return d_ == o.d_ || (d_->q == o.d_->q && d_->breaks == o.d_->breaks);
  }

 private:
  struct Data {
    std::vector<double> breaks, nodes, weights;
    int q = 0;
  };
  std::shared_ptr<const Data> d_;
};

class RadialFunction {
 public:
  RadialFunction(RadialGrid grid, std::vector<double> values, int n)
      : grid_(std::move(grid)), v_(std::move(values)), n_(n) {
    check_dim(n);
    if (v_.size() != grid_.size()) throw mismatch_error("RadialFunction: value count differs from grid size");
    for (double x : v_)
      if (!std::isfinite(x)) throw domain_error("RadialFunction: non-finite value");
  }

  template <class F>
  static RadialFunction sample(const RadialGrid& grid, int n, F&& f) {
    std::vector<double> v(grid.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(grid.node(i));
    return RadialFunction(grid, std::move(v), n);
  }

  static RadialFunction zero(const RadialGrid& grid, int n) {
    return RadialFunction(grid, std::vector<double>(grid.size(), 0.0), n);
  }

  const RadialGrid& grid() const { return grid_; }
  const std::vector<double>& values() const { return v_; }
  std::vector<double>& values() { return v_; }
  double operator[](std::size_t i) const { return v_[i]; }
  int dim() const { return n_; }

  // Panel-polynomial interpolation; zero beyond rho_max.
  double operator()(double rho) const {
    if (rho > grid_.rho_max()) return 0.0;
    std::size_t p = grid_.panel_of(rho);
    const auto& br = grid_.breaks();
    int q = grid_.order();
    return bary_eval(gauss_legendre(q), br[p], br[p + 1], v_.data() + p * q, rho);
  }

  RadialFunction& operator*=(double c) {
    for (double& x : v_) x *= c;
    return *this;
  }

 private:
  RadialGrid grid_;
  std::vector<double> v_;
  int n_;
};

inline void require_aligned(const RadialFunction& f, const RadialFunction& g) {
  if (f.dim() != g.dim()) throw mismatch_error("radial functions of different dimension");
  if (!f.grid().same_as(g.grid())) throw mismatch_error("radial functions on different grids");
}

inline RadialFunction operator+(const RadialFunction& f, const RadialFunction& g) {
  require_aligned(f, g);
  std::vector<double> v(f.values());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += g[i];
  return RadialFunction(f.grid(), std::move(v), f.dim());
}

inline RadialFunction operator-(const RadialFunction& f, const RadialFunction& g) {
  require_aligned(f, g);
  std::vector<double> v(f.values());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= g[i];
  return RadialFunction(f.grid(), std::move(v), f.dim());
}

inline RadialFunction operator*(double c, RadialFunction f) {
  f *= c;
  return f;
}

// sinh^{n-1}(rho), safe for large rho
inline double sinh_pow(double rho, int k) {
  if (k == 0) return 1.0;
  if (rho > 300.0) return std::exp(k * (rho - std::log(2.0)));
  return std::pow(std::sinh(rho), k);
}

// |S^{n-1}| int_0^{rho_max} f(rho) sinh^{n-1}(rho) drho
inline double integrate_radial(const RadialFunction& f) {
  const auto& g = f.grid();
  if (g.size() == 0) throw domain_error("integrate_radial: empty grid");
  double s = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) s += g.weights()[i] * f[i] * sinh_pow(g.node(i), f.dim() - 1);
  return sphere_area(f.dim()) * s;
}

inline double lp_norm(const RadialFunction& f, double p) {
  require(p >= 1.0, "lp_norm: p must be >= 1");
  const auto& g = f.grid();
  double s = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    s += g.weights()[i] * std::pow(std::abs(f[i]), p) * sinh_pow(g.node(i), f.dim() - 1);
  return std::pow(sphere_area(f.dim()) * s, 1.0 / p);
}

namespace detail {

// Least-squares even polynomial in rho (Chebyshev in 2 rho^2/R^2 - 1) and
// its radial Laplacian at the requested points.
inline std::vector<double> even_fit_laplacian(const std::vector<double>& x, const std::vector<double>& y, double R,
                                              int terms, int n, const std::vector<double>& at) {
  int m = static_cast<int>(x.size());
  terms = std::min(terms, m);
  Eigen::MatrixXd A(m, terms);
  Eigen::VectorXd b(m);
  for (int i = 0; i < m; ++i) {
    double s = 2.0 * x[i] * x[i] / (R * R) - 1.0;
    double t0 = 1.0, t1 = s;
    for (int j = 0; j < terms; ++j) {
      A(i, j) = (j == 0) ? 1.0 : t1;
      if (j >= 1) {
        double t2 = 2.0 * s * t1 - t0;
        t0 = t1;
        t1 = t2;
      }
    }
    b(i) = y[i];
  }
  Eigen::VectorXd c = A.colPivHouseholderQr().solve(b);
  std::vector<double> out(at.size());
  for (std::size_t k = 0; k < at.size(); ++k) {
    double r = at[k];
    double s = 2.0 * r * r / (R * R) - 1.0;
    double T0 = 1.0, T1 = s, D0 = 0.0, D1 = 1.0, E0 = 0.0, E1 = 0.0;
    double d1 = 0.0, d2 = 0.0;
    for (int j = 0; j < terms; ++j) {
      double T, D, E;
      if (j == 0) { T = T0; D = D0; E = E0; }
      else if (j == 1) { T = T1; D = D1; E = E1; }
      else {
        T = 2.0 * s * T1 - T0;
        D = 2.0 * T1 + 2.0 * s * D1 - D0;
        E = 4.0 * D1 + 2.0 * s * E1 - E0;
        T0 = T1; T1 = T; D0 = D1; D1 = D; E0 = E1; E1 = E;
      }
      d1 += c(j) * D;
      d2 += c(j) * E;
    }
    double sr = 4.0 * r / (R * R);
    double rc = (r < 1e-3) ? 1.0 + r * r / 3.0 : r / std::tanh(r);
    out[k] = d2 * sr * sr + d1 * (4.0 / (R * R)) * (1.0 + (n - 1.0) * rc);
  }
  return out;
}

}  // namespace detail

// Delta_H f = f'' + (n-1) coth(rho) f'.  Derivatives come from the panel
// interpolants; on panels narrower than 0.05, where differentiating the
// interpolant amplifies rounding, an even polynomial fit about the origin
// is used instead.
inline RadialFunction radial_laplacian(const RadialFunction& f) {
  const auto& g = f.grid();
  if (g.size() < 5) throw domain_error("radial_laplacian: grid too coarse");
  int q = g.order();
  int n = f.dim();
  const auto& rule = gauss_legendre(q);
  auto D = diff_matrix(rule);
  const auto& br = g.breaks();
  std::vector<double> out(g.size());
  constexpr double narrow = 0.05;
  std::size_t first_wide = 0;
  while (first_wide < g.panels() && br[first_wide + 1] - br[first_wide] < narrow && br[first_wide + 1] < 0.5) ++first_wide;
  for (std::size_t p = first_wide; p < g.panels(); ++p) {
    double h = 0.5 * (br[p + 1] - br[p]);
    const double* v = f.values().data() + p * q;
    std::vector<double> d1(q, 0.0), d2(q, 0.0);
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) d1[i] += D[i * q + j] * v[j];
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) d2[i] += D[i * q + j] * d1[j];
    for (int i = 0; i < q; ++i) {
      double r = g.node(p * q + i);
      out[p * q + i] = d2[i] / (h * h) + (n - 1.0) * coth(r) * d1[i] / h;
    }
  }
  if (first_wide > 0) {
    double R = std::min(3.0 * br[first_wide], g.rho_max());
    std::vector<double> xs, ys, at;
    for (std::size_t i = 0; i < g.size() && g.node(i) <= R; ++i) {
      xs.push_back(g.node(i));
      ys.push_back(f[i]);
    }
    for (std::size_t i = 0; i < first_wide * q; ++i) at.push_back(g.node(i));
    auto lap = detail::even_fit_laplacian(xs, ys, R, 14, n, at);
    for (std::size_t i = 0; i < at.size(); ++i) out[i] = lap[i];
  }
  return RadialFunction(g, std::move(out), n);
}

}  // namespace hyp
