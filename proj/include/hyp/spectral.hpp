#pragma once

// Radial spherical transform, its inverse, Plancherel, spectral multipliers.
//
// Both directions go through the one-variable representation of phi_lambda:
//   phi_lambda(rho) = c_n e^{rho(n-3)/2} sinh^{2-n}(rho) * 2 int_0^rho cos(lambda v/2) W(rho, v) dv.
// Swapping the order of integration gives
//   fhat(lambda) = 2 |S^{n-1}| c_n int_0^R cos(lambda v/2) A(v) dv,
//   A(v) = int_v^R f(rho) sinh(rho) e^{rho(n-3)/2} W(rho, v) drho,
// and for the inverse
//   f(rho) = D_n c_n e^{rho(n-3)/2} sinh^{2-n}(rho) * 2 int_0^rho W(rho, v) G(v) dv,
//   G(v) = int_0^Lambda F(lambda) |c(lambda)|^{-2} cos(lambda v/2) dlambda,
// so each transform costs O(N_rho * N_lambda) instead of O(N_rho^2 * N_lambda).

#include <cmath>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "hyp/errors.hpp"
#include "hyp/quadrature.hpp"
#include "hyp/radial.hpp"
#include "hyp/special.hpp"

namespace hyp {

class SpectralGrid {
 public:
  // A few short panels on [0, 1] then panels of width <= h up to lambda_max.
  static SpectralGrid make(double lambda_max, double h, int order = 16) {
    require(lambda_max > 1.0 && h > 0.0, "SpectralGrid: bad parameters");
    std::vector<double> br{0.0, 0.25, 0.5, 1.0};
    int np = std::max(1, static_cast<int>(std::ceil((lambda_max - 1.0) / h - 1e-12)));
    for (int i = 1; i <= np; ++i) br.push_back(1.0 + (lambda_max - 1.0) * i / np);
    return SpectralGrid(std::move(br), order);
  }
  // Default: 1024 nodes on [0, 40].
  static SpectralGrid standard(double lambda_max = 40.0, int nodes = 1024, int order = 16) {
    int panels = std::max(4, nodes / order);
    return make(lambda_max, (lambda_max - 1.0) / (panels - 3), order);
  }

  SpectralGrid(std::vector<double> breaks, int order) : breaks_(std::move(breaks)), q_(order) {
    const auto& g = gauss_legendre(order);
    for (std::size_t p = 0; p + 1 < breaks_.size(); ++p) {
      double a = breaks_[p], b = breaks_[p + 1], h = 0.5 * (b - a), c = 0.5 * (a + b);
      for (int j = 0; j < order; ++j) {
        x_.push_back(c + h * g.x[j]);
        w_.push_back(h * g.w[j]);
      }
    }
  }

  std::size_t size() const { return x_.size(); }
  const std::vector<double>& nodes() const { return x_; }
  const std::vector<double>& weights() const { return w_; }
  double lambda_max() const { return breaks_.back(); }
  const std::vector<double>& breaks() const { return breaks_; }
  int order() const { return q_; }
  bool same_as(const SpectralGrid& o) const { return q_ == o.q_ && breaks_ == o.breaks_; }

 private:
  std::vector<double> breaks_, x_, w_;
  int q_;
};

struct SpectralFunction {
  SpectralGrid grid;
  std::vector<double> values;
  int n;

  double operator[](std::size_t j) const { return values[j]; }
  std::size_t size() const { return values.size(); }
};

// Spectral multiplier given by its symbol m(lambda).
struct Multiplier {
  std::string name;
  std::function<double(double)> symbol;
  // true when the symbol grows without bound; inverse transforms of such
  // products skip the decay test only if the caller asks for it.
  double operator()(double l) const { return symbol(l); }

  static Multiplier identity() {
    return {"identity", [](double) { return 1.0; }};
  }
  // (-Delta_H)^gamma : (((n-1)^2 + lambda^2)/4)^gamma
  static Multiplier fractional_laplacian(double gamma, int n) {
    return {"fractional_laplacian", [gamma, n](double l) { return std::pow(((n - 1.0) * (n - 1.0) + l * l) / 4.0, gamma); }};
  }
  // lambda0 - Delta_H
  static Multiplier resolvent_shift(double lambda0, int n) {
    return {"resolvent_shift", [lambda0, n](double l) { return lambda0 + ((n - 1.0) * (n - 1.0) + l * l) / 4.0; }};
  }
  // P_k : prod_{i=1}^k (lambda^2 + (2i-1)^2)/4, the same for every n
  static Multiplier gjms(int k) {
    require(k >= 1, "gjms symbol: k >= 1");
    return {"P" + std::to_string(k), [k](double l) {
              double s = 1.0;
              for (int i = 1; i <= k; ++i) s *= (l * l + (2.0 * i - 1) * (2.0 * i - 1)) / 4.0;
              return s;
            }};
  }
  // Q_k : (lambda^2/4) prod_{i=2}^k (lambda^2 + (2i-1)^2)/4
  static Multiplier qk(int k) {
    require(k >= 1, "Q_k symbol: k >= 1");
    return {"Q" + std::to_string(k), [k](double l) {
              double s = l * l / 4.0;
              for (int i = 2; i <= k; ++i) s *= (l * l + (2.0 * i - 1) * (2.0 * i - 1)) / 4.0;
              return s;
            }};
  }
  // P_k - prod_{i=1}^k (2i-1)^2/4
  static Multiplier pk_minus_constant(int k) {
    double c = 1.0;
    for (int i = 1; i <= k; ++i) c *= (2.0 * i - 1) * (2.0 * i - 1) / 4.0;
    auto p = gjms(k);
    return {"P" + std::to_string(k) + "-const", [p, c](double l) { return p(l) - c; }};
  }
  // (-Delta - 4)(-Delta - 3) on H^5 : lambda^2 (lambda^2 + 4) / 16
  static Multiplier h5_product() {
    return {"h5_product", [](double l) { return l * l * (l * l + 4.0) / 16.0; }};
  }
  static Multiplier custom(std::string name, std::function<double(double)> m) { return {std::move(name), std::move(m)}; }

  Multiplier inverse() const {
    auto s = symbol;
    return {name + "^-1", [s](double l) { return 1.0 / s(l); }};
  }
  friend Multiplier operator*(const Multiplier& a, const Multiplier& b) {
    auto sa = a.symbol, sb = b.symbol;
    return {a.name + "*" + b.name, [sa, sb](double l) { return sa(l) * sb(l); }};
  }
};

struct InverseOptions {
  bool check_decay = true;
  double decay_tol = 1e-8;
  // optional smooth roll-off exp(-(lambda/window)^power), 0 = off
  double window = 0.0;
  int window_power = 8;
};

class SphericalTransform {
 public:
  SphericalTransform(RadialGrid rgrid, SpectralGrid sgrid, int n)
      : rg_(std::move(rgrid)), sg_(std::move(sgrid)), n_(n) {
    check_dim(n);
    dens_.resize(sg_.size());
    for (std::size_t j = 0; j < sg_.size(); ++j) dens_[j] = plancherel_density(sg_.nodes()[j], n);
  }

  const RadialGrid& radial_grid() const { return rg_; }
  const SpectralGrid& spectral_grid() const { return sg_; }
  int dim() const { return n_; }
  const std::vector<double>& density() const { return dens_; }

  SpectralFunction forward(const RadialFunction& f) const {
    if (f.dim() != n_) throw mismatch_error("forward_transform: dimension mismatch");
    if (!f.grid().same_as(rg_)) throw mismatch_error("forward_transform: grid mismatch");
    auto A = abel_forward(f);
    const auto& v = rg_.nodes();
    const auto& wv = rg_.weights();
    double c = 2.0 * sphere_area(n_) * abel_constant(n_);
    std::vector<double> out(sg_.size(), 0.0);
    for (std::size_t j = 0; j < sg_.size(); ++j) {
      double l = 0.5 * sg_.nodes()[j], s = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) s += wv[i] * A[i] * std::cos(l * v[i]);
      out[j] = c * s;
    }
    return {sg_, std::move(out), n_};
  }

  RadialFunction inverse(const SpectralFunction& F, const InverseOptions& opt = {}) const {
    if (F.n != n_) throw mismatch_error("inverse_transform: dimension mismatch");
    if (!F.grid.same_as(sg_)) throw mismatch_error("inverse_transform: spectral grid mismatch");
    std::vector<double> H(sg_.size());
    for (std::size_t j = 0; j < sg_.size(); ++j) {
      double l = sg_.nodes()[j];
      double win = opt.window > 0.0 ? std::exp(-std::pow(l / opt.window, opt.window_power)) : 1.0;
      H[j] = F.values[j] * dens_[j] * win * sg_.weights()[j];
    }
    if (opt.check_decay) check_tail(H, opt.decay_tol);
    return abel_inverse(H);
  }

  // Inverse transform of F|c|^{-2} supplied directly as weighted samples
  // H_j (already multiplied by density and quadrature weight).
  RadialFunction inverse_weighted(const std::vector<double>& H) const { return abel_inverse(H); }

  double plancherel_rhs(const SpectralFunction& F) const {
    double s = 0.0;
    for (std::size_t j = 0; j < sg_.size(); ++j) s += sg_.weights()[j] * F.values[j] * F.values[j] * dens_[j];
    return inversion_constant(n_) * s;
  }

  double quadratic_form(const SpectralFunction& F, const Multiplier& m) const {
    double s = 0.0;
    for (std::size_t j = 0; j < sg_.size(); ++j)
      s += sg_.weights()[j] * m(sg_.nodes()[j]) * F.values[j] * F.values[j] * dens_[j];
    return inversion_constant(n_) * s;
  }

  // Fraction of sum |H| carried by the top 5% of the frequency range.
  double tail_fraction(const std::vector<double>& H) const {
    double lm = sg_.lambda_max(), tot = 0.0, tail = 0.0;
    for (std::size_t j = 0; j < H.size(); ++j) {
      tot += std::abs(H[j]);
      if (sg_.nodes()[j] > 0.95 * lm) tail += std::abs(H[j]);
    }
    return tot > 0.0 ? tail / tot : 0.0;
  }

 private:
  void check_tail(const std::vector<double>& H, double tol) const {
    double t = tail_fraction(H);
    if (t > tol) throw decay_error("inverse_transform: spectral data not decayed at lambda_max (tail fraction " + std::to_string(t) + ")");
  }

  // Near piece [lo, hi] for a singular endpoint at the node position: the
  // stretch from the node to the end of its panel, extended by one panel
  // when that stretch is short compared with the panel.
  std::vector<double> abel_forward(const RadialFunction& f) const {
    const auto& rho = rg_.nodes();
    const auto& w = rg_.weights();
    const auto& br = rg_.breaks();
    std::size_t M = rho.size();
    int q = rg_.order();
    int n = n_;
    std::vector<double> g(M);  // f sinh e^{rho(n-3)/2}
    for (std::size_t i = 0; i < M; ++i) g[i] = f[i] * growth(rho[i]);
    // interpolate f sinh^{n-2}, which stays bounded for Green-type kernels
    std::vector<double> reg(M);
    for (std::size_t i = 0; i < M; ++i) reg[i] = f[i] * std::pow(std::sinh(rho[i]), n - 2);
    RadialFunction freg(rg_, std::move(reg), n);
    auto fi = [&](double x) { return freg(x) / std::pow(std::sinh(x), n - 2); };
    std::vector<double> A(M, 0.0);
    std::vector<QNode> tip;
    for (std::size_t i = 0; i < M; ++i) {
      double v = rho[i];
      std::size_t p = i / q;
      std::size_t pe = p + 1;
      if (br[pe] - v < 0.5 * (br[pe] - br[p]) && pe < rg_.panels()) ++pe;
      double e = br[pe];
      tip.clear();
      append_left_sqrt(tip, v, e, 32);
      double s = 0.0;
      for (const auto& t : tip) s += t.w * fi(t.x) * growth(t.x) * abel_weight(t.x + v, t.from_lo, n);
      for (std::size_t k = pe * q; k < M; ++k) s += w[k] * g[k] * abel_weight(rho[k] + v, rho[k] - v, n);
      A[i] = s;
    }
    return A;
  }

  RadialFunction abel_inverse(const std::vector<double>& H) const { return from_cosine_transform(cosine_sum(H)); }

 public:
  // G(v_i) = sum_j H_j cos(lambda_j v_i / 2) at the radial nodes.
  std::vector<double> cosine_sum(const std::vector<double>& H) const {
    const auto& rho = rg_.nodes();
    std::vector<double> G(rho.size(), 0.0);
    for (std::size_t i = 0; i < rho.size(); ++i) {
      double hv = 0.5 * rho[i], s = 0.0;
      for (std::size_t j = 0; j < H.size(); ++j) s += H[j] * std::cos(hv * sg_.nodes()[j]);
      G[i] = s;
    }
    return G;
  }

  // f(rho) = D_n c_n e^{rho(n-3)/2} sinh^{2-n}(rho) * 2 int_0^rho W(rho, v) G(v) dv
  // for G sampled at the radial nodes.
  RadialFunction from_cosine_transform(std::vector<double> G) const {
    const auto& rho = rg_.nodes();
    const auto& w = rg_.weights();
    const auto& br = rg_.breaks();
    std::size_t M = rho.size();
    require(G.size() == M, "from_cosine_transform: sample count differs from grid size");
    int q = rg_.order();
    int n = n_;
    RadialFunction Gf(rg_, G, n);
    std::vector<double> out(M);
    std::vector<QNode> tip;
    double c = 2.0 * inversion_constant(n) * abel_constant(n);
    for (std::size_t i = 0; i < M; ++i) {
      double r = rho[i];
      std::size_t p = i / q;
      std::size_t pb = p;
      if (r - br[p] < 0.5 * (br[p + 1] - br[p]) && pb > 0) --pb;
      double b = br[pb];
      tip.clear();
      append_right_sqrt(tip, b, r, 32);
      double s = 0.0;
      for (std::size_t k = 0; k < pb * q; ++k) s += w[k] * G[k] * abel_weight(r + rho[k], r - rho[k], n);
      for (const auto& t : tip) s += t.w * Gf(t.x) * abel_weight(r + t.x, t.from_hi, n);
      out[i] = c * abel_prefactor(r, n) * s;
    }
    return RadialFunction(rg_, std::move(out), n);
  }

 private:
  double growth(double r) const { return std::sinh(r) * std::exp(0.5 * (n_ - 3.0) * r); }

  RadialGrid rg_;
  SpectralGrid sg_;
  int n_;
  std::vector<double> dens_;
};

// Convenience wrappers on default spectral grids.
inline SpectralFunction forward_transform(const RadialFunction& f, const SpectralGrid& sg = SpectralGrid::standard()) {
  return SphericalTransform(f.grid(), sg, f.dim()).forward(f);
}

inline RadialFunction inverse_transform(const SpectralFunction& F, const RadialGrid& rg, const InverseOptions& opt = {}) {
  return SphericalTransform(rg, F.grid, F.n).inverse(F, opt);
}

struct PlancherelPair {
  double lhs, rhs;
};

// lhs = int |f|^2 dV, rhs = D_n int_0^inf |fhat|^2 |c|^{-2} dlambda
inline PlancherelPair plancherel_check(const RadialFunction& f, const SpectralGrid& sg = SpectralGrid::standard()) {
  SphericalTransform T(f.grid(), sg, f.dim());
  auto F = T.forward(f);
  auto sq = f;
  for (double& x : sq.values()) x *= x;
  return {integrate_radial(sq), T.plancherel_rhs(F)};
}

inline RadialFunction apply_multiplier(const RadialFunction& f, const Multiplier& m,
                                       const SpectralGrid& sg = SpectralGrid::standard(), const InverseOptions& opt = {}) {
  SphericalTransform T(f.grid(), sg, f.dim());
  auto F = T.forward(f);
  for (std::size_t j = 0; j < F.size(); ++j) F.values[j] *= m(sg.nodes()[j]);
  return T.inverse(F, opt);
}

inline double quadratic_form(const RadialFunction& f, const Multiplier& m, const SpectralGrid& sg = SpectralGrid::standard()) {
  SphericalTransform T(f.grid(), sg, f.dim());
  return T.quadratic_form(T.forward(f), m);
}

}  // namespace hyp
