#pragma once

// Ball and half-space models, Mobius shifts, distances.

#include <cmath>
#include <utility>
#include <vector>

#include "hyp/errors.hpp"

namespace hyp {

inline constexpr double boundary_margin = 1e-9;

class BallPoint {
 public:
  explicit BallPoint(std::vector<double> c) : c_(std::move(c)) {
    if (c_.size() < 2) throw domain_error("BallPoint: dimension must be >= 2");
    double s = 0.0;
    for (double v : c_) {
      if (!std::isfinite(v)) throw domain_error("BallPoint: non-finite coordinate");
      s += v * v;
    }
    if (std::sqrt(s) >= 1.0 - boundary_margin) throw boundary_error("BallPoint: on or outside the unit sphere");
  }
  static BallPoint origin(int n) { return BallPoint(std::vector<double>(n, 0.0)); }

  int dim() const { return static_cast<int>(c_.size()); }
  const std::vector<double>& coords() const { return c_; }
  double operator[](int i) const { return c_[i]; }
  double norm2() const {
    double s = 0.0;
    for (double v : c_) s += v * v;
    return s;
  }
  double norm() const { return std::sqrt(norm2()); }

 private:
  std::vector<double> c_;
};

class HalfSpacePoint {
 public:
  explicit HalfSpacePoint(std::vector<double> c) : c_(std::move(c)) {
    if (c_.size() < 2) throw domain_error("HalfSpacePoint: dimension must be >= 2");
    for (double v : c_)
      if (!std::isfinite(v)) throw domain_error("HalfSpacePoint: non-finite coordinate");
    if (c_[0] <= boundary_margin) throw boundary_error("HalfSpacePoint: x1 must be positive");
  }
  int dim() const { return static_cast<int>(c_.size()); }
  const std::vector<double>& coords() const { return c_; }
  double operator[](int i) const { return c_[i]; }
  double x1() const { return c_[0]; }

 private:
  std::vector<double> c_;
};

namespace detail {
inline void same_dim(int a, int b) {
  if (a != b) throw mismatch_error("points of different dimension");
}
inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
inline double dist2(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}
}  // namespace detail

// T_a(x) = (|x-a|^2 a - (1-|a|^2)(x-a)) / (1 - 2 x.a + |x|^2 |a|^2)
inline BallPoint mobius_shift(const BallPoint& a, const BallPoint& x) {
  detail::same_dim(a.dim(), x.dim());
  const auto& av = a.coords();
  const auto& xv = x.coords();
  double xa2 = detail::dist2(xv, av);
  double a2 = a.norm2();
  double den = 1.0 - 2.0 * detail::dot(xv, av) + x.norm2() * a2;
  std::vector<double> r(av.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (xa2 * av[i] - (1.0 - a2) * (xv[i] - av[i])) / den;
  // |T_a x| < 1 holds exactly; guard only against rounding right at the margin
  double s = 0.0;
  for (double v : r) s += v * v;
  if (std::sqrt(s) >= 1.0 - boundary_margin) throw boundary_error("mobius_shift: image at the boundary");
  return BallPoint(std::move(r));
}

// (sinh(rho/2), cosh(rho/2)) for rho = rho(x, y).
inline std::pair<double, double> half_distance_factors(const BallPoint& x, const BallPoint& y) {
  detail::same_dim(x.dim(), y.dim());
  double q = std::sqrt((1.0 - x.norm2()) * (1.0 - y.norm2()));
  double sh = std::sqrt(detail::dist2(x.coords(), y.coords())) / q;
  double ch = std::sqrt(1.0 - 2.0 * detail::dot(x.coords(), y.coords()) + x.norm2() * y.norm2()) / q;
  return {sh, ch};
}

inline double geodesic_distance(const BallPoint& x, const BallPoint& y) {
  // log((1+|T|)/(1-|T|)) = 2 asinh(sinh(rho/2)); the asinh form keeps small distances accurate
  auto [sh, ch] = half_distance_factors(x, y);
  (void)ch;
  return 2.0 * std::asinh(sh);
}

inline double geodesic_distance(const HalfSpacePoint& x, const HalfSpacePoint& y) {
  detail::same_dim(x.dim(), y.dim());
  // cosh rho = 1 + |x-y|^2 / (2 x1 y1)
  double u = detail::dist2(x.coords(), y.coords()) / (2.0 * x.x1() * y.x1());
  return 2.0 * std::asinh(std::sqrt(0.5 * u));
}

// (2 / (1 - |x|^2))^n
inline double volume_density(const BallPoint& x) {
  return std::pow(2.0 / (1.0 - x.norm2()), x.dim());
}

inline double volume_density(const HalfSpacePoint& x) { return std::pow(x.x1(), -x.dim()); }

// Cayley-type isometry H^n -> B^n:
//   w = (1 - |x|^2, 2 x') / ((1 + x1)^2 + |x'|^2),
// which sends e1 to the origin and the wall x1 = 0 onto the sphere.
inline BallPoint to_ball(const HalfSpacePoint& p) {
  const auto& x = p.coords();
  double xp2 = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) xp2 += x[i] * x[i];
  double den = (1.0 + x[0]) * (1.0 + x[0]) + xp2;
  std::vector<double> w(x.size());
  w[0] = (1.0 - x[0] * x[0] - xp2) / den;
  for (std::size_t i = 1; i < x.size(); ++i) w[i] = 2.0 * x[i] / den;
  return BallPoint(std::move(w));
}

// Inverse: x = (1 - |w|^2, 2 w') / |w + e1|^2.
inline HalfSpacePoint to_half_space(const BallPoint& b) {
  const auto& w = b.coords();
  double w2 = b.norm2();
  double den = w2 + 2.0 * w[0] + 1.0;
  std::vector<double> x(w.size());
  x[0] = (1.0 - w2) / den;
  for (std::size_t i = 1; i < w.size(); ++i) x[i] = 2.0 * w[i] / den;
  return HalfSpacePoint(std::move(x));
}

// Point of the ball at geodesic radius rho along the first axis.
inline BallPoint ball_point_at_radius(int n, double rho) {
  std::vector<double> c(n, 0.0);
  c[0] = std::tanh(0.5 * rho);
  return BallPoint(std::move(c));
}

}  // namespace hyp
