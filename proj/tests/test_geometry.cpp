#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "hyp/geometry.hpp"
#include "hyp/quadrature.hpp"

using namespace hyp;

namespace {

BallPoint random_ball(std::mt19937_64& rng, int n, double rmax = 0.95) {
  std::normal_distribution<double> nd;
  std::uniform_real_distribution<double> ud;
  std::vector<double> v(n);
  double s = 0;
  for (auto& x : v) {
    x = nd(rng);
    s += x * x;
  }
  double r = rmax * std::pow(ud(rng), 1.0 / n);
  for (auto& x : v) x *= r / std::sqrt(s);
  return BallPoint(v);
}

HalfSpacePoint random_half(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u1(0.05, 3.0), u2(-2.0, 2.0);
  std::vector<double> v(n);
  v[0] = u1(rng);
  for (int i = 1; i < n; ++i) v[i] = u2(rng);
  return HalfSpacePoint(v);
}

double maxdiff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST(Mobius, ShiftSendsAToOrigin) {
  BallPoint a({0.3, -0.2, 0.5});
  auto t = mobius_shift(a, a);
  EXPECT_LT(t.norm(), 1e-15);
}

TEST(Mobius, ZeroShiftIsNegation) {
  BallPoint x({0.1, 0.2, -0.4});
  auto t = mobius_shift(BallPoint::origin(3), x);
  for (int i = 0; i < 3; ++i) EXPECT_DOUBLE_EQ(t[i], -x[i]);
}

TEST(Mobius, InvolutionExample) {
  BallPoint a({0.3, 0, 0}), x({0.1, 0.2, 0});
  auto y = mobius_shift(a, mobius_shift(a, x));
  EXPECT_LT(maxdiff(y.coords(), x.coords()), 1e-14);
}

TEST(Mobius, IdentitiesOnRandomInputs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + trial % 5;
    auto a = random_ball(rng, n, 0.9), x = random_ball(rng, n, 0.9);
    auto t = mobius_shift(a, x);
    EXPECT_LT(maxdiff(mobius_shift(a, t).coords(), x.coords()), 1e-12);
    double xa = 0, d2 = 0;
    for (int i = 0; i < n; ++i) {
      xa += x[i] * a[i];
      d2 += (x[i] - a[i]) * (x[i] - a[i]);
    }
    double den = 1 - 2 * xa + x.norm2() * a.norm2();
    EXPECT_NEAR(1 - t.norm2(), (1 - a.norm2()) * (1 - x.norm2()) / den, 1e-12);
    EXPECT_NEAR(t.norm(), std::sqrt(d2 / den), 1e-12);
    auto [sh, ch] = half_distance_factors(x, a);
    EXPECT_NEAR(sh, t.norm() / std::sqrt(1 - t.norm2()), 1e-12 * std::max(1.0, sh));
    EXPECT_NEAR(ch, 1 / std::sqrt(1 - t.norm2()), 1e-12 * ch);
  }
}

TEST(Mobius, RejectsBoundaryAndMismatch) {
  EXPECT_THROW(BallPoint({1.0, 0.0}), boundary_error);
  EXPECT_THROW(BallPoint({0.6, 0.8 - 1e-12}), boundary_error);
  EXPECT_THROW(mobius_shift(BallPoint({0.1, 0.1}), BallPoint({0.1, 0.1, 0.1})), mismatch_error);
}

TEST(Distance, SelfAndOriginExample) {
  BallPoint x({0.2, 0.3});
  EXPECT_EQ(geodesic_distance(x, x), 0.0);
  EXPECT_NEAR(geodesic_distance(BallPoint::origin(2), BallPoint({0.5, 0.0})), std::log(3.0), 1e-15);
}

TEST(Distance, LogFormAndHalfSinh) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto x = random_ball(rng, 3), y = random_ball(rng, 3);
    double rho = geodesic_distance(x, y);
    double t = mobius_shift(y, x).norm();
    EXPECT_NEAR(rho, std::log((1 + t) / (1 - t)), 1e-9 * std::max(1.0, rho));
    double d2 = 0;
    for (int i = 0; i < 3; ++i) d2 += (x[i] - y[i]) * (x[i] - y[i]);
    double direct = std::sqrt(d2 / ((1 - x.norm2()) * (1 - y.norm2())));
    EXPECT_NEAR(std::sinh(rho / 2), direct, 1e-12 * std::max(1.0, direct));
    EXPECT_NEAR(rho, geodesic_distance(y, x), 1e-12 * std::max(1.0, rho));
  }
}

TEST(Distance, TriangleInequality) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    auto x = random_ball(rng, 4), y = random_ball(rng, 4), z = random_ball(rng, 4);
    EXPECT_LE(geodesic_distance(x, z), geodesic_distance(x, y) + geodesic_distance(y, z) + 1e-12);
  }
}

TEST(HalfFactors, Examples) {
  BallPoint y({0.3, 0.4});
  auto [s0, c0] = half_distance_factors(y, y);
  EXPECT_EQ(s0, 0.0);
  EXPECT_NEAR(c0, 1.0, 1e-15);
  auto [s, c] = half_distance_factors(BallPoint::origin(2), y);
  double r = y.norm();
  EXPECT_NEAR(s, r / std::sqrt(1 - r * r), 1e-15);
  EXPECT_NEAR(c, 1 / std::sqrt(1 - r * r), 1e-15);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    auto [a, b] = half_distance_factors(random_ball(rng, 3), random_ball(rng, 3));
    EXPECT_NEAR((b * b - a * a), 1.0, 1e-12 * b * b);
  }
}

TEST(ModelConvert, RoundTripAndIsometry) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + trial % 4;
    auto p = random_half(rng, n), q = random_half(rng, n);
    auto back = to_half_space(to_ball(p));
    EXPECT_LT(maxdiff(back.coords(), p.coords()), 1e-12 * 10);
    double dh = geodesic_distance(p, q);
    double db = geodesic_distance(to_ball(p), to_ball(q));
    EXPECT_NEAR(dh, db, 1e-10 * std::max(1.0, dh));
  }
  HalfSpacePoint e1({1.0, 0.0, 0.0});
  EXPECT_LT(to_ball(e1).norm(), 1e-16);
}

TEST(ModelConvert, DensityPullback) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 3;
    auto p = random_half(rng, n);
    double h = 1e-4;
    Eigen::MatrixXd J(n, n);
    for (int j = 0; j < n; ++j) {
      auto at = [&](double s) {
        auto c = p.coords();
        c[j] += s;
        return to_ball(HalfSpacePoint(c)).coords();
      };
      auto a1 = at(h), a2 = at(-h), a3 = at(2 * h), a4 = at(-2 * h);
      for (int i = 0; i < n; ++i) J(i, j) = (8 * (a1[i] - a2[i]) - (a3[i] - a4[i])) / (12 * h);
    }
    double pulled = volume_density(to_ball(p)) * std::abs(J.determinant());
    EXPECT_NEAR(pulled / volume_density(p), 1.0, 1e-8);
  }
}

TEST(Volume, Examples) {
  EXPECT_DOUBLE_EQ(volume_density(BallPoint::origin(3)), 8.0);
  EXPECT_NEAR(volume_density(BallPoint({0.5, 0.0})), 64.0 / 9.0, 1e-14);
}

TEST(Volume, MobiusInvariantMeasure) {
  // psi(rho(x, b)) integrated before and after composing with T_a, n = 2,
  // in geodesic polar coordinates about the origin.
  BallPoint a({0.35, -0.2}), b({-0.1, 0.25});
  auto psi = [](double r) { return std::exp(-r * r); };
  std::vector<QNode> rs;
  append_panels(rs, 0.0, 14.0, 0.25, 20);
  const int M = 400;
  double plain = 0, moved = 0;
  for (const auto& q : rs) {
    for (int k = 0; k < M; ++k) {
      double th = 2 * std::numbers::pi * k / M;
      double r = std::tanh(q.x / 2);
      BallPoint x({r * std::cos(th), r * std::sin(th)});
      double w = q.w * std::sinh(q.x) * 2 * std::numbers::pi / M;
      plain += w * psi(geodesic_distance(x, b));
      moved += w * psi(geodesic_distance(mobius_shift(a, x), b));
    }
  }
  // 2 pi int_0^inf e^{-r^2} sinh r dr
  double exact = 2 * std::numbers::pi * 0.5 * std::sqrt(std::numbers::pi) * std::exp(0.25) * std::erf(0.5);
  EXPECT_NEAR(plain / exact, 1.0, 1e-6);
  EXPECT_NEAR(moved / exact, 1.0, 1e-6);
}
