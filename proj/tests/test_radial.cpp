#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hyp/radial.hpp"

using namespace hyp;

TEST(Grid, StandardShape) {
  auto g = RadialGrid::standard();
  EXPECT_EQ(g.size(), 2048u);
  EXPECT_GT(g.node(0), 0.0);
  for (std::size_t i = 1; i < g.size(); ++i) EXPECT_GT(g.node(i), g.node(i - 1));
  EXPECT_DOUBLE_EQ(g.rho_max(), 20.0);
  // geometric clustering: many nodes below 1e-2
  int small = 0;
  for (double x : g.nodes()) small += x < 1e-2;
  EXPECT_GT(small, 100);
}

TEST(Grid, RejectsBadBreaks) {
  EXPECT_THROW(RadialGrid({0.0, 1.0, 0.5}, 8), domain_error);
  EXPECT_THROW(RadialGrid({0.1, 1.0}, 8), domain_error);
}

TEST(Integrate, ZeroFunction) {
  auto g = RadialGrid::standard();
  EXPECT_EQ(integrate_radial(RadialFunction::zero(g, 3)), 0.0);
  EXPECT_EQ(lp_norm(RadialFunction::zero(g, 3), 2.0), 0.0);
}

TEST(Integrate, IndicatorBallInPlane) {
  // panels aligned with R so the indicator is exact on each panel
  double R = 2.5;
  auto g = RadialGrid::graded(R, 0.25);
  auto f = RadialFunction::sample(g, 2, [](double) { return 1.0; });
  EXPECT_NEAR(integrate_radial(f), 2 * pi * (std::cosh(R) - 1), 1e-12 * 2 * pi * std::cosh(R));
}

TEST(Integrate, SinhPowersClosedForm) {
  // int_0^R sinh^{n-1} against closed forms obtained by the reduction
  // I_k = (sinh^{k-1} cosh)/k - (k-1)/k I_{k-2}
  for (double R : {1.0, 4.0, 10.0}) {
    auto g = RadialGrid::graded(R, 0.25);
    for (int n = 2; n <= 7; ++n) {
      std::vector<double> I(n + 1);
      I[0] = R;
      I[1] = std::cosh(R) - 1;
      for (int k = 2; k <= n; ++k) I[k] = std::pow(std::sinh(R), k - 1) * std::cosh(R) / k - (k - 1.0) / k * I[k - 2];
      auto one = RadialFunction::sample(g, n, [](double) { return 1.0; });
      double v = integrate_radial(one) / sphere_area(n);
      EXPECT_NEAR(v / I[n - 1], 1.0, 1e-10) << n << " " << R;
    }
  }
}

TEST(LpNorm, ScalingAndDefinition) {
  auto g = RadialGrid::standard();
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> u(0.5, 2.0);
  for (int t = 0; t < 5; ++t) {
    double a = u(rng), c = u(rng) * (t % 2 ? -1 : 1);
    auto f = RadialFunction::sample(g, 3, [&](double r) { return std::exp(-a * r * r); });
    for (double p : {1.0, 2.0, 3.5}) EXPECT_NEAR(lp_norm(c * f, p), std::abs(c) * lp_norm(f, p), 1e-13 * lp_norm(f, p));
    auto f2 = RadialFunction::sample(g, 3, [&](double r) { return std::exp(-2 * a * r * r); });
    EXPECT_NEAR(lp_norm(f, 2.0), std::sqrt(integrate_radial(f2)), 1e-13);
  }
  EXPECT_THROW(lp_norm(RadialFunction::zero(g, 3), 0.5), domain_error);
}

TEST(Interpolation, PanelPolynomial) {
  auto g = RadialGrid::standard();
  auto f = RadialFunction::sample(g, 4, [](double r) { return std::cos(r) * std::exp(-r / 3); });
  for (double r : {0.0, 1e-5, 0.013, 0.77, 3.3, 19.9}) EXPECT_NEAR(f(r), std::cos(r) * std::exp(-r / 3), 1e-12);
  EXPECT_EQ(f(25.0), 0.0);
}

TEST(Laplacian, ConstantAndCosh) {
  auto g = RadialGrid::standard();
  for (int n : {2, 3, 5, 7}) {
    auto one = RadialFunction::sample(g, n, [](double) { return 1.0; });
    auto l1 = radial_laplacian(one);
    for (double v : l1.values()) EXPECT_NEAR(v, 0.0, 1e-8);
    auto ch = RadialFunction::sample(g, n, [](double r) { return std::cosh(r); });
    auto lc = radial_laplacian(ch);
    for (std::size_t i = 0; i < g.size(); ++i) EXPECT_NEAR(lc[i] / (n * ch[i]), 1.0, 1e-6) << g.node(i);
  }
}

TEST(Laplacian, RejectsTinyGrid) {
  RadialGrid g({0.0, 1.0}, 2);
  EXPECT_THROW(radial_laplacian(RadialFunction::zero(g, 3)), domain_error);
}

TEST(Laplacian, SecondOrderConvergenceOnLowOrderPanels) {
  // 4-node panels: second derivatives of the interpolant are second-order accurate
  auto resid = [](int panels) {
    std::vector<double> br;
    for (int i = 0; i <= panels; ++i) br.push_back(6.0 * i / panels);
    RadialGrid g(br, 4);
    double lam = 1.3;
    int n = 3;
    auto f = RadialFunction::sample(g, n, [&](double r) { return 2 * std::sin(lam * r / 2) / (lam * std::sinh(r)); });
    auto l = radial_laplacian(f);
    double m = 0;
    for (std::size_t i = 0; i < g.size(); ++i) m = std::max(m, std::abs(l[i] + (4 + lam * lam) / 4 * f[i]));
    return m;
  };
  double r1 = resid(60), r2 = resid(120), r3 = resid(240);
  EXPECT_GT(r1 / r2, 3.5);
  EXPECT_GT(r2 / r3, 3.5);
}
