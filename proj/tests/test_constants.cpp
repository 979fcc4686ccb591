#include <gtest/gtest.h>

#include <cmath>

#include "hyp/constants.hpp"

using namespace hyp;

TEST(Constants, HlsThreeOne) {
  double c = hls_constant(3, 1.0);
  EXPECT_NEAR(c, 4.0 / 3.0 * std::pow(4.0 / std::sqrt(pi), 2.0 / 3.0), 1e-14);
  EXPECT_NEAR(c, 2.2940107035415993, 1e-13);
}

TEST(Constants, HlsDomain) {
  EXPECT_THROW(hls_constant(3, 0.0), domain_error);
  EXPECT_THROW(hls_constant(3, 3.0), domain_error);
  for (double l = 0.1; l < 5.0; l += 0.1) {
    double c = hls_constant(5, l);
    EXPECT_TRUE(std::isfinite(c) && c > 0) << l;
  }
}

TEST(Constants, HlsAtZeroLambdaLimit) {
  // the constant tends to 1 as lambda -> 0 (the bilinear form becomes ||f||_1 ||g||_1)
  EXPECT_NEAR(hls_constant(4, 1e-9), 1.0, 1e-7);
}

TEST(Constants, RieszNormalisation) {
  // gamma(2) on R^3 = 4 pi: the Newtonian kernel is 1/(4 pi |x|)
  EXPECT_NEAR(gamma_riesz(2.0, 3), 4 * pi, 1e-13);
  EXPECT_NEAR(gamma_riesz(4.0, 5), 16 * pi * pi, 1e-12);
  // (n - 2) |S^{n-1}| = gamma(2) in every n
  for (int n = 3; n <= 9; ++n) EXPECT_NEAR(gamma_riesz(2.0, n), (n - 2) * sphere_area(n), 1e-11 * gamma_riesz(2.0, n));
}

TEST(Constants, SobolevThreeOne) {
  EXPECT_NEAR(sobolev_constant(3, 1), 3.0 * std::pow(pi / 2.0, 4.0 / 3.0), 1e-12);
}

TEST(Constants, SobolevFiveTwo) {
  EXPECT_NEAR(sobolev_constant(5, 2), 16 * pi * pi / hls_constant(5, 1.0), 1e-11);
  EXPECT_NEAR(sobolev_constant(5, 2), 102.38327344058295, 1e-9);
}

TEST(Constants, ClosedFormAgrees) {
  for (int n = 3; n <= 14; ++n)
    for (int k = 1; 2 * k < n; ++k)
      EXPECT_NEAR(sobolev_constant_closed_form(n, k) / sobolev_constant(n, k), 1.0, 1e-12) << n << " " << k;
}

TEST(Constants, SobolevFirstOrderClassical) {
  // k = 1: n(n-2)/4 |S^n|^{2/n}
  for (int n = 3; n <= 10; ++n)
    EXPECT_NEAR(sobolev_constant(n, 1), n * (n - 2) / 4.0 * std::pow(sphere_area(n + 1), 2.0 / n), 1e-11 * n * n) << n;
}

TEST(Constants, Domains) {
  EXPECT_THROW(sobolev_constant(4, 2), domain_error);
  EXPECT_THROW(sobolev_constant(5, 0), domain_error);
  EXPECT_THROW(gamma_riesz(3.0, 3), domain_error);
  EXPECT_DOUBLE_EQ(pk_poincare_constant(2), 9.0 / 16.0);
  EXPECT_DOUBLE_EQ(pk_poincare_constant(1), 0.25);
  EXPECT_DOUBLE_EQ(spectral_gap(5), 4.0);
}
