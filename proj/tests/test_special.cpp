#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hyp/radial.hpp"
#include "hyp/special.hpp"

using namespace hyp;

TEST(LogGamma, Basics) {
  EXPECT_NEAR(std::abs(log_gamma_complex(1.0)), 0.0, 1e-15);
  EXPECT_NEAR(log_gamma_complex(0.5).real(), 0.5 * std::log(pi), 1e-15);
  EXPECT_THROW(log_gamma_complex(0.0), domain_error);
  EXPECT_THROW(log_gamma_complex(-3.0), domain_error);
  // |Gamma(i)|^2 = pi / sinh(pi)
  double v = std::exp(2 * log_gamma_complex(cplx(0, 1)).real());
  EXPECT_NEAR(v / (pi / std::sinh(pi)), 1.0, 1e-13);
}

TEST(LogGamma, RealAxisAgainstLgamma) {
  for (double x = -9.75; x < 30; x += 0.37) {
    if (std::abs(x - std::round(x)) < 1e-9 && x <= 0) continue;
    EXPECT_NEAR(log_gamma_complex(x).real(), std::lgamma(x), 1e-12 * std::max(1.0, std::abs(std::lgamma(x))));
  }
}

TEST(LogGamma, RecurrenceAndReflectionOffAxis) {
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> re(-10, 30), im(-50, 50);
  for (int t = 0; t < 300; ++t) {
    cplx z(re(rng), im(rng));
    // Gamma(z+1) = z Gamma(z) in log form, modulo 2 pi i
    cplx d = log_gamma_complex(z + 1.0) - log_gamma_complex(z) - std::log(z);
    EXPECT_NEAR(d.real(), 0.0, 1e-12 * std::max(1.0, std::abs(log_gamma_complex(z))));
    double k = d.imag() / (2 * pi);
    EXPECT_NEAR(k, std::round(k), 1e-10);
    // |Gamma(z)|^2 on the line Re z = 1/2: pi / cosh(pi y)
    double y = im(rng);
    double lhs = 2 * log_gamma_complex(cplx(0.5, y)).real();
    EXPECT_NEAR(lhs, std::log(pi) - std::log(std::cosh(pi * y)), 1e-12 * std::max(1.0, std::abs(lhs)));
  }
}

TEST(CFunction, EvenModulus) {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(0.05, 20);
  for (int t = 0; t < 50; ++t) {
    double l = u(rng);
    for (int n = 2; n <= 7; ++n) EXPECT_NEAR(std::abs(harish_chandra_c(-l, n)) / std::abs(harish_chandra_c(l, n)), 1.0, 1e-12);
  }
  EXPECT_THROW(harish_chandra_c(0.0, 3), domain_error);
}

TEST(CFunction, OddDimensionDensities) {
  for (double l : {0.5, 1.0, 2.0}) {
    double c3 = std::norm(harish_chandra_c(l, 3));
    EXPECT_NEAR(1 / c3, l * l / 4, 1e-12 * l * l / 4);
    EXPECT_NEAR(plancherel_density(l, 3), l * l / 4, 1e-12 * l * l / 4);
    // c(lambda) = 2/(i lambda) when n = 3
    auto c = harish_chandra_c(l, 3);
    EXPECT_NEAR(c.real(), 0.0, 1e-12);
    EXPECT_NEAR(c.imag(), -2 / l, 1e-12);
  }
  double l = 1.0;
  EXPECT_NEAR(plancherel_density(l, 5), l * l * (l * l + 4) / 576, 1e-12 * 5.0 / 576);
  EXPECT_NEAR(1 / std::norm(harish_chandra_c(l, 5)), 5.0 / 576, 1e-12 * 5.0 / 576);
  for (double x : {0.1, 0.7, 3.0, 11.0, 37.0}) {
    double p5 = x * x * (x * x + 4) / 576, p7 = x * x * (x * x + 4) * (x * x + 16) / 230400;
    EXPECT_NEAR(plancherel_density(x, 5) / p5, 1.0, 1e-12);
    EXPECT_NEAR(plancherel_density(x, 7) / p7, 1.0, 1e-12);
    EXPECT_NEAR(plancherel_density(x, 3) / (x * x / 4), 1.0, 1e-12);
    EXPECT_NEAR(plancherel_density(x, 4) / (1 / std::norm(harish_chandra_c(x, 4))), 1.0, 1e-11);
  }
  EXPECT_EQ(plancherel_density(0.0, 3), 0.0);
  EXPECT_EQ(plancherel_density(-2.0, 6), plancherel_density(2.0, 6));
}

TEST(Spherical, ValueAtOriginAndEvenness) {
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> ul(0, 10), ur(0, 6);
  for (int n = 2; n <= 7; ++n) {
    EXPECT_EQ(spherical_function(1.7, 0.0, n), 1.0);
    EXPECT_NEAR(spherical_function(1.7, 1e-7, n), 1.0, 1e-10);
    for (int t = 0; t < 10; ++t) {
      double l = ul(rng), r = ur(rng);
      EXPECT_EQ(spherical_function(l, r, n), spherical_function(-l, r, n));
    }
  }
}

TEST(Spherical, ThreeDimensionalClosedForm) {
  double l = 1.3, m = 0;
  for (double r = 0.1; r <= 5.0; r += 0.01) {
    double ex = 2 * std::sin(l * r / 2) / (l * std::sinh(r));
    m = std::max(m, std::abs(spherical_function(l, r, 3) - ex));
  }
  EXPECT_LT(m, 1e-10);
}

TEST(Spherical, BoundedByOne) {
  for (int n = 2; n <= 7; ++n)
    for (double l = 0; l <= 20; l += 1.7)
      for (double r = 0; r <= 12; r += 0.43) EXPECT_LE(std::abs(spherical_function(l, r, n)), 1.0 + 1e-12);
}

TEST(Spherical, EigenfunctionResidualDefaultGrid) {
  auto g = RadialGrid::standard();
  for (int n : {2, 3, 4, 5, 6, 7}) {
    for (double l : {0.0, 1.3, 4.0}) {
      auto f = RadialFunction::sample(g, n, [&](double r) { return spherical_function(l, r, n); });
      auto lap = radial_laplacian(f);
      double m = 0;
      for (std::size_t i = 0; i < g.size(); ++i) m = std::max(m, std::abs(lap[i] + ((n - 1.0) * (n - 1) + l * l) / 4 * f[i]));
      EXPECT_LT(m, 1e-6) << "n=" << n << " lambda=" << l;
    }
  }
}

TEST(Spherical, FiveDimensionalClosedForm) {
  // n = 5: phi = (3/(sinh^3)) * [..] obtained by applying D = -(1/sinh) d/drho to the n = 3 function;
  // checked here against the ODE-based oracle phi_5 = c * D(phi_3) normalised at 0.
  double l = 2.1;
  auto phi3 = [&](double r) { return 2 * std::sin(l * r / 2) / (l * std::sinh(r)); };
  for (double r : {0.3, 1.0, 2.7, 6.0}) {
    double h = 1e-4;
    double d = -(phi3(r + h) - phi3(r - h)) / (2 * h) / std::sinh(r);
    double d0 = (1 + l * l / 4) / 3;  // limit of -(1/sinh) phi3' at 0 = -phi3''(0) = (1 + lambda^2/4)/3
    EXPECT_NEAR(spherical_function(l, r, 5), d / d0, 1e-7);
  }
}
