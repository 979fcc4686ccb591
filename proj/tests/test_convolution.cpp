#include <gtest/gtest.h>

#include <cmath>

#include "hyp/convolution.hpp"
#include "hyp/spectral.hpp"

using namespace hyp;

namespace {

double heat3(double t, double r) {
  double ratio = r < 1e-8 ? 1.0 : r / std::sinh(r);
  return std::pow(4 * pi * t, -1.5) * ratio * std::exp(-t - r * r / (4 * t));
}

}  // namespace

TEST(Convolution, HeatSemigroupH3) {
  auto h = [](double r) { return heat3(0.5, r); };
  ConvolutionOptions o;
  o.f_singular = o.g_singular = false;
  o.s_max = 20.0;
  double m = 0;
  for (double r = 0.1; r <= 3.0 + 1e-12; r += 0.1) {
    double v = convolve_at(r, h, h, 3, o);
    m = std::max(m, std::abs(v - heat3(1.0, r)) / heat3(1.0, r));
  }
  EXPECT_LT(m, 1e-8);
  EXPECT_NEAR(convolve_at(0.0, h, h, 3, o) / heat3(1.0, 0.0), 1.0, 1e-9);
}

TEST(Convolution, Commutative) {
  auto f = [](double r) { return std::exp(-r * r) / (1 + r); };
  auto g = [](double r) { return std::exp(-2 * r) * (1 + r * r); };
  for (int n : {2, 3, 4, 5, 6, 7})
    for (double r : {0.05, 0.7, 2.5}) {
      double a = convolve_at(r, f, g, n), b = convolve_at(r, g, f, n);
      EXPECT_NEAR(a / b, 1.0, 1e-10) << "n=" << n << " r=" << r;
    }
}

TEST(Convolution, Associative) {
  // (f*g)*h = f*(g*h) with f, g, h radial; tabulate the inner products.
  int n = 4;
  auto rg = RadialGrid::standard(14.0, 768);
  auto f = RadialFunction::sample(rg, n, [](double r) { return std::exp(-r * r); });
  auto g = RadialFunction::sample(rg, n, [](double r) { return std::exp(-2 * r * r) * std::cosh(r); });
  auto h = RadialFunction::sample(rg, n, [](double r) { return std::exp(-1.5 * r * r); });
  ConvolutionOptions o;
  o.f_singular = o.g_singular = false;
  auto fg = radial_convolution(f, g, o);
  auto gh = radial_convolution(g, h, o);
  auto fi = [&](double r) { return f(r); };
  auto hi = [&](double r) { return h(r); };
  auto fgi = [&](double r) { return fg(r); };
  auto ghi = [&](double r) { return gh(r); };
  for (double r : {0.3, 1.0, 2.0}) {
    double a = convolve_at(r, fgi, hi, n, o), b = convolve_at(r, fi, ghi, n, o);
    EXPECT_NEAR(a / b, 1.0, 1e-8) << r;
  }
}

TEST(Convolution, ApproximateIdentity) {
  auto f = [](double r) { return 1.0 / std::cosh(r); };
  ConvolutionOptions o;
  o.f_singular = o.g_singular = false;
  double prev = 1e300;
  for (double t : {0.1, 0.03, 0.01, 0.003}) {
    auto k = [&](double r) { return heat3(t, r); };
    double err = std::abs(convolve_at(0.8, f, k, 3, o) - f(0.8));
    EXPECT_LT(err, prev);
    prev = err;
  }
  EXPECT_LT(prev, 1e-2);
}

TEST(Convolution, TransformOfConvolutionIsProduct) {
  for (int n : {3, 4, 5}) {
    auto rg = RadialGrid::standard(14.0, 768);
    auto f = RadialFunction::sample(rg, n, [](double r) { return std::exp(-r * r); });
    auto g = RadialFunction::sample(rg, n, [](double r) { return std::exp(-r * r / 2) / std::cosh(r); });
    ConvolutionOptions o;
    o.f_singular = o.g_singular = false;
    auto fg = radial_convolution(f, g, o);
    auto sg = SpectralGrid::make(6.0, 1.0);
    SphericalTransform T(rg, sg, n);
    auto F = T.forward(f), G = T.forward(g), FG = T.forward(fg);
    for (std::size_t j = 0; j < sg.size(); j += 7)
      EXPECT_NEAR(FG[j], F[j] * G[j], 1e-8 * std::abs(F[0] * G[0])) << "n=" << n;
  }
}

TEST(Convolution, SingularKernelsAgainstSymbol) {
  // G * G for the n = 3 limiting Green 1/(4 pi) coth(r) - 1/(4 pi) = ... use
  // the resolvent R(r) = e^{-s r} / (4 pi sinh r) with symbol 1/(s^2 + lambda^2/4) on H^3,
  // and R_a * R_b = (R_a - R_b) / (b^2 - a^2).
  auto R = [](double s) {
    return [s](double r) { return std::exp(-s * r) / (4 * pi * std::sinh(r)); };
  };
  auto a = R(1.0), b = R(2.0);
  for (double r : {0.01, 0.3, 1.0, 4.0}) {
    double v = convolve_at(r, a, b, 3);
    double e = (a(r) - b(r)) / 3.0;
    EXPECT_NEAR(v / e, 1.0, 1e-8) << r;
  }
}

TEST(Convolution, DimensionMismatch) {
  auto rg = RadialGrid::standard(5.0, 256);
  auto f = RadialFunction::sample(rg, 3, [](double r) { return std::exp(-r); });
  auto g = RadialFunction::sample(rg, 4, [](double r) { return std::exp(-r); });
  EXPECT_THROW(radial_convolution(f, g), mismatch_error);
}
