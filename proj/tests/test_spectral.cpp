#include <gtest/gtest.h>

#include <cmath>

#include "hyp/spectral.hpp"

using namespace hyp;

namespace {

// Closed-form heat kernel on H^3.
double heat3(double t, double r) {
  double ratio = r < 1e-8 ? 1.0 : r / std::sinh(r);
  return std::pow(4 * pi * t, -1.5) * ratio * std::exp(-t - r * r / (4 * t));
}

double max_rel(const RadialFunction& f, const std::function<double(double)>& g, double rmax) {
  double m = 0, scale = 0;
  for (std::size_t i = 0; i < f.grid().size(); ++i) scale = std::max(scale, std::abs(g(f.grid().node(i))));
  for (std::size_t i = 0; i < f.grid().size(); ++i) {
    double r = f.grid().node(i);
    if (r > rmax) break;
    m = std::max(m, std::abs(f[i] - g(r)) / scale);
  }
  return m;
}

}  // namespace

TEST(Spectral, GridShape) {
  auto sg = SpectralGrid::standard();
  EXPECT_NEAR(sg.lambda_max(), 40.0, 1e-12);
  EXPECT_GE(sg.size(), 1000u);
  double s = 0;
  for (double w : sg.weights()) s += w;
  EXPECT_NEAR(s, 40.0, 1e-12);
}

TEST(Spectral, HeatKernelForwardMatchesSymbol) {
  auto rg = RadialGrid::standard(30.0);
  double t = 0.7;
  auto h = RadialFunction::sample(rg, 3, [&](double r) { return heat3(t, r); });
  auto sg = SpectralGrid::standard();
  auto F = SphericalTransform(rg, sg, 3).forward(h);
  double m = 0;
  for (std::size_t j = 0; j < sg.size(); ++j) {
    double l = sg.nodes()[j];
    m = std::max(m, std::abs(F[j] - std::exp(-t * (4 + l * l) / 4)));
  }
  EXPECT_LT(m, 1e-9);
}

TEST(Spectral, HeatKernelInverseMatchesClosedForm) {
  auto rg = RadialGrid::standard(20.0);
  auto sg = SpectralGrid::standard();
  double t = 0.5;
  SphericalTransform T(rg, sg, 3);
  SpectralFunction F{sg, {}, 3};
  for (double l : sg.nodes()) F.values.push_back(std::exp(-t * (4 + l * l) / 4));
  auto h = T.inverse(F);
  EXPECT_LT(max_rel(h, [&](double r) { return heat3(t, r); }, 20.0), 1e-9);
}

TEST(Spectral, PointwiseForwardAgreesWithSphericalFunction) {
  auto rg = RadialGrid::standard(12.0);
  for (int n : {2, 4, 5, 7}) {
    auto f = RadialFunction::sample(rg, n, [](double r) { return std::exp(-r * r) * (1 + r); });
    auto sg = SpectralGrid::make(8.0, 1.0);
    auto F = SphericalTransform(rg, sg, n).forward(f);
    for (std::size_t j = 0; j < sg.size(); j += 37) {
      double l = sg.nodes()[j];
      auto prod = RadialFunction::sample(rg, n, [&](double r) {
        return r > 7.0 ? 0.0 : std::exp(-r * r) * (1 + r) * spherical_function(l, r, n);
      });
      double direct = integrate_radial(prod);
      EXPECT_NEAR(F[j], direct, 1e-9 * std::max(1.0, std::abs(direct))) << "n=" << n << " lambda=" << l;
    }
  }
}

TEST(Spectral, PlancherelGaussian) {
  auto rg = RadialGrid::standard(12.0);
  for (int n = 2; n <= 7; ++n) {
    auto f = RadialFunction::sample(rg, n, [](double r) { return std::exp(-r * r); });
    auto p = plancherel_check(f);
    EXPECT_NEAR(p.rhs / p.lhs, 1.0, 1e-8) << "n=" << n;
  }
}

TEST(Spectral, RoundTrip) {
  auto rg = RadialGrid::standard(12.0);
  for (int n : {3, 4, 6}) {
    auto g = [](double r) { return std::exp(-2 * r * r) * std::cosh(r); };
    auto f = RadialFunction::sample(rg, n, g);
    auto back = inverse_transform(forward_transform(f), rg);
    EXPECT_LT(max_rel(back, g, 12.0), 1e-9) << "n=" << n;
  }
}

TEST(Spectral, MultiplierMatchesLaplacian) {
  auto rg = RadialGrid::standard(12.0);
  int n = 5;
  auto g = [](double r) { return std::exp(-r * r); };
  auto f = RadialFunction::sample(rg, n, g);
  auto spectral = apply_multiplier(f, Multiplier::fractional_laplacian(1.0, n));
  auto direct = radial_laplacian(f);
  double m = 0;
  for (std::size_t i = 0; i < rg.size(); ++i) m = std::max(m, std::abs(spectral[i] + direct[i]));
  EXPECT_LT(m, 1e-7);
}

TEST(Spectral, QuadraticFormOfLaplacian) {
  // <(-Delta) f, f> = int |grad f|^2 dV
  auto rg = RadialGrid::standard(12.0);
  int n = 4;
  auto f = RadialFunction::sample(rg, n, [](double r) { return std::exp(-r * r); });
  auto grad2 = RadialFunction::sample(rg, n, [](double r) { return 4 * r * r * std::exp(-2 * r * r); });
  double qf = quadratic_form(f, Multiplier::fractional_laplacian(1.0, n));
  EXPECT_NEAR(qf / integrate_radial(grad2), 1.0, 1e-8);
}

TEST(Spectral, SymbolFactories) {
  EXPECT_NEAR(Multiplier::gjms(2)(3.0), (9 + 1) / 4.0 * (9 + 9) / 4.0, 1e-14);
  EXPECT_NEAR(Multiplier::qk(2)(3.0), 9 / 4.0 * 18 / 4.0, 1e-14);
  EXPECT_NEAR(Multiplier::pk_minus_constant(2)(0.0), 0.0, 1e-14);
  EXPECT_NEAR(Multiplier::h5_product()(2.0), 4 * 8 / 16.0, 1e-14);
  // (-Delta - 4)(-Delta - 3) on H^5: eigenvalue of -Delta is 4 + lambda^2/4
  double l = 1.7, e = 4 + l * l / 4;
  EXPECT_NEAR(Multiplier::h5_product()(l), (e - 4) * (e - 3), 1e-13);
  auto m = Multiplier::gjms(1) * Multiplier::gjms(1).inverse();
  EXPECT_NEAR(m(5.0), 1.0, 1e-15);
}

TEST(Spectral, UndecayedDataRejected) {
  auto rg = RadialGrid::standard(10.0, 512);
  auto sg = SpectralGrid::standard();
  SpectralFunction F{sg, std::vector<double>(sg.size(), 1.0), 3};
  EXPECT_THROW(SphericalTransform(rg, sg, 3).inverse(F), decay_error);
  SpectralFunction G{sg, std::vector<double>(sg.size(), 1.0), 4};
  EXPECT_THROW(SphericalTransform(rg, sg, 3).inverse(G), mismatch_error);
}
