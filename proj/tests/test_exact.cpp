#include <gtest/gtest.h>

#include <random>

#include "hyp/exact.hpp"

using namespace hyp;

TEST(Laurent, DerivativeExamples) {
  auto inv = LaurentElement::monomial(-1);
  EXPECT_EQ(laurent_derivative_op(inv), LaurentElement::monomial(-3, 1));
  auto two = laurent_derivative_op(inv, 2);
  EXPECT_EQ(two, LaurentElement::monomial(-3, 0, 2) + LaurentElement::monomial(-5, 0, 3));
  EXPECT_TRUE(laurent_derivative_op(LaurentElement::constant(7)).is_zero());
}

TEST(Laurent, DerivativeMatchesNumericDifferentiation) {
  auto e = LaurentElement::monomial(-2, 1, Rational(3, 2)) + LaurentElement::monomial(1, 0, -1) +
           LaurentElement::monomial(-5, 0, 2);
  auto d = laurent_derivative_op(e);
  for (double r : {0.3, 0.9, 2.5}) {
    double h = 1e-5;
    double fd = (e(r + h) - e(r - h)) / (2 * h);
    EXPECT_NEAR(d(r), -fd / std::sinh(r), 1e-6 * std::max(1.0, std::abs(d(r))));
  }
}

TEST(Laurent, CoshSquaredReduction) {
  auto c = LaurentElement::monomial(0, 1);
  EXPECT_EQ(c * c, LaurentElement::constant(1) + LaurentElement::monomial(2));
}

TEST(Laurent, RingAxiomsOnRandomElements) {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> pw(-6, 4), par(0, 1), num(-9, 9), den(1, 5);
  auto rnd = [&] {
    LaurentElement e;
    for (int i = 0; i < 4; ++i) e += LaurentElement::monomial(pw(rng), par(rng), Rational(num(rng), den(rng)));
    return e;
  };
  for (int t = 0; t < 40; ++t) {
    auto a = rnd(), b = rnd(), c = rnd();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(SinhRecursion, CoefficientsSmallK) {
  EXPECT_EQ(sinh_recursion_coeffs(0), std::vector<BigInt>{1});
  auto a = sinh_recursion_coeffs(1);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0], 2);
  EXPECT_EQ(a[1], 3);
  EXPECT_THROW(sinh_recursion_coeffs(9), domain_error);
}

TEST(SinhRecursion, ExpansionAgreesUpToEight) {
  auto rep = verify_sinh_recursion(8);
  for (const auto& r : rep.rows) EXPECT_TRUE(r.pass) << r.check_id << " " << r.note;
  for (int k = 0; k <= 8; ++k) EXPECT_EQ(sinh_recursion_coeffs(k)[0], factorial(2 * k));
}

TEST(SinhRecursion, TopCoefficientRecursion) {
  for (int l = 0; l < 4; ++l) {
    auto a = sinh_recursion_coeffs(l), b = sinh_recursion_coeffs(l + 1);
    EXPECT_EQ(b[l + 1], BigInt((4 * l + 1) * (4 * l + 3)) * a[l]);
  }
}

TEST(Conjugation, MonomialExamples) {
  for (int n = 3; n <= 8; ++n) {
    auto r = monomial_conjugation_check(Rational(n), 1, 0);
    EXPECT_EQ(r.lhs, Rational(n * (n - 2), 4));
    EXPECT_TRUE(r.equal());
  }
  auto r = monomial_conjugation_check(Rational(4), 1, 1);
  EXPECT_EQ(r.lhs, 0);
  EXPECT_EQ(r.rhs, 0);
}

TEST(Conjugation, FullSweep) {
  auto rep = exact_sweep(3, 12, 6);
  EXPECT_TRUE(rep.all_pass()) << rep.rows[0].note;
}

TEST(Conjugation, HalfIntegerDimensionsStayExact) {
  // rational n is accepted; the identity is polynomial in n
  for (int m = 0; m <= 6; ++m) EXPECT_TRUE(monomial_conjugation_check(Rational(11, 2), 2, m).equal());
}

TEST(SinglePowerConjugation, ConstantAndAlphaChoices) {
  for (int n = 3; n <= 9; ++n) {
    Rational a(7, 3);
    auto r = single_power_conjugation_check(a, 0, Rational(n));
    EXPECT_EQ(r.lhs, a * (a + 1));
    EXPECT_TRUE(r.equal());
    // alpha = (n-2)/2 removes the first-order term; compare with the k = 1 case of the monomial check
    Rational al = Rational(n - 2, 2);
    for (int m = 0; m <= 6; ++m) {
      auto s = single_power_conjugation_check(al, m, Rational(n));
      auto t = monomial_conjugation_check(Rational(n), 1, m);
      EXPECT_EQ(s.rhs, t.rhs);
      EXPECT_TRUE(s.equal());
    }
  }
}

TEST(SinglePowerConjugation, RandomRationalSweep) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
  for (int t = 0; t < 200; ++t) {
    Rational a(num(rng), den(rng));
    for (int m = 0; m <= 6; ++m)
      for (int n = 2; n <= 10; ++n) {
        auto r = single_power_conjugation_check(a, m, Rational(n));
        EXPECT_TRUE(r.equal());
        EXPECT_EQ(single_power_conjugation_middle(a, m), r.lhs);
      }
  }
}

namespace {
double worst_rel(const std::vector<PointCheck>& pts) {
  double scale = 0, err = 0;
  for (const auto& p : pts) scale = std::max(scale, std::abs(p.rhs));
  for (const auto& p : pts) err = std::max(err, std::abs(p.lhs - p.rhs));
  return err / scale;
}
}  // namespace

TEST(BallConjugation, ConstantAtOrigin) {
  for (int n : {3, 4, 5}) {
    auto pts = ball_conjugation_numeric_check(1, Poly::constant(n, 1.0), 1, 1);
    EXPECT_NEAR(pts[0].rhs, -n * (n - 2) / 4.0, 1e-14);
    EXPECT_NEAR(pts[0].lhs, pts[0].rhs, 1e-8);
  }
}

TEST(BallConjugation, K1N3Linear) {
  auto pts = ball_conjugation_numeric_check(1, Poly::var(3, 0), 20, 42);
  EXPECT_LT(worst_rel(pts), 1e-6);
}

TEST(BallConjugation, K2N5) {
  Poly f = Poly::constant(5, 1.0) + Poly::var(5, 0) * Poly::var(5, 1);
  auto pts = ball_conjugation_numeric_check(2, f, 20, 42);
  EXPECT_LT(worst_rel(pts), 1e-4);
}

TEST(BallConjugation, K1N5Quadratic) {
  Poly f = Poly::constant(5, 1.0) + Poly::var(5, 0) * Poly::var(5, 1) + 2.0 * Poly::var(5, 2);
  auto pts = ball_conjugation_numeric_check(1, f, 20, 42);
  EXPECT_LT(worst_rel(pts), 1e-6);
}
