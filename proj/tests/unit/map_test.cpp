#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "polyharm/polyharm.hpp"

namespace polyharm {
namespace {

constexpr double kExact = 1e-12;

TEST(PolyharmonicMap, RejectsDegenerateAndUnnormalizedInput) {
  EXPECT_THROW(LayeredSeries(std::vector<HarmonicLayer>{}), InvalidArgument);
  PowerSeries h(3), g(3);
  h.set(1, 0.5);
  EXPECT_THROW(PolyharmonicMap({HarmonicLayer{h, g}}), InvalidArgument);
  h.set(1, 1.0);
  g.set(1, Complex{0.6, 0.8});  // |b11| = 1
  EXPECT_THROW(PolyharmonicMap({HarmonicLayer{h, g}}), InvalidArgument);
}

TEST(PolyharmonicMap, PadsLayersToCommonOrder) {
  PowerSeries h(2), g(5);
  h.set(1, 1.0);
  const PolyharmonicMap f({HarmonicLayer{h, g}, HarmonicLayer{PowerSeries(1), PowerSeries(3)}});
  EXPECT_EQ(f.order(), 5u);
  for (const auto& l : f.layers()) {
    EXPECT_EQ(l.analytic.order(), 5u);
    EXPECT_EQ(l.anti_analytic.order(), 5u);
  }
}

TEST(PolarPoint, ValidatesAndReducesAngle) {
  EXPECT_THROW(PolarPoint(0.0, 1.0), InvalidArgument);
  EXPECT_THROW(PolarPoint(1.0, 1.0), InvalidArgument);
  EXPECT_THROW(PolarPoint(0.5, std::nan("")), InvalidArgument);
  const PolarPoint p(0.5, -0.5 * std::numbers::pi);
  EXPECT_NEAR(p.theta(), 1.5 * std::numbers::pi, 1e-15);
  EXPECT_NEAR(PolarPoint(0.5, 7.0).theta(), 7.0 - 2.0 * std::numbers::pi, 1e-15);
}

TEST(Eval, Identity) {
  EXPECT_EQ(eval(PolyharmonicMap::identity(), Complex{0.3, 0.4}), Complex(0.3, 0.4));
}

TEST(Eval, F1OnRealAxis) {
  // 0.5 + 1/6 + 1/48
  const Complex v = eval(catalog::f1(), 0.5);
  EXPECT_NEAR(v.real(), 0.6875, kExact);
  EXPECT_NEAR(v.imag(), 0.0, kExact);
}

TEST(Eval, F2OnImaginaryAxis) {
  // 0.5i + (0.5i)^3 / 3
  const Complex v = eval(catalog::f2(3, 0.0), Complex{0.0, 0.5});
  EXPECT_NEAR(v.real(), 0.0, kExact);
  EXPECT_NEAR(v.imag(), 0.5 - 0.125 / 3.0, kExact);
  EXPECT_NEAR(v.imag(), 0.4583333333333333, kExact);
}

TEST(Eval, RejectsPointsOutsideDisk) {
  const auto f = PolyharmonicMap::identity();
  EXPECT_THROW(eval(f, 1.0), InvalidArgument);
  EXPECT_THROW(eval(f, Complex{0.8, 0.6}), InvalidArgument);
  EXPECT_THROW(eval(f, Complex{std::nan(""), 0.0}), InvalidArgument);
  EXPECT_THROW(jacobian(f, Complex{0.0, -1.5}), InvalidArgument);
}

TEST(Eval, MatchesDirectSummationOnSamples) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const auto f = sample_member(ClassKind::starlike, 1 + i % 3, 12, 1.0, 1000 + i);
    const Complex z = std::polar(0.99 * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
    EXPECT_NEAR(std::abs(eval(f, z) - oracle::direct_eval(f, z)), 0.0, 1e-14);
  }
}

TEST(Eval, VanishesAtOrigin) {
  for (int i = 0; i < 50; ++i)
    EXPECT_EQ(eval(sample_member(ClassKind::convex, 1 + i % 3, 8, 0.7, i), Complex{}), Complex{});
}

// Anti-analytic terms enter conjugated, so evaluation is only real-linear.
TEST(Eval, IsRealLinearInCoefficients) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const std::size_t p = 1 + i % 3;
    const auto f = sample_member(ClassKind::starlike, p, 9, 1.0, 2 * i);
    const auto g = sample_member(ClassKind::starlike, p, 9, 0.5, 2 * i + 1);
    const double alpha = u(rng), beta = u(rng);
    const Complex z = 0.7 * Complex{u(rng), u(rng)};
    const Complex lhs = eval(Complex(alpha) * f + Complex(beta) * g, z);
    const Complex rhs = alpha * eval(f, z) + beta * eval(g, z);
    EXPECT_LE(std::abs(lhs - rhs), 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST(ApplyL, IdentityIsFixed) {
  const auto f = PolyharmonicMap::identity(4);
  EXPECT_EQ(apply_L(f), static_cast<const LayeredSeries&>(f));
}

TEST(ApplyL, F1FlipsAntiAnalyticSigns) {
  const auto lf = apply_L(catalog::f1(4));
  EXPECT_EQ(lf.a(1, 1), Complex(1.0));
  EXPECT_EQ(lf.b(1, 1), Complex(-1.0 / 3.0));
  EXPECT_EQ(lf.b(2, 1), Complex(-1.0 / 6.0));
  EXPECT_EQ(lf.a(2, 1), Complex{});
}

TEST(ApplyL, ScalesByDegree) {
  const auto lf = apply_L(catalog::f2(3, 0.0, 5));  // z + z^3/3 -> z + z^3
  EXPECT_EQ(lf.a(1, 1), Complex(1.0));
  EXPECT_NEAR(std::abs(lf.a(1, 3) - 1.0), 0.0, kExact);
}

TEST(ApplyL, TwiceGivesSquaredDegreeWeights) {
  const auto f = sample_member(ClassKind::convex, 3, 7, 1.0, 99);
  const auto llf = apply_L(apply_L(f));
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t j = 1; j <= 7; ++j) {
      const double w = static_cast<double>(j * j);
      EXPECT_NEAR(std::abs(llf.a(k, j) - w * f.a(k, j)), 0.0, 1e-15);
      EXPECT_NEAR(std::abs(llf.b(k, j) - w * f.b(k, j)), 0.0, 1e-15);
    }
}

TEST(Jacobian, ClosedFormValues) {
  EXPECT_EQ(jacobian(PolyharmonicMap::identity(), Complex{}), 1.0);
  EXPECT_NEAR(jacobian(catalog::f1(), Complex{}), 8.0 / 9.0, 1e-15);
  const auto aff = catalog::affine(std::polar(0.5, 1.1));
  for (Complex z : {Complex{}, Complex{0.3, -0.2}, Complex{-0.9, 0.1}})
    EXPECT_NEAR(jacobian(aff, z), 0.75, kExact);
}

TEST(Jacobian, OriginIdentityIsExact) {
  for (int i = 0; i < 300; ++i) {
    const auto f = sample_member(i % 2 ? ClassKind::convex : ClassKind::starlike, 1 + i % 3, 10, 1.0, 7 * i);
    EXPECT_NEAR(jacobian(f, Complex{}), 1.0 - std::norm(f.b(1, 1)), 1e-15);
  }
}

TEST(Wirtinger, MatchesFiniteDifferenceOracle) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const auto f = sample_member(ClassKind::starlike, 1 + i % 3, 10, 1.0, 500 + i);
    const Complex z = std::polar(0.05 + 0.9 * u(rng), 2.0 * std::numbers::pi * u(rng));
    const auto exact = wirtinger(f, z);
    const auto fd = oracle::fd_wirtinger(f, z);
    EXPECT_NEAR(std::abs(exact.dz - fd.dz), 0.0, 1e-6);
    EXPECT_NEAR(std::abs(exact.dzbar - fd.dzbar), 0.0, 1e-6);
  }
}

TEST(ThetaDerivativeCheck, SpecExamples) {
  EXPECT_LE(theta_derivative_check(PolyharmonicMap::identity(), PolarPoint(0.5, 1.0), 1e-5), 1e-8);
  EXPECT_LE(theta_derivative_check(catalog::f1(), PolarPoint(0.9, 2.0), 1e-5), 1e-6);
  EXPECT_LE(theta_derivative_check(catalog::f4(), PolarPoint(0.7, 0.1), 1e-5), 1e-6);
}

TEST(ThetaDerivativeCheck, RejectsBadStep) {
  const auto f = PolyharmonicMap::identity();
  EXPECT_THROW(theta_derivative_check(f, PolarPoint(0.5, 0.0), 0.0), InvalidArgument);
  EXPECT_THROW(theta_derivative_check(f, PolarPoint(0.5, 0.0), 2e-4), InvalidArgument);
}

TEST(ThetaDerivativeCheck, HoldsOnRandomMapsAndPoints) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const auto f = sample_member(i % 2 ? ClassKind::convex : ClassKind::starlike, 1 + i % 3, 10, u(rng) * 0.99 + 0.01, i);
    const PolarPoint pt(0.01 + 0.98 * u(rng), 2.0 * std::numbers::pi * u(rng));
    EXPECT_LE(theta_derivative_check(f, pt, 1e-5), 1e-6);
  }
}

TEST(Harmonicity, DiscreteLaplacianVanishesForOneLayer) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto f = sample_member(ClassKind::starlike, 1, 10, 1.0, 4242);
  for (int i = 0; i < 50; ++i) {
    const Complex z = std::polar(0.9 * u(rng), 2.0 * std::numbers::pi * u(rng));
    EXPECT_LE(std::abs(oracle::discrete_laplacian(f, z, 1e-3)), 1e-4);
  }
  // a genuinely biharmonic term is seen by the same stencil: Laplacian of |z|^2 zbar is 8 zbar
  const auto f1 = catalog::f1();
  const Complex z{0.3, 0.2};
  EXPECT_NEAR(std::abs(oracle::discrete_laplacian(f1, z, 1e-3) - 8.0 / 6.0 * std::conj(z)), 0.0, 1e-4);
}

}  // namespace
}  // namespace polyharm
