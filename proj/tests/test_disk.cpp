#include <gtest/gtest.h>

#include <random>

#include "hardy/ball.hpp"
#include "hardy/disk.hpp"
#include "hardy/jet.hpp"
#include "hardy/nodes.hpp"

using namespace hardy;

namespace {

cplx random_interior(std::mt19937_64& rng, double radius = 0.999) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(radius * std::sqrt(u(rng)), kTwoPi * u(rng));
}

}  // namespace

TEST(DiskPoint, RolesAreChecked) {
  EXPECT_NO_THROW(InteriorPoint(cplx(0.3, 0.4)));
  EXPECT_THROW(InteriorPoint(cplx(0.6, 0.8)), DomainError);
  EXPECT_NO_THROW(ClosedPoint(cplx(0.6, 0.8)));
  EXPECT_THROW(ClosedPoint(cplx(1.0, 0.1)), DomainError);
  EXPECT_NO_THROW(BoundaryPoint(cplx(0.6, 0.8)));
  EXPECT_THROW(BoundaryPoint(cplx(0.5, 0.0)), DomainError);
  EXPECT_THROW(InteriorPoint(cplx(std::nan(""), 0.0)), DomainError);
}

TEST(DiskPoint, PseudoHyperbolicBasics) {
  const InteriorPoint a(cplx(0.5, 0.0)), z(0.0);
  EXPECT_DOUBLE_EQ(pseudo_hyperbolic(a, a), 0.0);
  EXPECT_DOUBLE_EQ(pseudo_hyperbolic(a, z), 0.5);
  EXPECT_NEAR(pseudo_hyperbolic(a, InteriorPoint(cplx(-0.5, 0.0))), 0.8, 1e-15);
}

TEST(DiskPoint, TriangleTypeBound) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 2000; ++t) {
    const InteriorPoint a(random_interior(rng)), b(random_interior(rng)), c(random_interior(rng));
    const double ab = pseudo_hyperbolic(a, b), bc = pseudo_hyperbolic(b, c), ac = pseudo_hyperbolic(a, c);
    EXPECT_LE(ac, (ab + bc) / (1.0 + ab * bc) + 1e-12);
  }
}

TEST(DiskPoint, BlaschkeIsUnimodularOnCircle) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> size(1, 20);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  for (int t = 0; t < 200; ++t) {
    std::vector<cplx> zs(static_cast<std::size_t>(size(rng)));
    for (auto& z : zs) z = random_interior(rng, 0.99);
    const auto zeros = interior_points(zs);
    const ClosedPoint w(std::polar(1.0, angle(rng)));
    EXPECT_NEAR(std::abs(blaschke_eval(zeros, w)), 1.0, 1e-12);
  }
}

TEST(DiskPoint, BlaschkeVanishesAtZeros) {
  const std::vector<cplx> zs{cplx(0.2, 0.1), cplx(-0.5, 0.3)};
  const auto zeros = interior_points(zs);
  for (const cplx z : zs) EXPECT_LT(std::abs(blaschke_eval(zeros, ClosedPoint(z))), 1e-15);
}

TEST(DiskPoint, PoissonKernelIntegratesToOne) {
  const InteriorPoint l(cplx(0.4, -0.3));
  const int n = 4096;
  double s = 0.0;
  for (int k = 0; k < n; ++k) s += poisson_kernel(l, BoundaryPoint::at_angle(kTwoPi * k / n));
  EXPECT_NEAR(s / n, 1.0, 1e-12);
}

TEST(NodeSequence, RejectsDuplicatesAndExteriorPoints) {
  EXPECT_THROW(NodeSequence({cplx(0.1), cplx(0.1)}), DomainError);
  EXPECT_THROW(NodeSequence({cplx(0.1), cplx(1.0)}), DomainError);
  const NodeSequence s({cplx(0.1), cplx(0.2)});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s[1], cplx(0.2));
}

TEST(Ball, ArithmeticEncloses) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 1000; ++t) {
    const Ball a(cplx(u(rng), u(rng)), 0.1 * std::abs(u(rng)));
    const Ball b(cplx(u(rng), u(rng)) + 2.0, 0.1 * std::abs(u(rng)));
    const cplx x = a.c + a.r * std::polar(std::abs(u(rng)), kTwoPi * u(rng));
    const cplx y = b.c + b.r * std::polar(std::abs(u(rng)), kTwoPi * u(rng));
    auto inside = [](const Ball& ball, cplx v) { return std::abs(v - ball.c) <= ball.r; };
    EXPECT_TRUE(inside(a + b, x + y));
    EXPECT_TRUE(inside(a - b, x - y));
    EXPECT_TRUE(inside(a * b, x * y));
    EXPECT_TRUE(inside(a / b, x / y));
    EXPECT_TRUE(inside(ipow(a, 7), ipow(x, 7)));
  }
}

TEST(Ball, ReciprocalOfBallAroundZeroIsUnbounded) {
  EXPECT_FALSE(reciprocal(Ball(cplx(0.1), 0.2)).finite());
}

TEST(Jet, DerivativesOfRationalFunction) {
  // f(z) = z^3 / (1 - z / 2)
  const cplx z(0.3, 0.2);
  const auto x = Jet<cplx>::variable(z);
  const auto f = ipow(x, 3) / (Jet<cplx>::constant(1.0) - scale(cplx(0.5), x));
  const cplx d = 1.0 - z / 2.0;
  EXPECT_LT(std::abs(f.v - z * z * z / d), 1e-15);
  const cplx f1 = 3.0 * z * z / d + 0.5 * z * z * z / (d * d);
  EXPECT_LT(std::abs(f.d1 - f1), 1e-14);
  const cplx f2 = 6.0 * z / d + 3.0 * z * z / (d * d) + 0.5 * z * z * z / (d * d * d);
  EXPECT_LT(std::abs(f.d2 - f2), 1e-13);
}
