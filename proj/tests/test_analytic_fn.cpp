#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "hardy/analytic_fn.hpp"

using namespace hardy;

namespace {

cplx random_point(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(radius * std::sqrt(u(rng)), kTwoPi * u(rng));
}

AnalyticFn sample_tree() {
  const auto g = peak_pow(BoundaryPoint(cplx(0.0, 1.0)), 5);
  const auto k = cauchy_kernel(InteriorPoint(cplx(0.3, -0.4)));
  const auto b = blaschke_factor(InteriorPoint(cplx(-0.2, 0.1)));
  return sum({{cplx(2.0, -1.0), g * k}, {cplx(0.5), power(b, 3)}, {cplx(1.0), constant(cplx(0.1, 0.2))}});
}

cplx sample_direct(cplx z) {
  const cplx a(0.0, 1.0), bk(0.3, -0.4), bb(-0.2, 0.1);
  const cplx g = std::pow((std::conj(a) * z + 1.0) / 2.0, 5);
  const cplx k = (1.0 - std::norm(bk)) / (1.0 - std::conj(bk) * z);
  const cplx b = (bb - z) / (1.0 - std::conj(bb) * z);
  return cplx(2.0, -1.0) * g * k + 0.5 * b * b * b + cplx(0.1, 0.2);
}

}  // namespace

TEST(AnalyticFn, ZeroByDefault) {
  EXPECT_EQ(AnalyticFn()(cplx(0.3, 0.1)), cplx(0.0));
}

TEST(AnalyticFn, LeavesMatchFormulas) {
  const cplx z(0.2, 0.5);
  EXPECT_EQ(constant(cplx(1.5, -2.0))(z), cplx(1.5, -2.0));
  const cplx a = std::polar(1.0, 0.7);
  EXPECT_LT(std::abs(peak_pow(BoundaryPoint(a), 4)(z) - std::pow((std::conj(a) * z + 1.0) / 2.0, 4)), 1e-15);
  EXPECT_DOUBLE_EQ(std::abs(peak_pow(BoundaryPoint(a), 9)(a)), 1.0);
  const cplx b(0.1, 0.6);
  EXPECT_LT(std::abs(cauchy_kernel(InteriorPoint(b))(z) - (1.0 - std::norm(b)) / (1.0 - std::conj(b) * z)), 1e-15);
  EXPECT_LT(std::abs(blaschke_factor(InteriorPoint(b))(b)), 1e-16);
}

TEST(AnalyticFn, TreeMatchesDirectEvaluation) {
  const auto f = sample_tree();
  std::mt19937_64 rng(1);
  for (int t = 0; t < 500; ++t) {
    const cplx z = random_point(rng, 1.0);
    EXPECT_LT(std::abs(f(z) - sample_direct(z)), 1e-13);
  }
}

TEST(AnalyticFn, OperatorsBuildTheExpectedTrees) {
  const auto f = cauchy_kernel(InteriorPoint(cplx(0.5)));
  const auto g = blaschke_factor(InteriorPoint(cplx(0.0, 0.5)));
  const cplx z(0.1, -0.7);
  EXPECT_LT(std::abs((f + g)(z) - (f(z) + g(z))), 1e-15);
  EXPECT_LT(std::abs((f * g)(z) - f(z) * g(z)), 1e-15);
  EXPECT_LT(std::abs((cplx(0, 2) * f)(z) - cplx(0, 2) * f(z)), 1e-15);
  EXPECT_LT(std::abs(power(f, 0)(z) - 1.0), 1e-15);
  EXPECT_LT(std::abs(product({})(z) - 1.0), 1e-15);
  EXPECT_EQ(sum({})(z), cplx(0.0));
}

TEST(AnalyticFn, PointJetMatchesFiniteDifferences) {
  const auto f = sample_tree();
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const cplx z = random_point(rng, 0.9);
    const auto j = f.jet(z);
    const double h = 1e-5;
    const cplx d1 = (f(z + h) - f(z - h)) / (2.0 * h);
    const cplx d2 = (f(z + h) - 2.0 * f(z) + f(z - h)) / (h * h);
    EXPECT_LT(std::abs(j.v - f(z)), 1e-14);
    EXPECT_LT(std::abs(j.d1 - d1), 1e-6 * (1.0 + std::abs(d1)));
    EXPECT_LT(std::abs(j.d2 - d2), 1e-3 * (1.0 + std::abs(d2)));
  }
}

TEST(AnalyticFn, BallJetEnclosesPointJets) {
  const auto f = sample_tree();
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 100; ++t) {
    const cplx c = std::polar(1.0, kTwoPi * u(rng));
    const double r = 0.02 * u(rng);
    const Ball disk(c, r);
    const auto enc = f.jet(disk);
    for (int s = 0; s < 10; ++s) {
      const cplx z = c + r * std::polar(std::sqrt(u(rng)), kTwoPi * u(rng));
      const auto j = f.jet(z);
      EXPECT_LE(std::abs(j.v - enc.v.c), enc.v.r);
      EXPECT_LE(std::abs(j.d1 - enc.d1.c), enc.d1.r);
      EXPECT_LE(std::abs(j.d2 - enc.d2.c), enc.d2.r);
    }
  }
}

TEST(AnalyticFn, PoleModulus) {
  EXPECT_TRUE(std::isinf(peak_pow(BoundaryPoint(cplx(1.0)), 3).min_pole_modulus()));
  EXPECT_NEAR(cauchy_kernel(InteriorPoint(cplx(0.0, 0.5))).min_pole_modulus(), 2.0, 1e-15);
  const auto f = cauchy_kernel(InteriorPoint(cplx(0.25))) * blaschke_factor(InteriorPoint(cplx(0.5)));
  EXPECT_NEAR(f.min_pole_modulus(), 2.0, 1e-15);
}

TEST(AnalyticFn, StructuralEquality) {
  EXPECT_EQ(sample_tree(), sample_tree());
  EXPECT_FALSE(peak_pow(BoundaryPoint(cplx(1.0)), 3) == peak_pow(BoundaryPoint(cplx(1.0)), 4));
}

TEST(SchurChain, ExpandedFormAgreesWithEvaluation) {
  const fn::SchurChain chain{0.8, {cplx(0.1, 0.2), cplx(-0.4, 0.3), cplx(0.5, -0.5)},
                             {cplx(0.3, 0.1), cplx(-0.2, 0.4), cplx(0.1, -0.6)}};
  const auto f = schur_chain(chain.scale, chain.nodes, chain.params);
  const RationalForm rf = expand(chain);
  auto poly = [](const std::vector<cplx>& c, cplx z) {
    cplx s = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) s = s * z + c[k];
    return s;
  };
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    const cplx z = random_point(rng, 1.0);
    EXPECT_LT(std::abs(f(z) - poly(rf.numerator, z) / poly(rf.denominator, z)), 1e-12);
  }
  // a Schur chain with |params| < 1 is bounded by its scale on the disk
  for (int t = 0; t < 200; ++t) EXPECT_LE(std::abs(f(random_point(rng, 1.0))), chain.scale + 1e-12);
  EXPECT_GT(f.min_pole_modulus(), 1.0);
}

TEST(PolynomialRoots, RecoversKnownRoots) {
  // (z - 1)(z - 2)(z + 0.5i) = z^3 + (-3 + 0.5i) z^2 + (2 - 1.5i) z + i
  auto roots = polynomial_roots({cplx(0, 1), cplx(2, -1.5), cplx(-3, 0.5), cplx(1)});
  ASSERT_EQ(roots.size(), 3u);
  std::vector<cplx> expected{cplx(1), cplx(2), cplx(0, -0.5)};
  for (const cplx e : expected) {
    const auto it = std::min_element(roots.begin(), roots.end(),
                                     [&](cplx a, cplx b) { return std::abs(a - e) < std::abs(b - e); });
    EXPECT_LT(std::abs(*it - e), 1e-12);
  }
  EXPECT_EQ(polynomial_roots({cplx(3.0), cplx(0.0)}).size(), 0u);
}
