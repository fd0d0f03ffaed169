#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "hardy/carleson.hpp"
#include "oracles.hpp"

using namespace hardy;

TEST(CarlesonConstant, ThreeNodeExample) {
  const NodeSequence s({cplx(0.0), cplx(0.5), cplx(-0.5)});
  const auto r = carleson_constant(s);
  EXPECT_NEAR(r.constant, 0.25, 1e-15);
  EXPECT_EQ(r.worst_index, 0u);
  ASSERT_EQ(r.per_index.size(), 3u);
  EXPECT_NEAR(r.per_index[1], 0.5 * 0.8, 1e-15);
}

TEST(CarlesonConstant, SingleNodeIsOne) {
  EXPECT_EQ(carleson_constant(NodeSequence({cplx(0.3, 0.3)})).constant, 1.0);
  EXPECT_THROW(carleson_constant(NodeSequence()), DomainError);
}

TEST(CarlesonConstant, MatchesOracleAndStaysInUnitInterval) {
  fixtures::Rng rng(8);
  for (int t = 0; t < 200; ++t) {
    std::uniform_int_distribution<int> n(1, 12);
    const auto z = fixtures::random_nodes(rng, static_cast<std::size_t>(n(rng)), 0.95, 0.0);
    const auto r = carleson_constant(NodeSequence(z));
    EXPECT_NEAR(r.constant, oracle::carleson_min(z), 1e-14);
    EXPECT_GE(r.constant, 0.0);
    EXPECT_LE(r.constant, 1.0);
    EXPECT_EQ(r.constant, *std::min_element(r.per_index.begin(), r.per_index.end()));
    for (std::size_t k = 0; k < z.size(); ++k) EXPECT_NEAR(r.per_index[k], oracle::carleson_product(z, k), 1e-14);
  }
}

TEST(DualFunctions, InterpolateTheKroneckerDelta) {
  fixtures::Rng rng(9);
  for (int t = 0; t < 30; ++t) {
    std::uniform_int_distribution<int> n(1, 10);
    const auto z = fixtures::random_nodes(rng, static_cast<std::size_t>(n(rng)), 0.9, 0.1);
    const auto trees = dual_function_trees(NodeSequence(z));
    double worst = 0.0;
    for (std::size_t k = 0; k < z.size(); ++k)
      for (std::size_t j = 0; j < z.size(); ++j)
        worst = std::max(worst, std::abs(trees[k](z[j]) - (k == j ? 1.0 : 0.0)));
    EXPECT_LT(worst, 1e-9);
    // tree agrees with the raw formula away from the nodes
    for (std::size_t k = 0; k < z.size(); ++k)
      EXPECT_LT(std::abs(trees[k](cplx(0.1, -0.77)) - oracle::carleson_dual(z, k, cplx(0.1, -0.77))), 1e-10);
  }
}

TEST(DualFunctions, CertifiedBoundAndOffDiskSmallness) {
  const std::vector<cplx> z{cplx(0.0), cplx(0.5), cplx(-0.5)};
  const DualSystem d = dual_functions(NodeSequence(z));
  EXPECT_LT(d.max_residual, kDualResidualTolerance);
  const auto grid = oracle::circle_grid_max(
      [&](double t) {
        double s = 0.0;
        for (std::size_t k = 0; k < 3; ++k) s += std::abs(oracle::carleson_dual(z, k, std::polar(1.0, t)));
        return s;
      },
      100000);
  EXPECT_LE(grid.value, d.bound.bound.upper());
  EXPECT_GE(grid.value, d.bound.bound.lower() - 1e-6);
  // each g_k is bounded by kernel_factor_bound / carleson constant
  double cap = 0.0;
  for (const cplx b : z) cap += kernel_factor_bound(InteriorPoint(b));
  EXPECT_LE(d.bound.bound.lower(), cap / d.carleson.constant);
}

TEST(DualFunctions, KernelFactorBound) {
  EXPECT_NEAR(kernel_factor_bound(InteriorPoint(cplx(0.5))), 1.5, 1e-15);
  EXPECT_NEAR(kernel_factor_bound(InteriorPoint(cplx(0.0))), 1.0, 1e-15);
}

TEST(Radii, SingleAnchor) {
  const std::vector<cplx> a{cplx(1.0)};
  const std::vector<double> eps{0.1};
  const auto r = radii_search(a, 0.5, eps);
  ASSERT_EQ(r.tau.size(), 1u);
  EXPECT_GT(r.tau[0], 0.0);
  EXPECT_LE(r.eta[0], r.tau[0]);
}

TEST(Radii, TwoAntipodalAnchorsValidate) {
  const std::vector<cplx> a{cplx(1.0), cplx(-1.0)};
  const std::vector<double> eps{0.1, 0.1};
  const auto r = radii_search(a, 0.5, eps);
  const auto v = validate_radii(a, r.tau, 0.5, 10000, 17);
  EXPECT_EQ(v.trials, 10000u);
  EXPECT_EQ(v.failures, 0u);
  EXPECT_GT(v.min_constant, 0.5);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_LE(r.eta[i], r.tau[i]);
    EXPECT_LE(r.tau[i], r.d[i]);
  }
  EXPECT_LE(r.tau[0] + r.tau[1], 2.0);
}

TEST(Radii, KernelBudgetHoldsOutsideTheCap) {
  const std::vector<cplx> a{cplx(1.0), std::polar(1.0, 2.0), std::polar(1.0, 4.0)};
  const std::vector<double> eps{0.05, 0.05, 0.05};
  const auto r = radii_search(a, 0.3, eps);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t n = 0; n < a.size(); ++n)
    for (int t = 0; t < 2000; ++t) {
      const cplx tpt = a[n] + r.eta[n] * std::sqrt(u(rng)) * std::polar(1.0, kTwoPi * u(rng));
      if (std::abs(tpt) >= 1.0 - 1e-12) continue;
      const cplx z = std::polar(std::sqrt(u(rng)), kTwoPi * u(rng));
      if (std::abs(z - a[n]) < r.tau[n]) continue;
      EXPECT_LT((1.0 - std::norm(tpt)) / std::abs(1.0 - std::conj(tpt) * z), eps[n]);
    }
}

TEST(Radii, LargerMNeverEnlargesTau) {
  const std::vector<cplx> a{cplx(1.0), cplx(0.0, 1.0), cplx(-1.0)};
  const std::vector<double> eps{0.01, 0.01, 0.01};
  std::vector<double> previous(3, 10.0);
  for (const double m : {0.1, 0.3, 0.5, 0.7}) {
    const auto r = radii_search(a, m, eps);
    for (std::size_t n = 0; n < 3; ++n) EXPECT_LE(r.tau[n], previous[n] * (1.0 + 1e-12)) << m;
    previous = r.tau;
  }
}

TEST(Radii, InputValidation) {
  const std::vector<cplx> a{cplx(1.0), cplx(-1.0)};
  EXPECT_THROW(radii_search(a, 1.0, std::vector<double>{0.1, 0.1}), DomainError);
  EXPECT_THROW(radii_search(a, 0.5, std::vector<double>{0.1}), DomainError);
  EXPECT_THROW(radii_search(a, 0.5, std::vector<double>{0.3, 0.3}), DomainError);
  EXPECT_THROW(radii_search(std::vector<cplx>{cplx(1.0), cplx(1.0)}, 0.5, std::vector<double>{0.1, 0.1}), DomainError);
}

TEST(Radii, DualSumsOffAndInsideThePerturbationDisks) {
  const std::vector<cplx> a{cplx(1.0), std::polar(1.0, 1.9), std::polar(1.0, 3.5), std::polar(1.0, 5.0)};
  const std::vector<double> eps{0.02, 0.03, 0.01, 0.02};
  const double m = 0.4;
  const auto r = radii_search(a, m, eps);
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double eps_sum = std::accumulate(eps.begin(), eps.end(), 0.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<cplx> b;
    for (std::size_t j = 0; j < a.size(); ++j) {
      cplx t;
      do t = a[j] + r.eta[j] * std::sqrt(u(rng)) * std::polar(1.0, kTwoPi * u(rng));
      while (std::abs(t) > 1.0 - 1e-12);
      b.push_back(t);
    }
    const NodeSequence nodes(b);
    ASSERT_GT(carleson_constant(nodes).constant, m);
    const auto g = dual_function_trees(nodes);
    for (int s = 0; s < 2000; ++s) {
      cplx z = std::polar(std::sqrt(u(rng)), kTwoPi * u(rng));
      if (s % 2) {
        const std::size_t k = static_cast<std::size_t>(s / 2) % a.size();
        z = a[k] + r.tau[k] * std::sqrt(u(rng)) * std::polar(1.0, kTwoPi * u(rng));
        if (std::abs(z) > 1.0) z /= std::abs(z);
      }
      double total = 0.0;
      for (const auto& f : g) total += std::abs(f(z));
      std::size_t inside = a.size();
      for (std::size_t k = 0; k < a.size(); ++k)
        if (std::abs(z - a[k]) < r.tau[k]) inside = k;
      if (inside == a.size()) {
        EXPECT_LT(total, eps_sum / m + 1e-12);
      } else {
        EXPECT_LE(total, (eps_sum - eps[inside]) / m + 2.0 / m + 1e-12);
      }
    }
  }
}
