#include <gtest/gtest.h>

#include <random>

#include "hardy/classical.hpp"
#include "oracles.hpp"

using namespace hardy;

TEST(Lacunary, PowersOfTwo) {
  const auto s = lacunary_set(2, 1, 5, 1);
  EXPECT_EQ(s.frequencies, (std::vector<std::int64_t>{1, 2, 4, 8, 16}));
  EXPECT_TRUE(ratio_condition_holds(s));
}

TEST(Lacunary, ThreeHalves) {
  const auto s = lacunary_set(3, 2, 4, 2);
  EXPECT_EQ(s.frequencies, (std::vector<std::int64_t>{2, 3, 5, 8}));
  EXPECT_TRUE(ratio_condition_holds(s));
}

TEST(Lacunary, GreedyAndRatioOnManyRatios) {
  for (const auto& [num, den] : std::vector<std::pair<int, int>>{{5, 4}, {3, 2}, {2, 1}, {7, 3}, {11, 10}})
    for (const std::int64_t first : {1, 3, 10}) {
      const auto s = lacunary_set(num, den, 20, first);
      EXPECT_TRUE(ratio_condition_holds(s));
      for (std::size_t k = 1; k < s.frequencies.size(); ++k) {
        const auto prev = s.frequencies[k - 1], cur = s.frequencies[k];
        EXPECT_GE(cur * den, prev * num);
        EXPECT_LT((cur - 1) * den, prev * num);  // minimal
      }
    }
}

TEST(Lacunary, RejectsBadInputAndOverflow) {
  EXPECT_THROW(lacunary_set(1, 1, 4, 1), DomainError);
  EXPECT_THROW(lacunary_set(3, 2, 4, 0), DomainError);
  EXPECT_THROW(lacunary_set(2, 1, 80, 1), DomainError);
  LacunarySet broken{2, 1, {1, 2, 3}};
  EXPECT_FALSE(ratio_condition_holds(broken));
}

TEST(TrigSup, RefinementNeverLowersTheGridValue) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  const std::vector<std::int64_t> f{1, 3, 7, 15, 31};
  for (int t = 0; t < 50; ++t) {
    std::vector<cplx> a(f.size());
    for (auto& x : a) x = std::polar(1.0, u(rng));
    const auto s = trig_sup(f, a, 512);
    EXPECT_GE(s.sup, s.grid_sup);
    EXPECT_NEAR(s.grid_sup, oracle::trig_grid_sup(f, a, 512), 1e-12);
  }
}

TEST(SidonRatio, TrivialCases) {
  const auto one = lacunary_set(2, 1, 1, 3);
  EXPECT_EQ(sidon_ratio(one, std::vector<cplx>{cplx(0.3, -2.0)}), 1.0);
  const LacunarySet s{2, 1, {1, 2}};
  EXPECT_NEAR(sidon_ratio(s, std::vector<cplx>{cplx(1.0), cplx(1.0)}), 1.0, 1e-12);
  EXPECT_THROW(sidon_ratio(s, std::vector<cplx>{cplx(0.0), cplx(0.0)}), DomainError);
  EXPECT_THROW(sidon_ratio(s, std::vector<cplx>{cplx(1.0)}), DomainError);
}

TEST(SidonRatio, AgreesWithDenseGrid) {
  const auto s = lacunary_set(2, 1, 5, 1);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  for (int t = 0; t < 3; ++t) {
    std::vector<cplx> a(5);
    for (auto& x : a) x = std::polar(1.0, u(rng));
    const double r = sidon_ratio(s, a);
    const double sup = oracle::trig_grid_sup(s.frequencies, a, 10000000);
    EXPECT_NEAR(r, 5.0 / sup, 1e-6);
    EXPECT_GE(r, 1.0);
  }
}

TEST(SidonConstant, SingletonAndMonotoneInTrials) {
  EXPECT_EQ(empirical_sidon_constant(lacunary_set(2, 1, 1, 1), 10, 3).value, 1.0);
  const auto s = lacunary_set(3, 2, 8, 1);
  double previous = 0.0;
  for (const std::size_t trials : {1u, 2u, 4u, 8u, 16u, 32u, 64u}) {
    const auto e = empirical_sidon_constant(s, trials, 5, 1024);
    EXPECT_GE(e.value, previous);
    EXPECT_NEAR(sidon_ratio(s, e.witness, 1024), e.value, 1e-12);
    previous = e.value;
  }
}

TEST(SidonConstant, StableAcrossSeeds) {
  const auto s = lacunary_set(2, 1, 8, 1);
  std::vector<double> values;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) values.push_back(empirical_sidon_constant(s, 500, seed).value);
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  EXPECT_LE(*hi / *lo, 1.05);
  EXPECT_EQ(empirical_sidon_constant(s, 100, 7).value, empirical_sidon_constant(s, 100, 7).value);
}

TEST(ParseRational, Forms) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-6/8"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("12"), Rational(12));
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("abc"), DomainError);
  EXPECT_THROW(parse_rational(""), DomainError);
}

TEST(Cantor, DepthThreeExample) {
  const std::vector<Rational> rho{Rational(1, 4), Rational(1, 16), Rational(1, 64)};
  const auto c = cantor_sequence(0, 1, rho);
  EXPECT_EQ(c.residual, Rational(9, 16));
  EXPECT_EQ(c.residual, oracle::cantor_residual(0, 1, rho));
  ASSERT_EQ(c.intervals.size(), 7u);
  EXPECT_EQ(c.intervals[0].b, Rational(3, 8));
  EXPECT_EQ(c.intervals[0].c, Rational(5, 8));
  EXPECT_EQ(c.intervals[0].x, Rational(1, 2));
}

TEST(Cantor, MidpointSeparationIsHalfTheLength) {
  const auto c = cantor_sequence(0, 1, geometric_schedule(1, 6));
  for (const auto& iv : c.intervals) {
    EXPECT_EQ(iv.separation, c.rho[iv.level - 1] / 2);
    EXPECT_EQ(iv.c - iv.b, c.rho[iv.level - 1]);
    EXPECT_GE(iv.n, std::size_t{1} << (iv.level - 1));
    EXPECT_LT(iv.n, std::size_t{1} << iv.level);
  }
}

TEST(Cantor, IntervalsDisjointAndPointsSeparated) {
  const auto c = cantor_sequence(Rational(1, 3), Rational(2), geometric_schedule(Rational(5, 3), 7), Rational(1, 3));
  auto ivs = c.intervals;
  std::sort(ivs.begin(), ivs.end(), [](const auto& a, const auto& b) { return a.b < b.b; });
  for (std::size_t i = 1; i < ivs.size(); ++i) EXPECT_LT(ivs[i - 1].c, ivs[i].b);
  for (const auto& iv : ivs) {
    EXPECT_GT(iv.x, iv.b);
    EXPECT_LT(iv.x, iv.c);
    EXPECT_EQ(iv.x, iv.b + (iv.c - iv.b) / 3);
  }
  EXPECT_GT(c.min_separation, 0);
  EXPECT_GT(c.min_pairwise, 0);
  EXPECT_EQ(c.boundary_sequence().size(), ivs.size());
}

TEST(Cantor, GeometricResidualClosedForm) {
  for (std::size_t depth = 1; depth <= 12; ++depth) {
    const auto c = cantor_sequence(0, 2, geometric_schedule(2, depth));
    EXPECT_EQ(c.residual, oracle::geometric_residual(2, depth));
    EXPECT_EQ(c.residual, 2 * (Rational(1, 2) + Rational(1, std::int64_t{1} << (depth + 1))));
  }
}

TEST(Cantor, InfeasibleScheduleThrows) {
  EXPECT_THROW(cantor_sequence(0, 1, {Rational(1, 2), Rational(1, 4)}), DomainError);
  EXPECT_THROW(cantor_sequence(1, 0, {Rational(1, 8)}), DomainError);
  EXPECT_THROW(cantor_sequence(0, 1, {Rational(1, 8)}, Rational(0)), DomainError);
}
