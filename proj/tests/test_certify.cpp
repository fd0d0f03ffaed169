#include <gtest/gtest.h>

#include <random>

#include "hardy/certify.hpp"
#include "hardy/kernels.hpp"
#include "hardy/parallel.hpp"
#include "oracles.hpp"

using namespace hardy;

namespace {

std::vector<AnalyticFn> corpus() {
  return {
      blaschke_factor(InteriorPoint(cplx(0.3, 0.2))),
      cauchy_kernel(InteriorPoint(cplx(0.0, 0.9))),
      peak_pow(BoundaryPoint(std::polar(1.0, 2.0)), 40),
      cplx(0.5, 0.5) * cauchy_kernel(InteriorPoint(cplx(-0.7))) + power(blaschke_factor(InteriorPoint(cplx(0.5))), 4),
      schur_chain(0.9, {cplx(0.2), cplx(0.0, 0.6)}, {cplx(0.4, 0.1), cplx(-0.5)}),
  };
}

}  // namespace

TEST(Certify, SingleBlaschkeFactorHasSupOne) {
  const auto b = sup_norm_boundary(blaschke_factor(InteriorPoint(cplx(0.4, -0.1))));
  EXPECT_LE(b.lower(), 1.0 + 1e-12);
  EXPECT_GE(b.upper(), 1.0 - 1e-12);
  EXPECT_LE(b.radius, 1e-6);
}

TEST(Certify, EmptySumIsZero) {
  const auto r = sup_abs_sum({});
  EXPECT_EQ(r.bound.estimate, 0.0);
  EXPECT_EQ(r.bound.radius, 0.0);
}

TEST(Certify, TwoCauchyKernelsAgainstDenseGrid) {
  const std::vector<AnalyticFn> fns{cauchy_kernel(InteriorPoint(cplx(0.5))), cauchy_kernel(InteriorPoint(cplx(-0.5)))};
  const auto r = sup_abs_sum(fns);
  const std::vector<cplx> b{cplx(0.5), cplx(-0.5)};
  const auto grid = oracle::circle_grid_max([&](double t) { return oracle::cauchy_sum_abs(b, std::polar(1.0, t)); }, 1000000);
  EXPECT_LE(grid.value, r.bound.upper());
  EXPECT_GE(grid.value, r.bound.lower() - 1e-9);
  EXPECT_LE(r.bound.radius, 1e-6);
}

TEST(Certify, BoundDominatesRandomBoundaryValues) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  for (const auto& f : corpus()) {
    const auto b = sup_norm_boundary(f);
    for (int t = 0; t < 1000; ++t) EXPECT_LE(std::abs(f(std::polar(1.0, angle(rng)))), b.upper());
  }
}

TEST(Certify, AppendingAFunctionNeverLowersTheBound) {
  const auto fns = corpus();
  double previous = 0.0;
  for (std::size_t n = 1; n <= fns.size(); ++n) {
    const auto r = sup_abs_sum(std::span(fns).first(n));
    EXPECT_GE(r.bound.lower(), previous - 1e-12) << n;
    previous = r.bound.lower();
  }
}

TEST(Certify, ArgmaxAttainsTheEstimate) {
  const auto fns = corpus();
  const auto r = sup_abs_sum(fns);
  double at = 0.0;
  for (const auto& f : fns) at += std::abs(f(r.argmax));
  EXPECT_NEAR(at, r.bound.estimate, r.bound.radius + 1e-12);
  EXPECT_NE(r.bound.method.find("adaptive"), std::string::npos);
}

TEST(Certify, SegmentPath) {
  // |z^3| along [0, 0.9 i] peaks at the far end
  const auto f = power(blaschke_factor(InteriorPoint(cplx(0.0))), 3);
  const std::vector<AnalyticFn> fns{f};
  const auto r = maximize_sum_abs(fns, Path::segment(cplx(0.0), cplx(0.0, 0.9)));
  EXPECT_NEAR(r.bound.estimate, 0.729, 1e-6);
  EXPECT_LT(std::abs(r.argmax - cplx(0.0, 0.9)), 1e-3);
}

TEST(Certify, ExhaustedBudgetThrows) {
  CertifyOptions o;
  o.tol = 1e-15;
  o.budget = 600;
  o.initial_segments = 512;
  EXPECT_THROW(sup_norm_boundary(peak_pow(BoundaryPoint(cplx(1.0)), 200), o), CertificationError);
}

TEST(Certify, SerialAndParallelAgree) {
  const auto fns = corpus();
  CertifyOptions s, p;
  s.exec = ExecPolicy::serial;
  p.exec = ExecPolicy::parallel;
  const auto a = sup_abs_sum(fns, s), b = sup_abs_sum(fns, p);
  EXPECT_EQ(a.bound.estimate, b.bound.estimate);
  EXPECT_EQ(a.bound.radius, b.bound.radius);
}

TEST(Kernels, SerialAndOpenMpAreBitIdentical) {
  const auto fns = corpus();
  std::vector<cplx> pts;
  for (int k = 0; k < 3000; ++k) pts.push_back(std::polar(0.3 + 0.7 * (k % 7) / 6.0, 0.01 * k));
  std::vector<double> a(pts.size()), b(pts.size());
  kernels::sum_abs_grid_serial(fns, pts, a);
  kernels::sum_abs_grid_omp(fns, pts, b);
  EXPECT_EQ(a, b);

  const Path path = Path::arc(0.0, kTwoPi);
  std::vector<kernels::Segment> segs;
  for (int k = 0; k < 1000; ++k) segs.push_back({kTwoPi * k / 1000.0, kTwoPi * (k + 1) / 1000.0});
  std::vector<kernels::SegmentBound> x(segs.size()), y(segs.size());
  kernels::bound_segments_serial(fns, path, segs, x, {});
  kernels::bound_segments_omp(fns, path, segs, y, {});
  for (std::size_t i = 0; i < segs.size(); ++i) {
    EXPECT_EQ(x[i].lower, y[i].lower);
    EXPECT_EQ(x[i].upper, y[i].upper);
    EXPECT_LE(x[i].lower, x[i].upper);
  }
}

TEST(Kernels, SegmentUpperBoundDominatesInteriorSamples) {
  const auto fns = corpus();
  const Path path = Path::arc(0.0, kTwoPi);
  for (int k = 0; k < 200; ++k) {
    const kernels::Segment s{kTwoPi * k / 200.0, kTwoPi * (k + 1) / 200.0};
    const auto b = kernels::bound_segment(fns, path, s, {});
    for (int j = 0; j <= 20; ++j) {
      const double t = s.t0 + (s.t1 - s.t0) * j / 20.0;
      double v = 0.0;
      for (const auto& f : fns) v += std::abs(f(path.point(t)));
      EXPECT_LE(v, b.upper);
    }
  }
}

TEST(Parallel, ThreadCapFromEnvironment) {
  setenv("HARDY_INTERP_THREADS", "1", 1);
  EXPECT_EQ(apply_thread_cap_from_env(), std::optional<int>(1));
  EXPECT_EQ(max_threads(), 1);
  setenv("HARDY_INTERP_THREADS", "zero", 1);
  EXPECT_EQ(apply_thread_cap_from_env(), std::nullopt);
  unsetenv("HARDY_INTERP_THREADS");
}
