#include "hardy/kernels.hpp"

#include <cmath>
#include <limits>

#include <omp.h>

namespace hardy::kernels {

SegmentBound bound_segment(std::span<const AnalyticFn> fns, const Path& path, Segment s,
                           const SegmentBoundParams& params) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  const double mid = 0.5 * (s.t0 + s.t1);
  const double half = 0.5 * (s.t1 - s.t0);
  const cplx zm = path.point(mid);
  const cplx velocity = path.velocity(mid);
  const Ball disk(zm, path.enclosing_radius(s.t0, s.t1));
  const double speed = path.max_speed();
  const double accel = path.max_acceleration();

  double value = 0.0;
  double slope = 0.0;
  double curvature = 0.0;
  double kinks = 0.0;
  double first_order = 0.0;
  bool unbounded = false;

  for (const auto& f : fns) {
    const Jet<cplx> at = f.jet(zm);
    const double modulus = std::abs(at.v);
    value += modulus;
    const Jet<Ball> over = f.jet(disk);
    const double d1 = over.d1.upper();
    if (!over.v.finite() || !over.d1.finite() || !std::isfinite(d1)) {
      unbounded = true;
      continue;
    }
    first_order += d1 * speed * half;
    if (!over.v.contains_zero() && modulus > 0.0 && over.d2.finite()) {
      // |g| is smooth on the piece: second-order Taylor bound with
      // (|g|)'' <= |g'|^2 / |g| + |g''|, g(t) = f(path(t)).
      slope += std::real(std::conj(at.v) * at.d1 * velocity) / modulus;
      const double d2 = over.d2.upper();
      curvature += d1 * d1 * speed * speed / over.v.lower() + d2 * speed * speed + d1 * accel;
    } else {
      kinks += d1 * speed * half;
    }
  }

  double upper = inf;
  if (!unbounded) {
    const double taylor =
        value + std::abs(slope) * half + params.safety * (0.5 * curvature * half * half + kinks);
    const double lipschitz = value + params.safety * first_order;
    upper = std::min(taylor, lipschitz);
    if (std::isnan(upper)) upper = inf;
    upper += 8.0 * std::numeric_limits<double>::epsilon() * value;
  }
  return {value, upper, mid};
}

void bound_segments_serial(std::span<const AnalyticFn> fns, const Path& path,
                           std::span<const Segment> segments, std::span<SegmentBound> out,
                           const SegmentBoundParams& params) {
  for (std::size_t i = 0; i < segments.size(); ++i)
    out[i] = bound_segment(fns, path, segments[i], params);
}

void bound_segments_omp(std::span<const AnalyticFn> fns, const Path& path,
                        std::span<const Segment> segments, std::span<SegmentBound> out,
                        const SegmentBoundParams& params) {
  const auto n = static_cast<std::ptrdiff_t>(segments.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = bound_segment(fns, path, segments[i], params);
}

void sum_abs_grid_serial(std::span<const AnalyticFn> fns, std::span<const cplx> points,
                         std::span<double> out) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    double s = 0.0;
    for (const auto& f : fns) s += std::abs(f(points[i]));
    out[i] = s;
  }
}

void sum_abs_grid_omp(std::span<const AnalyticFn> fns, std::span<const cplx> points,
                      std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (const auto& f : fns) s += std::abs(f(points[i]));
    out[i] = s;
  }
}

void sum_abs_grid(std::span<const AnalyticFn> fns, std::span<const cplx> points,
                  std::span<double> out, ExecPolicy exec) {
  if (exec == ExecPolicy::parallel)
    sum_abs_grid_omp(fns, points, out);
  else
    sum_abs_grid_serial(fns, points, out);
}

}  // namespace hardy::kernels
