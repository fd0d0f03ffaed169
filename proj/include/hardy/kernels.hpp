#pragma once

// Data-parallel inner loops. Each kernel has a serial reference version and
// an OpenMP version; both produce bit-identical output because every output
// slot is written by exactly one iteration.

#include <complex>
#include <span>

#include "hardy/analytic_fn.hpp"
#include "hardy/certify.hpp"

namespace hardy::kernels {

struct Segment {
  double t0;
  double t1;
};

struct SegmentBound {
  double lower;  // objective value at the midpoint
  double upper;  // certified bound over the whole segment
  double mid;
};

struct SegmentBoundParams {
  double safety = 1.25;
};

SegmentBound bound_segment(std::span<const AnalyticFn> fns, const Path& path, Segment s,
                           const SegmentBoundParams& params);

void bound_segments_serial(std::span<const AnalyticFn> fns, const Path& path,
                           std::span<const Segment> segments, std::span<SegmentBound> out,
                           const SegmentBoundParams& params);
void bound_segments_omp(std::span<const AnalyticFn> fns, const Path& path,
                        std::span<const Segment> segments, std::span<SegmentBound> out,
                        const SegmentBoundParams& params);

// out[i] = sum_n |f_n(points[i])|
void sum_abs_grid_serial(std::span<const AnalyticFn> fns, std::span<const cplx> points,
                         std::span<double> out);
void sum_abs_grid_omp(std::span<const AnalyticFn> fns, std::span<const cplx> points,
                      std::span<double> out);

void sum_abs_grid(std::span<const AnalyticFn> fns, std::span<const cplx> points,
                  std::span<double> out, ExecPolicy exec);

}  // namespace hardy::kernels
