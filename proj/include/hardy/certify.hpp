#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hardy/analytic_fn.hpp"

namespace hardy {

enum class ExecPolicy { serial, parallel };

struct CertifyOptions {
  double tol = 1e-6;
  std::size_t budget = std::size_t{1} << 20;  // segment evaluations
  double safety = 1.25;                       // multiplies every derivative bound
  std::size_t initial_segments = 512;
  ExecPolicy exec = ExecPolicy::parallel;
};

struct CertifiedBound {
  double estimate = 0.0;
  double radius = 0.0;
  std::string method;

  double lower() const noexcept { return estimate - radius; }
  double upper() const noexcept { return estimate + radius; }
};

struct SupResult {
  CertifiedBound bound;
  cplx argmax{};
  double argmax_parameter = 0.0;
  std::size_t segments = 0;
};

// A parametrized curve piece inside the closed disk: either an arc of the
// unit circle parametrized by angle, or a straight segment on t in [0, 1].
class Path {
 public:
  static Path arc(double theta_begin, double theta_end);
  static Path segment(cplx from, cplx to);

  double begin() const noexcept { return t0_; }
  double end() const noexcept { return t1_; }

  cplx point(double t) const;
  cplx velocity(double t) const;
  cplx acceleration(double t) const;
  // Every point of the piece [t0, t1] lies within this distance of point(mid).
  double enclosing_radius(double t0, double t1) const;
  double max_speed() const noexcept;
  double max_acceleration() const noexcept;

 private:
  enum class Kind { arc, segment };
  Kind kind_ = Kind::arc;
  double t0_ = 0.0;
  double t1_ = 0.0;
  cplx from_{};
  cplx to_{};
};

// Certified maximum of sum_n |f_n| along a path, by branch and bound over
// subsegments. Each subsegment gets an upper bound from ball-arithmetic
// enclosures of f_n' and f_n'' over a disk covering it.
SupResult maximize_sum_abs(std::span<const AnalyticFn> fns, const Path& path,
                           const CertifyOptions& options = {});

// sup over the closed disk of |f|; by the maximum principle this is the sup
// over the circle.
CertifiedBound sup_norm_boundary(const AnalyticFn& f, const CertifyOptions& options = {});

// sup over the closed disk of sum_n |f_n|; each |f_n| is subharmonic so the
// circle suffices.
SupResult sup_abs_sum(std::span<const AnalyticFn> fns, const CertifyOptions& options = {});

}  // namespace hardy
