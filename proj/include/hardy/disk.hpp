#pragma once

#include <complex>
#include <span>
#include <vector>

#include "hardy/errors.hpp"

namespace hardy {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Points of the circle are accepted when ||z| - 1| stays below this.
inline constexpr double kBoundaryTolerance = 1e-12;

enum class DiskRole { interior, closed, boundary };

// A complex number tagged with the part of the disk it is allowed to live in.
// The role is checked once, on construction.
template <DiskRole Role>
class DiskPoint {
 public:
  explicit DiskPoint(cplx z) : z_(z) {
    const double r = std::abs(z);
    if (!std::isfinite(r)) throw DomainError("disk point is not finite");
    if constexpr (Role == DiskRole::interior) {
      if (!(r < 1.0)) throw DomainError("interior disk point must satisfy |z| < 1");
    } else if constexpr (Role == DiskRole::closed) {
      if (!(r <= 1.0 + kBoundaryTolerance))
        throw DomainError("closed disk point must satisfy |z| <= 1");
    } else {
      if (!(std::abs(r - 1.0) <= kBoundaryTolerance))
        throw DomainError("boundary point must satisfy |z| = 1");
    }
  }

  static DiskPoint at_angle(double theta)
    requires(Role == DiskRole::boundary)
  {
    return DiskPoint(std::polar(1.0, theta));
  }

  cplx value() const noexcept { return z_; }
  double modulus() const noexcept { return std::abs(z_); }

  friend bool operator==(const DiskPoint&, const DiskPoint&) = default;

 private:
  cplx z_;
};

using InteriorPoint = DiskPoint<DiskRole::interior>;
using ClosedPoint = DiskPoint<DiskRole::closed>;
using BoundaryPoint = DiskPoint<DiskRole::boundary>;

std::vector<InteriorPoint> interior_points(std::span<const cplx> zs);

// |a - b| / |1 - conj(a) b|
double pseudo_hyperbolic(InteriorPoint a, InteriorPoint b);

// Unchecked form used by inner loops that already validated their inputs.
inline double pseudo_hyperbolic_unchecked(cplx a, cplx b) {
  return std::abs(a - b) / std::abs(1.0 - std::conj(a) * b);
}

// prod_n (b_n - z) / (1 - conj(b_n) z), a finite Blaschke product.
cplx blaschke_eval(std::span<const InteriorPoint> zeros, ClosedPoint z);

// (1 - |lambda|^2) / |1 - conj(lambda) z|^2 for z on the circle.
double poisson_kernel(InteriorPoint lambda, BoundaryPoint z);

}  // namespace hardy
