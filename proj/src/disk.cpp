#include "hardy/disk.hpp"

namespace hardy {

std::vector<InteriorPoint> interior_points(std::span<const cplx> zs) {
  std::vector<InteriorPoint> out;
  out.reserve(zs.size());
  for (cplx z : zs) out.emplace_back(z);
  return out;
}

double pseudo_hyperbolic(InteriorPoint a, InteriorPoint b) {
  return pseudo_hyperbolic_unchecked(a.value(), b.value());
}

cplx blaschke_eval(std::span<const InteriorPoint> zeros, ClosedPoint z) {
  cplx product = 1.0;
  const cplx w = z.value();
  for (const auto& zero : zeros) {
    const cplx b = zero.value();
    product *= (b - w) / (1.0 - std::conj(b) * w);
  }
  return product;
}

double poisson_kernel(InteriorPoint lambda, BoundaryPoint z) {
  const cplx l = lambda.value();
  const double denom = std::norm(1.0 - std::conj(l) * z.value());
  return (1.0 - std::norm(l)) / denom;
}

}  // namespace hardy
