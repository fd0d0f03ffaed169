#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hardy/analytic_fn.hpp"
#include "hardy/certify.hpp"
#include "hardy/nodes.hpp"

namespace hardy {

struct CarlesonReport {
  double constant = 1.0;
  std::size_t worst_index = 0;
  std::vector<double> per_index;  // prod_{j != k} rho(b_k, b_j)
};

CarlesonReport carleson_constant(const NodeSequence& seq);

struct DualSystem {
  NodeSequence nodes;
  std::vector<AnalyticFn> functions;
  std::vector<cplx> blaschke_at_node;  // B_k(b_k)
  double max_residual = 0.0;           // max |g_k(b_j) - delta_kj|
  SupResult bound;                     // sup sum |g_k|
  CarlesonReport carleson;
};

inline constexpr double kDualResidualTolerance = 1e-9;
inline constexpr double kBlaschkeUnderflow = 1e-14;

// g_k = (1 - |b_k|^2)/(1 - conj(b_k) z) * B_k(z) / B_k(b_k)
std::vector<AnalyticFn> dual_function_trees(const NodeSequence& seq);
DualSystem dual_functions(const NodeSequence& seq, const CertifyOptions& options = {});

// sup over the closed disk of (1 - |b|^2)/|1 - conj(b) z|
double kernel_factor_bound(InteriorPoint b);

struct RadiiOptions {
  int boundary_samples = 128;   // points per inner arc of a cap
  double sample_margin = 0.999; // sampled minima are multiplied by this
  double shrink = 0.9;
  int bisection_steps = 50;
  int max_halvings = 60;
};

struct RadiiResult {
  std::vector<double> d;    // radii of pairwise disjoint closed disks
  std::vector<double> tau;
  std::vector<double> eta;
  std::vector<double> certified_products;  // sampled lower bound of each node's product
  double m = 0.0;
};

// Inductive choice of tau_n so that any b_j in the cap of radius tau_j around
// a_j gives Carleson constant > m, and eta_n <= tau_n with
// (1 - |t|^2)/|1 - conj(t) z| < eps_n for |t - a_n| < eta_n, |z - a_n| >= tau_n.
RadiiResult radii_search(std::span<const cplx> anchors, double m, std::span<const double> eps,
                         const RadiiOptions& options = {});

// Lower bound (sampled) on rho(t, s) for t, s in the caps around a and b.
double cap_pair_min(cplx a, double ta, cplx b, double tb, int samples);

struct RadiiValidation {
  std::size_t trials = 0;
  std::size_t failures = 0;
  double min_constant = 1.0;
};

// Random selections b_j in the caps (half uniform, half on the inner arcs).
RadiiValidation validate_radii(std::span<const cplx> anchors, std::span<const double> radii,
                               double m, std::size_t trials, std::uint64_t seed);

}  // namespace hardy
