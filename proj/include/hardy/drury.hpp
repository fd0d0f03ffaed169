#pragma once

#include <cstddef>
#include <vector>

#include "hardy/analytic_fn.hpp"
#include "hardy/certify.hpp"
#include "hardy/nodes.hpp"

namespace hardy {

inline constexpr double kBiorthogonalityTolerance = 1e-8;

// (lambda^{k j})_{j = 1..n} with lambda = exp(2 pi i / n)
std::vector<cplx> roots_of_unity_targets(std::size_t n, std::size_t k);

struct DruryOutput {
  NodeSequence nodes;
  double slack = 1.0;
  std::vector<double> minimal_norms;  // M*_k of the n Pick problems
  double M_used = 0.0;
  std::vector<AnalyticFn> v;
  std::vector<AnalyticFn> phi;
  std::vector<AnalyticFn> beta;
  double biorthogonality_residual = 0.0;  // max |beta_j(b_l) - delta_jl|
  SupResult bound;                        // sup sum |beta_j|
};

DruryOutput construct_beta(const NodeSequence& nodes, double slack = 1.01,
                           const CertifyOptions& options = {});

// | sum_j |phi_j(z)|^2 - (1/n) sum_k |v_k(z)|^2 |
double plancherel_residual(const DruryOutput& out, ClosedPoint z);

}  // namespace hardy
