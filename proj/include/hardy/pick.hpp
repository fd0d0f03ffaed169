#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "hardy/analytic_fn.hpp"
#include "hardy/certify.hpp"
#include "hardy/nodes.hpp"

namespace hardy {

inline constexpr double kInterpolationTolerance = 1e-9;
inline constexpr double kMinNodeSeparation = 1e-8;  // pseudo-hyperbolic

struct PickProblem {
  NodeSequence nodes;
  std::vector<cplx> targets;
  std::optional<double> cap;

  PickProblem() = default;
  PickProblem(NodeSequence n, std::vector<cplx> w, std::optional<double> m = std::nullopt);
};

// (M^2 - w_j conj(w_k)) / (1 - b_j conj(b_k))
Eigen::MatrixXcd pick_matrix(const PickProblem& problem, double M);

double smallest_eigenvalue(const Eigen::MatrixXcd& hermitian);

// Least M with a positive semidefinite Pick matrix, by bisection.
double minimal_norm(const PickProblem& problem, double relative_tol = 1e-12);

struct Feasibility {
  bool feasible = false;
  double min_eigenvalue = 0.0;
  double threshold = 0.0;
  Eigen::VectorXcd certificate;  // eigenvector of the smallest eigenvalue
};

Feasibility pick_feasible(const PickProblem& problem);

// Schur recursion at norm bound M; the result is a SchurChain tree.
AnalyticFn solve(const PickProblem& problem, double M);

double interpolation_residual(const PickProblem& problem, const AnalyticFn& f);

struct PickSolution {
  AnalyticFn f;
  double minimal = 0.0;
  double M = 0.0;
  double residual = 0.0;
  CertifiedBound sup;
  bool within_bound = false;  // sup.upper() <= M (1 + 1e-6)
};

// solve, residual check and certified sup in one call; M defaults to
// slack * minimal_norm.
PickSolution solve_and_certify(const PickProblem& problem, std::optional<double> M,
                               double slack = 1.01, const CertifyOptions& options = {});

}  // namespace hardy
