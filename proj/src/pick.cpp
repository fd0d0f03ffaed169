#include "hardy/pick.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hardy {

PickProblem::PickProblem(NodeSequence n, std::vector<cplx> w, std::optional<double> m)
    : nodes(std::move(n)), targets(std::move(w)), cap(m) {
  if (nodes.size() != targets.size()) throw DomainError("Pick problem: nodes and targets differ in length");
  if (nodes.empty()) throw DomainError("Pick problem needs at least one node");
  for (const cplx& t : targets)
    if (!std::isfinite(t.real()) || !std::isfinite(t.imag()))
      throw DomainError("Pick problem: targets must be finite");
  if (cap && !(*cap > 0.0)) throw DomainError("Pick problem: cap must be positive");
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (pseudo_hyperbolic_unchecked(nodes[i], nodes[j]) < kMinNodeSeparation) {
        std::ostringstream msg;
        msg << "Pick problem: nodes " << j << " and " << i << " are nearly coincident";
        throw DomainError(msg.str());
      }
}

Eigen::MatrixXcd pick_matrix(const PickProblem& problem, double M) {
  const auto n = static_cast<Eigen::Index>(problem.nodes.size());
  Eigen::MatrixXcd P(n, n);
  const double M2 = M * M;
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) {
      const cplx bj = problem.nodes[static_cast<std::size_t>(j)];
      const cplx bk = problem.nodes[static_cast<std::size_t>(k)];
      const cplx wj = problem.targets[static_cast<std::size_t>(j)];
      const cplx wk = problem.targets[static_cast<std::size_t>(k)];
      P(j, k) = (M2 - wj * std::conj(wk)) / (1.0 - bj * std::conj(bk));
    }
  return P;
}

double smallest_eigenvalue(const Eigen::MatrixXcd& hermitian) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

double minimal_norm(const PickProblem& problem, double relative_tol) {
  double wmax = 0.0;
  for (const cplx& w : problem.targets) wmax = std::max(wmax, std::abs(w));
  if (wmax == 0.0) return 0.0;
  if (problem.nodes.size() == 1) return wmax;

  auto pd = [&](double M) { return smallest_eigenvalue(pick_matrix(problem, M)) > 0.0; };
  double lo = wmax;
  double hi = 2.0 * wmax;
  while (!pd(hi)) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi)) throw CertificationError("minimal norm search diverged");
  }
  for (int it = 0; it < 400 && hi - lo > relative_tol * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (pd(mid) ? hi : lo) = mid;
  }
  return hi;
}

Feasibility pick_feasible(const PickProblem& problem) {
  if (!problem.cap) throw DomainError("feasibility test needs a norm cap");
  const Eigen::MatrixXcd P = pick_matrix(problem, *problem.cap);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(P);
  Feasibility f;
  f.min_eigenvalue = es.eigenvalues()(0);
  f.certificate = es.eigenvectors().col(0);
  f.threshold = -1e-12 * std::max(1.0, P.cwiseAbs().maxCoeff());
  f.feasible = f.min_eigenvalue >= f.threshold;
  return f;
}

AnalyticFn solve(const PickProblem& problem, double M) {
  if (!(M > 0.0) || !std::isfinite(M)) throw DomainError("norm bound must be positive");
  const std::size_t n = problem.nodes.size();
  std::vector<cplx> u(problem.targets);
  for (cplx& x : u) x /= M;
  std::vector<cplx> nodes(problem.nodes.values().begin(), problem.nodes.values().end());
  std::vector<cplx> params(n);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx g = u[i];
    if (!(std::abs(g) < 1.0)) {
      std::ostringstream msg;
      msg << "Pick problem infeasible at M = " << M << ": Schur parameter " << i
          << " has modulus " << std::abs(g);
      throw InfeasibleError(msg.str(), smallest_eigenvalue(pick_matrix(problem, M)));
    }
    params[i] = g;
    const cplx b = nodes[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx phi = (b - nodes[j]) / (1.0 - std::conj(b) * nodes[j]);
      u[j] = (u[j] - g) / (1.0 - std::conj(g) * u[j]) / phi;
    }
  }
  AnalyticFn f = schur_chain(M, std::move(nodes), std::move(params));
  if (!(f.min_pole_modulus() > 1.0))
    throw CertificationError("Schur unwinding produced a pole in the closed disk");
  const double res = interpolation_residual(problem, f);
  if (!(res < kInterpolationTolerance)) {
    std::ostringstream msg;
    msg << "Pick interpolant misses its targets: residual " << res;
    throw ClaimViolation(msg.str());
  }
  return f;
}

double interpolation_residual(const PickProblem& problem, const AnalyticFn& f) {
  double r = 0.0;
  for (std::size_t j = 0; j < problem.nodes.size(); ++j)
    r = std::max(r, std::abs(f(problem.nodes[j]) - problem.targets[j]));
  return r;
}

PickSolution solve_and_certify(const PickProblem& problem, std::optional<double> M, double slack,
                               const CertifyOptions& options) {
  PickSolution s;
  s.minimal = minimal_norm(problem);
  if (M) {
    PickProblem capped = problem;
    capped.cap = *M;
    const Feasibility f = pick_feasible(capped);
    if (!f.feasible) {
      std::ostringstream msg;
      msg << "Pick matrix at M = " << *M << " has eigenvalue " << f.min_eigenvalue
          << " (minimal norm " << s.minimal << ")";
      throw InfeasibleError(msg.str(), f.min_eigenvalue);
    }
    s.M = *M;
  } else {
    s.M = s.minimal > 0.0 ? slack * s.minimal : 1.0;
  }
  s.f = solve(problem, s.M);
  s.residual = interpolation_residual(problem, s.f);
  CertifyOptions local = options;
  local.tol = std::min(options.tol, 0.5e-6 * s.M);
  s.sup = sup_norm_boundary(s.f, local);
  s.within_bound = s.sup.upper() <= s.M * (1.0 + 1e-6);
  return s;
}

}  // namespace hardy
