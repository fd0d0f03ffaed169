#include "hardy/drury.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hardy/pick.hpp"

namespace hardy {

namespace {

// exp(2 pi i r / n), exact at quarter turns
cplx root_power(std::size_t r, std::size_t n) {
  r %= n;
  if ((4 * r) % n == 0) {
    switch ((4 * r) / n) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, kTwoPi * static_cast<double>(r) / static_cast<double>(n));
}

}  // namespace

std::vector<cplx> roots_of_unity_targets(std::size_t n, std::size_t k) {
  if (n == 0 || k < 1 || k > n) throw DomainError("roots of unity: need 1 <= k <= n");
  std::vector<cplx> out(n);
  for (std::size_t j = 1; j <= n; ++j) out[j - 1] = root_power(k * j, n);
  return out;
}

DruryOutput construct_beta(const NodeSequence& nodes, double slack,
                           const CertifyOptions& options) {
  if (nodes.empty()) throw DomainError("construction needs at least one node");
  if (!(slack > 1.0)) throw DomainError("slack must exceed 1");
  const std::size_t n = nodes.size();

  DruryOutput out;
  out.nodes = nodes;
  out.slack = slack;
  std::vector<PickProblem> problems;
  for (std::size_t k = 1; k <= n; ++k) {
    problems.emplace_back(nodes, roots_of_unity_targets(n, k));
    out.minimal_norms.push_back(minimal_norm(problems.back()));
  }
  out.M_used = slack * *std::max_element(out.minimal_norms.begin(), out.minimal_norms.end());
  for (const auto& p : problems) out.v.push_back(solve(p, out.M_used));

  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t j = 1; j <= n; ++j) {
    std::vector<fn::Term> terms;
    for (std::size_t k = 1; k <= n; ++k)
      terms.push_back({inv_n * root_power(n - (k * j) % n, n), out.v[k - 1]});
    out.phi.push_back(sum(std::move(terms)));
    out.beta.push_back(power(out.phi.back(), 2));
  }

  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l) {
      const cplx want = j == l ? 1.0 : 0.0;
      out.biorthogonality_residual =
          std::max(out.biorthogonality_residual, std::abs(out.beta[j](nodes[l]) - want));
    }
  if (!(out.biorthogonality_residual < kBiorthogonalityTolerance)) {
    std::ostringstream msg;
    msg << "beta_j(b_l) misses delta_jl by " << out.biorthogonality_residual;
    throw ClaimViolation(msg.str());
  }

  out.bound = sup_abs_sum(out.beta, options);
  const double cap = out.M_used * out.M_used * slack * slack;
  if (out.bound.bound.upper() > cap) {
    std::ostringstream msg;
    msg << "certified sup of sum |beta_j| = " << out.bound.bound.upper()
        << " exceeds M^2 slack^2 = " << cap;
    throw ClaimViolation(msg.str());
  }
  return out;
}

double plancherel_residual(const DruryOutput& out, ClosedPoint z) {
  double lhs = 0.0;
  for (const auto& p : out.phi) lhs += std::norm(p(z.value()));
  double rhs = 0.0;
  for (const auto& v : out.v) rhs += std::norm(v(z.value()));
  rhs /= static_cast<double>(out.v.size());
  return std::abs(lhs - rhs);
}

}  // namespace hardy
