#pragma once

// Brute-force reference computations. Nothing here goes through AnalyticFn
// trees or the certifier: every value is recomputed from its raw formula.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

namespace hardy::oracle {

using cplx = std::complex<double>;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr double kPi = 3.14159265358979323846;

struct GridMax {
  double value = 0.0;
  double angle = 0.0;
};

// max of f(theta) over theta_k = 2 pi k / n
template <class F>
GridMax circle_grid_max(F&& f, std::size_t n) {
  GridMax best{-1.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) {
    const double t = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
    const double v = f(t);
    if (v > best.value) best = {v, t};
  }
  return best;
}

// sum_n |((conj(a_n) z + 1) / 2)^{q_n}|
double peak_sum_abs(std::span<const cplx> a, std::span<const int> q, cplx z);

// sum_n |c_n ((conj(a_n) z + 1) / 2)^{q_n}|
double peak_combination_abs(std::span<const cplx> a, std::span<const int> q,
                            std::span<const cplx> c, cplx z);

// sum_k (1 - |b_k|^2) / |1 - conj(b_k) z|
double cauchy_sum_abs(std::span<const cplx> b, cplx z);

// (1 - |b_k|^2)/(1 - conj(b_k) z) prod_{j != k} phi_j(z) / phi_j(b_k)
cplx carleson_dual(std::span<const cplx> nodes, std::size_t k, cplx z);

// prod_{j != k} |b_k - b_j| / |1 - conj(b_k) b_j|
double carleson_product(std::span<const cplx> nodes, std::size_t k);
double carleson_min(std::span<const cplx> nodes);

// sup of |z + a| / 2 over the closed disk minus the open arc (lo, hi) and
// the open region between that arc and its chord; sampled on a polar grid
// plus the chord and the complementary arc.
double off_region_base(cplx a, double lo, double hi, std::size_t radial, std::size_t angular);

// Least M with rho(w1/M, w2/M) <= rho(b1, b2), by scalar bisection.
double two_node_minimal_norm(cplx b1, cplx b2, cplx w1, cplx w2);
bool two_node_feasible(cplx b1, cplx b2, cplx w1, cplx w2, double M);

// M* from the generalized eigenproblem W x = mu K x, K_jk = 1/(1 - b_j conj b_k).
double pick_minimal_norm(std::span<const cplx> nodes, std::span<const cplx> targets);

// Duals of the columns of E under the bilinear pairing: F = (E^T)^{-1}.
Eigen::MatrixXcd bilinear_duals(const Eigen::MatrixXcd& E);

double lp_norm(const Eigen::VectorXcd& x, double p);

// max over a uniform grid of |sum_j alpha_j exp(i lambda_j t)|
double trig_grid_sup(std::span<const std::int64_t> freq, std::span<const cplx> alpha, std::size_t n);

// (beta - alpha) - sum_k 2^{k-1} rho_k
Rational cantor_residual(const Rational& alpha, const Rational& beta, std::span<const Rational> rho);

// (beta - alpha)(1/2 + 2^{-depth-1}), the residual of rho_k = (beta - alpha)/4^k
Rational geometric_residual(const Rational& length, std::size_t depth);

}  // namespace hardy::oracle
