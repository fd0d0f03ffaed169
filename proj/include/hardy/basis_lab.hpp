#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hardy/disk.hpp"

namespace hardy {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Conjugate exponent; 1 <-> inf.
double conjugate_exponent(double p);

double pnorm(const Eigen::VectorXcd& x, double p);

// Finite family of n vectors in C^d (the columns of `vectors`) measured in l^p.
struct FiniteSystem {
  double p = 2.0;
  Eigen::MatrixXcd vectors;
  std::optional<Eigen::MatrixXcd> duals;  // columns f_k with sum_i e_j(i) f_k(i) = delta_jk

  std::size_t dimension() const noexcept { return static_cast<std::size_t>(vectors.rows()); }
  std::size_t count() const noexcept { return static_cast<std::size_t>(vectors.cols()); }
  // max |<e_j, f_k> - delta_jk| under the bilinear pairing; throws without duals
  double biorthogonality_error() const;
};

// |sum_j alpha_j g_j|_p / |alpha|_p
double synthesis_ratio(const FiniteSystem& s, const Eigen::VectorXcd& alpha);

struct ConstantsOptions {
  std::size_t starts = 32;
  std::size_t probes = 10000;
  int iterations = 200;
  std::uint64_t seed = 0x5eed;
};

struct ConstantsReport {
  double hilbertian = 0.0;  // C, best value found (exact for the exact methods)
  double besselian = 0.0;   // c
  Eigen::VectorXcd hilbertian_witness;
  Eigen::VectorXcd besselian_witness;
  double hilbertian_upper = kInfinity;  // rigorous bracket: true C <= this
  double besselian_lower = 0.0;         // true c >= this
  std::string hilbertian_method;        // exact | heuristic
  std::string besselian_method;
  std::string method;                   // exact when both are exact
};

ConstantsReport constants(const FiniteSystem& system, const ConstantsOptions& options = {});

// Operator norm |A|_{p -> p}. Exact for p in {1, 2, inf}; elsewhere the
// Riesz-Thorin upper bound |A|_1^{1/p} |A|_inf^{1 - 1/p}.
double operator_norm_bound(const Eigen::MatrixXcd& A, double p);

// rho_N = (1 + N^{p-1})^{1/p} / (1 + N)
double riesz_rho(std::size_t N, double p);

// The C^{N+1} basis e_0..e_N with dual f_0..f_N; checks its own identities
// and throws ClaimViolation if one fails.
FiniteSystem riesz_example(std::size_t N, double p);

// The dual family f_0..f_N measured in l^p.
FiniteSystem riesz_dual(std::size_t N, double p);

// |sum_{j >= 1} e_j|_p / |(0, 1, ..., 1)|_p
double riesz_witness_ratio(const FiniteSystem& system);

// a_N = (N + 2)(N - 1) / 2
std::size_t block_offset(std::size_t N);

// Blocks N = 1..depth of sizes N + 1; primal vectors on even N, dual on odd.
FiniteSystem interleaved_example(std::size_t depth, double p);

struct BlockWitness {
  std::size_t N = 0;
  bool primal = false;   // even block: besselian witness, odd: hilbertian witness
  double ratio = 0.0;    // ratio of the embedded system on lambda = (0, 1, ..., 1)
  double expected = 0.0; // closed form
};

std::vector<BlockWitness> block_witness_ratios(const FiniteSystem& interleaved, std::size_t depth);

struct MarginReport {
  double nu = 0.0;      // |alpha|_1 <= nu |sum alpha_j x_j|_q
  double eta = 0.0;     // (1 - theta) / nu
  double theta = 0.0;
  std::string method;   // exact | certified
  Eigen::VectorXcd witness;  // y with |V^{-1} y|_1 = nu |y|_q when exact
};

MarginReport paley_wiener_margin(const FiniteSystem& system, double ambient_q,
                                 double theta = 0.01);

struct PerturbationVerdict {
  double lambda_hat = 0.0;        // |(V - W) V^{-1}|_{q -> q}
  double lambda_upper = 0.0;      // with rounding inflation
  bool pass = false;              // lambda_upper < 1
  double inverse_bound = kInfinity;  // 1 / (1 - lambda_hat)
  std::string method;
};

PerturbationVerdict perturb_and_check(const FiniteSystem& base, const FiniteSystem& perturbed,
                                      double ambient_q);

}  // namespace hardy
