#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hardy/disk.hpp"

namespace hardy {

using Rational = boost::multiprecision::cpp_rational;

struct LacunarySet {
  std::int64_t q_num = 2;
  std::int64_t q_den = 1;
  std::vector<std::int64_t> frequencies;
};

// lambda_1 = first, lambda_{k+1} = ceil(q lambda_k); throws on int64 overflow.
LacunarySet lacunary_set(std::int64_t q_num, std::int64_t q_den, std::size_t count,
                         std::int64_t first);

bool ratio_condition_holds(const LacunarySet& set);

struct SupEstimate {
  double sup = 0.0;       // after refinement
  double grid_sup = 0.0;  // on the grid alone
  double argmax = 0.0;
};

// sup over t of |sum_j alpha_j exp(i lambda_j t)|: uniform grid, then golden
// section around the best grid cells.
SupEstimate trig_sup(std::span<const std::int64_t> frequencies, std::span<const cplx> alpha,
                     std::size_t grid);

// sum |alpha_j| / sup |P|, at least 1.
double sidon_ratio(const LacunarySet& set, std::span<const cplx> alpha, std::size_t grid = 4096);

struct SidonEstimate {
  double value = 1.0;  // empirical lower bound on the Sidon constant
  std::vector<cplx> witness;
  std::size_t trials = 0;
};

// Max of sidon_ratio over all-ones, alternating signs and `trials` random
// phase or sign vectors; trial t depends only on (seed, t).
SidonEstimate empirical_sidon_constant(const LacunarySet& set, std::size_t trials,
                                       std::uint64_t seed, std::size_t grid = 4096);

struct RemovedInterval {
  std::size_t n = 0;      // 1-based, level k holds n in [2^{k-1}, 2^k)
  std::size_t level = 0;
  Rational b, c, x;
  Rational separation;    // min(x - b, c - x)
};

struct CantorSpec {
  Rational alpha, beta;
  std::vector<Rational> rho;  // removal length per level
  std::size_t depth = 0;
  Rational offset{1, 2};      // x_n = b_n + offset (c_n - b_n)
  std::vector<RemovedInterval> intervals;
  Rational residual;          // (beta - alpha) - sum 2^{k-1} rho_k
  Rational min_separation;    // min over n of separation
  Rational min_pairwise;      // min |x_n - x_j|, n != j; 0 for a single point

  std::vector<cplx> boundary_sequence() const;  // exp(i x_n), the only inexact step
};

// Centered removal of open intervals of length rho_k from each of the
// 2^{k-1} pieces left at level k - 1.
CantorSpec cantor_sequence(const Rational& alpha, const Rational& beta,
                           std::vector<Rational> rho, const Rational& offset = Rational(1, 2));

// rho_k = (beta - alpha) / 4^k for k = 1..depth
std::vector<Rational> geometric_schedule(const Rational& length, std::size_t depth);

// Parses "p/q", an integer or a finite decimal like "0.25" exactly.
Rational parse_rational(const std::string& text);

}  // namespace hardy
