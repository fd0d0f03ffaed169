#include "hardy/basis_lab.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;

bool is_inf(double p) { return std::isinf(p); }

void check_exponent(double p) {
  if (!(p >= 1.0)) throw DomainError("exponent p must be >= 1 (or inf)");
}

double max_col_sum(const MatrixXcd& A) {
  double m = 0.0;
  for (Index j = 0; j < A.cols(); ++j) m = std::max(m, A.col(j).cwiseAbs().sum());
  return m;
}

double max_row_sum(const MatrixXcd& A) {
  double m = 0.0;
  for (Index i = 0; i < A.rows(); ++i) m = std::max(m, A.row(i).cwiseAbs().sum());
  return m;
}

Index argmax_col_sum(const MatrixXcd& A) {
  Index best = 0;
  double m = -1.0;
  for (Index j = 0; j < A.cols(); ++j)
    if (const double s = A.col(j).cwiseAbs().sum(); s > m) m = s, best = j;
  return best;
}

Index argmax_row_sum(const MatrixXcd& A) {
  Index best = 0;
  double m = -1.0;
  for (Index i = 0; i < A.rows(); ++i)
    if (const double s = A.row(i).cwiseAbs().sum(); s > m) m = s, best = i;
  return best;
}

cplx phase(cplx z) {
  const double a = std::abs(z);
  return a == 0.0 ? cplx(1.0) : z / a;
}

// y with |y|_{p'} = 1 and <y, x> = |x|_p
VectorXcd dual_vector(const VectorXcd& x, double p) {
  const double n = pnorm(x, p);
  VectorXcd y(x.size());
  if (n == 0.0) return VectorXcd::Zero(x.size());
  for (Index i = 0; i < x.size(); ++i) {
    const double a = std::abs(x[i]) / n;
    y[i] = a == 0.0 ? cplx(0.0) : std::pow(a, p - 1.0) * phase(x[i]);
  }
  return y;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

VectorXcd random_vector(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  VectorXcd v(n);
  for (Index i = 0; i < n; ++i) v[i] = cplx(g(rng), g(rng));
  return v;
}

double ratio(const MatrixXcd& A, const VectorXcd& x, double p) {
  const double d = pnorm(x, p);
  return d == 0.0 ? 0.0 : pnorm(A * x, p) / d;
}

// Power method for |A|_{p -> p}, 1 < p < inf; returns a local maximizer.
VectorXcd boyd(const MatrixXcd& A, VectorXcd x, double p, int iterations) {
  const double q = conjugate_exponent(p);
  x /= pnorm(x, p);
  for (int it = 0; it < iterations; ++it) {
    const VectorXcd y = A * x;
    if (pnorm(y, p) == 0.0) break;
    const VectorXcd z = A.adjoint() * dual_vector(y, p);
    const double zq = pnorm(z, q);
    if (zq <= std::real(z.dot(x)) * (1.0 + 1e-14)) break;
    x = dual_vector(z, q);
  }
  return x;
}

// Local minimizer of |A x|_p / |x|_p by normalized gradient descent.
VectorXcd descend(const MatrixXcd& A, VectorXcd x, double p, int iterations) {
  x /= pnorm(x, p);
  double r = ratio(A, x, p);
  double step = 0.5;
  for (int it = 0; it < iterations && step > 1e-14; ++it) {
    const VectorXcd y = A * x;
    const double ny = pnorm(y, p);
    if (ny == 0.0) break;
    VectorXcd gy(y.size()), gx(x.size());
    for (Index i = 0; i < y.size(); ++i) {
      const double a = std::abs(y[i]) / ny;
      gy[i] = a == 0.0 ? cplx(0.0) : std::pow(a, p - 1.0) * phase(y[i]);
    }
    for (Index i = 0; i < x.size(); ++i) {
      const double a = std::abs(x[i]);
      gx[i] = a == 0.0 ? cplx(0.0) : std::pow(a, p - 1.0) * phase(x[i]);
    }
    const VectorXcd grad = A.adjoint() * gy - r * gx;
    bool moved = false;
    while (step > 1e-14) {
      VectorXcd cand = x - step * grad;
      const double nc = pnorm(cand, p);
      if (nc > 0.0) {
        cand /= nc;
        const double rc = ratio(A, cand, p);
        if (rc < r) {
          x = cand;
          r = rc;
          step *= 1.5;
          moved = true;
          break;
        }
      }
      step *= 0.5;
    }
    if (!moved) break;
  }
  return x;
}

struct SearchResult {
  double best_max = -1.0;
  VectorXcd arg_max;
  double best_min = kInfinity;
  VectorXcd arg_min;

  void offer(const MatrixXcd& A, const VectorXcd& x, double p) {
    const double r = ratio(A, x, p);
    if (r > best_max) best_max = r, arg_max = x;
    if (r < best_min) best_min = r, arg_min = x;
  }
};

bool exact_p(double p) { return p == 1.0 || p == 2.0 || is_inf(p); }

std::optional<MatrixXcd> square_inverse(const MatrixXcd& V) {
  if (V.rows() != V.cols()) return std::nullopt;
  Eigen::FullPivLU<MatrixXcd> lu(V);
  if (!lu.isInvertible()) return std::nullopt;
  return lu.inverse();
}

// (V^H V)^{-1} V^H, a left inverse of a full column rank V.
std::optional<MatrixXcd> left_inverse(const MatrixXcd& V) {
  if (V.cols() > V.rows()) return std::nullopt;
  Eigen::FullPivLU<MatrixXcd> lu(V);
  if (lu.rank() < V.cols()) return std::nullopt;
  if (V.rows() == V.cols()) return lu.inverse();
  const MatrixXcd G = V.adjoint() * V;
  return G.ldlt().solve(V.adjoint());
}

}  // namespace

double conjugate_exponent(double p) {
  check_exponent(p);
  if (p == 1.0) return kInfinity;
  if (is_inf(p)) return 1.0;
  return p / (p - 1.0);
}

double pnorm(const Eigen::VectorXcd& x, double p) {
  const double m = x.cwiseAbs().maxCoeff();
  if (is_inf(p) || m == 0.0) return m;
  if (p == 1.0) return x.cwiseAbs().sum();
  if (p == 2.0) return x.norm();
  double s = 0.0;
  for (Index i = 0; i < x.size(); ++i) s += std::pow(std::abs(x[i]) / m, p);
  return m * std::pow(s, 1.0 / p);
}

double FiniteSystem::biorthogonality_error() const {
  if (!duals) throw DomainError("system has no dual family");
  const MatrixXcd G = duals->transpose() * vectors;
  return (G - MatrixXcd::Identity(G.rows(), G.cols())).cwiseAbs().maxCoeff();
}

double synthesis_ratio(const FiniteSystem& s, const Eigen::VectorXcd& alpha) {
  if (static_cast<std::size_t>(alpha.size()) != s.count())
    throw DomainError("coefficient length differs from the number of vectors");
  return ratio(s.vectors, alpha, s.p);
}

double operator_norm_bound(const Eigen::MatrixXcd& A, double p) {
  check_exponent(p);
  if (A.size() == 0) return 0.0;
  if (p == 1.0) return max_col_sum(A);
  if (is_inf(p)) return max_row_sum(A);
  if (p == 2.0) {
    Eigen::JacobiSVD<MatrixXcd> svd(A);
    return svd.singularValues()(0);
  }
  return std::pow(max_col_sum(A), 1.0 / p) * std::pow(max_row_sum(A), 1.0 - 1.0 / p);
}

ConstantsReport constants(const FiniteSystem& system, const ConstantsOptions& options) {
  const double p = system.p;
  check_exponent(p);
  const MatrixXcd& V = system.vectors;
  const Index n = V.cols();
  if (n == 0) throw DomainError("constants need a nonempty family");

  ConstantsReport r;
  const auto inverse = square_inverse(V);
  Eigen::FullPivLU<MatrixXcd> lu(V);
  const bool full_rank = lu.rank() == n;

  // Upper constant.
  if (p == 2.0) {
    Eigen::JacobiSVD<MatrixXcd> svd(V, Eigen::ComputeFullV);
    r.hilbertian_witness = svd.matrixV().col(0);
    r.hilbertian_method = "exact";
  } else if (p == 1.0) {
    r.hilbertian_witness = VectorXcd::Unit(n, argmax_col_sum(V));
    r.hilbertian_method = "exact";
  } else if (is_inf(p)) {
    const Index i = argmax_row_sum(V);
    r.hilbertian_witness.resize(n);
    for (Index j = 0; j < n; ++j) r.hilbertian_witness[j] = std::conj(phase(V(i, j)));
    r.hilbertian_method = "exact";
  }

  // Lower constant.
  if (!full_rank) {
    const MatrixXcd K = lu.kernel();
    r.besselian_witness = K.col(0);
    r.besselian_method = "exact";
  } else if (p == 2.0) {
    Eigen::JacobiSVD<MatrixXcd> svd(V, Eigen::ComputeFullV);
    r.besselian_witness = svd.matrixV().col(n - 1);
    r.besselian_method = "exact";
  } else if (inverse && p == 1.0) {
    r.besselian_witness = inverse->col(argmax_col_sum(*inverse));
    r.besselian_method = "exact";
  } else if (inverse && is_inf(p)) {
    const Index i = argmax_row_sum(*inverse);
    VectorXcd y(n);
    for (Index k = 0; k < n; ++k) y[k] = std::conj(phase((*inverse)(i, k)));
    r.besselian_witness = *inverse * y;
    r.besselian_method = "exact";
  }

  const bool need_upper = r.hilbertian_method.empty();
  const bool need_lower = r.besselian_method.empty();
  if (need_upper || need_lower) {
    const auto starts = static_cast<std::ptrdiff_t>(std::max<std::size_t>(1, options.starts));
    const std::size_t per = options.probes / static_cast<std::size_t>(starts) + 1;
    std::vector<SearchResult> found(static_cast<std::size_t>(starts));
    const bool smooth = !exact_p(p) || p == 2.0;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t t = 0; t < starts; ++t) {
      std::mt19937_64 rng(splitmix(options.seed ^ splitmix(static_cast<std::uint64_t>(t))));
      SearchResult& res = found[static_cast<std::size_t>(t)];
      const VectorXcd x0 = t < n ? VectorXcd(VectorXcd::Unit(n, t)) : random_vector(n, rng);
      res.offer(V, x0, p);
      for (std::size_t k = 0; k < per; ++k) res.offer(V, random_vector(n, rng), p);
      if (smooth && need_upper) res.offer(V, boyd(V, x0, p, options.iterations), p);
      if (smooth && need_lower) {
        if (inverse) {
          const VectorXcd y = boyd(*inverse, random_vector(n, rng), p, options.iterations);
          res.offer(V, *inverse * y, p);
        } else {
          res.offer(V, descend(V, x0, p, options.iterations), p);
        }
      }
    }
    SearchResult all;
    for (const auto& f : found) {
      if (f.best_max > all.best_max) all.best_max = f.best_max, all.arg_max = f.arg_max;
      if (f.best_min < all.best_min) all.best_min = f.best_min, all.arg_min = f.arg_min;
    }
    if (need_upper) {
      r.hilbertian_witness = all.arg_max;
      r.hilbertian_method = "heuristic";
    }
    if (need_lower) {
      r.besselian_witness = all.arg_min;
      r.besselian_method = "heuristic";
    }
  }

  r.hilbertian = ratio(V, r.hilbertian_witness, p);
  r.besselian = ratio(V, r.besselian_witness, p);
  r.hilbertian_upper = r.hilbertian_method == "exact" ? r.hilbertian : operator_norm_bound(V, p);
  if (r.besselian_method == "exact") {
    r.besselian_lower = r.besselian;
  } else if (const auto L = left_inverse(V)) {
    r.besselian_lower = 1.0 / operator_norm_bound(*L, p);
  }
  r.method = r.hilbertian_method == "exact" && r.besselian_method == "exact" ? "exact" : "heuristic";
  return r;
}

double riesz_rho(std::size_t N, double p) {
  const double n = static_cast<double>(N);
  return std::pow(1.0 + std::pow(n, p - 1.0), 1.0 / p) / (1.0 + n);
}

namespace {

void riesz_parts(std::size_t N, double p, MatrixXcd& E, MatrixXcd& F) {
  if (N < 1) throw DomainError("N must be at least 1");
  if (!(p > 1.0) || is_inf(p)) throw DomainError("riesz example needs 1 < p < inf");
  const Index d = static_cast<Index>(N) + 1;
  const double n1 = static_cast<double>(N + 1);
  const double pp = conjugate_exponent(p);
  VectorXcd v = -VectorXcd::Ones(d);
  v[0] = 1.0;
  E = MatrixXcd::Zero(d, d);
  F = MatrixXcd::Zero(d, d);
  E.col(0) = std::pow(n1, -1.0 / p) * v;
  F.col(0) = std::pow(n1, -1.0 / pp) * v;
  for (Index j = 1; j < d; ++j) {
    E.col(j) = v / n1;
    E(j, j) += 1.0;
    F(0, j) = 1.0;
    F(j, j) = 1.0;
  }
}

}  // namespace

double riesz_witness_ratio(const FiniteSystem& system) {
  VectorXcd lambda = VectorXcd::Ones(static_cast<Index>(system.count()));
  lambda[0] = 0.0;
  return synthesis_ratio(system, lambda);
}

FiniteSystem riesz_example(std::size_t N, double p) {
  MatrixXcd E, F;
  riesz_parts(N, p, E, F);
  FiniteSystem s{p, E, F};
  const double pp = conjugate_exponent(p);

  auto fail = [&](const std::string& what) {
    std::ostringstream msg;
    msg << "riesz example N = " << N << ", p = " << p << ": " << what;
    throw ClaimViolation(msg.str());
  };
  if (s.biorthogonality_error() > 1e-12) fail("not biorthogonal");
  if (std::abs(pnorm(E.col(0), p) - 1.0) > 1e-12 || std::abs(pnorm(F.col(0), pp) - 1.0) > 1e-12 ||
      std::abs(std::real(E.col(0).conjugate().dot(F.col(0))) - 1.0) > 1e-12)
    fail("e_0 and f_0 are not unit and dual");
  for (Index j = 0; j < E.cols(); ++j)
    if (pnorm(E.col(j), p) > 2.0 || pnorm(F.col(j), pp) > 2.0) fail("a vector has norm above 2");
  std::mt19937_64 rng(splitmix(N) ^ 0x3a1d);
  for (int t = 0; t < 64; ++t)
    if (ratio(E, random_vector(E.cols(), rng), p) > 3.0) fail("synthesis norm above 3");
  if (std::abs(riesz_witness_ratio(s) - riesz_rho(N, p)) > 1e-12) fail("witness ratio differs from rho_N");
  return s;
}

FiniteSystem riesz_dual(std::size_t N, double p) {
  MatrixXcd E, F;
  riesz_parts(N, p, E, F);
  return FiniteSystem{p, F, E};
}

std::size_t block_offset(std::size_t N) {
  if (N < 1) throw DomainError("block index starts at 1");
  return (N + 2) * (N - 1) / 2;
}

FiniteSystem interleaved_example(std::size_t depth, double p) {
  if (depth < 2) throw DomainError("interleaved example needs depth >= 2");
  const auto total = static_cast<Index>(block_offset(depth + 1));
  MatrixXcd V = MatrixXcd::Zero(total, total);
  MatrixXcd D = MatrixXcd::Zero(total, total);
  for (std::size_t N = 1; N <= depth; ++N) {
    MatrixXcd E, F;
    riesz_parts(N, p, E, F);
    const auto a = static_cast<Index>(block_offset(N));
    const auto size = static_cast<Index>(N + 1);
    const bool primal = N % 2 == 0;
    V.block(a, a, size, size) = primal ? E : F;
    D.block(a, a, size, size) = primal ? F : E;
  }
  return FiniteSystem{p, V, D};
}

std::vector<BlockWitness> block_witness_ratios(const FiniteSystem& interleaved, std::size_t depth) {
  std::vector<BlockWitness> out;
  const double p = interleaved.p;
  for (std::size_t N = 1; N <= depth; ++N) {
    VectorXcd lambda = VectorXcd::Zero(static_cast<Index>(interleaved.count()));
    const auto a = static_cast<Index>(block_offset(N));
    for (Index j = 1; j <= static_cast<Index>(N); ++j) lambda[a + j] = 1.0;
    BlockWitness w;
    w.N = N;
    w.primal = N % 2 == 0;
    w.ratio = synthesis_ratio(interleaved, lambda);
    w.expected = w.primal ? riesz_rho(N, p)
                          : std::pow(1.0 + std::pow(static_cast<double>(N), p - 1.0), 1.0 / p);
    out.push_back(w);
  }
  return out;
}

MarginReport paley_wiener_margin(const FiniteSystem& system, double q, double theta) {
  check_exponent(q);
  if (!(theta > 0.0 && theta < 1.0)) throw DomainError("theta must lie in (0, 1)");
  const MatrixXcd& V = system.vectors;
  const auto W = left_inverse(V);
  if (!W) throw DomainError("singular system: vectors are linearly dependent");
  const bool square = V.rows() == V.cols();
  const Index d = V.rows();

  MarginReport m;
  m.theta = theta;
  if (q == 1.0 && square) {
    const Index j = argmax_col_sum(*W);
    m.nu = W->col(j).cwiseAbs().sum();
    m.witness = VectorXcd::Unit(d, j);
    m.method = "exact";
  } else {
    // |alpha_i| = |<row_i(W), y>| <= |row_i(W)|_{q'} |y|_q, and also
    // |W y|_1 <= sqrt(d) |W|_2 |y|_2 <= sqrt(d) |W|_2 d^{max(0, 1/2 - 1/q)} |y|_q.
    // Sign vectors only give the real norm, which can sit below the complex one.
    const double qq = conjugate_exponent(q);
    double rows = 0.0;
    for (Index i = 0; i < W->rows(); ++i) rows += pnorm(W->row(i).transpose(), qq);
    const double n = static_cast<double>(W->rows());
    const double sigma = Eigen::JacobiSVD<MatrixXcd>(*W).singularValues()(0) * (1.0 + 1e-12);
    const double lift = is_inf(q) ? std::sqrt(static_cast<double>(d)) : std::pow(static_cast<double>(d), std::max(0.0, 0.5 - 1.0 / q));
    m.nu = std::min(rows, std::sqrt(n) * sigma * lift);
    m.method = "certified";
  }
  m.eta = (1.0 - theta) / m.nu;
  return m;
}

PerturbationVerdict perturb_and_check(const FiniteSystem& base, const FiniteSystem& perturbed,
                                      double q) {
  check_exponent(q);
  if (base.vectors.rows() != perturbed.vectors.rows() ||
      base.vectors.cols() != perturbed.vectors.cols())
    throw DomainError("systems differ in shape");
  const auto W = left_inverse(base.vectors);
  if (!W) throw DomainError("singular base system");
  const MatrixXcd A = (base.vectors - perturbed.vectors) * *W;
  PerturbationVerdict v;
  v.lambda_hat = operator_norm_bound(A, q);
  v.method = base.vectors.rows() == base.vectors.cols() && exact_p(q) ? "exact" : "certified";
  v.lambda_upper = v.lambda_hat * (1.0 + 1e-12) + 1e-15;
  v.pass = v.lambda_upper < 1.0;
  if (v.pass) v.inverse_bound = 1.0 / (1.0 - v.lambda_upper);
  return v;
}

}  // namespace hardy
