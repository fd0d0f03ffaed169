#include "oracles.hpp"

#include <algorithm>
#include <cmath>

namespace hardy::oracle {

double peak_sum_abs(std::span<const cplx> a, std::span<const int> q, cplx z) {
  double s = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n)
    s += std::pow(std::abs(std::conj(a[n]) * z + 1.0) / 2.0, q[n]);
  return s;
}

double peak_combination_abs(std::span<const cplx> a, std::span<const int> q,
                            std::span<const cplx> c, cplx z) {
  cplx s = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n)
    s += c[n] * std::pow((std::conj(a[n]) * z + 1.0) / 2.0, q[n]);
  return std::abs(s);
}

double cauchy_sum_abs(std::span<const cplx> b, cplx z) {
  double s = 0.0;
  for (const cplx bk : b) s += (1.0 - std::norm(bk)) / std::abs(1.0 - std::conj(bk) * z);
  return s;
}

cplx carleson_dual(std::span<const cplx> nodes, std::size_t k, cplx z) {
  const cplx bk = nodes[k];
  cplx v = (1.0 - std::norm(bk)) / (1.0 - std::conj(bk) * z);
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    if (j == k) continue;
    const cplx bj = nodes[j];
    v *= ((bj - z) / (1.0 - std::conj(bj) * z)) / ((bj - bk) / (1.0 - std::conj(bj) * bk));
  }
  return v;
}

double carleson_product(std::span<const cplx> nodes, std::size_t k) {
  double p = 1.0;
  for (std::size_t j = 0; j < nodes.size(); ++j)
    if (j != k) p *= std::abs(nodes[k] - nodes[j]) / std::abs(1.0 - std::conj(nodes[k]) * nodes[j]);
  return p;
}

double carleson_min(std::span<const cplx> nodes) {
  double m = 1.0;
  for (std::size_t k = 0; k < nodes.size(); ++k) m = std::min(m, carleson_product(nodes, k));
  return m;
}

double off_region_base(cplx a, double lo, double hi, std::size_t radial, std::size_t angular) {
  const cplx p1 = std::polar(1.0, lo), p2 = std::polar(1.0, hi);
  const cplx mid = std::polar(1.0, 0.5 * (lo + hi));
  auto side = [&](cplx z) {
    const cplx d = p2 - p1, w = z - p1;
    return d.real() * w.imag() - d.imag() * w.real();
  };
  const double arc_side = side(mid);
  // inside the open chord region or on the open arc
  auto excluded = [&](cplx z) { return side(z) * arc_side > 0.0; };

  double best = 0.0;
  auto take = [&](cplx z) { best = std::max(best, std::abs(z + a) / 2.0); };
  for (std::size_t i = 0; i <= radial; ++i) {
    const double r = static_cast<double>(i) / static_cast<double>(radial);
    for (std::size_t k = 0; k < angular; ++k) {
      const cplx z = std::polar(r, 2.0 * kPi * static_cast<double>(k) / static_cast<double>(angular));
      if (!excluded(z)) take(z);
    }
  }
  for (std::size_t i = 0; i <= angular; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(angular);
    take(p1 + t * (p2 - p1));
    take(std::polar(1.0, hi + t * (2.0 * kPi - (hi - lo))));
  }
  return best;
}

namespace {

double rho(cplx a, cplx b) { return std::abs(a - b) / std::abs(1.0 - std::conj(a) * b); }

}  // namespace

bool two_node_feasible(cplx b1, cplx b2, cplx w1, cplx w2, double M) {
  if (std::abs(w1) > M || std::abs(w2) > M) return false;
  if (std::abs(w1) == M || std::abs(w2) == M) return w1 == w2;
  return rho(w1 / M, w2 / M) <= rho(b1, b2);
}

double two_node_minimal_norm(cplx b1, cplx b2, cplx w1, cplx w2) {
  double lo = std::max(std::abs(w1), std::abs(w2));
  if (w1 == w2) return lo;
  double hi = std::max(1.0, 2.0 * lo);
  while (!two_node_feasible(b1, b2, w1, w2, hi)) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (two_node_feasible(b1, b2, w1, w2, mid) ? hi : lo) = mid;
  }
  return hi;
}

double pick_minimal_norm(std::span<const cplx> nodes, std::span<const cplx> targets) {
  const auto n = static_cast<Eigen::Index>(nodes.size());
  Eigen::MatrixXcd K(n, n), W(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) {
      const cplx d = 1.0 - nodes[j] * std::conj(nodes[k]);
      K(j, k) = 1.0 / d;
      W(j, k) = targets[j] * std::conj(targets[k]) / d;
    }
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> es(W, K, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

Eigen::MatrixXcd bilinear_duals(const Eigen::MatrixXcd& E) {
  return E.transpose().fullPivLu().inverse();
}

double lp_norm(const Eigen::VectorXcd& x, double p) {
  if (std::isinf(p)) return x.cwiseAbs().maxCoeff();
  double s = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) s += std::pow(std::abs(x(i)), p);
  return std::pow(s, 1.0 / p);
}

double trig_grid_sup(std::span<const std::int64_t> freq, std::span<const cplx> alpha, std::size_t n) {
  double best = 0.0;
#pragma omp parallel for reduction(max : best) schedule(static)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(n); ++k) {
    const double t = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
    cplx s = 0.0;
    for (std::size_t j = 0; j < freq.size(); ++j) {
      const double ph = std::fmod(static_cast<double>(freq[j]) * t, 2.0 * kPi);
      s += alpha[j] * cplx(std::cos(ph), std::sin(ph));
    }
    best = std::max(best, std::abs(s));
  }
  return best;
}

Rational cantor_residual(const Rational& alpha, const Rational& beta, std::span<const Rational> rho_k) {
  Rational removed = 0;
  Rational pieces = 1;
  for (const Rational& r : rho_k) {
    removed += pieces * r;
    pieces *= 2;
  }
  return beta - alpha - removed;
}

Rational geometric_residual(const Rational& length, std::size_t depth) {
  Rational tail = 1;
  for (std::size_t k = 0; k <= depth; ++k) tail /= 2;
  return length * (Rational(1, 2) + tail);
}

}  // namespace hardy::oracle
