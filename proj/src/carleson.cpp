#include "hardy/carleson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace hardy {

namespace {

constexpr double kSelectionLimit = 1.0 - 1e-12;

cplx clamp_inside(cplx t) {
  const double r = std::abs(t);
  return r > kSelectionLimit ? t * (kSelectionLimit / r) : t;
}

// Points of {|t - a| = r, |t| <= 1} for a on the circle.
std::vector<cplx> inner_arc(cplx a, double r, int samples) {
  const double phi0 = std::acos(std::clamp(-0.5 * r, -1.0, 1.0));
  std::vector<cplx> pts(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double phi = phi0 + (kTwoPi - 2.0 * phi0) * i / std::max(1, samples - 1);
    pts[static_cast<std::size_t>(i)] = clamp_inside(a * (1.0 + r * std::polar(1.0, phi)));
  }
  return pts;
}

double product_except(std::span<const cplx> b, std::size_t k) {
  double p = 1.0;
  for (std::size_t j = 0; j < b.size(); ++j)
    if (j != k) p *= pseudo_hyperbolic_unchecked(b[k], b[j]);
  return p;
}

double carleson_of(std::span<const cplx> b) {
  double c = 1.0;
  for (std::size_t k = 0; k < b.size(); ++k) c = std::min(c, product_except(b, k));
  return c;
}

}  // namespace

CarlesonReport carleson_constant(const NodeSequence& seq) {
  if (seq.empty()) throw DomainError("Carleson constant needs at least one node");
  CarlesonReport r;
  r.per_index.resize(seq.size());
  for (std::size_t k = 0; k < seq.size(); ++k) {
    r.per_index[k] = product_except(seq.values(), k);
    if (r.per_index[k] < r.constant || k == 0) {
      r.constant = r.per_index[k];
      r.worst_index = k;
    }
  }
  r.constant = std::min(r.constant, 1.0);
  return r;
}

std::vector<AnalyticFn> dual_function_trees(const NodeSequence& seq) {
  std::vector<AnalyticFn> out;
  out.reserve(seq.size());
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const cplx bk = seq[k];
    cplx at_node = 1.0;
    std::vector<AnalyticFn> factors{cauchy_kernel(InteriorPoint(bk))};
    for (std::size_t j = 0; j < seq.size(); ++j) {
      if (j == k) continue;
      at_node *= (seq[j] - bk) / (1.0 - std::conj(seq[j]) * bk);
      factors.push_back(blaschke_factor(InteriorPoint(seq[j])));
    }
    if (std::abs(at_node) < kBlaschkeUnderflow) {
      std::ostringstream msg;
      msg << "|B_" << k << "(b_" << k << ")| = " << std::abs(at_node)
          << " underflows; nodes are numerically clustered";
      throw DomainError(msg.str());
    }
    factors.insert(factors.begin() + 1, constant(1.0 / at_node));
    out.push_back(product(std::move(factors)));
  }
  return out;
}

DualSystem dual_functions(const NodeSequence& seq, const CertifyOptions& options) {
  DualSystem d;
  d.nodes = seq;
  d.carleson = carleson_constant(seq);
  if (!(d.carleson.constant > 0.0)) throw DomainError("Carleson constant is zero");
  d.functions = dual_function_trees(seq);
  for (std::size_t k = 0; k < seq.size(); ++k) {
    cplx at_node = 1.0;
    for (std::size_t j = 0; j < seq.size(); ++j)
      if (j != k) at_node *= (seq[j] - seq[k]) / (1.0 - std::conj(seq[j]) * seq[k]);
    d.blaschke_at_node.push_back(at_node);
    for (std::size_t j = 0; j < seq.size(); ++j) {
      const cplx want = j == k ? 1.0 : 0.0;
      d.max_residual = std::max(d.max_residual, std::abs(d.functions[k](seq[j]) - want));
    }
  }
  if (!(d.max_residual < kDualResidualTolerance)) {
    std::ostringstream msg;
    msg << "dual functions miss biorthogonality: residual " << d.max_residual;
    throw ClaimViolation(msg.str());
  }
  d.bound = sup_abs_sum(d.functions, options);
  return d;
}

double kernel_factor_bound(InteriorPoint b) { return 1.0 + b.modulus(); }

double cap_pair_min(cplx a, double ta, cplx b, double tb, int samples) {
  const std::vector<cplx> s = inner_arc(a, ta, samples);
  const std::vector<cplx> t = inner_arc(b, tb, samples);
  double best = 1.0;
  const auto n = static_cast<std::ptrdiff_t>(s.size());
#pragma omp parallel for reduction(min : best) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    for (const cplx& y : t)
      best = std::min(best, pseudo_hyperbolic_unchecked(s[static_cast<std::size_t>(i)], y));
  return best;
}

RadiiResult radii_search(std::span<const cplx> anchors, double m, std::span<const double> eps,
                         const RadiiOptions& options) {
  const std::size_t n = anchors.size();
  if (n == 0) throw DomainError("radii search needs at least one anchor");
  if (!(m > 0.0 && m < 1.0)) throw DomainError("m must lie in (0, 1)");
  if (eps.size() != n) throw DomainError("one budget per anchor is required");
  double eps_sum = 0.0;
  for (const double e : eps) {
    if (!(e > 0.0)) throw DomainError("budgets must be positive");
    eps_sum += e;
  }
  if (!(eps_sum < m)) throw DomainError("sum of budgets must be < m");
  for (std::size_t i = 0; i < n; ++i) {
    BoundaryPoint{anchors[i]};
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(anchors[i] - anchors[j]) == 0.0) throw DomainError("anchors must be distinct");
  }

  RadiiResult r;
  r.m = m;
  r.d.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) gap = std::min(gap, std::abs(anchors[i] - anchors[j]));
    r.d[i] = std::min(1.0, 0.5 * gap) * 0.999;
  }

  // mu[j][k] bounds rho over the caps of j and k from below.
  std::vector<std::vector<double>> mu(n, std::vector<double>(n, 1.0));
  auto pair_min = [&](std::size_t j, double tj, std::size_t k, double tk) {
    return options.sample_margin * cap_pair_min(anchors[j], tj, anchors[k], tk,
                                                options.boundary_samples);
  };

  r.tau.push_back(r.d[0]);
  for (std::size_t step = 1; step < n; ++step) {
    std::vector<double> row(step);
    auto holds = [&](double t) {
      for (std::size_t k = 0; k < step; ++k) row[k] = pair_min(step, t, k, r.tau[k]);
      double own = 1.0;
      for (std::size_t k = 0; k < step; ++k) own *= row[k];
      if (!(own > m)) return false;
      for (std::size_t k = 0; k < step; ++k) {
        double p = row[k];
        for (std::size_t j = 0; j < step; ++j)
          if (j != k) p *= mu[j][k];
        if (!(p > m)) return false;
      }
      return true;
    };

    double hi = r.d[step];
    double lo = hi;
    int halvings = 0;
    while (!holds(lo)) {
      if (++halvings > options.max_halvings) {
        std::ostringstream msg;
        msg << "radii search: no admissible radius for anchor " << step << " at m = " << m;
        throw DomainError(msg.str());
      }
      hi = lo;
      lo *= 0.5;
    }
    if (lo < hi)
      for (int it = 0; it < options.bisection_steps; ++it) {
        const double mid = 0.5 * (lo + hi);
        (holds(mid) ? lo : hi) = mid;
      }
    const double tau = lo == r.d[step] ? lo : options.shrink * lo;
    r.tau.push_back(tau);
    for (std::size_t k = 0; k < step; ++k) mu[step][k] = mu[k][step] = pair_min(step, tau, k, r.tau[k]);
  }

  r.certified_products.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    double p = 1.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != k) p *= mu[j][k];
    r.certified_products[k] = p;
  }

  // (1-|t|^2) <= 2|t - a| and |1 - conj(t) z| >= |a - z| - |t - a| give the
  // factor <= 2 eta / (tau - eta).
  for (std::size_t k = 0; k < n; ++k)
    r.eta.push_back(0.999 * eps[k] * r.tau[k] / (2.0 + eps[k]));
  return r;
}

RadiiValidation validate_radii(std::span<const cplx> anchors, std::span<const double> radii,
                               double m, std::size_t trials, std::uint64_t seed) {
  if (anchors.size() != radii.size()) throw DomainError("one radius per anchor is required");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  RadiiValidation v;
  std::vector<cplx> b(anchors.size());
  for (std::size_t t = 0; t < trials; ++t) {
    const bool on_arc = t % 2 == 1;
    for (std::size_t j = 0; j < anchors.size(); ++j) {
      const cplx a = anchors[j];
      const double r = radii[j];
      if (on_arc) {
        const double phi0 = std::acos(std::clamp(-0.5 * r, -1.0, 1.0));
        const double phi = phi0 + (kTwoPi - 2.0 * phi0) * u(rng);
        b[j] = clamp_inside(a * (1.0 + r * std::polar(1.0, phi)));
      } else {
        cplx z;
        do {
          z = a + r * std::sqrt(u(rng)) * std::polar(1.0, kTwoPi * u(rng));
        } while (!(std::abs(z) <= kSelectionLimit));
        b[j] = z;
      }
    }
    const double c = carleson_of(b);
    ++v.trials;
    v.min_constant = std::min(v.min_constant, c);
    if (!(c > m)) ++v.failures;
  }
  return v;
}

}  // namespace hardy
