#include "fixtures.hpp"

#include <cmath>
#include <numeric>

#include "oracles.hpp"

namespace hardy::fixtures {

namespace {

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

cplx disk_point(Rng& rng, double radius) {
  const double r = radius * std::sqrt(uniform(rng, 0.0, 1.0));
  return std::polar(r, uniform(rng, 0.0, kTwoPi));
}

}  // namespace

ArcSystem random_arc_system(Rng& rng, std::size_t N, double epsilon) {
  ArcSystem s;
  s.epsilon = epsilon;
  const double sector = kTwoPi / static_cast<double>(N);
  const double origin = uniform(rng, 0.0, kTwoPi);
  std::vector<double> weights(N);
  for (auto& w : weights) w = uniform(rng, 0.5, 1.0);
  const double wsum = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (std::size_t n = 0; n < N; ++n) {
    const double centre = origin + sector * (static_cast<double>(n) + 0.5) + uniform(rng, -0.1, 0.1) * sector;
    const double width = sector * uniform(rng, 0.2, 0.7);
    const Arc arc = make_arc(centre - 0.5 * width, centre + 0.5 * width);
    s.arcs.push_back(arc);
    s.points.push_back(arc.lo + arc.width() * uniform(rng, 0.25, 0.75));
    s.budgets.push_back(0.9 * epsilon * weights[n] / wsum);
  }
  s.validate();
  return s;
}

ArcSystem centred_arc_system(const std::vector<double>& centres, double width, double delta,
                             double epsilon) {
  ArcSystem s;
  s.epsilon = epsilon;
  for (const double c : centres) {
    s.arcs.push_back(make_arc(c - 0.5 * width, c + 0.5 * width));
    s.points.push_back(s.arcs.back().centre());
    s.budgets.push_back(delta);
  }
  s.validate();
  return s;
}

std::vector<cplx> random_nodes(Rng& rng, std::size_t n, double radius, double min_constant) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<cplx> z(n);
    for (auto& v : z) v = disk_point(rng, radius);
    if (oracle::carleson_min(z) >= min_constant) return z;
  }
  throw DomainError("random_nodes: no admissible node set found");
}

std::vector<cplx> clustered_nodes(Rng& rng, std::size_t n, double angle, double min_constant) {
  for (int attempt = 0; attempt < 200000; ++attempt) {
    std::vector<cplx> z(n);
    for (auto& v : z) v = std::polar(uniform(rng, 0.9, 0.995), angle + uniform(rng, -0.25, 0.25));
    if (oracle::carleson_min(z) >= min_constant) return z;
  }
  throw DomainError("clustered_nodes: no admissible node set found");
}

std::vector<cplx> random_targets(Rng& rng, std::size_t n) {
  std::vector<cplx> w(n);
  for (auto& v : w) v = disk_point(rng, 1.0);
  return w;
}

std::vector<NamedSystem> bundled_systems() {
  std::vector<NamedSystem> out;

  FiniteSystem canonical;
  canonical.p = 1.0;
  canonical.vectors = Eigen::MatrixXcd::Identity(4, 4);
  out.push_back({"canonical-4", canonical});

  for (std::size_t N : {2u, 4u}) {
    FiniteSystem f = riesz_dual(N, 2.0);
    f.p = 1.0;
    f.duals.reset();
    out.push_back({"riesz-dual-" + std::to_string(N), f});
  }

  // upper triangular, fixed entries
  FiniteSystem tri;
  tri.p = 1.0;
  tri.vectors.resize(3, 3);
  tri.vectors << cplx(1.0), cplx(0.5, 0.2), cplx(-0.3),
                 cplx(0.0), cplx(1.0), cplx(0.25, -0.5),
                 cplx(0.0), cplx(0.0), cplx(0.8);
  out.push_back({"triangular-3", tri});

  // discrete Fourier basis of C^5
  FiniteSystem dft;
  dft.p = 1.0;
  dft.vectors.resize(5, 5);
  for (int j = 0; j < 5; ++j)
    for (int k = 0; k < 5; ++k) dft.vectors(j, k) = std::polar(1.0 / std::sqrt(5.0), kTwoPi * j * k / 5.0);
  out.push_back({"fourier-5", dft});
  return out;
}

}  // namespace hardy::fixtures
