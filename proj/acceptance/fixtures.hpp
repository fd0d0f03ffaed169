#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hardy/basis_lab.hpp"
#include "hardy/peak.hpp"

namespace hardy::fixtures {

using Rng = std::mt19937_64;

// N arcs in jittered equal sectors, a_n in the middle half of its arc,
// budgets summing to less than 0.9 epsilon.
ArcSystem random_arc_system(Rng& rng, std::size_t N, double epsilon);

// Arcs of width w centred at the given angles, equal budgets.
ArcSystem centred_arc_system(const std::vector<double>& centres, double width, double delta,
                             double epsilon);

// n points with |z| <= radius and Carleson constant >= min_constant, by rejection.
std::vector<cplx> random_nodes(Rng& rng, std::size_t n, double radius, double min_constant);

// n points near exp(i angle) at radius in [0.9, 0.995] inside an angular
// window, Carleson constant >= min_constant.
std::vector<cplx> clustered_nodes(Rng& rng, std::size_t n, double angle, double min_constant);

std::vector<cplx> random_targets(Rng& rng, std::size_t n);

struct NamedSystem {
  std::string name;
  FiniteSystem system;
};

// Small systems used by the perturbation checks.
std::vector<NamedSystem> bundled_systems();

}  // namespace hardy::fixtures
