#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hardy/analytic_fn.hpp"
#include "hardy/certify.hpp"

namespace hardy {

// Open arc of the circle from angle lo counterclockwise to hi, hi - lo in (0, 2 pi).
struct Arc {
  double lo = 0.0;
  double hi = 0.0;

  double width() const noexcept { return hi - lo; }
  double centre() const noexcept { return 0.5 * (lo + hi); }
  bool contains(double theta) const;         // open arc
  bool closure_contains(double theta) const;
  cplx start() const { return std::polar(1.0, lo); }
  cplx finish() const { return std::polar(1.0, hi); }
};

Arc make_arc(double lo, double hi);

// Closures of a and b meet.
bool arcs_touch(const Arc& a, const Arc& b);

// Points of the closed disk lying in the union of the open arc with the open
// region cut off by its chord. The chord itself is excluded.
bool in_chord_region(const Arc& arc, cplx z);

struct ArcSystem {
  std::vector<Arc> arcs;
  std::vector<double> points;   // angle of a_n
  std::vector<double> budgets;  // delta_n
  double epsilon = 0.0;

  std::size_t size() const noexcept { return arcs.size(); }
  // Throws DomainError naming the first broken invariant.
  void validate() const;
};

AnalyticFn peak_function(BoundaryPoint a, int q);

struct DecayExponent {
  int q = 1;
  double base = 0.0;        // sup of |z + a| / 2 off the chord region
  CertifiedBound off_sup;   // certified sup of |g| off the chord region
};

// Least q with sup |((conj(a) z + 1)/2)^q| < delta on the closed disk minus
// the chord region of arc.
DecayExponent exponent_for_decay(BoundaryPoint a, const Arc& arc, double delta,
                                 const CertifyOptions& options = {});

struct PeakSystem {
  ArcSystem arc_system;
  std::size_t truncation = 0;
  std::vector<int> exponents;
  std::vector<AnalyticFn> functions;
  std::vector<CertifiedBound> off_region;  // certified sup of |g_n| off the n-th region
  SupResult bound;                         // M = sup sum |g_n|
  double tail_budget = 0.0;                // sum of delta_n for n >= truncation
};

// Builds g_n for n < truncation and certifies M <= 1 + epsilon; a violated
// bound throws ClaimViolation.
PeakSystem build_system(const ArcSystem& spec, std::size_t truncation,
                        const CertifyOptions& options = {});
PeakSystem build_system(const ArcSystem& spec, const CertifyOptions& options = {});

AnalyticFn synthesize(const PeakSystem& system, std::span<const cplx> c);

struct SynthesisCheck {
  CertifiedBound norm;  // certified sup |h|
  double c_norm = 0.0;  // max |c_n|
  bool lower_ok = false;
  bool upper_ok = false;
};

// Certifies (1 - eps)|c|_inf <= |T c|_inf <= (1 + eps)|c|_inf.
SynthesisCheck check_synthesis(const PeakSystem& system, std::span<const cplx> c,
                               const CertifyOptions& options = {});

struct EvaluationVector {
  std::vector<cplx> values;
  double l1 = 0.0;
};

EvaluationVector evaluation_functional(const PeakSystem& system, ClosedPoint z);

struct ContinuityProfile {
  std::vector<double> steps;
  std::vector<double> differences;  // |Phi(z + step u) - Phi(z)|_1
  double rate = 0.0;                // fitted exponent of differences ~ steps^rate
};

// Shrinking steps from z toward the centre of the disk (or along `direction`
// when given); z + step * direction must stay in the closed disk.
ContinuityProfile continuity_profile(const PeakSystem& system, ClosedPoint z, cplx direction,
                                     std::span<const double> steps);

}  // namespace hardy
