#include "hardy/peak.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace hardy {

namespace {

// theta - lo reduced to [0, 2 pi)
double offset(double theta, double lo) {
  double d = std::fmod(theta - lo, kTwoPi);
  if (d < 0.0) d += kTwoPi;
  return d;
}

double side(cplx w1, cplx w2, cplx z) { return std::imag(std::conj(w2 - w1) * (z - w1)); }

}  // namespace

bool Arc::contains(double theta) const {
  const double d = offset(theta, lo);
  return d > 0.0 && d < width();
}

bool Arc::closure_contains(double theta) const { return offset(theta, lo) <= width(); }

Arc make_arc(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo) || !(hi - lo < kTwoPi))
    throw DomainError("arc needs lo < hi < lo + 2 pi");
  return {lo, hi};
}

bool arcs_touch(const Arc& a, const Arc& b) {
  return a.closure_contains(b.lo) || b.closure_contains(a.lo);
}

bool in_chord_region(const Arc& arc, cplx z) {
  if (std::abs(z) > 1.0 + kBoundaryTolerance) return false;
  const cplx w1 = arc.start();
  const cplx w2 = arc.finish();
  const double s = side(w1, w2, z);
  const double ref = side(w1, w2, std::polar(1.0, arc.centre()));
  return s != 0.0 && (s > 0.0) == (ref > 0.0);
}

void ArcSystem::validate() const {
  const std::size_t n = arcs.size();
  if (n == 0) throw DomainError("arc system is empty");
  if (points.size() != n || budgets.size() != n)
    throw DomainError("arc system: arcs, points and budgets differ in length");
  if (!(epsilon < 1.0)) throw DomainError("arc system: epsilon must be < 1");
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    make_arc(arcs[i].lo, arcs[i].hi);
    if (!arcs[i].contains(points[i])) {
      std::ostringstream msg;
      msg << "arc system: point " << i << " is not inside its arc";
      throw DomainError(msg.str());
    }
    if (!(budgets[i] > 0.0)) throw DomainError("arc system: budgets must be positive");
    total += budgets[i];
    for (std::size_t j = 0; j < i; ++j)
      if (arcs_touch(arcs[i], arcs[j])) {
        std::ostringstream msg;
        msg << "arc system: closures of arcs " << j << " and " << i << " meet";
        throw DomainError(msg.str());
      }
  }
  if (!(total < epsilon)) throw DomainError("arc system: sum of budgets must be < epsilon");
}

AnalyticFn peak_function(BoundaryPoint a, int q) { return peak_pow(a, q); }

DecayExponent exponent_for_decay(BoundaryPoint a, const Arc& arc, double delta,
                                 const CertifyOptions& options) {
  make_arc(arc.lo, arc.hi);
  if (!(delta > 0.0)) throw DomainError("decay budget must be positive");
  const double theta = std::arg(a.value());
  if (!arc.contains(theta)) throw DomainError("peak point must lie inside the arc");
  if (arc.width() >= kTwoPi - 1e-12)
    throw DomainError("arc complement is a single point; no exponent exists");

  const cplx w1 = arc.start();
  const cplx w2 = arc.finish();
  const double r = 0.5 * std::max(std::abs(w1 + a.value()), std::abs(w2 + a.value()));
  if (!(r < 1.0)) throw DomainError("arc complement is a single point; no exponent exists");

  DecayExponent out;
  out.base = r;
  int q = 1;
  if (delta < 1.0) {
    q = std::max(1, static_cast<int>(std::ceil(std::log(delta) / std::log(r))));
    while (q > 1 && std::pow(r, q - 1) < delta) --q;
    while (std::pow(r, q) >= delta) ++q;
  }

  // The complement of the region is convex; |g| is subharmonic, so its sup
  // there sits on the chord or the complementary arc.
  const Path chord = Path::segment(w1, w2);
  const Path rest = Path::arc(arc.hi, arc.lo + kTwoPi);
  for (int attempt = 0; attempt < 64; ++attempt, ++q) {
    const AnalyticFn g = peak_pow(a, q);
    const AnalyticFn fns[] = {g};
    CertifyOptions local = options;
    const double gap = delta - std::pow(r, q);
    if (gap > 0.0) local.tol = std::max(1e-14, std::min(options.tol, 0.25 * gap));
    const SupResult on_chord = maximize_sum_abs(fns, chord, local);
    const SupResult on_arc = maximize_sum_abs(fns, rest, local);
    const CertifiedBound& worst =
        on_chord.bound.upper() >= on_arc.bound.upper() ? on_chord.bound : on_arc.bound;
    if (worst.upper() < delta) {
      out.q = q;
      out.off_sup = worst;
      return out;
    }
  }
  throw CertificationError("exponent search did not certify the decay budget");
}

PeakSystem build_system(const ArcSystem& spec, std::size_t truncation,
                        const CertifyOptions& options) {
  spec.validate();
  if (truncation == 0 || truncation > spec.size())
    throw DomainError("truncation must lie between 1 and the number of arcs");

  PeakSystem sys;
  sys.arc_system = spec;
  sys.truncation = truncation;
  for (std::size_t n = 0; n < truncation; ++n) {
    const BoundaryPoint a = BoundaryPoint::at_angle(spec.points[n]);
    const DecayExponent e = exponent_for_decay(a, spec.arcs[n], spec.budgets[n], options);
    sys.exponents.push_back(e.q);
    sys.off_region.push_back(e.off_sup);
    sys.functions.push_back(peak_pow(a, e.q));
  }
  sys.tail_budget = std::accumulate(spec.budgets.begin() + static_cast<std::ptrdiff_t>(truncation),
                                    spec.budgets.end(), 0.0);
  sys.bound = sup_abs_sum(sys.functions, options);
  if (sys.bound.bound.upper() > 1.0 + spec.epsilon) {
    std::ostringstream msg;
    msg << "peak system: certified M = " << sys.bound.bound.upper() << " exceeds 1 + epsilon = "
        << 1.0 + spec.epsilon;
    throw ClaimViolation(msg.str());
  }
  return sys;
}

PeakSystem build_system(const ArcSystem& spec, const CertifyOptions& options) {
  return build_system(spec, spec.size(), options);
}

AnalyticFn synthesize(const PeakSystem& system, std::span<const cplx> c) {
  if (c.size() != system.truncation)
    throw DomainError("coefficient vector length differs from the system truncation");
  std::vector<fn::Term> terms;
  terms.reserve(c.size());
  for (std::size_t n = 0; n < c.size(); ++n) terms.push_back({c[n], system.functions[n]});
  return sum(std::move(terms));
}

SynthesisCheck check_synthesis(const PeakSystem& system, std::span<const cplx> c,
                               const CertifyOptions& options) {
  SynthesisCheck out;
  const AnalyticFn h = synthesize(system, c);
  for (const cplx& x : c) out.c_norm = std::max(out.c_norm, std::abs(x));
  out.norm = sup_norm_boundary(h, options);
  const double eps = system.arc_system.epsilon;
  out.lower_ok = out.norm.lower() >= (1.0 - eps) * out.c_norm;
  out.upper_ok = out.norm.upper() <= (1.0 + eps) * out.c_norm;
  return out;
}

EvaluationVector evaluation_functional(const PeakSystem& system, ClosedPoint z) {
  EvaluationVector out;
  out.values.reserve(system.functions.size());
  for (const auto& g : system.functions) {
    out.values.push_back(g(z.value()));
    out.l1 += std::abs(out.values.back());
  }
  return out;
}

ContinuityProfile continuity_profile(const PeakSystem& system, ClosedPoint z, cplx direction,
                                     std::span<const double> steps) {
  if (direction == cplx(0.0)) direction = -z.value();
  if (direction == cplx(0.0)) direction = 1.0;
  direction /= std::abs(direction);
  const EvaluationVector base = evaluation_functional(system, z);

  ContinuityProfile out;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int used = 0;
  for (const double s : steps) {
    const EvaluationVector moved = evaluation_functional(system, ClosedPoint(z.value() + s * direction));
    double d = 0.0;
    for (std::size_t n = 0; n < moved.values.size(); ++n)
      d += std::abs(moved.values[n] - base.values[n]);
    out.steps.push_back(s);
    out.differences.push_back(d);
    if (s > 0.0 && d > 0.0) {
      const double x = std::log(s), y = std::log(d);
      sx += x, sy += y, sxx += x * x, sxy += x * y;
      ++used;
    }
  }
  if (used >= 2) {
    const double den = used * sxx - sx * sx;
    if (den != 0.0) out.rate = (used * sxy - sx * sy) / den;
  }
  return out;
}

}  // namespace hardy
