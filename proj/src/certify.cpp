#include "hardy/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hardy/kernels.hpp"

namespace hardy {

Path Path::arc(double theta_begin, double theta_end) {
  if (!(theta_end > theta_begin) || theta_end - theta_begin > kTwoPi + 1e-12)
    throw DomainError("arc path needs 0 < length <= 2 pi");
  Path p;
  p.kind_ = Kind::arc;
  p.t0_ = theta_begin;
  p.t1_ = theta_end;
  return p;
}

Path Path::segment(cplx from, cplx to) {
  Path p;
  p.kind_ = Kind::segment;
  p.t0_ = 0.0;
  p.t1_ = 1.0;
  p.from_ = from;
  p.to_ = to;
  return p;
}

cplx Path::point(double t) const {
  return kind_ == Kind::arc ? std::polar(1.0, t) : from_ + t * (to_ - from_);
}

cplx Path::velocity(double t) const {
  return kind_ == Kind::arc ? cplx(0.0, 1.0) * std::polar(1.0, t) : to_ - from_;
}

cplx Path::acceleration(double t) const {
  return kind_ == Kind::arc ? -std::polar(1.0, t) : cplx(0.0);
}

double Path::enclosing_radius(double t0, double t1) const {
  const double half = 0.5 * (t1 - t0);
  if (kind_ == Kind::arc) return half >= kPi ? 2.0 : 2.0 * std::sin(0.5 * half) * (1.0 + 1e-15);
  return std::abs(to_ - from_) * half;
}

double Path::max_speed() const noexcept { return kind_ == Kind::arc ? 1.0 : std::abs(to_ - from_); }

double Path::max_acceleration() const noexcept { return kind_ == Kind::arc ? 1.0 : 0.0; }

namespace {

double objective(std::span<const AnalyticFn> fns, cplx z) {
  double s = 0.0;
  for (const auto& f : fns) s += std::abs(f(z));
  return s;
}

// Golden-section search for a local maximum inside [a, b]; returns the best
// (t, value) seen, never worse than the starting point.
std::pair<double, double> polish(std::span<const AnalyticFn> fns, const Path& path, double start,
                                 double start_value, double a, double b) {
  constexpr double inv_phi = 0.6180339887498949;
  double best_t = start;
  double best = start_value;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = objective(fns, path.point(x1));
  double f2 = objective(fns, path.point(x2));
  for (int it = 0; it < 80 && b - a > 1e-15; ++it) {
    if (f1 > best) best = f1, best_t = x1;
    if (f2 > best) best = f2, best_t = x2;
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = objective(fns, path.point(x2));
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = objective(fns, path.point(x1));
    }
  }
  if (f1 > best) best = f1, best_t = x1;
  if (f2 > best) best = f2, best_t = x2;
  return {best_t, best};
}

}  // namespace

SupResult maximize_sum_abs(std::span<const AnalyticFn> fns, const Path& path,
                           const CertifyOptions& options) {
  using kernels::Segment;
  using kernels::SegmentBound;
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (!(options.tol > 0.0)) throw DomainError("certification tolerance must be positive");
  if (options.initial_segments == 0) throw DomainError("need at least one initial segment");

  SupResult result;
  if (fns.empty()) {
    result.bound = {0.0, 0.0, "empty sum"};
    result.argmax = path.point(path.begin());
    result.argmax_parameter = path.begin();
    return result;
  }

  const kernels::SegmentBoundParams params{options.safety};
  std::vector<Segment> active;
  active.reserve(options.initial_segments);
  const double span_len = path.end() - path.begin();
  for (std::size_t i = 0; i < options.initial_segments; ++i) {
    const double a = path.begin() + span_len * static_cast<double>(i) / options.initial_segments;
    const double b = i + 1 == options.initial_segments
                         ? path.end()
                         : path.begin() + span_len * static_cast<double>(i + 1) /
                                              options.initial_segments;
    active.push_back({a, b});
  }

  double lower = -inf;
  double best_t = path.begin();
  double best_half = 0.5 * span_len / options.initial_segments;
  double retired = -inf;
  std::size_t evaluated = 0;
  std::size_t levels = 0;
  double finest = span_len / options.initial_segments;
  std::vector<SegmentBound> bounds;
  std::vector<Segment> next;

  while (!active.empty()) {
    if (evaluated + active.size() > options.budget) {
      double open_upper = retired;
      for (std::size_t i = 0; i < bounds.size(); ++i) open_upper = std::max(open_upper, bounds[i].upper);
      std::ostringstream msg;
      msg << "certification budget of " << options.budget << " segments exhausted after "
          << levels << " levels: best value " << lower << ", open upper bound " << open_upper
          << ", requested tolerance " << options.tol;
      throw CertificationError(msg.str());
    }
    bounds.resize(active.size());
    if (options.exec == ExecPolicy::parallel)
      kernels::bound_segments_omp(fns, path, active, bounds, params);
    else
      kernels::bound_segments_serial(fns, path, active, bounds, params);
    evaluated += active.size();
    ++levels;

    for (std::size_t i = 0; i < active.size(); ++i) {
      if (bounds[i].lower > lower) {
        lower = bounds[i].lower;
        best_t = bounds[i].mid;
        best_half = 0.5 * (active[i].t1 - active[i].t0);
      }
    }
    next.clear();
    for (std::size_t i = 0; i < active.size(); ++i) {
      if (bounds[i].upper <= lower + 2.0 * options.tol) {
        retired = std::max(retired, bounds[i].upper);
      } else {
        const double m = 0.5 * (active[i].t0 + active[i].t1);
        next.push_back({active[i].t0, m});
        next.push_back({m, active[i].t1});
        finest = std::min(finest, 0.5 * (active[i].t1 - active[i].t0));
      }
    }
    active.swap(next);
  }

  const auto [t_star, refined] =
      polish(fns, path, best_t, lower, std::max(path.begin(), best_t - best_half),
             std::min(path.end(), best_t + best_half));
  if (refined > lower) {
    lower = refined;
    best_t = t_star;
  }
  const double upper = std::max(retired, lower);

  std::ostringstream method;
  method << "adaptive-bisection segments=" << evaluated << " levels=" << levels
         << " finest=" << finest << " safety=" << options.safety
         << " exec=" << (options.exec == ExecPolicy::parallel ? "openmp" : "serial");
  result.bound = {0.5 * (upper + lower), 0.5 * (upper - lower), method.str()};
  result.argmax = path.point(best_t);
  result.argmax_parameter = best_t;
  result.segments = evaluated;
  return result;
}

namespace {
void require_pole_free(std::span<const AnalyticFn> fns) {
  for (const auto& f : fns)
    if (!(f.min_pole_modulus() > 1.0))
      throw DomainError("function has a pole in the closed unit disk");
}
}  // namespace

CertifiedBound sup_norm_boundary(const AnalyticFn& f, const CertifyOptions& options) {
  const AnalyticFn fns[] = {f};
  require_pole_free(fns);
  return maximize_sum_abs(fns, Path::arc(0.0, kTwoPi), options).bound;
}

SupResult sup_abs_sum(std::span<const AnalyticFn> fns, const CertifyOptions& options) {
  require_pole_free(fns);
  return maximize_sum_abs(fns, Path::arc(0.0, kTwoPi), options);
}

}  // namespace hardy
