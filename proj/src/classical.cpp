#include "hardy/classical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "hardy/errors.hpp"

namespace hardy {

LacunarySet lacunary_set(std::int64_t q_num, std::int64_t q_den, std::size_t count,
                         std::int64_t first) {
  if (q_den <= 0 || q_num <= q_den) throw DomainError("lacunary ratio must be a rational q > 1");
  if (first < 1) throw DomainError("first frequency must be >= 1");
  LacunarySet s{q_num, q_den, {}};
  if (count == 0) return s;
  s.frequencies.push_back(first);
  while (s.frequencies.size() < count) {
    const std::int64_t last = s.frequencies.back();
    std::int64_t prod = 0;
    if (__builtin_mul_overflow(last, q_num, &prod)) {
      std::ostringstream msg;
      msg << "lacunary set overflows 64-bit integers after " << s.frequencies.size() << " terms";
      throw DomainError(msg.str());
    }
    s.frequencies.push_back(prod / q_den + (prod % q_den != 0 ? 1 : 0));
  }
  return s;
}

bool ratio_condition_holds(const LacunarySet& set) {
  for (std::size_t k = 1; k < set.frequencies.size(); ++k) {
    // lambda_{k+1} q_den >= q_num lambda_k, compared without overflow
    const boost::multiprecision::cpp_int lhs = boost::multiprecision::cpp_int(set.frequencies[k]) * set.q_den;
    const boost::multiprecision::cpp_int rhs = boost::multiprecision::cpp_int(set.frequencies[k - 1]) * set.q_num;
    if (lhs < rhs) return false;
  }
  return true;
}

namespace {

double poly_abs(std::span<const std::int64_t> freq, std::span<const cplx> alpha, double t) {
  cplx s = 0.0;
  for (std::size_t j = 0; j < freq.size(); ++j)
    s += alpha[j] * std::polar(1.0, std::fmod(static_cast<double>(freq[j]) * t, kTwoPi));
  return std::abs(s);
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

SupEstimate trig_sup(std::span<const std::int64_t> frequencies, std::span<const cplx> alpha,
                     std::size_t grid) {
  if (frequencies.size() != alpha.size()) throw DomainError("one coefficient per frequency");
  if (grid < 8) throw DomainError("grid must have at least 8 points");
  const auto G = static_cast<std::int64_t>(grid);
  std::vector<cplx> roots(grid);
  for (std::size_t m = 0; m < grid; ++m) roots[m] = std::polar(1.0, kTwoPi * m / grid);
  std::vector<std::int64_t> reduced(frequencies.size());
  for (std::size_t j = 0; j < frequencies.size(); ++j)
    reduced[j] = ((frequencies[j] % G) + G) % G;

  std::vector<double> values(grid);
#pragma omp parallel for schedule(static)
  for (std::int64_t m = 0; m < G; ++m) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < reduced.size(); ++j)
      s += alpha[j] * roots[static_cast<std::size_t>((reduced[j] * m) % G)];
    values[static_cast<std::size_t>(m)] = std::abs(s);
  }

  // Local maxima of the grid, best first.
  std::vector<std::size_t> peaks;
  for (std::size_t m = 0; m < grid; ++m) {
    const double v = values[m];
    if (v >= values[(m + grid - 1) % grid] && v >= values[(m + 1) % grid]) peaks.push_back(m);
  }
  std::sort(peaks.begin(), peaks.end(), [&](std::size_t a, std::size_t b) {
    return values[a] > values[b] || (values[a] == values[b] && a < b);
  });
  if (peaks.size() > 8) peaks.resize(8);

  SupEstimate out;
  for (std::size_t m = 0; m < grid; ++m)
    if (values[m] > out.grid_sup) out.grid_sup = values[m], out.argmax = kTwoPi * m / grid;
  out.sup = out.grid_sup;

  const double h = kTwoPi / static_cast<double>(grid);
  constexpr double inv_phi = 0.6180339887498949;
  for (const std::size_t m : peaks) {
    double a = kTwoPi * m / grid - h;
    double b = a + 2.0 * h;
    double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
    double f1 = poly_abs(frequencies, alpha, x1), f2 = poly_abs(frequencies, alpha, x2);
    for (int it = 0; it < 100 && b - a > 1e-15; ++it) {
      if (f1 > out.sup) out.sup = f1, out.argmax = x1;
      if (f2 > out.sup) out.sup = f2, out.argmax = x2;
      if (f1 < f2) {
        a = x1, x1 = x2, f1 = f2;
        x2 = a + inv_phi * (b - a);
        f2 = poly_abs(frequencies, alpha, x2);
      } else {
        b = x2, x2 = x1, f2 = f1;
        x1 = b - inv_phi * (b - a);
        f1 = poly_abs(frequencies, alpha, x1);
      }
    }
    if (f1 > out.sup) out.sup = f1, out.argmax = x1;
    if (f2 > out.sup) out.sup = f2, out.argmax = x2;
  }
  out.argmax = std::fmod(out.argmax + kTwoPi, kTwoPi);
  return out;
}

double sidon_ratio(const LacunarySet& set, std::span<const cplx> alpha, std::size_t grid) {
  if (alpha.size() != set.frequencies.size()) throw DomainError("one coefficient per frequency");
  double l1 = 0.0;
  for (const cplx& a : alpha) l1 += std::abs(a);
  if (l1 == 0.0) throw DomainError("coefficient vector is zero");
  const SupEstimate s = trig_sup(set.frequencies, alpha, grid);
  // |P| <= sum |alpha| always; rounding may push the estimate past it.
  return l1 / std::min(s.sup, l1);
}

SidonEstimate empirical_sidon_constant(const LacunarySet& set, std::size_t trials,
                                       std::uint64_t seed, std::size_t grid) {
  const std::size_t n = set.frequencies.size();
  if (n == 0) throw DomainError("empty frequency set");
  std::vector<std::vector<cplx>> candidates;
  candidates.emplace_back(n, cplx(1.0));
  std::vector<cplx> alt(n);
  for (std::size_t j = 0; j < n; ++j) alt[j] = j % 2 == 0 ? 1.0 : -1.0;
  candidates.push_back(alt);
  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(splitmix(seed ^ splitmix(t)));
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<cplx> a(n);
    for (std::size_t j = 0; j < n; ++j)
      a[j] = t % 2 == 0 ? std::polar(1.0, kTwoPi * u(rng)) : cplx(u(rng) < 0.5 ? -1.0 : 1.0);
    candidates.push_back(std::move(a));
  }

  std::vector<double> ratios(candidates.size());
  const auto count = static_cast<std::ptrdiff_t>(candidates.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < count; ++i)
    ratios[static_cast<std::size_t>(i)] = sidon_ratio(set, candidates[static_cast<std::size_t>(i)], grid);

  SidonEstimate e;
  e.trials = trials;
  e.value = 0.0;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (ratios[i] > e.value) e.value = ratios[i], e.witness = candidates[i];
  return e;
}

namespace {

// 314159265/10^8 < pi
const Rational kTwoPiLower = Rational(2) * Rational(314159265, 100000000);

}  // namespace

std::vector<Rational> geometric_schedule(const Rational& length, std::size_t depth) {
  std::vector<Rational> rho;
  Rational r = length;
  for (std::size_t k = 1; k <= depth; ++k) {
    r /= 4;
    rho.push_back(r);
  }
  return rho;
}

CantorSpec cantor_sequence(const Rational& alpha, const Rational& beta, std::vector<Rational> rho,
                           const Rational& offset) {
  if (!(beta > alpha)) throw DomainError("cantor: need alpha < beta");
  if (!(beta - alpha < kTwoPiLower)) throw DomainError("cantor: beta - alpha must be < 2 pi");
  if (!(offset > 0 && offset < 1)) throw DomainError("cantor: offset must lie in (0, 1)");
  CantorSpec s;
  s.alpha = alpha;
  s.beta = beta;
  s.depth = rho.size();
  s.offset = offset;
  Rational removed = 0;
  Rational weight = 1;
  for (const Rational& r : rho) {
    if (!(r > 0)) throw DomainError("cantor: removal lengths must be positive");
    removed += weight * r;
    weight *= 2;
  }
  s.residual = (beta - alpha) - removed;
  if (!(s.residual > 0)) throw DomainError("cantor: infeasible schedule, sum 2^{k-1} rho_k >= beta - alpha");
  s.rho = std::move(rho);

  std::vector<std::pair<Rational, Rational>> pieces{{alpha, beta}};
  std::size_t n = 1;
  for (std::size_t k = 1; k <= s.depth; ++k) {
    const Rational& r = s.rho[k - 1];
    std::vector<std::pair<Rational, Rational>> next;
    next.reserve(2 * pieces.size());
    for (const auto& [lo, hi] : pieces) {
      const Rational len = hi - lo;
      if (!(len > r)) throw DomainError("cantor: a removal does not fit its piece");
      RemovedInterval iv;
      iv.n = n++;
      iv.level = k;
      iv.b = lo + (len - r) / 2;
      iv.c = iv.b + r;
      iv.x = iv.b + offset * r;
      iv.separation = std::min(iv.x - iv.b, iv.c - iv.x);
      next.emplace_back(lo, iv.b);
      next.emplace_back(iv.c, hi);
      s.intervals.push_back(std::move(iv));
    }
    pieces.swap(next);
  }

  if (!s.intervals.empty()) {
    s.min_separation = s.intervals.front().separation;
    for (const auto& iv : s.intervals) s.min_separation = std::min(s.min_separation, iv.separation);
    std::vector<Rational> xs;
    for (const auto& iv : s.intervals) xs.push_back(iv.x);
    std::sort(xs.begin(), xs.end());
    if (xs.size() > 1) {
      s.min_pairwise = xs[1] - xs[0];
      for (std::size_t i = 2; i < xs.size(); ++i) s.min_pairwise = std::min(s.min_pairwise, Rational(xs[i] - xs[i - 1]));
    }
  }
  return s;
}

std::vector<cplx> CantorSpec::boundary_sequence() const {
  std::vector<cplx> a;
  a.reserve(intervals.size());
  for (const auto& iv : intervals) a.push_back(std::polar(1.0, static_cast<double>(iv.x)));
  return a;
}

namespace {

// Decimal integer with optional sign; leading zeros never mean octal here.
boost::multiprecision::cpp_int parse_integer(std::string t) {
  bool negative = false;
  if (!t.empty() && (t.front() == '-' || t.front() == '+')) {
    negative = t.front() == '-';
    t.erase(0, 1);
  }
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("not an integer");
  const auto nz = t.find_first_not_of('0');
  t = nz == std::string::npos ? "0" : t.substr(nz);
  boost::multiprecision::cpp_int v(t);
  return negative ? -v : v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto bad = [&] { return DomainError("not a rational number: '" + text + "'"); };
  try {
    if (const auto slash = text.find('/'); slash != std::string::npos) {
      const auto num = parse_integer(text.substr(0, slash));
      const auto den = parse_integer(text.substr(slash + 1));
      if (den == 0) throw bad();
      return Rational(num, den);
    }
    if (const auto dot = text.find('.'); dot != std::string::npos) {
      const std::string frac = text.substr(dot + 1);
      std::string whole = text.substr(0, dot);
      if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) throw bad();
      const bool negative = !whole.empty() && whole.front() == '-';
      if (whole.empty() || whole == "-" || whole == "+") whole += "0";
      boost::multiprecision::cpp_int scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      const Rational w(parse_integer(whole));
      const Rational f(parse_integer(frac), scale);
      return negative ? Rational(w - f) : Rational(w + f);
    }
    return Rational(parse_integer(text));
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception&) {
    throw bad();
  }
}

}  // namespace hardy
