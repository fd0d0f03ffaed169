#include "hardy/analytic_fn.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <limits>

namespace hardy {

namespace {

const std::shared_ptr<const FnNode>& zero_node() {
  static const auto node = std::make_shared<const FnNode>(FnNode{fn::Constant{0.0}});
  return node;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

cplx eval_node(const FnNode& node, cplx z) {
  return std::visit(
      overloaded{
          [](const fn::Constant& n) { return n.c; },
          [z](const fn::PeakPow& n) { return ipow((std::conj(n.a) * z + 1.0) * 0.5, n.q); },
          [z](const fn::CauchyKernel& n) {
            return (1.0 - std::norm(n.b)) / (1.0 - std::conj(n.b) * z);
          },
          [z](const fn::BlaschkeFactor& n) { return (n.b - z) / (1.0 - std::conj(n.b) * z); },
          [z](const fn::Product& n) {
            cplx p = 1.0;
            for (const auto& f : n.factors) p *= f(z);
            return p;
          },
          [z](const fn::Sum& n) {
            cplx s = 0.0;
            for (const auto& t : n.terms) s += t.coef * t.f(z);
            return s;
          },
          [z](const fn::Power& n) { return ipow(n.base(z), n.k); },
          [z](const fn::SchurChain& n) {
            cplx g = 0.0;
            for (std::size_t i = n.nodes.size(); i-- > 0;) {
              const cplx b = n.nodes[i];
              const cplx w = (b - z) / (1.0 - std::conj(b) * z) * g;
              g = (n.params[i] + w) / (1.0 + std::conj(n.params[i]) * w);
            }
            return n.scale * g;
          },
      },
      node.v);
}

template <class T>
T lift(cplx c) {
  return T(c);
}

template <class T>
Jet<T> eval_jet(const FnNode& node, const Jet<T>& z);

template <class T>
Jet<T> blaschke_jet(cplx b, const Jet<T>& z) {
  const Jet<T> num = Jet<T>::constant(lift<T>(b)) - z;
  const Jet<T> den = Jet<T>::constant(lift<T>(1.0)) - scale(lift<T>(std::conj(b)), z);
  return num / den;
}

template <class T>
Jet<T> eval_jet(const FnNode& node, const Jet<T>& z) {
  return std::visit(
      overloaded{
          [](const fn::Constant& n) { return Jet<T>::constant(lift<T>(n.c)); },
          [&z](const fn::PeakPow& n) {
            const Jet<T> u = Jet<T>::constant(lift<T>(0.5)) +
                             scale(lift<T>(0.5 * std::conj(n.a)), z);
            return ipow(u, n.q);
          },
          [&z](const fn::CauchyKernel& n) {
            const Jet<T> den =
                Jet<T>::constant(lift<T>(1.0)) - scale(lift<T>(std::conj(n.b)), z);
            return scale(lift<T>(1.0 - std::norm(n.b)), reciprocal(den));
          },
          [&z](const fn::BlaschkeFactor& n) { return blaschke_jet(n.b, z); },
          [&z](const fn::Product& n) {
            Jet<T> p = Jet<T>::constant(lift<T>(1.0));
            for (const auto& f : n.factors) p = p * eval_jet(f.node(), z);
            return p;
          },
          [&z](const fn::Sum& n) {
            Jet<T> s = Jet<T>::constant(lift<T>(0.0));
            for (const auto& t : n.terms) s = s + scale(lift<T>(t.coef), eval_jet(t.f.node(), z));
            return s;
          },
          [&z](const fn::Power& n) { return ipow(eval_jet(n.base.node(), z), n.k); },
          [&z](const fn::SchurChain& n) {
            Jet<T> g = Jet<T>::constant(lift<T>(0.0));
            const Jet<T> one = Jet<T>::constant(lift<T>(1.0));
            for (std::size_t i = n.nodes.size(); i-- > 0;) {
              const Jet<T> w = blaschke_jet(n.nodes[i], z) * g;
              g = (Jet<T>::constant(lift<T>(n.params[i])) + w) /
                  (one + scale(lift<T>(std::conj(n.params[i])), w));
            }
            return scale(lift<T>(n.scale), g);
          },
      },
      node.v);
}

double pole_modulus(cplx b) {
  const double m = std::abs(b);
  return m == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / m;
}

std::vector<cplx> poly_mul(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  std::vector<cplx> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<cplx> poly_add(std::vector<cplx> a, const std::vector<cplx>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0.0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

std::vector<cplx> poly_scale(cplx s, std::vector<cplx> a) {
  for (auto& c : a) c *= s;
  return a;
}

}  // namespace

AnalyticFn::AnalyticFn() : node_(zero_node()) {}

AnalyticFn::AnalyticFn(std::shared_ptr<const FnNode> node) : node_(std::move(node)) {}

cplx AnalyticFn::operator()(cplx z) const { return eval_node(*node_, z); }

Jet<cplx> AnalyticFn::jet(cplx z) const { return eval_jet(*node_, Jet<cplx>::variable(z)); }

Jet<Ball> AnalyticFn::jet(const Ball& z) const {
  return eval_jet(*node_, Jet<Ball>::variable(z));
}

double AnalyticFn::min_pole_modulus() const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return std::visit(
      overloaded{
          [](const fn::Constant&) { return inf; },
          [](const fn::PeakPow&) { return inf; },
          [](const fn::CauchyKernel& n) { return pole_modulus(n.b); },
          [](const fn::BlaschkeFactor& n) { return pole_modulus(n.b); },
          [](const fn::Product& n) {
            double m = inf;
            for (const auto& f : n.factors) m = std::min(m, f.min_pole_modulus());
            return m;
          },
          [](const fn::Sum& n) {
            double m = inf;
            for (const auto& t : n.terms) m = std::min(m, t.f.min_pole_modulus());
            return m;
          },
          [](const fn::Power& n) { return n.k == 0 ? inf : n.base.min_pole_modulus(); },
          [](const fn::SchurChain& n) {
            double m = inf;
            for (cplx r : polynomial_roots(expand(n).denominator)) m = std::min(m, std::abs(r));
            return m;
          },
      },
      node_->v);
}

bool operator==(const AnalyticFn& a, const AnalyticFn& b) {
  if (a.node_ == b.node_) return true;
  const auto& va = a.node_->v;
  const auto& vb = b.node_->v;
  if (va.index() != vb.index()) return false;
  return std::visit(
      overloaded{
          [&vb](const fn::Constant& n) { return n.c == std::get<fn::Constant>(vb).c; },
          [&vb](const fn::PeakPow& n) {
            const auto& m = std::get<fn::PeakPow>(vb);
            return n.a == m.a && n.q == m.q;
          },
          [&vb](const fn::CauchyKernel& n) { return n.b == std::get<fn::CauchyKernel>(vb).b; },
          [&vb](const fn::BlaschkeFactor& n) {
            return n.b == std::get<fn::BlaschkeFactor>(vb).b;
          },
          [&vb](const fn::Product& n) {
            return n.factors == std::get<fn::Product>(vb).factors;
          },
          [&vb](const fn::Sum& n) {
            const auto& m = std::get<fn::Sum>(vb);
            if (n.terms.size() != m.terms.size()) return false;
            for (std::size_t i = 0; i < n.terms.size(); ++i)
              if (n.terms[i].coef != m.terms[i].coef || !(n.terms[i].f == m.terms[i].f))
                return false;
            return true;
          },
          [&vb](const fn::Power& n) {
            const auto& m = std::get<fn::Power>(vb);
            return n.k == m.k && n.base == m.base;
          },
          [&vb](const fn::SchurChain& n) {
            const auto& m = std::get<fn::SchurChain>(vb);
            return n.scale == m.scale && n.nodes == m.nodes && n.params == m.params;
          },
      },
      va);
}

namespace {
AnalyticFn make(auto node) {
  return AnalyticFn(std::make_shared<const FnNode>(FnNode{std::move(node)}));
}
}  // namespace

AnalyticFn constant(cplx c) { return make(fn::Constant{c}); }

AnalyticFn peak_pow(BoundaryPoint a, int q) {
  if (q < 1) throw DomainError("peak exponent must be a positive integer");
  return make(fn::PeakPow{a.value(), q});
}

AnalyticFn cauchy_kernel(InteriorPoint b) { return make(fn::CauchyKernel{b.value()}); }

AnalyticFn blaschke_factor(InteriorPoint b) { return make(fn::BlaschkeFactor{b.value()}); }

AnalyticFn product(std::vector<AnalyticFn> factors) {
  return make(fn::Product{std::move(factors)});
}

AnalyticFn sum(std::vector<fn::Term> terms) { return make(fn::Sum{std::move(terms)}); }

AnalyticFn power(AnalyticFn base, int k) {
  if (k < 0) throw DomainError("power exponent must be non-negative");
  return make(fn::Power{std::move(base), k});
}

AnalyticFn schur_chain(double scale, std::vector<cplx> nodes, std::vector<cplx> params) {
  if (nodes.size() != params.size())
    throw DomainError("schur chain needs one parameter per node");
  for (cplx b : nodes)
    if (!(std::abs(b) < 1.0)) throw DomainError("schur chain node outside the open disk");
  for (cplx g : params)
    if (!(std::abs(g) < 1.0)) throw DomainError("schur parameter must lie in the open disk");
  return make(fn::SchurChain{scale, std::move(nodes), std::move(params)});
}

AnalyticFn operator*(cplx c, const AnalyticFn& f) { return sum({fn::Term{c, f}}); }

AnalyticFn operator+(const AnalyticFn& f, const AnalyticFn& g) {
  return sum({fn::Term{1.0, f}, fn::Term{1.0, g}});
}

AnalyticFn operator*(const AnalyticFn& f, const AnalyticFn& g) { return product({f, g}); }

RationalForm expand(const fn::SchurChain& chain) {
  RationalForm out{{0.0}, {1.0}};
  const std::size_t n = chain.nodes.size();
  if (n == 0) return out;
  out.numerator = {chain.params[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    const cplx b = chain.nodes[i];
    const cplx g = chain.params[i];
    const std::vector<cplx> num_b{b, -1.0};
    const std::vector<cplx> den_b{1.0, -std::conj(b)};
    const auto bq = poly_mul(den_b, out.denominator);
    const auto ap = poly_mul(num_b, out.numerator);
    out.numerator = poly_add(poly_scale(g, bq), ap);
    out.denominator = poly_add(bq, poly_scale(std::conj(g), ap));
  }
  out.numerator = poly_scale(chain.scale, std::move(out.numerator));
  return out;
}

std::vector<cplx> polynomial_roots(std::vector<cplx> coeffs, double trim) {
  double biggest = 0.0;
  for (cplx c : coeffs) biggest = std::max(biggest, std::abs(c));
  while (coeffs.size() > 1 && std::abs(coeffs.back()) <= trim * biggest) coeffs.pop_back();
  const std::size_t degree = coeffs.size() - 1;
  if (degree == 0) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
  for (std::size_t i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < degree; ++i) companion(i, degree - 1) = -coeffs[i] / coeffs[degree];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<cplx> roots(degree);
  for (std::size_t i = 0; i < degree; ++i) roots[i] = solver.eigenvalues()[i];
  return roots;
}

}  // namespace hardy
