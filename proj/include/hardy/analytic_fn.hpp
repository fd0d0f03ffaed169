#pragma once

#include <complex>
#include <memory>
#include <variant>
#include <vector>

#include "hardy/ball.hpp"
#include "hardy/disk.hpp"
#include "hardy/jet.hpp"

namespace hardy {

struct FnNode;

// Immutable closed-form expression tree for a function analytic on a
// neighbourhood of the closed unit disk. Copies share structure; evaluation
// is a pure function of the tree and the point.
class AnalyticFn {
 public:
  AnalyticFn();  // the zero function
  explicit AnalyticFn(std::shared_ptr<const FnNode> node);

  cplx operator()(cplx z) const;
  Jet<cplx> jet(cplx z) const;
  // Encloses f, f', f'' over the disk described by `z`.
  Jet<Ball> jet(const Ball& z) const;

  // Smallest modulus of a pole of the expression; +inf when pole free.
  double min_pole_modulus() const;

  const FnNode& node() const noexcept { return *node_; }

  friend bool operator==(const AnalyticFn& a, const AnalyticFn& b);

 private:
  std::shared_ptr<const FnNode> node_;
};

namespace fn {

struct Constant {
  cplx c;
};

// ((conj(a) z + 1) / 2)^q, a on the circle.
struct PeakPow {
  cplx a;
  int q;
};

// (1 - |b|^2) / (1 - conj(b) z)
struct CauchyKernel {
  cplx b;
};

// (b - z) / (1 - conj(b) z)
struct BlaschkeFactor {
  cplx b;
};

struct Product {
  std::vector<AnalyticFn> factors;
};

struct Term {
  cplx coef;
  AnalyticFn f;
};

struct Sum {
  std::vector<Term> terms;
};

struct Power {
  AnalyticFn base;
  int k;
};

// scale * g_0 where g_n = 0 and
//   g_{i-1}(z) = (gamma_i + phi_i(z) g_i(z)) / (1 + conj(gamma_i) phi_i(z) g_i(z)),
// phi_i the Blaschke factor at nodes[i]. This is the unwound Schur recursion.
struct SchurChain {
  double scale;
  std::vector<cplx> nodes;
  std::vector<cplx> params;
};

}  // namespace fn

struct FnNode {
  std::variant<fn::Constant, fn::PeakPow, fn::CauchyKernel, fn::BlaschkeFactor, fn::Product,
               fn::Sum, fn::Power, fn::SchurChain>
      v;
};

AnalyticFn constant(cplx c);
AnalyticFn peak_pow(BoundaryPoint a, int q);
AnalyticFn cauchy_kernel(InteriorPoint b);
AnalyticFn blaschke_factor(InteriorPoint b);
AnalyticFn product(std::vector<AnalyticFn> factors);
AnalyticFn sum(std::vector<fn::Term> terms);
AnalyticFn power(AnalyticFn base, int k);
AnalyticFn schur_chain(double scale, std::vector<cplx> nodes, std::vector<cplx> params);

AnalyticFn operator*(cplx c, const AnalyticFn& f);
AnalyticFn operator+(const AnalyticFn& f, const AnalyticFn& g);
AnalyticFn operator*(const AnalyticFn& f, const AnalyticFn& g);

// Numerator and denominator coefficients (lowest degree first) of the
// rational function represented by a Schur chain.
struct RationalForm {
  std::vector<cplx> numerator;
  std::vector<cplx> denominator;
};
RationalForm expand(const fn::SchurChain& chain);

// Roots of a polynomial given lowest degree first; leading coefficients
// below `trim` (relative) are dropped.
std::vector<cplx> polynomial_roots(std::vector<cplx> coeffs, double trim = 1e-14);

}  // namespace hardy
