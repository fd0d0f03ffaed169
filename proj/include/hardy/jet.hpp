#pragma once

#include <complex>

#include "hardy/ball.hpp"

namespace hardy {

// Second-order Taylor jet (f, f', f'') carried through arithmetic. With
// T = std::complex<double> it is forward-mode differentiation at a point;
// with T = Ball it encloses f, f' and f'' over a whole disk.
template <class T>
struct Jet {
  T v{};
  T d1{};
  T d2{};

  static Jet constant(const T& c) { return {c, T(0.0), T(0.0)}; }
  static Jet variable(const T& z) { return {z, T(1.0), T(0.0)}; }
};

template <class T>
Jet<T> operator+(const Jet<T>& a, const Jet<T>& b) {
  return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2};
}

template <class T>
Jet<T> operator-(const Jet<T>& a, const Jet<T>& b) {
  return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2};
}

template <class T>
Jet<T> operator*(const Jet<T>& a, const Jet<T>& b) {
  return {a.v * b.v, a.d1 * b.v + a.v * b.d1,
          a.d2 * b.v + T(2.0) * (a.d1 * b.d1) + a.v * b.d2};
}

template <class T>
Jet<T> scale(const T& s, const Jet<T>& a) {
  return {s * a.v, s * a.d1, s * a.d2};
}

template <class T>
T jet_reciprocal_value(const T& x) {
  if constexpr (std::is_same_v<T, Ball>) {
    return reciprocal(x);
  } else {
    return T(1.0) / x;
  }
}

template <class T>
Jet<T> reciprocal(const Jet<T>& a) {
  const T h = jet_reciprocal_value(a.v);
  const T h2 = h * h;
  return {h, T(0.0) - a.d1 * h2, h2 * (T(2.0) * (a.d1 * a.d1) * h - a.d2)};
}

template <class T>
Jet<T> operator/(const Jet<T>& a, const Jet<T>& b) {
  return a * reciprocal(b);
}

// g^k for k >= 0 through the chain rule.
template <class T>
Jet<T> ipow(const Jet<T>& g, int k) {
  if (k == 0) return Jet<T>::constant(T(1.0));
  if (k == 1) return g;
  const T pk2 = ipow(g.v, k - 2);
  const T pk1 = pk2 * g.v;
  const T pk = pk1 * g.v;
  const T kk(static_cast<double>(k));
  const T kk1(static_cast<double>(k) * (k - 1));
  return {pk, kk * pk1 * g.d1, kk1 * pk2 * (g.d1 * g.d1) + kk * pk1 * g.d2};
}

}  // namespace hardy
