#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace hardy {

// Closed complex disk {c + w : |w| <= r}. Every operation returns a ball that
// contains all results of the operation applied to members of its inputs.
// Radii are padded by a few ulps of the center so that double rounding of the
// center computation stays inside the enclosure.
struct Ball {
  std::complex<double> c{};
  double r = 0.0;

  Ball() = default;
  Ball(std::complex<double> center, double radius = 0.0) : c(center), r(radius) {}
  Ball(double center) : c(center), r(0.0) {}

  double upper() const noexcept { return std::abs(c) + r; }
  double lower() const noexcept { return std::abs(c) - r; }
  bool contains_zero() const noexcept { return !(std::abs(c) > r); }
  bool finite() const noexcept { return std::isfinite(r) && std::isfinite(c.real()) && std::isfinite(c.imag()); }
};

namespace detail {
inline constexpr double kUlpPad = 4.0 * std::numeric_limits<double>::epsilon();
inline double pad(std::complex<double> c) { return kUlpPad * std::abs(c); }
}  // namespace detail

inline Ball operator+(const Ball& a, const Ball& b) {
  const std::complex<double> c = a.c + b.c;
  return {c, a.r + b.r + detail::pad(c)};
}

inline Ball operator-(const Ball& a, const Ball& b) {
  const std::complex<double> c = a.c - b.c;
  return {c, a.r + b.r + detail::pad(c)};
}

inline Ball operator-(const Ball& a) { return {-a.c, a.r}; }

inline Ball operator*(const Ball& a, const Ball& b) {
  const std::complex<double> c = a.c * b.c;
  const double r = std::abs(a.c) * b.r + a.r * std::abs(b.c) + a.r * b.r;
  return {c, r + detail::pad(c)};
}

inline Ball reciprocal(const Ball& a) {
  const double m = std::abs(a.c);
  if (!(m > a.r)) return {0.0, std::numeric_limits<double>::infinity()};
  const std::complex<double> c = 1.0 / a.c;
  return {c, a.r / (m * (m - a.r)) + detail::pad(c)};
}

inline Ball operator/(const Ball& a, const Ball& b) { return a * reciprocal(b); }

inline Ball conj(const Ball& a) { return {std::conj(a.c), a.r}; }

// a^k for k >= 0 with the tight radius (|c| + r)^k - |c|^k.
inline Ball ipow(const Ball& a, int k) {
  std::complex<double> c = 1.0;
  std::complex<double> base = a.c;
  for (int e = k; e > 0; e >>= 1) {
    if (e & 1) c *= base;
    base *= base;
  }
  const double m = std::abs(a.c);
  double r;
  if (a.r == 0.0) {
    r = 0.0;
  } else if (m == 0.0 || a.r >= m) {
    r = std::pow(m + a.r, k);
  } else {
    const double mk = std::pow(m, k);
    r = mk == 0.0 ? std::pow(m + a.r, k) : mk * std::expm1(k * std::log1p(a.r / m));
  }
  return {c, r + 2.0 * k * detail::kUlpPad * std::pow(m, k)};
}

inline std::complex<double> ipow(std::complex<double> a, int k) {
  std::complex<double> c = 1.0;
  for (int e = k; e > 0; e >>= 1) {
    if (e & 1) c *= a;
    a *= a;
  }
  return c;
}

}  // namespace hardy
