#pragma once

#include <array>
#include <cmath>
#include <type_traits>

namespace faultstab {

// Forward-mode derivative scalar carrying N directional derivatives.
// Nest (Jet<Jet<double,1>,3> etc.) for mixed higher derivatives. All kernel
// code is templated on the scalar type, so derivatives of the closed-form
// kernels are exact chain-rule values, not difference quotients.
template <class T, int N>
struct Jet {
  T v{};
  std::array<T, N> d{};

  Jet() = default;
  Jet(const T& value) : v(value) {}  // NOLINT: implicit constants are the point
  template <class U = T>
    requires(!std::is_same_v<U, double>)
  Jet(double value) : v(value) {}

  static Jet seeded(const T& value, int dir) {
    Jet j(value);
    j.d[dir] = T(1.0);
    return j;
  }

  Jet operator-() const {
    Jet r(-v);
    for (int i = 0; i < N; ++i) r.d[i] = -d[i];
    return r;
  }

  Jet& operator+=(const Jet& o) {
    v += o.v;
    for (int i = 0; i < N; ++i) d[i] += o.d[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    v -= o.v;
    for (int i = 0; i < N; ++i) d[i] -= o.d[i];
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }

  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r(a.v * b.v);
    for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
    return r;
  }
  friend Jet operator/(const Jet& a, const Jet& b) {
    Jet r(a.v / b.v);
    for (int i = 0; i < N; ++i) r.d[i] = (a.d[i] - r.v * b.d[i]) / b.v;
    return r;
  }

  friend Jet sqrt(const Jet& a) {
    using std::sqrt;
    Jet r(sqrt(a.v));
    const T half_inv = T(0.5) / r.v;
    for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * half_inv;
    return r;
  }
  friend Jet log(const Jet& a) {
    using std::log;
    Jet r(log(a.v));
    for (int i = 0; i < N; ++i) r.d[i] = a.d[i] / a.v;
    return r;
  }
  friend Jet exp(const Jet& a) {
    using std::exp;
    Jet r(exp(a.v));
    for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * r.v;
    return r;
  }
  friend Jet sin(const Jet& a) {
    using std::cos;
    using std::sin;
    Jet r(sin(a.v));
    const T c = cos(a.v);
    for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * c;
    return r;
  }
  friend Jet cos(const Jet& a) {
    using std::cos;
    using std::sin;
    Jet r(cos(a.v));
    const T s = sin(a.v);
    for (int i = 0; i < N; ++i) r.d[i] = -(a.d[i] * s);
    return r;
  }
};

// Innermost double value of any jet nesting depth.
inline double scalar_value(double x) { return x; }
template <class T, int N>
double scalar_value(const Jet<T, N>& j) {
  return scalar_value(j.v);
}

using Jet3 = Jet<double, 3>;          // gradient in one pass
using Jet1 = Jet<double, 1>;          // single directional derivative
using Jet1x1 = Jet<Jet1, 1>;          // second derivative, one direction each
using Jet3x1 = Jet<Jet1, 3>;          // gradient of a directional derivative

}  // namespace faultstab
