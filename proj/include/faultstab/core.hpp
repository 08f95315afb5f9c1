#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace faultstab {

/// Isotropic elastic moduli. Both constants must be positive.
struct LameParams {
  double lambda;
  double mu;

  LameParams(double lambda_, double mu_) : lambda(lambda_), mu(mu_) {
    if (!(lambda > 0.0) || !(mu > 0.0))
      throw std::invalid_argument("LameParams: lambda and mu must be positive");
  }
};

template <class T>
struct Vec3 {
  T x{}, y{}, z{};

  Vec3() = default;
  Vec3(T x_, T y_, T z_) : x(x_), y(y_), z(z_) {}

  T& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  const T& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(const T& s) const { return {x * s, y * s, z * s}; }

  friend Vec3 operator*(const T& s, const Vec3& v) { return v * s; }

  T dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  T squared_norm() const { return dot(*this); }
};

template <class T>
struct Mat3 {
  std::array<std::array<T, 3>, 3> a{};

  T& operator()(int i, int j) { return a[i][j]; }
  const T& operator()(int i, int j) const { return a[i][j]; }

  Mat3 operator+(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = a[i][j] + o(i, j);
    return r;
  }
  Mat3 operator-(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = a[i][j] - o(i, j);
    return r;
  }
  Mat3 operator*(const T& s) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = a[i][j] * s;
    return r;
  }
  Vec3<T> operator*(const Vec3<T>& v) const {
    return {a[0][0] * v.x + a[0][1] * v.y + a[0][2] * v.z,
            a[1][0] * v.x + a[1][1] * v.y + a[1][2] * v.z,
            a[2][0] * v.x + a[2][1] * v.y + a[2][2] * v.z};
  }
  Mat3 transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = a[j][i];
    return r;
  }
  static Mat3 zero() { return {}; }
};

using Point3 = Vec3<double>;
using Direction3 = Vec3<double>;
using Tensor3x3 = Mat3<double>;

inline double frobenius_norm(const Tensor3x3& m) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += m(i, j) * m(i, j);
  return std::sqrt(s);
}

inline double norm(const Vec3<double>& v) { return std::sqrt(v.dot(v)); }

}  // namespace faultstab
