#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "faultstab/core.hpp"
#include "faultstab/jet.hpp"

namespace faultstab {

namespace detail {
inline constexpr double pi = std::numbers::pi;

// Source-derivative triple dK[i][j][l] = d K_ij / d y_l for a kernel built
// from a point-force tensor; used by the dislocation contraction below.
template <class T>
using Grad33 = std::array<std::array<std::array<T, 3>, 3>, 3>;

// H_ij(x,y,v) = C_jqkl v_q dN[i][k][l] where C is the isotropic stiffness:
// row i of the result is the source-side traction of row i of N.
template <class T>
Mat3<T> contract_source_traction(const LameParams& p, const Grad33<T>& dN,
                                 const Vec3<double>& v) {
  Mat3<T> out;
  for (int i = 0; i < 3; ++i) {
    T trace = dN[i][0][0] + dN[i][1][1] + dN[i][2][2];
    for (int j = 0; j < 3; ++j) {
      T acc = trace * (p.lambda * v[j]);
      for (int q = 0; q < 3; ++q)
        acc += (dN[i][j][q] + dN[i][q][j]) * (p.mu * v[q]);
      out(i, j) = acc;
    }
  }
  return out;
}
}  // namespace detail

/// Kelvin's tensor K_ij = [(lambda+mu) d_i d_j / r^2 + (lambda+3mu) delta_ij]
/// / (8 pi mu (lambda+2mu) r), d = x - y.
template <class T>
Mat3<T> kelvin_tensor_t(const LameParams& p, const Vec3<T>& x, const Vec3<T>& y) {
  const Vec3<T> d = x - y;
  const T r2 = d.squared_norm();
  const T r = sqrt(r2);
  const double kc = 1.0 / (8.0 * detail::pi * p.mu * (p.lambda + 2.0 * p.mu));
  const T inv_r = T(1.0) / r;
  const T inv_r3 = inv_r / r2;
  Mat3<T> k;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      T e = d[i] * d[j] * inv_r3 * (p.lambda + p.mu);
      if (i == j) e += inv_r * (p.lambda + 3.0 * p.mu);
      k(i, j) = e * kc;
    }
  return k;
}

inline Tensor3x3 kelvin_tensor(const LameParams& p, const Point3& x, const Point3& y) {
  if ((x - y).squared_norm() == 0.0)
    throw std::domain_error("kelvin_tensor: coincident points");
  return kelvin_tensor_t<double>(p, x, y);
}

/// sigma_ij = lambda tr(grad_u) delta_ij + mu (grad_u_ij + grad_u_ji).
template <class T>
Mat3<T> stress_tensor_t(const LameParams& p, const Mat3<T>& grad_u) {
  const T tr = grad_u(0, 0) + grad_u(1, 1) + grad_u(2, 2);
  Mat3<T> s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      T e = (grad_u(i, j) + grad_u(j, i)) * p.mu;
      if (i == j) e += tr * p.lambda;
      s(i, j) = e;
    }
  return s;
}

inline Tensor3x3 stress_tensor(const LameParams& p, const Tensor3x3& grad_u) {
  return stress_tensor_t<double>(p, grad_u);
}

/// Stress vector sigma(u) e.
template <class T>
Vec3<T> traction_vector_t(const LameParams& p, const Mat3<T>& grad_u,
                          const Vec3<double>& e) {
  const Mat3<T> s = stress_tensor_t(p, grad_u);
  Vec3<T> t;
  for (int i = 0; i < 3; ++i)
    t[i] = s(i, 0) * e[0] + s(i, 1) * e[1] + s(i, 2) * e[2];
  return t;
}

inline Vec3<double> traction_vector(const LameParams& p, const Tensor3x3& grad_u,
                                    const Direction3& e) {
  return traction_vector_t<double>(p, grad_u, e);
}

/// Closed-form source gradient dK_ij/dy_l of Kelvin's tensor.
template <class T>
detail::Grad33<T> kelvin_grad_y(const LameParams& p, const Vec3<T>& x,
                                const Vec3<T>& y) {
  const Vec3<T> d = x - y;
  const T r2 = d.squared_norm();
  const T r = sqrt(r2);
  const double kc = 1.0 / (8.0 * detail::pi * p.mu * (p.lambda + 2.0 * p.mu));
  const double lm = p.lambda + p.mu;
  const double l3m = p.lambda + 3.0 * p.mu;
  const T inv_r3 = T(1.0) / (r * r2);
  const T inv_r5 = inv_r3 / r2;
  detail::Grad33<T> g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 3; ++l) {
        T e = d[i] * d[j] * d[l] * inv_r5 * (3.0 * lm);
        if (i == l) e -= d[j] * inv_r3 * lm;
        if (j == l) e -= d[i] * inv_r3 * lm;
        if (i == j) e += d[l] * inv_r3 * l3m;
        g[i][j][l] = e * kc;
      }
  return g;
}

/// Free-space dislocation kernel G(x,y,v) = (T_{v(y)} K)^T: displacement at x
/// from an infinitesimal dislocation at y with (area-weighted) normal v.
template <class T>
Mat3<T> free_space_kernel_t(const LameParams& p, const Vec3<T>& x,
                            const Vec3<T>& y, const Vec3<double>& v) {
  return detail::contract_source_traction(p, kelvin_grad_y(p, x, y), v);
}

inline Tensor3x3 free_space_kernel(const LameParams& p, const Point3& x,
                                   const Point3& y, const Direction3& v) {
  if ((x - y).squared_norm() == 0.0)
    throw std::domain_error("free_space_kernel: coincident points");
  return free_space_kernel_t<double>(p, x, y, v);
}

}  // namespace faultstab
