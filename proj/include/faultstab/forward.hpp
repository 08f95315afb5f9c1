#pragma once

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>
#include <vector>

#include "faultstab/fault.hpp"
#include "faultstab/kernels.hpp"
#include "faultstab/parallel.hpp"
#include "faultstab/quadrature.hpp"
#include "faultstab/slip.hpp"

namespace faultstab {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Diagonal weights of the discrete L2(V) inner product, one entry per
/// (observation point, component) row.
inline VectorXd data_weights(const ObservationGrid& grid) {
  VectorXd w(3 * grid.size());
  for (std::size_t p = 0; p < grid.size(); ++p)
    for (int comp = 0; comp < 3; ++comp)
      w[3 * p + comp] = grid.weights[p];
  return w;
}

inline double weighted_norm(const VectorXd& w, const VectorXd& v) {
  return std::sqrt(v.dot(w.asDiagonal() * v));
}

/// Dense discretization of the fault-to-surface operator A_m: columns are the
/// surface fields of the (g1, g2) sine-basis slips, rows are (point, component).
struct ForwardOperator {
  MatrixXd matrix;  // (3 N_obs) x (2 N_basis)
  FaultGeometry geometry;
  ObservationGrid grid;
  SineBasis basis;
  int quad_order1, quad_order2;
  LameParams lame;

  VectorXd apply(const VectorXd& coeffs) const {
    if (coeffs.size() != matrix.cols())
      throw std::invalid_argument("ForwardOperator::apply: dimension mismatch");
    return matrix * coeffs;
  }
};

namespace detail {
/// Per-quadrature-point surface contributions shared by assemble/phi/jacobian.
/// The integrand is H(x, y, n sigma) applied to the lifted slip
/// g_m = (g1, g2, a g1 + b g2); using n sigma = (-a,-b,1) absorbs the area
/// element, so no square roots enter.
template <class F>
void for_each_quad_point(const FaultGeometry& geom, int q1, int q2, F&& f) {
  TensorRule rule = tensor_gauss_legendre(geom.rect(), q1, q2);
  for (std::size_t k = 0; k < rule.size(); ++k)
    f(rule.y1[k], rule.y2[k], rule.w[k]);
}
}  // namespace detail

inline ForwardOperator assemble(const LameParams& p, const FaultGeometry& geom,
                                const ObservationGrid& grid, int q1, int q2,
                                const SineBasis& basis, int threads = 1) {
  if (q1 < 4 || q2 < 4)
    throw std::invalid_argument("assemble: quadrature orders must be >= 4");
  const int nb = basis.size();
  const std::size_t np = grid.size();
  MatrixXd A = MatrixXd::Zero(3 * np, 2 * nb);
  const Direction3 ns = geom.normal_sigma();

  TensorRule rule = tensor_gauss_legendre(geom.rect(), q1, q2);
  std::vector<double> bv(rule.size() * nb);
  for (std::size_t k = 0; k < rule.size(); ++k)
    for (int j = 0; j < nb; ++j)
      bv[k * nb + j] = basis.eval(j, rule.y1[k], rule.y2[k]);

  parallel_for(np, threads, [&](std::size_t pi) {
    const Point3& x = grid.points[pi];
    for (std::size_t k = 0; k < rule.size(); ++k) {
      const Point3 y = geom.embed(rule.y1[k], rule.y2[k]);
      const Tensor3x3 h = halfspace_kernel(p, x, y, ns);
      // columns of H applied to the lifted basis slips
      for (int j = 0; j < nb; ++j) {
        const double phi = bv[k * nb + j] * rule.w[k];
        if (phi == 0.0) continue;
        // slip (phi, 0): g_m = phi (1, 0, a)
        // slip (0, phi): g_m = phi (0, 1, b)
        for (int i = 0; i < 3; ++i) {
          A(3 * pi + i, j) += phi * (h(i, 0) + geom.a() * h(i, 2));
          A(3 * pi + i, nb + j) += phi * (h(i, 1) + geom.b() * h(i, 2));
        }
      }
    }
  });

  return ForwardOperator{std::move(A), geom, grid, basis, q1, q2, p};
}

/// Geometry-to-data map phi(m) = A_m h for a fixed slip h, evaluated by the
/// same quadrature as assemble (works for all slip kinds, gradients included).
inline VectorXd phi(const LameParams& p, const FaultGeometry& geom,
                    const ObservationGrid& grid, int q1, int q2,
                    const SlipField& h, int threads = 1) {
  const std::size_t np = grid.size();
  VectorXd out = VectorXd::Zero(3 * np);
  const Direction3 ns = geom.normal_sigma();

  TensorRule rule = tensor_gauss_legendre(geom.rect(), q1, q2);
  std::vector<double> g1v(rule.size()), g2v(rule.size());
  for (std::size_t k = 0; k < rule.size(); ++k) {
    auto [g1, g2] = h.eval(rule.y1[k], rule.y2[k]);
    g1v[k] = g1;
    g2v[k] = g2;
  }

  parallel_for(np, threads, [&](std::size_t pi) {
    const Point3& x = grid.points[pi];
    for (std::size_t k = 0; k < rule.size(); ++k) {
      const Point3 y = geom.embed(rule.y1[k], rule.y2[k]);
      const Tensor3x3 hker = halfspace_kernel(p, x, y, ns);
      const Vec3<double> gm{g1v[k], g2v[k],
                            geom.a() * g1v[k] + geom.b() * g2v[k]};
      const Vec3<double> u = hker * gm;
      for (int i = 0; i < 3; ++i) out[3 * pi + i] += rule.w[k] * u[i];
    }
  });
  return out;
}

/// Analytic partial derivatives of phi(m) in the three plane coefficients.
struct GeometryJacobian {
  VectorXd da, db, dd;

  MatrixXd as_matrix() const {
    MatrixXd j(da.size(), 3);
    j.col(0) = da;
    j.col(1) = db;
    j.col(2) = dd;
    return j;
  }

  VectorXd directional(const PlaneParams& q) const {
    return q.a * da + q.b * db + q.d * dd;
  }
};

/// d phi/da = int [ y1 dH/dy3 (n sigma) - H(e1) ] g_m + H(n sigma) (g1 e3),
/// d phi/db analogous with y2, e2, g2; d phi/dd = int dH/dy3 (n sigma) g_m.
inline GeometryJacobian jacobian_phi(const LameParams& p,
                                     const FaultGeometry& geom,
                                     const ObservationGrid& grid, int q1, int q2,
                                     const SlipField& h, int threads = 1) {
  const std::size_t np = grid.size();
  GeometryJacobian jac;
  jac.da = VectorXd::Zero(3 * np);
  jac.db = VectorXd::Zero(3 * np);
  jac.dd = VectorXd::Zero(3 * np);
  const Direction3 ns = geom.normal_sigma();
  const Direction3 e1{1.0, 0.0, 0.0}, e2{0.0, 1.0, 0.0};

  TensorRule rule = tensor_gauss_legendre(geom.rect(), q1, q2);
  std::vector<double> g1v(rule.size()), g2v(rule.size());
  for (std::size_t k = 0; k < rule.size(); ++k) {
    auto [g1, g2] = h.eval(rule.y1[k], rule.y2[k]);
    g1v[k] = g1;
    g2v[k] = g2;
  }

  parallel_for(np, threads, [&](std::size_t pi) {
    const Point3& x = grid.points[pi];
    for (std::size_t k = 0; k < rule.size(); ++k) {
      const double y1 = rule.y1[k], y2 = rule.y2[k], w = rule.w[k];
      const Point3 y = geom.embed(y1, y2);
      const Vec3<double> gm{g1v[k], g2v[k], geom.a() * g1v[k] + geom.b() * g2v[k]};

      const Tensor3x3 hn = halfspace_kernel(p, x, y, ns);
      const Tensor3x3 hd3 = halfspace_kernel_dy3(p, x, y, ns);
      const Tensor3x3 he1 = halfspace_kernel(p, x, y, e1);
      const Tensor3x3 he2 = halfspace_kernel(p, x, y, e2);

      const Vec3<double> t_dd = hd3 * gm;
      const Vec3<double> t_he1 = he1 * gm;
      const Vec3<double> t_he2 = he2 * gm;
      const Vec3<double> t_g1e3 = hn * Vec3<double>{0.0, 0.0, g1v[k]};
      const Vec3<double> t_g2e3 = hn * Vec3<double>{0.0, 0.0, g2v[k]};

      for (int i = 0; i < 3; ++i) {
        jac.da[3 * pi + i] += w * (y1 * t_dd[i] - t_he1[i] + t_g1e3[i]);
        jac.db[3 * pi + i] += w * (y2 * t_dd[i] - t_he2[i] + t_g2e3[i]);
        jac.dd[3 * pi + i] += w * t_dd[i];
      }
    }
  });
  return jac;
}

/// Smallest singular value of the 3-column Jacobian in the weighted inner
/// product; strictly positive at this discretization certifies full rank.
inline double jacobian_min_singular_value(const GeometryJacobian& jac,
                                          const ObservationGrid& grid) {
  const VectorXd w = data_weights(grid);
  MatrixXd jw = w.array().sqrt().matrix().asDiagonal() * jac.as_matrix();
  Eigen::JacobiSVD<MatrixXd> svd(jw);
  return svd.singularValues().minCoeff();
}

/// Truncation policy for the range projector: fixed rank, or a relative
/// singular-value threshold sigma_k / sigma_max >= tau.
struct Truncation {
  std::optional<int> rank;
  std::optional<double> rel_threshold;

  static Truncation fixed_rank(int k) { return {k, std::nullopt}; }
  static Truncation threshold(double tau) { return {std::nullopt, tau}; }
};

/// Orthogonal projector onto the leading left-singular subspace of A_m in the
/// weighted L2(V) inner product. Stored in sqrt-weighted coordinates, where it
/// is an ordinary orthogonal projector.
struct RangeProjector {
  MatrixXd u;           // (3 N_obs) x k, orthonormal columns (weighted coords)
  VectorXd sqrt_w;      // sqrt of the data weights
  VectorXd singular_values;  // all singular values of the weighted operator
  int rank() const { return static_cast<int>(u.cols()); }

  /// || (I - P) data || in the weighted norm.
  double residual_norm(const VectorXd& data) const {
    const VectorXd dw = sqrt_w.asDiagonal() * data;
    const VectorXd proj = u * (u.transpose() * dw);
    return (dw - proj).norm();
  }

  /// P applied to a data vector (returned in unweighted coordinates).
  VectorXd apply(const VectorXd& data) const {
    const VectorXd dw = sqrt_w.asDiagonal() * data;
    const VectorXd proj = u * (u.transpose() * dw);
    return proj.cwiseQuotient(sqrt_w);
  }
};

inline RangeProjector range_projector(const ForwardOperator& op,
                                      const Truncation& trunc) {
  const VectorXd w = data_weights(op.grid);
  const VectorXd sw = w.array().sqrt();
  MatrixXd aw = sw.asDiagonal() * op.matrix;
  Eigen::JacobiSVD<MatrixXd> svd(aw, Eigen::ComputeThinU);
  const VectorXd& sv = svd.singularValues();
  int k;
  if (trunc.rank) {
    k = *trunc.rank;
    if (k < 1 || k > sv.size())
      throw std::invalid_argument("range_projector: rank outside [1, rank(A)]");
  } else if (trunc.rel_threshold) {
    const double cut = *trunc.rel_threshold * sv[0];
    k = 0;
    while (k < sv.size() && sv[k] >= cut) ++k;
    if (k == 0) throw std::invalid_argument("range_projector: empty truncation");
  } else {
    throw std::invalid_argument("range_projector: no truncation specified");
  }
  return RangeProjector{svd.matrixU().leftCols(k), sw, sv};
}

/// Discrete surrogate for inf_h || A_m h - data ||_{L2(V)}: the weighted norm
/// of (I - P_m) data.
inline double min_residual(const RangeProjector& proj, const VectorXd& data) {
  if (data.size() != proj.u.rows())
    throw std::invalid_argument("min_residual: dimension mismatch");
  return proj.residual_norm(data);
}

/// Spectral norm of the difference of two projectors (weighted coordinates).
inline double projector_distance(const RangeProjector& p1,
                                 const RangeProjector& p2) {
  const MatrixXd d = p1.u * p1.u.transpose() - p2.u * p2.u.transpose();
  Eigen::JacobiSVD<MatrixXd> svd(d);
  return svd.singularValues().maxCoeff();
}

}  // namespace faultstab
