#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "faultstab/core.hpp"
#include "faultstab/quadrature.hpp"

namespace faultstab {

/// Plane coefficients m = (a, b, d): the fault plane is
/// x3 = a x1 + b x2 + d over the reference rectangle.
struct PlaneParams {
  double a{}, b{}, d{};

  PlaneParams operator+(const PlaneParams& o) const { return {a + o.a, b + o.b, d + o.d}; }
  PlaneParams operator-(const PlaneParams& o) const { return {a - o.a, b - o.b, d - o.d}; }
  PlaneParams operator*(double t) const { return {a * t, b * t, d * t}; }
  double norm() const { return std::sqrt(a * a + b * b + d * d); }
};

/// Planar fault Gamma_m over a fixed rectangle R, kept strictly below the
/// surface: max over R of (a y1 + b y2 + d) <= -depth_min.
class FaultGeometry {
 public:
  FaultGeometry(PlaneParams m, Rect rect, double depth_min = 0.0)
      : m_(m), rect_(rect), depth_min_(depth_min) {
    if (max_height() > -depth_min)
      throw std::invalid_argument("FaultGeometry: fault reaches above -depth_min");
  }

  const PlaneParams& params() const { return m_; }
  double a() const { return m_.a; }
  double b() const { return m_.b; }
  double d() const { return m_.d; }
  const Rect& rect() const { return rect_; }

  /// Largest x3 attained on the fault (at a corner of R).
  double max_height() const {
    const double ya = m_.a >= 0.0 ? rect_.hi1 : rect_.lo1;
    const double yb = m_.b >= 0.0 ? rect_.hi2 : rect_.lo2;
    return m_.a * ya + m_.b * yb + m_.d;
  }

  Point3 embed(double y1, double y2) const {
    if (!rect_.contains(y1, y2))
      throw std::domain_error("FaultGeometry::embed: point outside R");
    return {y1, y2, m_.a * y1 + m_.b * y2 + m_.d};
  }

  /// Unit normal and surface element sigma; n*sigma = (-a,-b,1) exactly.
  std::pair<Direction3, double> normal_and_area_element() const {
    const double sigma = std::sqrt(1.0 + m_.a * m_.a + m_.b * m_.b);
    return {Direction3{-m_.a / sigma, -m_.b / sigma, 1.0 / sigma}, sigma};
  }

  Direction3 normal_sigma() const { return {-m_.a, -m_.b, 1.0}; }

 private:
  PlaneParams m_;
  Rect rect_;
  double depth_min_;
};

/// Closed box of admissible plane parameters with a uniform depth constraint.
struct AdmissibleSet {
  double a_lo, a_hi;
  double b_lo, b_hi;
  double d_lo, d_hi;
  double depth_min;
  bool exclude_horizontal = false;
  Rect rect;

  bool contains(const PlaneParams& m) const {
    if (m.a < a_lo || m.a > a_hi || m.b < b_lo || m.b > b_hi || m.d < d_lo ||
        m.d > d_hi)
      return false;
    if (exclude_horizontal && m.a == 0.0 && m.b == 0.0) return false;
    const double ya = m.a >= 0.0 ? rect.hi1 : rect.lo1;
    const double yb = m.b >= 0.0 ? rect.hi2 : rect.lo2;
    return m.a * ya + m.b * yb + m.d <= -depth_min;
  }

  template <class Rng>
  PlaneParams sample(Rng& rng) const {
    for (int tries = 0; tries < 100000; ++tries) {
      PlaneParams m{a_lo + (a_hi - a_lo) * rng(), b_lo + (b_hi - b_lo) * rng(),
                    d_lo + (d_hi - d_lo) * rng()};
      if (exclude_horizontal && m.a == 0.0 && m.b == 0.0) continue;
      if (contains(m)) return m;
    }
    throw std::runtime_error("AdmissibleSet::sample: rejection sampling failed");
  }

  FaultGeometry make_geometry(const PlaneParams& m) const {
    if (!contains(m))
      throw std::invalid_argument("AdmissibleSet: parameters outside B");
    return FaultGeometry(m, rect, depth_min);
  }
};

/// Surface observation points (x1, x2, 0) with trapezoid weights for the
/// discrete L2(V) norm.
struct ObservationGrid {
  std::vector<Point3> points;
  std::vector<double> weights;

  static ObservationGrid uniform(const Rect& window, int nx, int ny) {
    if (nx < 2 || ny < 2)
      throw std::invalid_argument("ObservationGrid: need at least 2x2 points");
    ObservationGrid g;
    const double dx = window.width1() / (nx - 1);
    const double dy = window.width2() / (ny - 1);
    g.points.reserve(static_cast<std::size_t>(nx) * ny);
    g.weights.reserve(static_cast<std::size_t>(nx) * ny);
    for (int i = 0; i < nx; ++i)
      for (int j = 0; j < ny; ++j) {
        const double wx = (i == 0 || i == nx - 1) ? 0.5 : 1.0;
        const double wy = (j == 0 || j == ny - 1) ? 0.5 : 1.0;
        g.points.push_back({window.lo1 + i * dx, window.lo2 + j * dy, 0.0});
        g.weights.push_back(wx * wy * dx * dy);
      }
    return g;
  }

  std::size_t size() const { return points.size(); }
};

}  // namespace faultstab
