#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace faultstab {

/// Axis-aligned rectangle in the (y1, y2) plane.
struct Rect {
  double lo1, hi1, lo2, hi2;

  double width1() const { return hi1 - lo1; }
  double width2() const { return hi2 - lo2; }
  double area() const { return width1() * width2(); }
  bool contains(double y1, double y2) const {
    return y1 >= lo1 && y1 <= hi1 && y2 >= lo2 && y2 <= hi2;
  }
};

/// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on P_n.
inline void gauss_legendre(int n, std::vector<double>& nodes,
                           std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
}

/// Tensor-product rule over a rectangle, flattened point list.
struct TensorRule {
  std::vector<double> y1, y2, w;

  std::size_t size() const { return w.size(); }
  double weight_sum() const {
    double s = 0.0;
    for (double wi : w) s += wi;
    return s;
  }
};

inline TensorRule tensor_gauss_legendre(const Rect& rect, int q1, int q2) {
  std::vector<double> n1, w1, n2, w2;
  gauss_legendre(q1, n1, w1);
  gauss_legendre(q2, n2, w2);
  const double c1 = 0.5 * (rect.lo1 + rect.hi1), h1 = 0.5 * rect.width1();
  const double c2 = 0.5 * (rect.lo2 + rect.hi2), h2 = 0.5 * rect.width2();
  TensorRule r;
  r.y1.reserve(q1 * q2);
  r.y2.reserve(q1 * q2);
  r.w.reserve(q1 * q2);
  for (int i = 0; i < q1; ++i)
    for (int j = 0; j < q2; ++j) {
      r.y1.push_back(c1 + h1 * n1[i]);
      r.y2.push_back(c2 + h2 * n2[j]);
      r.w.push_back(w1[i] * w2[j] * h1 * h2);
    }
  return r;
}

/// Gauss-Legendre rule on an interval.
inline void gauss_legendre_on(double a, double b, int n,
                              std::vector<double>& nodes,
                              std::vector<double>& weights) {
  gauss_legendre(n, nodes, weights);
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    nodes[i] = c + h * nodes[i];
    weights[i] *= h;
  }
}

}  // namespace faultstab
