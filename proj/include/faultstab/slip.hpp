#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "faultstab/core.hpp"
#include "faultstab/jet.hpp"
#include "faultstab/quadrature.hpp"

namespace faultstab {

/// Tensor-product sine basis on R, H1_0-conforming by construction:
/// mode (p,q) is sin(p pi t1) sin(q pi t2) with t = normalized coordinates.
struct SineBasis {
  int n1, n2;
  Rect rect;

  int size() const { return n1 * n2; }
  std::pair<int, int> mode(int k) const { return {k / n2 + 1, k % n2 + 1}; }

  double eval(int k, double y1, double y2) const {
    auto [p, q] = mode(k);
    const double t1 = (y1 - rect.lo1) / rect.width1();
    const double t2 = (y2 - rect.lo2) / rect.width2();
    return std::sin(p * std::numbers::pi * t1) * std::sin(q * std::numbers::pi * t2);
  }

  /// Value and in-plane first derivatives of mode k.
  void eval_grad(int k, double y1, double y2, double& v, double& d1,
                 double& d2) const {
    auto [p, q] = mode(k);
    const double w1 = p * std::numbers::pi / rect.width1();
    const double w2 = q * std::numbers::pi / rect.width2();
    const double s1 = std::sin(w1 * (y1 - rect.lo1)), c1 = std::cos(w1 * (y1 - rect.lo1));
    const double s2 = std::sin(w2 * (y2 - rect.lo2)), c2 = std::cos(w2 * (y2 - rect.lo2));
    v = s1 * s2;
    d1 = w1 * c1 * s2;
    d2 = w2 * s1 * c2;
  }

  /// Value, gradient and second derivatives of mode k.
  void eval_hess(int k, double y1, double y2, double& v, double& d1, double& d2,
                 double& d11, double& d12, double& d22) const {
    auto [p, q] = mode(k);
    const double w1 = p * std::numbers::pi / rect.width1();
    const double w2 = q * std::numbers::pi / rect.width2();
    const double s1 = std::sin(w1 * (y1 - rect.lo1)), c1 = std::cos(w1 * (y1 - rect.lo1));
    const double s2 = std::sin(w2 * (y2 - rect.lo2)), c2 = std::cos(w2 * (y2 - rect.lo2));
    v = s1 * s2;
    d1 = w1 * c1 * s2;
    d2 = w2 * s1 * c2;
    d11 = -w1 * w1 * s1 * s2;
    d12 = w1 * w2 * c1 * c2;
    d22 = -w2 * w2 * s1 * s2;
  }
};

enum class SlipKind { free_field, one_directional, gradient };

/// In-plane slip value with first derivatives, for degeneracy diagnostics.
struct SlipJet {
  double g1, g2;
  double d1g1, d2g1, d1g2, d2g2;
};

/// Tangential slip g = (g1, g2) on R in a finite sine basis. Three variants:
/// free coefficients per component, one-directional g = u * V, and
/// gradient g = grad(phi) with phi itself in the sine basis.
class SlipField {
 public:
  static SlipField free_field(SineBasis basis, std::vector<double> c1,
                              std::vector<double> c2) {
    check_size(basis, c1);
    check_size(basis, c2);
    SlipField s(SlipKind::free_field, std::move(basis));
    s.c1_ = std::move(c1);
    s.c2_ = std::move(c2);
    return s;
  }

  static SlipField one_directional(SineBasis basis, std::vector<double> u,
                                   double v1, double v2) {
    check_size(basis, u);
    SlipField s(SlipKind::one_directional, std::move(basis));
    s.c1_ = std::move(u);
    s.v1_ = v1;
    s.v2_ = v2;
    return s;
  }

  static SlipField gradient(SineBasis basis, std::vector<double> potential) {
    check_size(basis, potential);
    SlipField s(SlipKind::gradient, std::move(basis));
    s.c1_ = std::move(potential);
    return s;
  }

  SlipKind kind() const { return kind_; }
  const SineBasis& basis() const { return basis_; }

  std::pair<double, double> eval(double y1, double y2) const {
    if (!basis_.rect.contains(y1, y2))
      throw std::domain_error("SlipField::eval: point outside R");
    double g1 = 0.0, g2 = 0.0;
    switch (kind_) {
      case SlipKind::free_field:
        for (int k = 0; k < basis_.size(); ++k) {
          const double v = basis_.eval(k, y1, y2);
          g1 += c1_[k] * v;
          g2 += c2_[k] * v;
        }
        break;
      case SlipKind::one_directional: {
        double u = 0.0;
        for (int k = 0; k < basis_.size(); ++k) u += c1_[k] * basis_.eval(k, y1, y2);
        g1 = u * v1_;
        g2 = u * v2_;
        break;
      }
      case SlipKind::gradient:
        for (int k = 0; k < basis_.size(); ++k) {
          double v, d1, d2;
          basis_.eval_grad(k, y1, y2, v, d1, d2);
          g1 += c1_[k] * d1;
          g2 += c1_[k] * d2;
        }
        break;
    }
    return {g1, g2};
  }

  /// Slip and its in-plane derivatives, all from analytic basis derivatives.
  SlipJet eval_jet(double y1, double y2) const {
    SlipJet j{};
    for (int k = 0; k < basis_.size(); ++k) {
      double v, d1, d2, d11, d12, d22;
      basis_.eval_hess(k, y1, y2, v, d1, d2, d11, d12, d22);
      switch (kind_) {
        case SlipKind::free_field:
          j.g1 += c1_[k] * v;
          j.g2 += c2_[k] * v;
          j.d1g1 += c1_[k] * d1;
          j.d2g1 += c1_[k] * d2;
          j.d1g2 += c2_[k] * d1;
          j.d2g2 += c2_[k] * d2;
          break;
        case SlipKind::one_directional:
          j.g1 += c1_[k] * v * v1_;
          j.g2 += c1_[k] * v * v2_;
          j.d1g1 += c1_[k] * d1 * v1_;
          j.d2g1 += c1_[k] * d2 * v1_;
          j.d1g2 += c1_[k] * d1 * v2_;
          j.d2g2 += c1_[k] * d2 * v2_;
          break;
        case SlipKind::gradient:
          j.g1 += c1_[k] * d1;
          j.g2 += c1_[k] * d2;
          j.d1g1 += c1_[k] * d11;
          j.d2g1 += c1_[k] * d12;
          j.d1g2 += c1_[k] * d12;
          j.d2g2 += c1_[k] * d22;
          break;
      }
    }
    return j;
  }

  /// Coefficients in the free (g1, g2) sine expansion; exact for the free and
  /// one-directional kinds, unavailable for gradients.
  std::pair<std::vector<double>, std::vector<double>> free_coefficients() const {
    switch (kind_) {
      case SlipKind::free_field:
        return {c1_, c2_};
      case SlipKind::one_directional: {
        std::vector<double> a(c1_.size()), b(c1_.size());
        for (std::size_t k = 0; k < c1_.size(); ++k) {
          a[k] = c1_[k] * v1_;
          b[k] = c1_[k] * v2_;
        }
        return {a, b};
      }
      case SlipKind::gradient:
        throw std::logic_error(
            "SlipField: gradient slips have no exact free-coefficient form");
    }
    throw std::logic_error("SlipField: bad kind");
  }

  const std::vector<double>& raw_coeffs() const { return c1_; }
  const std::vector<double>& raw_coeffs2() const { return c2_; }
  double dir1() const { return v1_; }
  double dir2() const { return v2_; }

 private:
  SlipField(SlipKind kind, SineBasis basis) : kind_(kind), basis_(std::move(basis)) {}

  static void check_size(const SineBasis& b, const std::vector<double>& c) {
    if (static_cast<int>(c.size()) != b.size())
      throw std::invalid_argument("SlipField: coefficient count != basis size");
  }

  SlipKind kind_;
  SineBasis basis_;
  std::vector<double> c1_, c2_;
  double v1_ = 0.0, v2_ = 0.0;
};

/// Build the gradient slip of a scalar sine-basis potential.
inline SlipField gradient_slip(SineBasis basis, std::vector<double> potential) {
  return SlipField::gradient(std::move(basis), std::move(potential));
}

/// C-infinity bump supported in the open rectangle
/// (c1 - r1, c1 + r1) x (c2 - r2, c2 + r2): product of exp(-1/(1-t^2)).
struct BumpDensity {
  double c1, c2;
  double r1, r2;
  Vec3<double> amplitude;

  template <class T>
  static T profile(const T& t) {
    using std::exp;
    if (!(std::abs(scalar_value(t)) < 1.0)) return T(0.0);
    return exp(T(-1.0) / (T(1.0) - t * t));
  }

  template <class T>
  Vec3<T> operator()(const T& y1, const T& y2) const {
    const T t1 = (y1 - c1) / r1;
    const T t2 = (y2 - c2) / r2;
    const T f = profile(t1) * profile(t2);
    return {f * amplitude.x, f * amplitude.y, f * amplitude.z};
  }

  Rect support() const { return {c1 - r1, c1 + r1, c2 - r2, c2 + r2}; }
};

/// Adapter exposing a tangential sine slip as a jump-lab density (g1, g2, 0).
struct SlipDensity {
  const SlipField* slip;

  template <class T>
  Vec3<T> operator()(const T& y1, const T& y2) const {
    using std::cos;
    using std::sin;
    // evaluated off the basis by jets, so T may carry derivatives
    const SineBasis& b = slip->basis();
    T g1(0.0), g2(0.0);
    for (int k = 0; k < b.size(); ++k) {
      auto [p, q] = b.mode(k);
      const double w1 = p * std::numbers::pi / b.rect.width1();
      const double w2 = q * std::numbers::pi / b.rect.width2();
      const T a1 = (y1 - b.rect.lo1) * w1;
      const T a2 = (y2 - b.rect.lo2) * w2;
      const T s1 = sin(a1), s2 = sin(a2);
      switch (slip->kind()) {
        case SlipKind::free_field:
          g1 += s1 * s2 * slip->raw_coeffs()[k];
          g2 += s1 * s2 * slip->raw_coeffs2()[k];
          break;
        case SlipKind::one_directional:
          g1 += s1 * s2 * (slip->raw_coeffs()[k] * slip->dir1());
          g2 += s1 * s2 * (slip->raw_coeffs()[k] * slip->dir2());
          break;
        case SlipKind::gradient:
          g1 += cos(a1) * s2 * (slip->raw_coeffs()[k] * w1);
          g2 += s1 * cos(a2) * (slip->raw_coeffs()[k] * w2);
          break;
      }
    }
    return {g1, g2, T(0.0)};
  }

  Rect support() const { return slip->basis().rect; }
};

}  // namespace faultstab
