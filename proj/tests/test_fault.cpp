#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "faultstab/fault.hpp"
#include "faultstab/quadrature.hpp"
#include "test_util.hpp"

using namespace faultstab;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("embed maps plane coordinates onto the fault") {
  Rect rect{-1.0, 1.0, -1.0, 1.0};
  FaultGeometry flat({0.0, 0.0, -1.0}, rect);
  Point3 p = flat.embed(0.3, 0.2);
  CHECK(p.x == 0.3);
  CHECK(p.y == 0.2);
  CHECK(p.z == -1.0);

  FaultGeometry tilted({1.0, 0.0, -2.0}, rect);
  Point3 q = tilted.embed(0.5, 0.0);
  CHECK_THAT(q.z, WithinAbs(-1.5, 1e-15));
}

TEST_CASE("construction rejects faults violating the depth constraint") {
  Rect rect{0.0, 1.0, 0.0, 1.0};
  CHECK_THROWS_AS(FaultGeometry({1.0, 1.0, -0.5}, rect, 0.1),
                  std::invalid_argument);
  CHECK_NOTHROW(FaultGeometry({1.0, 1.0, -2.5}, rect, 0.1));
}

TEST_CASE("embed rejects points outside R") {
  Rect rect{-1.0, 1.0, -1.0, 1.0};
  FaultGeometry g({0.0, 0.0, -1.0}, rect);
  CHECK_THROWS_AS(g.embed(1.5, 0.0), std::domain_error);
}

TEST_CASE("normal and area element") {
  Rect rect{-1.0, 1.0, -1.0, 1.0};
  SECTION("horizontal") {
    auto [n, sigma] = FaultGeometry({0.0, 0.0, -1.0}, rect).normal_and_area_element();
    CHECK(n.x == 0.0);
    CHECK(n.y == 0.0);
    CHECK(n.z == 1.0);
    CHECK(sigma == 1.0);
  }
  SECTION("tilted in y1") {
    auto [n, sigma] = FaultGeometry({1.0, 0.0, -3.0}, rect).normal_and_area_element();
    CHECK_THAT(n.x, WithinRel(-1.0 / std::sqrt(2.0), 1e-15));
    CHECK_THAT(n.z, WithinRel(1.0 / std::sqrt(2.0), 1e-15));
    CHECK_THAT(sigma, WithinRel(std::sqrt(2.0), 1e-15));
  }
  SECTION("unit normal and exact n*sigma for random slopes") {
    for (int t = 0; t < 25; ++t) {
      double a = fstest::uniform(-1.0, 1.0), b = fstest::uniform(-1.0, 1.0);
      FaultGeometry g({a, b, -4.0}, rect);
      auto [n, sigma] = g.normal_and_area_element();
      CHECK_THAT(norm(n), WithinRel(1.0, 1e-14));
      Direction3 ns = g.normal_sigma();
      CHECK(ns.x == -a);
      CHECK(ns.y == -b);
      CHECK(ns.z == 1.0);
      CHECK_THAT(n.x * sigma, WithinRel(-a == 0.0 ? 0.0 : -a, 1e-13));
    }
  }
}

TEST_CASE("admissible set sampling respects the depth constraint") {
  Rect rect{-1.0, 1.0, -1.0, 1.0};
  AdmissibleSet B{-0.4, 0.4, -0.4, 0.4, -3.0, -1.5, 0.5, false, rect};
  auto rng = [u = 0.0]() mutable {
    u = std::fmod(u + 0.618033988749895, 1.0);
    return u;
  };
  for (int t = 0; t < 200; ++t) {
    PlaneParams m = B.sample(rng);
    FaultGeometry g = B.make_geometry(m);
    CHECK(g.max_height() <= -0.5);
  }
  CHECK_FALSE(B.contains({0.0, 0.0, -0.4}));
  CHECK(B.contains({0.0, 0.0, -2.0}));
}

TEST_CASE("admissible set can exclude horizontal profiles") {
  Rect rect{-1.0, 1.0, -1.0, 1.0};
  AdmissibleSet B{0.0, 0.0, 0.0, 0.0, -3.0, -1.5, 0.5, true, rect};
  CHECK_FALSE(B.contains({0.0, 0.0, -2.0}));
}

TEST_CASE("gauss-legendre weights are positive and sum to the area") {
  Rect rect{-1.0, 1.0, -0.5, 2.0};
  for (int q : {4, 8, 16, 24, 32}) {
    TensorRule rule = tensor_gauss_legendre(rect, q, q);
    for (double w : rule.w) CHECK(w > 0.0);
    CHECK_THAT(rule.weight_sum(), WithinRel(rect.area(), 1e-12));
  }
}

TEST_CASE("gauss-legendre integrates polynomials exactly") {
  Rect rect{0.0, 1.0, 0.0, 1.0};
  TensorRule rule = tensor_gauss_legendre(rect, 6, 6);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double u = rule.y1[i], v = rule.y2[i];
    acc += rule.w[i] * (u * u * u * u * u * (1.0 + v * v));
  }
  // int_0^1 u^5 du * int_0^1 (1+v^2) dv = (1/6)(4/3)
  CHECK_THAT(acc, WithinRel(4.0 / 18.0, 1e-14));
}

TEST_CASE("observation grid weights") {
  Rect window{-2.0, 2.0, -2.0, 2.0};
  ObservationGrid g = ObservationGrid::uniform(window, 9, 7);
  double sum = 0.0;
  for (double w : g.weights) {
    CHECK(w > 0.0);
    sum += w;
  }
  CHECK_THAT(sum, WithinRel(window.area(), 1e-12));
  for (const Point3& p : g.points) CHECK(p.z == 0.0);
}

TEST_CASE("discrete L2(V) norm converges under grid refinement") {
  Rect window{-1.5, 1.5, -1.5, 1.5};
  auto field_norm2 = [&](int n) {
    ObservationGrid g = ObservationGrid::uniform(window, n, n);
    double s = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Point3& p = g.points[i];
      const double f = std::exp(0.4 * p.x) * std::cos(0.7 * p.y);
      s += g.weights[i] * f * f;
    }
    return std::sqrt(s);
  };
  const double n128 = field_norm2(128);
  const double n256 = field_norm2(256);
  CHECK(std::abs(n256 - n128) / n256 <= 1e-4);
}
