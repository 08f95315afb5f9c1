#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "faultstab/slip.hpp"
#include "test_util.hpp"

using namespace faultstab;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
SineBasis basis4() { return {4, 4, Rect{-1.0, 1.0, -1.0, 1.0}}; }
}  // namespace

TEST_CASE("zero coefficients give zero slip") {
  SineBasis b = basis4();
  SlipField s = SlipField::free_field(b, std::vector<double>(16, 0.0),
                                      std::vector<double>(16, 0.0));
  auto [g1, g2] = s.eval(0.3, -0.7);
  CHECK(g1 == 0.0);
  CHECK(g2 == 0.0);
}

TEST_CASE("single lowest mode is 1 at the center of R") {
  SineBasis b = basis4();
  std::vector<double> c1(16, 0.0), c2(16, 0.0);
  c1[0] = 1.0;  // mode (1,1)
  SlipField s = SlipField::free_field(b, c1, c2);
  auto [g1, g2] = s.eval(0.0, 0.0);
  CHECK_THAT(g1, WithinRel(1.0, 1e-15));
  CHECK_THAT(g2, WithinAbs(0.0, 1e-300));
}

TEST_CASE("slip vanishes on the boundary of R") {
  SineBasis b = basis4();
  std::vector<double> c1(16), c2(16);
  for (int k = 0; k < 16; ++k) {
    c1[k] = fstest::uniform(-1.0, 1.0);
    c2[k] = fstest::uniform(-1.0, 1.0);
  }
  SlipField s = SlipField::free_field(b, c1, c2);
  for (double t : {-1.0, -0.25, 0.6, 1.0}) {
    for (auto [y1, y2] : {std::pair{t, -1.0}, std::pair{t, 1.0},
                          std::pair{-1.0, t}, std::pair{1.0, t}}) {
      auto [g1, g2] = s.eval(y1, y2);
      CHECK_THAT(g1, WithinAbs(0.0, 1e-13));
      CHECK_THAT(g2, WithinAbs(0.0, 1e-13));
    }
  }
}

TEST_CASE("slip evaluation is linear in the coefficients") {
  SineBasis b = basis4();
  std::vector<double> c1(16), c2(16);
  for (int k = 0; k < 16; ++k) {
    c1[k] = fstest::uniform(-1.0, 1.0);
    c2[k] = fstest::uniform(-1.0, 1.0);
  }
  std::vector<double> c1s(16), c2s(16);
  for (int k = 0; k < 16; ++k) {
    c1s[k] = 2.5 * c1[k];
    c2s[k] = 2.5 * c2[k];
  }
  SlipField s = SlipField::free_field(b, c1, c2);
  SlipField t = SlipField::free_field(b, c1s, c2s);
  auto [g1, g2] = s.eval(0.17, 0.43);
  auto [h1, h2] = t.eval(0.17, 0.43);
  CHECK_THAT(h1, WithinRel(2.5 * g1, 1e-14));
  CHECK_THAT(h2, WithinRel(2.5 * g2, 1e-14));
}

TEST_CASE("coefficient count must match the basis") {
  SineBasis b = basis4();
  CHECK_THROWS_AS(SlipField::free_field(b, std::vector<double>(15, 0.0),
                                        std::vector<double>(16, 0.0)),
                  std::invalid_argument);
}

TEST_CASE("gradient slips") {
  SineBasis b = basis4();
  SECTION("zero potential gives zero slip") {
    SlipField s = gradient_slip(b, std::vector<double>(16, 0.0));
    auto [g1, g2] = s.eval(0.2, 0.1);
    CHECK(g1 == 0.0);
    CHECK(g2 == 0.0);
  }
  SECTION("g2 of the lowest mode vanishes at the center") {
    std::vector<double> pot(16, 0.0);
    pot[0] = 1.0;
    SlipField s = gradient_slip(b, pot);
    auto [g1, g2] = s.eval(0.0, 0.0);
    CHECK_THAT(g2, WithinAbs(0.0, 1e-15));
    CHECK_THAT(g1, WithinAbs(0.0, 1e-15));  // cos(pi/2) = 0 in both factors
  }
  SECTION("gradient slips are curl-free") {
    std::vector<double> pot(16);
    for (int k = 0; k < 16; ++k) pot[k] = fstest::uniform(-1.0, 1.0);
    SlipField s = gradient_slip(b, pot);
    for (int t = 0; t < 10; ++t) {
      const double y1 = fstest::uniform(-0.95, 0.95);
      const double y2 = fstest::uniform(-0.95, 0.95);
      SlipJet j = s.eval_jet(y1, y2);
      CHECK_THAT(j.d2g1 - j.d1g2, WithinAbs(0.0, 1e-10));
    }
  }
}

TEST_CASE("slip derivative jet matches finite differences") {
  SineBasis b = basis4();
  std::vector<double> c1(16), c2(16);
  for (int k = 0; k < 16; ++k) {
    c1[k] = fstest::uniform(-1.0, 1.0);
    c2[k] = fstest::uniform(-1.0, 1.0);
  }
  SlipField s = SlipField::free_field(b, c1, c2);
  const double y1 = 0.21, y2 = -0.37, h = 1e-6;
  SlipJet j = s.eval_jet(y1, y2);
  auto [gp1, gp2] = s.eval(y1 + h, y2);
  auto [gm1, gm2] = s.eval(y1 - h, y2);
  CHECK_THAT(j.d1g1, WithinAbs((gp1 - gm1) / (2.0 * h), 1e-7));
  CHECK_THAT(j.d1g2, WithinAbs((gp2 - gm2) / (2.0 * h), 1e-7));
}

TEST_CASE("one-directional slip is a scalar profile times a fixed vector") {
  SineBasis b = basis4();
  std::vector<double> u(16);
  for (int k = 0; k < 16; ++k) u[k] = fstest::uniform(-1.0, 1.0);
  SlipField s = SlipField::one_directional(b, u, 0.6, -0.8);
  auto [g1, g2] = s.eval(0.4, 0.5);
  CHECK_THAT(g1 * (-0.8), WithinAbs(g2 * 0.6, 1e-14));
}

TEST_CASE("bump density is smooth, compactly supported, and jet-friendly") {
  BumpDensity bump{0.1, -0.2, 0.5, 0.4, {2.0, 0.0, -1.0}};
  SECTION("value at the center") {
    Vec3<double> v = bump(0.1, -0.2);
    CHECK_THAT(v.x, WithinRel(2.0 * std::exp(-2.0), 1e-13));
    CHECK_THAT(v.z, WithinRel(-std::exp(-2.0), 1e-13));
  }
  SECTION("vanishes outside the support") {
    Vec3<double> v = bump(0.7, -0.2);
    CHECK(v.x == 0.0);
    Vec3<double> w = bump(0.55, -0.2);
    CHECK(w.x != 0.0);
  }
  SECTION("jet derivatives match finite differences") {
    const double y1 = 0.25, y2 = -0.05, h = 1e-6;
    Vec3<Jet1> v = bump(Jet1::seeded(y1, 0), Jet1(y2));
    Vec3<double> vp = bump(y1 + h, y2), vm = bump(y1 - h, y2);
    CHECK_THAT(v.x.d[0], WithinAbs((vp.x - vm.x) / (2.0 * h), 1e-6));
  }
}

TEST_CASE("slip density adapter matches direct evaluation") {
  SineBasis b = basis4();
  std::vector<double> c1(16), c2(16);
  for (int k = 0; k < 16; ++k) {
    c1[k] = fstest::uniform(-1.0, 1.0);
    c2[k] = fstest::uniform(-1.0, 1.0);
  }
  SlipField s = SlipField::free_field(b, c1, c2);
  SlipDensity dens{&s};
  auto [g1, g2] = s.eval(0.33, -0.41);
  Vec3<double> v = dens(0.33, -0.41);
  CHECK_THAT(v.x, WithinRel(g1, 1e-13));
  CHECK_THAT(v.y, WithinRel(g2, 1e-13));
  CHECK(v.z == 0.0);
}
