#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>

#include "generators.hpp"
#include "shellrange/errors.hpp"
#include "shellrange/hyp_models.hpp"

using namespace shellrange;
using shellrange::testing::Gen;

namespace {

const Complex I1{0.0, 1.0};
constexpr double kInf = std::numeric_limits<double>::infinity();

HPoint random_bck2(Gen& g, double rmax = 0.999) {
  const double r = rmax * std::sqrt(g.uniform(0, 1)), th = g.uniform(0, 2 * M_PI);
  return HPoint::planar(Model::BCK2, r * std::cos(th), r * std::sin(th));
}

double sep(const HPoint& p, const HPoint& q) {
  return std::hypot(p.x - q.x, p.y - q.y, p.z - q.z);
}

}  // namespace

TEST_CASE("embedding examples") {
  HPoint p = embed(Complex(0.0), Model::BCK2);
  CHECK(p.x == 0.0);
  CHECK(p.z == -1.0);
  CHECK(is_asymptotic(p));
  p = embed(I1, Model::BCK2);
  CHECK(p.x == 0.0);
  CHECK(p.z == 0.0);
  CHECK_FALSE(is_asymptotic(p));
  p = embed(ExtComplex::inf(), Model::BCK2);
  CHECK(p.x == 0.0);
  CHECK(p.z == 1.0);
  CHECK(is_asymptotic(p));
  CHECK(embed(ExtComplex::inf(), Model::PCK2).at_infinity);
  CHECK(embed(ExtComplex::inf(), Model::PH2).at_infinity);
  p = embed(Complex(1.0, -2.0), Model::PH2);
  CHECK(p.x == 1.0);
  CHECK(p.z == 2.0);
  p = embed(Complex(1.0, -2.0), Model::BCK3);
  CHECK(p.x == doctest::Approx(2.0 / 6));
  CHECK(p.y == doctest::Approx(-4.0 / 6));
  CHECK(p.z == doctest::Approx(4.0 / 6));
}

TEST_CASE("transcription examples") {
  HPoint p = transcribe(HPoint::planar(Model::PCK2, 0, 1), Model::BCK2);
  CHECK(p.x == 0.0);
  CHECK(p.z == 0.0);
  p = transcribe(HPoint::spatial(Model::PCK3, 0, 0, 1), Model::BCK3);
  CHECK(sep(p, HPoint::spatial(Model::BCK3, 0, 0, 0)) == 0.0);
  p = transcribe(HPoint::planar(Model::BCK2, 0.3, 0.4), Model::PH2);
  CHECK(p.x == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(p.z == doctest::Approx(std::sqrt(0.75) / 0.6).epsilon(1e-15));
  CHECK(transcribe(HPoint::planar(Model::BCK2, 0, 1), Model::PCK2).at_infinity);
  CHECK(transcribe(HPoint::planar(Model::BCK2, 0, 1), Model::PH2).at_infinity);
  p = transcribe(HPoint::infinity(Model::PH2), Model::BCK2);
  CHECK(p.z == 1.0);
  CHECK_THROWS_AS(transcribe(HPoint::planar(Model::BCK2, 0, 0), Model::BCK3), ModelDimensionMismatch);
  CHECK_THROWS_AS(transcribe(HPoint::planar(Model::BCK2, 0, 0), Model::PCK3), ModelDimensionMismatch);
}

TEST_CASE("transcription round trips") {
  Gen g(31);
  for (int k = 0; k < 10000; ++k) {
    const HPoint p = random_bck2(g);
    for (Model m : {Model::PCK2, Model::PH2}) {
      const HPoint back = transcribe(transcribe(p, m), Model::BCK2);
      CHECK(sep(back, p) < 1e-12);
    }
    const HPoint ph = transcribe(p, Model::PH2);
    CHECK(sep(transcribe(transcribe(ph, Model::PCK2), Model::PH2), ph) < 1e-12 * (1 + ph.x * ph.x + ph.z * ph.z));
  }
}

TEST_CASE("embedding commutes with transcription") {
  Gen g(32);
  for (int k = 0; k < 2000; ++k) {
    const Complex l = g.complex();
    for (Model m : {Model::PCK2, Model::PH2}) {
      CHECK(sep(transcribe(embed(l, m), Model::BCK2), embed(l, Model::BCK2)) < 1e-12);
    }
    CHECK(sep(transcribe(embed(l, Model::PCK3), Model::BCK3), embed(l, Model::BCK3)) < 1e-12);
    // conjugates share the planar eigenpoint
    CHECK(sep(embed(std::conj(l), Model::BCK2), embed(l, Model::BCK2)) == 0.0);
  }
}

TEST_CASE("distance examples") {
  const HPoint o = HPoint::planar(Model::BCK2, 0, 0);
  CHECK(dist(o, HPoint::planar(Model::BCK2, 0.6, 0)) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(dist(HPoint::planar(Model::PH2, 0, 1), HPoint::planar(Model::PH2, 0, 1)) == 0.0);
  CHECK(dist(HPoint::planar(Model::PH2, 0, 1), HPoint::planar(Model::PH2, 1, 1)) ==
        doctest::Approx(std::acosh(1.5)).epsilon(1e-15));
  CHECK(dist(o, HPoint::planar(Model::BCK2, 1, 0)) == kInf);
  const HPoint a = HPoint::planar(Model::BCK2, 0, -1);
  CHECK(dist(a, a) == 0.0);
  CHECK_THROWS_AS(dist(o, HPoint::spatial(Model::BCK3, 0, 0, 0)), ModelDimensionMismatch);
}

TEST_CASE("distance is a model-independent metric") {
  Gen g(33);
  for (int k = 0; k < 5000; ++k) {
    const HPoint p = random_bck2(g), q = random_bck2(g), r = random_bck2(g);
    const double pq = dist(p, q);
    CHECK(pq == dist(q, p));
    CHECK(pq <= dist(p, r) + dist(r, q) + 1e-10);
    CHECK(dist(transcribe(p, Model::PH2), transcribe(q, Model::PH2)) == doctest::Approx(pq).epsilon(1e-10).scale(1));
    CHECK(dist(transcribe(p, Model::PCK2), transcribe(q, Model::PCK2)) == doctest::Approx(pq).epsilon(1e-10).scale(1));
  }
}

TEST_CASE("spatial distance matches the half-space formula") {
  Gen g(34);
  for (int k = 0; k < 2000; ++k) {
    // points of the upper half-space given as (w, h), embedded via the ball
    const Complex w1 = g.complex(), w2 = g.complex();
    const double h1 = g.uniform(0.1, 2), h2 = g.uniform(0.1, 2);
    auto ball = [](Complex w, double h) {
      const double n = std::norm(w) + h * h;
      return HPoint::spatial(Model::BCK3, 2 * w.real() / (n + 1), 2 * w.imag() / (n + 1), (n - 1) / (n + 1));
    };
    const double expect = std::acosh(1 + (std::norm(w1 - w2) + (h1 - h2) * (h1 - h2)) / (2 * h1 * h2));
    CHECK(dist(ball(w1, h1), ball(w2, h2)) == doctest::Approx(expect).epsilon(1e-9));
  }
}

TEST_CASE("boundary action examples") {
  const Complex l{0.3, -0.8};
  ExtComplex r = boundary_action(MoebiusMap::identity(), {l});
  CHECK(!r.infinite);
  CHECK(r.value == l);
  CHECK(boundary_action(MoebiusMap(0.0, 1.0, 1.0, 0.0), {0.0}).infinite);
  r = boundary_action(MoebiusMap(1.0, -1.0, 1.0, 1.0), {I1});
  CHECK(std::abs(r.value - I1) < 1e-15);
  r = boundary_action(MoebiusMap(1.0, -1.0, 1.0, 1.0), ExtComplex::inf());
  CHECK(std::abs(r.value - 1.0) < 1e-15);
}

TEST_CASE("real boundary action moves eigenpoints by a hyperbolic isometry") {
  Gen g(35);
  for (int k = 0; k < 2000; ++k) {
    const MoebiusMap f(g.uniform(-2, 2), g.uniform(-2, 2), g.uniform(-2, 2), g.uniform(-2, 2));
    const Complex l1 = g.complex(), l2 = g.complex();
    const ExtComplex f1 = boundary_action(f, {l1}), f2 = boundary_action(f, {l2});
    if (f1.infinite || f2.infinite || std::abs(f1.value) > 50 || std::abs(f2.value) > 50) continue;
    const double before = dist(embed(l1, Model::PH2), embed(l2, Model::PH2));
    const double after = dist(embed(f1, Model::PH2), embed(f2, Model::PH2));
    CHECK(after == doctest::Approx(before).epsilon(1e-8));
  }
}

TEST_CASE("signed horocycle distance examples") {
  CHECK(horo_signed_distance(HPoint::planar(Model::BCK2, 0, 0), HoroAnchor::Bottom) == 0.0);
  CHECK(horo_signed_distance(HPoint::planar(Model::BCK2, 0, 0), HoroAnchor::Top) == 0.0);
  CHECK(horo_signed_distance(HPoint::planar(Model::BCK2, 0, 0.5), HoroAnchor::Bottom) ==
        doctest::Approx(0.5 * std::log(3.0)).epsilon(1e-15));
  for (double eps : {1e-2, 1e-4, 1e-8}) {
    CHECK(horo_signed_distance(HPoint::planar(Model::BCK2, 0, -1 + eps), HoroAnchor::Bottom) ==
          doctest::Approx(0.5 * std::log(eps / (2 - eps))).epsilon(1e-7));
  }
  CHECK_THROWS_AS(horo_signed_distance(HPoint::planar(Model::BCK2, 0.8, 0.8)), OutsideModel);
}

TEST_CASE("horocycle level sets") {
  Gen g(36);
  for (int k = 0; k < 2000; ++k) {
    const double d = g.uniform(-3, 3);
    const double c = std::exp(-2 * d);
    // horocycle x^2 + z^2 - 1 + c (1 - z)^2 = 0 through (0, 1), parametrized by z
    const double zmin = (c - 1) / (c + 1);
    const double z = g.uniform(zmin, 1.0 - 1e-3);
    const double x2 = 1 - z * z - c * (1 - z) * (1 - z);
    if (x2 < 0) continue;
    const HPoint p = HPoint::planar(Model::BCK2, g.sign() * std::sqrt(x2), z);
    CHECK(horo_signed_distance(p, HoroAnchor::Top) == doctest::Approx(d).epsilon(1e-9).scale(1));
    const HPoint mirrored = HPoint::planar(Model::BCK2, p.x, -p.z);
    CHECK(horo_signed_distance(mirrored, HoroAnchor::Bottom) == doctest::Approx(d).epsilon(1e-9).scale(1));
  }
}

TEST_CASE("horocycle distance is the Busemann limit") {
  Gen g(37);
  for (int k = 0; k < 500; ++k) {
    const HPoint p = random_bck2(g, 0.9);
    // d(p, q) - d(o, q) as q runs to (0, 1)
    const double zq = 1 - 1e-7;
    const HPoint q = HPoint::planar(Model::BCK2, 0, zq);
    const double busemann = dist(p, q) - dist(HPoint::planar(Model::BCK2, 0, 0), q);
    CHECK(horo_signed_distance(p, HoroAnchor::Top) == doctest::Approx(busemann).epsilon(1e-5).scale(1));
  }
}

TEST_CASE("model membership") {
  CHECK_NOTHROW(check_in_model(HPoint::planar(Model::BCK2, 1, 0)));
  CHECK_THROWS_AS(check_in_model(HPoint::planar(Model::BCK2, 1.1, 0)), OutsideModel);
  CHECK_THROWS_AS(check_in_model(HPoint::planar(Model::PCK2, 1.0, 0.5)), OutsideModel);
  CHECK_THROWS_AS(check_in_model(HPoint::planar(Model::PH2, 0, -0.5)), OutsideModel);
  CHECK_NOTHROW(check_in_model(HPoint::infinity(Model::PCK3)));
}

TEST_CASE("arcosh1p") {
  for (double d : {0.0, 1e-8, 0.5, 3.0, 1e6}) {
    CHECK(arcosh1p(d) == doctest::Approx(std::acosh(1 + d)).epsilon(1e-12));
  }
  CHECK(arcosh1p(1e-20) == doctest::Approx(std::sqrt(2e-20)).epsilon(1e-12));
}
