#include "shellrange/hyp_models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "shellrange/config.hpp"
#include "shellrange/errors.hpp"

namespace shellrange {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_bck(Model m) { return m == Model::BCK2 || m == Model::BCK3; }

// 1 - |p|^2 for a BCK point.
double bck_gap(const HPoint& p) { return 1.0 - p.x * p.x - p.y * p.y - p.z * p.z; }

HPoint to_bck(const HPoint& p) {
  switch (p.model) {
    case Model::BCK2:
    case Model::BCK3:
      return p;
    case Model::PCK2:
    case Model::PCK3: {
      const Model m = p.model == Model::PCK2 ? Model::BCK2 : Model::BCK3;
      if (p.at_infinity) return HPoint::spatial(m, 0.0, 0.0, 1.0);
      const double w = p.z + 1.0;
      return HPoint::spatial(m, 2.0 * p.x / w, 2.0 * p.y / w, (p.z - 1.0) / w);
    }
    case Model::PH2: {
      if (p.at_infinity) return HPoint::planar(Model::BCK2, 0.0, 1.0);
      const double n = p.x * p.x + p.z * p.z;
      return HPoint::planar(Model::BCK2, 2.0 * p.x / (n + 1.0), (n - 1.0) / (n + 1.0));
    }
  }
  return p;
}

HPoint bck_to(const HPoint& b, Model target) {
  const double w = 1.0 - b.z;
  const bool top = w <= kTol.geo;
  switch (target) {
    case Model::BCK2:
    case Model::BCK3:
      return {target, b.x, b.y, b.z, false};
    case Model::PCK2:
    case Model::PCK3:
      if (top) return HPoint::infinity(target);
      return {target, b.x / w, b.y / w, (1.0 + b.z) / w, false};
    case Model::PH2:
      if (top) return HPoint::infinity(target);
      return HPoint::planar(target, b.x / w, std::sqrt(std::max(bck_gap(b), 0.0)) / w);
  }
  return b;
}

// Distance in the Poincare ball, fed with Klein coordinates.
double bck_distance(const HPoint& p, const HPoint& q) {
  const double ap = std::sqrt(std::max(bck_gap(p), 0.0));
  const double aq = std::sqrt(std::max(bck_gap(q), 0.0));
  const double sp = 1.0 / (1.0 + ap), sq = 1.0 / (1.0 + aq);
  const double dx = p.x * sp - q.x * sq;
  const double dy = p.y * sp - q.y * sq;
  const double dz = p.z * sp - q.z * sq;
  const double gp = 2.0 * ap * sp, gq = 2.0 * aq * sq;  // 1 - |u|^2
  const double delta = 2.0 * (dx * dx + dy * dy + dz * dz) / (gp * gq);
  return arcosh1p(delta);
}

}  // namespace

std::string_view to_string(Model m) {
  switch (m) {
    case Model::BCK2: return "bck2";
    case Model::PCK2: return "pck2";
    case Model::PH2: return "ph2";
    case Model::BCK3: return "bck3";
    case Model::PCK3: return "pck3";
  }
  return "unknown";
}

int dimension(Model m) { return (m == Model::BCK3 || m == Model::PCK3) ? 3 : 2; }

double arcosh1p(double d) {
  if (!(d > 0.0)) return 0.0;
  if (std::isinf(d)) return kInf;
  return std::log1p(d + std::sqrt(d * (2.0 + d)));
}

bool is_asymptotic(const HPoint& p) {
  switch (p.model) {
    case Model::BCK2:
    case Model::BCK3:
      return bck_gap(p) <= kTol.geo;
    case Model::PCK2:
    case Model::PCK3:
      return p.at_infinity ||
             p.z - p.x * p.x - p.y * p.y <= kTol.geo * (1.0 + std::abs(p.z));
    case Model::PH2:
      return p.at_infinity || p.z <= kTol.geo;
  }
  return false;
}

void check_in_model(const HPoint& p) {
  if (p.at_infinity) return;
  if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
    throw OutsideModel("point has non-finite coordinates");
  }
  bool ok = true;
  switch (p.model) {
    case Model::BCK2:
    case Model::BCK3:
      ok = bck_gap(p) >= -kTol.geo;
      break;
    case Model::PCK2:
    case Model::PCK3:
      ok = p.x * p.x + p.y * p.y <= p.z + kTol.geo * (1.0 + std::abs(p.z));
      break;
    case Model::PH2:
      ok = p.z >= -kTol.geo;
      break;
  }
  if (!ok) throw OutsideModel("point lies outside the model");
}

HPoint embed(const ExtComplex& lambda, Model model) {
  if (lambda.infinite) {
    switch (model) {
      case Model::BCK2: return HPoint::planar(model, 0.0, 1.0);
      case Model::BCK3: return HPoint::spatial(model, 0.0, 0.0, 1.0);
      default: return HPoint::infinity(model);
    }
  }
  const double re = lambda.value.real(), im = lambda.value.imag();
  const double n = std::norm(lambda.value);
  switch (model) {
    case Model::BCK2:
      return HPoint::planar(model, 2.0 * re / (n + 1.0), (n - 1.0) / (n + 1.0));
    case Model::BCK3:
      return HPoint::spatial(model, 2.0 * re / (n + 1.0), 2.0 * im / (n + 1.0),
                             (n - 1.0) / (n + 1.0));
    case Model::PCK2:
      return HPoint::planar(model, re, n);
    case Model::PCK3:
      return HPoint::spatial(model, re, im, n);
    case Model::PH2:
      return HPoint::planar(model, re, std::abs(im));
  }
  return {};
}

HPoint transcribe(const HPoint& p, Model target) {
  if (dimension(p.model) != dimension(target)) {
    throw ModelDimensionMismatch("cannot transcribe between planar and spatial models");
  }
  if (p.model == target) return p;
  if (p.model == Model::PH2 && target == Model::PCK2) {
    if (p.at_infinity) return HPoint::infinity(target);
    return HPoint::planar(target, p.x, p.x * p.x + p.z * p.z);
  }
  if (p.model == Model::PCK2 && target == Model::PH2) {
    if (p.at_infinity) return HPoint::infinity(target);
    return HPoint::planar(target, p.x, std::sqrt(std::max(p.z - p.x * p.x, 0.0)));
  }
  return bck_to(to_bck(p), target);
}

double dist(const HPoint& p, const HPoint& q) {
  if (dimension(p.model) != dimension(q.model)) {
    throw ModelDimensionMismatch("distance between planar and spatial points");
  }
  if (is_asymptotic(p) || is_asymptotic(q)) {
    const HPoint a = to_bck(p), b = to_bck(q);
    const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    return dx * dx + dy * dy + dz * dz <= kTol.geo * kTol.geo ? 0.0 : kInf;
  }
  if (p.model == Model::PH2 && q.model == Model::PH2) {
    const double dx = p.x - q.x, dz = p.z - q.z;
    return arcosh1p((dx * dx + dz * dz) / (2.0 * p.z * q.z));
  }
  const HPoint a = is_bck(p.model) ? p : to_bck(p);
  const HPoint b = is_bck(q.model) ? q : to_bck(q);
  return bck_distance(a, b);
}

ExtComplex boundary_action(const MoebiusMap& f, const ExtComplex& lambda) {
  if (lambda.infinite) {
    if (f.c() == 0.0) return ExtComplex::inf();
    return {f.a() / f.c()};
  }
  const Complex num = f.a() * lambda.value + f.b();
  const Complex den = f.c() * lambda.value + f.d();
  const double scale = std::abs(f.c()) * std::abs(lambda.value) + std::abs(f.d());
  if (std::abs(den) <= 1e-15 * scale) return ExtComplex::inf();
  return {num / den};
}

double horo_signed_distance(const HPoint& p, HoroAnchor anchor) {
  if (dimension(p.model) != 2) {
    throw ModelDimensionMismatch("horocycle distance is defined on the plane");
  }
  if (p.model == Model::BCK2) {
    const double gap = bck_gap(p);
    if (!(gap > 0.0)) throw OutsideModel("horocycle distance needs an interior point");
    const double side = anchor == HoroAnchor::Top ? 1.0 - p.z : 1.0 + p.z;
    return std::log(side / std::sqrt(gap));
  }
  const HPoint h = transcribe(p, Model::PH2);
  if (h.at_infinity || !(h.z > 0.0)) {
    throw OutsideModel("horocycle distance needs an interior point");
  }
  if (anchor == HoroAnchor::Top) return -std::log(h.z);
  return std::log((h.x * h.x + h.z * h.z) / h.z);
}

}  // namespace shellrange
