#pragma once

#include <string_view>

#include "shellrange/core_matrix.hpp"

namespace shellrange {

enum class Model { BCK2, PCK2, PH2, BCK3, PCK3 };

std::string_view to_string(Model m);
int dimension(Model m);

/// A point of an asymptotically closed hyperbolic plane or space.
///
/// Planar models use (x, z) and keep y = 0. The flag at_infinity marks the
/// single ideal point of pCK and the point at infinity of Ph; in BCK every
/// point, asymptotic or not, has ordinary coordinates.
struct HPoint {
  Model model = Model::BCK2;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  bool at_infinity = false;

  static HPoint planar(Model m, double x, double z) { return {m, x, 0.0, z, false}; }
  static HPoint spatial(Model m, double x, double y, double z) {
    return {m, x, y, z, false};
  }
  static HPoint infinity(Model m) { return {m, 0.0, 0.0, 0.0, true}; }
};

/// An element of the Riemann sphere.
struct ExtComplex {
  Complex value;
  bool infinite = false;

  static ExtComplex inf() { return {Complex(), true}; }
};

/// True for points on the absolute (within the snapping tolerance).
bool is_asymptotic(const HPoint& p);

/// Throws OutsideModel when p lies beyond the absolute by more than the
/// snapping tolerance.
void check_in_model(const HPoint& p);

HPoint embed(const ExtComplex& lambda, Model model);
inline HPoint embed(Complex lambda, Model model) { return embed(ExtComplex{lambda}, model); }

HPoint transcribe(const HPoint& p, Model target);

/// Hyperbolic distance; +inf between distinct points when either is
/// asymptotic.
double dist(const HPoint& p, const HPoint& q);

ExtComplex boundary_action(const MoebiusMap& f, const ExtComplex& lambda);

enum class HoroAnchor { Top, Bottom };

/// Signed distance from the horocycle through the BCK origin with asymptotic
/// point (0, 1) (Top) or (0, -1) (Bottom); negative inside the horodisk.
double horo_signed_distance(const HPoint& p, HoroAnchor anchor = HoroAnchor::Top);

/// log1p(d + sqrt(d (2 + d))), i.e. arcosh(1 + d) without forming 1 + d.
double arcosh1p(double d);

}  // namespace shellrange
