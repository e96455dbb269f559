#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "shellrange/hyp_models.hpp"
#include "shellrange/spectra.hpp"

namespace shellrange {

/// Sends (2 Re z2 conj z1, 2 Im z2 conj z1, |z2|^2 - |z1|^2, |z2|^2 + |z1|^2)
/// to (Re<Ax,x>, Im<Ax,x>, <Ax,Ax>, <x,x>).
struct MomentMap {
  Eigen::Matrix4d M;
};

/// Dual of the shell quadric in pCK projective coordinates (x, y, z, w).
struct DualQuadric {
  Eigen::Matrix4d G;
  int rank = 0;
};

/// Dual conic in BCK projective coordinates (x, z, w), scaled to unit
/// Frobenius norm. The primal conic is present for rank 3 and is signed so
/// that the range is where (x, z, 1) Q (x, z, 1)^T <= 0.
struct ConicBCK {
  Eigen::Matrix3d Gc;
  std::optional<Eigen::Matrix3d> primal;
  int rank = 0;
};

enum class ShellCase { Point, Line, Horosphere, Tube };

enum class RangeCase {
  PointOrdinary,
  Segment,
  ClosedLine,
  ClosedHalfLine,
  PointAsymptotic,
  Circle,
  ProperEllipse,
  DistanceBand,
  EllipticParabola,
  Horodisk,
};

std::string_view to_string(ShellCase c);
std::string_view to_string(RangeCase c);
ShellCase shell_case_from_string(std::string_view s);
RangeCase range_case_from_string(std::string_view s);

/// Cases whose boundary is a proper conic (the matrix is not normal).
bool is_non_normal_case(RangeCase c);

struct ShellDescriptor {
  ShellCase kind = ShellCase::Point;
  std::vector<ExtComplex> asymptotic_points;
  double radius = 0.0;
  double touch_height = 0.0;  ///< ||A||^2, pCK scale
  DualQuadric dual_quadric;
  /// Primal quadric in BCK3 coordinates (rank 4 only), same sign convention
  /// as ConicBCK::primal.
  std::optional<Eigen::Matrix4d> primal_bck;
};

struct RangeDescriptor {
  RangeCase kind = RangeCase::PointOrdinary;
  SpectralClass spectral_class = SpectralClass::RealParabolic;
  std::array<Complex, 2> eigenvalues;
  std::vector<HPoint> foci;  ///< BCK2; one entry when both h-eigenpoints coincide
  double sPlus = 0.0, sMinus = 0.0, sF = 0.0;
  double chiPlus = 0.0, chiMinus = 0.0, chiE = 0.0;
  std::optional<HPoint> vertex;
  ConicBCK conic;
  double touch_height = 0.0;  ///< ||A||^2, pCK scale

  /// (||A||^2 - 1) / (||A||^2 + 1), the height of the tangent line in BCK.
  double touch_height_bck() const;
};

struct NumericalRangeDescriptor {
  std::array<Complex, 2> foci;
  double sPlusE = 0.0, sMinusE = 0.0, sFE = 0.0;
};

/// Euclidean principal axes of a BCK range: centre and the endpoints of the
/// two axes (the second is degenerate for segments and points).
struct EuclideanAxes {
  std::array<double, 2> center{};
  std::array<std::array<double, 2>, 2> axis1{};
  std::array<std::array<double, 2>, 2> axis2{};
};

MomentMap moment_map(const Mat2C& a);
DualQuadric shell_dual_quadric(const Mat2C& a);
ConicBCK conformal_dual_conic(const Mat2C& a);

/// The two (possibly coincident) foci of a rank-3 dual conic. Throws
/// NoRealLinePair when no degenerate member of the confocal pencil splits
/// into two real points.
std::pair<HPoint, HPoint> extract_foci(const ConicBCK& c);

ShellDescriptor dw_shell(const Mat2C& a);
RangeDescriptor conformal_range(const Mat2C& a);
NumericalRangeDescriptor numerical_range(const Mat2C& a);

double ellipse_membership(const RangeDescriptor& d, const HPoint& p);
double parabola_membership(const RangeDescriptor& d, const HPoint& p);

/// Value of the primal conic at p (BCK), <= 0 inside.
double conic_value(const ConicBCK& c, const HPoint& p);

std::vector<HPoint> boundary_polyline(const RangeDescriptor& d, int n, Model model);

EuclideanAxes principal_axes(const RangeDescriptor& d);

}  // namespace shellrange
