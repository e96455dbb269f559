#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "shellrange/ranges.hpp"

namespace shellrange {

enum class Target { Shell3D, ConformalRange2D, NumericalRange2D };

std::string_view to_string(Target t);

/// Images of unit vectors x = (cos th, e^{i phi} sin th).
///
/// Points are stored for the shell and conformal targets; the numerical
/// range keeps the raw values <Ax, x> instead.
struct SampleCloud {
  Target target = Target::ConformalRange2D;
  Model model = Model::BCK2;
  std::vector<HPoint> points;
  std::vector<Complex> values;
  std::uint64_t seed = 0;
  std::size_t count = 0;
};

struct Report {
  std::size_t count = 0;
  std::size_t skipped = 0;  ///< points where a synthetic predicate is not evaluated
  double max_violation = 0.0;
  double max_conic_violation = 0.0;
  double max_synthetic_violation = 0.0;
  bool pass = false;
};

struct AxesEstimate {
  double sPlusEst = 0.0;
  double sMinusEst = 0.0;
};

/// Unit vector number `index` of the sampling scheme: e1, e2, then
/// alternating points of a Fibonacci sphere lattice and seeded uniform draws.
Eigen::Vector2cd sample_vector(std::size_t index, std::size_t n, std::uint64_t seed);

SampleCloud sample(const Mat2C& a, Target target, Model model, std::size_t n,
                   std::uint64_t seed);

Report verify_membership(const SampleCloud& cloud, const RangeDescriptor& d, double tol);
Report verify_membership(const SampleCloud& cloud, const ShellDescriptor& d, double tol);
Report verify_membership(const SampleCloud& cloud, const NumericalRangeDescriptor& d,
                         double tol);

AxesEstimate empirical_axes(const SampleCloud& cloud);

}  // namespace shellrange
