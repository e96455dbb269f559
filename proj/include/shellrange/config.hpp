#pragma once

namespace shellrange {

/// Numerical tolerances shared by every module.
///
/// All values are relative: callers multiply by the magnitude of the data
/// they compare (usually 1 + a matrix norm, or its square for quadratic
/// invariants).
struct Tolerances {
  double unit = 1e-12;   ///< unitarity of computed Schur bases
  double det = 1e-13;    ///< singularity of Moebius denominators
  double id = 1e-9;      ///< closed-form identities, normality snapping
  double cls = 1e-9;     ///< spectral class boundaries
  double geo = 1e-12;    ///< snapping to the absolute of the BCK model
  double arcosh = 1e-9;  ///< how far below 1 an arcosh argument may dip
};

inline constexpr Tolerances kTol{};

}  // namespace shellrange
