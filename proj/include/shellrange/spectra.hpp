#pragma once

#include <string_view>
#include <utility>

#include "shellrange/core_matrix.hpp"

namespace shellrange {

/// Metric discriminant U, spectral discriminant D and the companion E.
struct Invariants {
  double U = 0.0;
  Complex D;
  double absD = 0.0;
  double E = 0.0;
};

enum class SpectralClass {
  RealElliptic,
  RealParabolic,
  RealHyperbolic,
  NonRealParabolic,
  SemiReal,
  QuasiElliptic,
  QuasiHyperbolic,
};

std::string_view to_string(SpectralClass c);
SpectralClass spectral_class_from_string(std::string_view s);

struct CanonicalRep {
  enum class Kind { Zero, S, L };
  Kind kind = Kind::Zero;
  double beta = 0.0;   ///< S only
  double alpha = 0.0;  ///< L only
  double t = 0.0;      ///< L only
  int sign = +1;       ///< L only; +1 when alpha = 0

  /// The representative matrix itself.
  Mat2C matrix() const;
};

struct TripleRatio {
  double chi1 = 0.0, chi2 = 0.0, chi3 = 0.0;
};

struct CharacteristicValues {
  double chiPlus = 0.0, chiMinus = 0.0, chiE = 0.0;
  double sPlus = 0.0, sMinus = 0.0, sE = 0.0;
};

struct SemiAxes {
  double sPlus = 0.0, sMinus = 0.0, sF = 0.0;
};

/// Classification plus class-consistent invariants and eigenvalues.
///
/// Quantities that vanish for the detected class are set to exactly zero
/// (or exactly equal), so closed forms downstream hit their conventions
/// instead of dividing rounding noise.
struct Spectrum {
  Invariants inv;
  SpectralClass cls = SpectralClass::RealParabolic;
  bool normal = true;
  Complex lambda1, lambda2;
  double scale = 1.0;  ///< 1 + Frobenius norm of A
};

/// Raw invariants. U and D are computed from A - (tr A / 2) I, which keeps
/// them free of the cancellation in tr(A*A)/2 - |tr A|^2/4.
Invariants invariants(const Mat2C& a);

std::pair<Complex, Complex> eigenvalues(const Mat2C& a);

/// With exact set, class boundaries are tested without tolerance.
Spectrum analyze(const Mat2C& a, bool exact = false);

SpectralClass classify(const Mat2C& a, bool exact = false);

CanonicalRep canonical_representative(const Mat2C& a);
CanonicalRep canonical_representative(const Spectrum& s);

TripleRatio triple_ratio(const Mat2C& a);
TripleRatio triple_ratio(const Invariants& inv);

CharacteristicValues characteristic_values(const TripleRatio& r);

SemiAxes semi_axes(const Mat2C& a);
SemiAxes semi_axes(const Invariants& inv);

double eigendistance(const Mat2C& a);
double eigendistance(const Invariants& inv);

/// arsinh(sqrt(num / den)), the stable form of (1/2) arcosh(1 + 2 num / den).
/// 0/0 gives 0, a/0 with a > 0 gives +inf.
double half_arcosh_excess(double num, double den);

}  // namespace shellrange
