#pragma once

#include <complex>

#include <Eigen/Core>

namespace shellrange {

using Complex = std::complex<double>;
using Mat2C = Eigen::Matrix2cd;

inline Mat2C make_mat(Complex a11, Complex a12, Complex a21, Complex a22) {
  Mat2C m;
  m << a11, a12, a21, a22;
  return m;
}

/// A fractional linear map lambda -> (a lambda + b) / (c lambda + d).
class MoebiusMap {
 public:
  /// Throws DegenerateMoebius when ad - bc vanishes relative to the
  /// coefficient magnitude.
  MoebiusMap(Complex a, Complex b, Complex c, Complex d);

  static MoebiusMap identity() { return {1.0, 0.0, 0.0, 1.0}; }

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }
  Complex d() const { return d_; }
  Complex determinant() const { return a_ * d_ - b_ * c_; }

  /// True when all four coefficients have zero imaginary part.
  bool is_real() const { return real_; }

  /// Composition (*this) o g.
  MoebiusMap compose(const MoebiusMap& g) const;

 private:
  Complex a_, b_, c_, d_;
  bool real_;
};

/// Unitary triangularization A = U T U* with T = [[lambda1, t], [0, lambda2]].
struct SchurForm {
  Complex lambda1;
  Complex lambda2;
  double t = 0.0;  ///< off-diagonal entry, real and nonnegative
  Mat2C U;
};

/// Eigenvalues ordered descending by (Im, Re).
///
/// Roots of the characteristic polynomial through the centred discriminant
/// with the cancellation-free branch of the quadratic formula.
std::pair<Complex, Complex> ordered_eigenvalues(const Mat2C& a);

SchurForm schur_form(const Mat2C& a);

/// (aA + bI)(cA + dI)^-1. Throws SingularDenominator when cA + dI is
/// numerically singular.
Mat2C moebius_apply(const MoebiusMap& f, const Mat2C& a);

/// (A + A*)/2 + i A*A.
Mat2C real_double(const Mat2C& a);

/// Largest singular value.
double operator_norm(const Mat2C& a);

/// Frobenius norm of A*A - AA*.
double normality_defect(const Mat2C& a);

bool is_unitary(const Mat2C& u, double tol);

}  // namespace shellrange
