#include "shellrange/core_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "shellrange/config.hpp"
#include "shellrange/errors.hpp"

namespace shellrange {

namespace {

bool precedes(Complex x, Complex y) {
  if (x.imag() != y.imag()) return x.imag() > y.imag();
  return x.real() > y.real();
}

double max_abs(Complex a, Complex b, Complex c, Complex d) {
  return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

}  // namespace

MoebiusMap::MoebiusMap(Complex a, Complex b, Complex c, Complex d)
    : a_(a), b_(b), c_(c), d_(d) {
  const double scale = max_abs(a, b, c, d);
  if (!(scale > 0.0) || std::abs(a * d - b * c) <= kTol.det * scale * scale) {
    throw DegenerateMoebius("Moebius map has vanishing determinant ad - bc");
  }
  real_ = a.imag() == 0.0 && b.imag() == 0.0 && c.imag() == 0.0 &&
          d.imag() == 0.0;
}

MoebiusMap MoebiusMap::compose(const MoebiusMap& g) const {
  // Matrix product [[a, b], [c, d]] * [[a', b'], [c', d']].
  return {a_ * g.a_ + b_ * g.c_, a_ * g.b_ + b_ * g.d_,
          c_ * g.a_ + d_ * g.c_, c_ * g.b_ + d_ * g.d_};
}

std::pair<Complex, Complex> ordered_eigenvalues(const Mat2C& a) {
  const Complex half_trace = 0.5 * (a(0, 0) + a(1, 1));
  const Complex half_gap = 0.5 * (a(0, 0) - a(1, 1));
  // det(A - tr/2) without the cancellation of det - tr^2/4.
  const Complex centred_det = -half_gap * half_gap - a(0, 1) * a(1, 0);
  Complex root = std::sqrt(-centred_det);
  if ((std::conj(half_trace) * root).real() < 0.0) root = -root;
  const Complex big = half_trace + root;
  Complex small = half_trace - root;
  if (std::abs(big) > 0.0) {
    const Complex det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    small = det / big;
  }
  if (precedes(big, small)) return {big, small};
  return {small, big};
}

SchurForm schur_form(const Mat2C& a) {
  const auto [l1, l2] = ordered_eigenvalues(a);
  Mat2C b = a;
  b(0, 0) -= l1;
  b(1, 1) -= l1;
  // Columns of adj(A - l1) span its kernel; keep the better conditioned one.
  Eigen::Vector2cd c1(b(1, 1), -b(1, 0));
  Eigen::Vector2cd c2(-b(0, 1), b(0, 0));
  Eigen::Vector2cd v = c1.norm() >= c2.norm() ? c1 : c2;
  if (v.norm() == 0.0) v = Eigen::Vector2cd(1.0, 0.0);
  v.normalize();
  // Fix the phase: largest component real positive.
  const Complex pivot = std::abs(v(0)) >= std::abs(v(1)) ? v(0) : v(1);
  v *= std::conj(pivot) / std::abs(pivot);

  Mat2C u;
  u.col(0) = v;
  u.col(1) << -std::conj(v(1)), std::conj(v(0));
  const Complex off = (u.col(0).adjoint() * a * u.col(1))(0, 0);
  if (std::abs(off) > 0.0) u.col(1) *= std::conj(off) / std::abs(off);

  SchurForm s;
  s.lambda1 = l1;
  s.lambda2 = l2;
  s.t = std::abs(off);
  s.U = u;
  return s;
}

Mat2C moebius_apply(const MoebiusMap& f, const Mat2C& a) {
  const Mat2C id = Mat2C::Identity();
  const Mat2C num = f.a() * a + f.b() * id;
  const Mat2C den = f.c() * a + f.d() * id;
  const Complex det = den(0, 0) * den(1, 1) - den(0, 1) * den(1, 0);
  const double scale = std::abs(f.c()) * a.norm() + std::abs(f.d());
  if (std::abs(det) <= kTol.det * scale * scale) {
    throw SingularDenominator("cA + dI is singular: -d/c is an eigenvalue");
  }
  Mat2C inv;
  inv << den(1, 1), -den(0, 1), -den(1, 0), den(0, 0);
  inv /= det;
  return num * inv;
}

Mat2C real_double(const Mat2C& a) {
  const Complex i(0.0, 1.0);
  return 0.5 * (a + a.adjoint()) + i * (a.adjoint() * a);
}

double operator_norm(const Mat2C& a) {
  const Mat2C g = a.adjoint() * a;
  const double half_tr = 0.5 * (g(0, 0).real() + g(1, 1).real());
  const double half_diff = 0.5 * (g(0, 0).real() - g(1, 1).real());
  const double spread = std::hypot(half_diff, std::abs(g(0, 1)));
  return std::sqrt(half_tr + spread);
}

double normality_defect(const Mat2C& a) {
  return (a.adjoint() * a - a * a.adjoint()).norm();
}

bool is_unitary(const Mat2C& u, double tol) {
  return (u * u.adjoint() - Mat2C::Identity()).norm() <= tol;
}

}  // namespace shellrange
