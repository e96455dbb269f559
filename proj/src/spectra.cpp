#include "shellrange/spectra.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "shellrange/config.hpp"

namespace shellrange {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void order_descending(Complex& l1, Complex& l2) {
  const bool swap = l2.imag() > l1.imag() ||
                    (l2.imag() == l1.imag() && l2.real() > l1.real());
  if (swap) std::swap(l1, l2);
}

}  // namespace

std::string_view to_string(SpectralClass c) {
  switch (c) {
    case SpectralClass::RealElliptic: return "real-elliptic";
    case SpectralClass::RealParabolic: return "real-parabolic";
    case SpectralClass::RealHyperbolic: return "real-hyperbolic";
    case SpectralClass::NonRealParabolic: return "non-real-parabolic";
    case SpectralClass::SemiReal: return "semi-real";
    case SpectralClass::QuasiElliptic: return "quasi-elliptic";
    case SpectralClass::QuasiHyperbolic: return "quasi-hyperbolic";
  }
  return "unknown";
}

SpectralClass spectral_class_from_string(std::string_view s) {
  for (auto c : {SpectralClass::RealElliptic, SpectralClass::RealParabolic,
                 SpectralClass::RealHyperbolic, SpectralClass::NonRealParabolic,
                 SpectralClass::SemiReal, SpectralClass::QuasiElliptic,
                 SpectralClass::QuasiHyperbolic}) {
    if (to_string(c) == s) return c;
  }
  throw std::invalid_argument("unknown spectral class: " + std::string(s));
}

Mat2C CanonicalRep::matrix() const {
  const Complex i(0.0, 1.0);
  switch (kind) {
    case Kind::Zero:
      return Mat2C::Zero();
    case Kind::S:
      return make_mat(0.0, std::cos(beta), 0.0, i * std::sin(beta));
    case Kind::L: {
      const double c = std::cos(alpha), s = std::sin(alpha);
      return make_mat(Complex(c, s), 2.0 * t, 0.0, Complex(-c, sign * s));
    }
  }
  return Mat2C::Zero();
}

double half_arcosh_excess(double num, double den) {
  num = std::max(num, 0.0);
  if (num == 0.0) return 0.0;
  if (den <= 0.0) return kInf;
  return std::asinh(std::sqrt(num / den));
}

Invariants invariants(const Mat2C& a) {
  const Complex c = 0.5 * (a(0, 0) + a(1, 1));
  const Complex g = 0.5 * (a(0, 0) - a(1, 1));
  Invariants inv;
  // A - cI = [[g, a12], [a21, -g]].
  inv.U = std::norm(g) + 0.5 * (std::norm(a(0, 1)) + std::norm(a(1, 0)));
  inv.D = -g * g - a(0, 1) * a(1, 0);
  inv.absD = std::abs(inv.D);
  inv.E = c.imag() * c.imag() + 0.5 * (inv.absD - inv.D.real());
  const double scale = 1.0 + a.norm();
  if (inv.U < inv.absD && inv.absD - inv.U <= kTol.id * scale * scale) {
    inv.U = inv.absD;
  }
  inv.E = std::max(inv.E, 0.0);
  return inv;
}

std::pair<Complex, Complex> eigenvalues(const Mat2C& a) {
  return ordered_eigenvalues(a);
}

Spectrum analyze(const Mat2C& a, bool exact) {
  Spectrum s;
  s.inv = invariants(a);
  s.scale = 1.0 + a.norm();
  auto& inv = s.inv;
  const Complex c = 0.5 * (a(0, 0) + a(1, 1));
  const double tol2 = exact ? 0.0 : kTol.cls * s.scale * s.scale;
  const double tol1 = exact ? 0.0 : kTol.cls * s.scale;
  const double normal_tol = exact ? 0.0 : kTol.id * s.scale * s.scale;

  const bool zero_d = inv.absD <= tol2;
  const bool zero_e = inv.E <= tol2;
  if (zero_d && zero_e) {
    s.cls = SpectralClass::RealParabolic;
  } else if (zero_d) {
    s.cls = SpectralClass::NonRealParabolic;
  } else if (zero_e) {
    s.cls = SpectralClass::RealElliptic;
  } else if (std::abs(inv.E - inv.absD) <= tol2) {
    s.cls = std::abs(c.imag()) <= tol1 ? SpectralClass::RealHyperbolic
                                       : SpectralClass::SemiReal;
  } else {
    s.cls = inv.E < inv.absD ? SpectralClass::QuasiElliptic
                             : SpectralClass::QuasiHyperbolic;
  }

  auto [l1, l2] = ordered_eigenvalues(a);
  const double rc = c.real();
  switch (s.cls) {
    case SpectralClass::RealParabolic:
      inv.D = 0.0;
      inv.absD = inv.E = 0.0;
      l1 = l2 = rc;
      break;
    case SpectralClass::NonRealParabolic:
      inv.D = 0.0;
      inv.absD = 0.0;
      inv.E = c.imag() * c.imag();
      l1 = l2 = c;
      break;
    case SpectralClass::RealElliptic: {
      inv.E = 0.0;
      inv.D = inv.absD;
      const double r = std::sqrt(inv.absD);
      l1 = Complex(rc, r);
      l2 = Complex(rc, -r);
      break;
    }
    case SpectralClass::RealHyperbolic: {
      inv.E = inv.absD;
      inv.D = -inv.absD;
      const double r = std::sqrt(inv.absD);
      l1 = rc + r;
      l2 = rc - r;
      break;
    }
    case SpectralClass::SemiReal:
      inv.E = inv.absD;
      if (std::abs(l1.imag()) < std::abs(l2.imag())) {
        l1.imag(0.0);
      } else {
        l2.imag(0.0);
      }
      break;
    case SpectralClass::QuasiElliptic:
    case SpectralClass::QuasiHyperbolic:
      break;
  }
  order_descending(l1, l2);
  s.lambda1 = l1;
  s.lambda2 = l2;

  s.normal = inv.U - inv.absD <= normal_tol;
  if (s.normal) inv.U = inv.absD;
  return s;
}

SpectralClass classify(const Mat2C& a, bool exact) {
  return analyze(a, exact).cls;
}

CanonicalRep canonical_representative(const Spectrum& s) {
  const auto& inv = s.inv;
  const double excess = std::max(inv.U - inv.absD, 0.0);
  CanonicalRep rep;
  switch (s.cls) {
    case SpectralClass::RealParabolic:
      if (s.normal) return rep;
      [[fallthrough]];
    case SpectralClass::SemiReal:
      rep.kind = CanonicalRep::Kind::S;
      rep.beta = std::atan2(std::sqrt(2.0 * inv.absD), std::sqrt(excess));
      return rep;
    case SpectralClass::RealHyperbolic:
      rep.kind = CanonicalRep::Kind::L;
      rep.alpha = 0.0;
      rep.t = std::sqrt(excess / (2.0 * inv.absD));
      rep.sign = +1;
      return rep;
    case SpectralClass::RealElliptic:
    case SpectralClass::QuasiElliptic:
      rep.kind = CanonicalRep::Kind::L;
      rep.alpha = std::atan2(std::sqrt(std::max(inv.absD - inv.E, 0.0)),
                             std::sqrt(inv.E));
      rep.t = std::sqrt(excess / (2.0 * inv.absD));
      rep.sign = -1;
      return rep;
    case SpectralClass::NonRealParabolic:
    case SpectralClass::QuasiHyperbolic:
      rep.kind = CanonicalRep::Kind::L;
      rep.alpha = std::atan2(std::sqrt(std::max(inv.E - inv.absD, 0.0)),
                             std::sqrt(inv.absD));
      rep.t = std::sqrt(excess / (2.0 * inv.E));
      rep.sign = +1;
      return rep;
  }
  return rep;
}

CanonicalRep canonical_representative(const Mat2C& a) {
  return canonical_representative(analyze(a));
}

TripleRatio triple_ratio(const Invariants& inv) {
  const double excess = std::max(inv.U - inv.absD, 0.0);
  std::array<double, 3> v{excess, inv.U + inv.absD, excess + 2.0 * inv.E};
  std::sort(v.begin(), v.end());
  if (!(v[2] > 0.0)) return {};
  return {v[0] / v[2], v[1] / v[2], 1.0};
}

TripleRatio triple_ratio(const Mat2C& a) { return triple_ratio(analyze(a).inv); }

CharacteristicValues characteristic_values(const TripleRatio& r) {
  auto ratio = [](double num, double den) {
    if (den <= 0.0) return 0.0;
    return std::sqrt(std::clamp(num / den, 0.0, 1.0));
  };
  auto artanh_ext = [](double x) { return x >= 1.0 ? kInf : std::atanh(x); };
  CharacteristicValues v;
  v.chiPlus = ratio(r.chi2, r.chi3);
  v.chiMinus = ratio(r.chi1, r.chi3);
  v.chiE = ratio(r.chi2 - r.chi1, r.chi3 - r.chi1);
  v.sPlus = artanh_ext(v.chiPlus);
  v.sMinus = artanh_ext(v.chiMinus);
  v.sE = artanh_ext(v.chiE);
  return v;
}

SemiAxes semi_axes(const Invariants& inv) {
  const double gap = std::abs(inv.E - inv.absD);
  const double m = std::max(inv.E, inv.absD);
  SemiAxes s;
  const double major = inv.E >= inv.absD ? inv.U + inv.absD : inv.U + 2.0 * inv.E - inv.absD;
  s.sPlus = half_arcosh_excess(major, 2.0 * gap);
  s.sMinus = half_arcosh_excess(inv.U - inv.absD, 2.0 * m);
  s.sF = half_arcosh_excess(std::min(inv.E, inv.absD), gap);
  return s;
}

SemiAxes semi_axes(const Mat2C& a) { return semi_axes(analyze(a).inv); }

double eigendistance(const Invariants& inv) {
  return 2.0 * half_arcosh_excess(std::min(inv.E, inv.absD),
                                  std::abs(inv.E - inv.absD));
}

double eigendistance(const Mat2C& a) { return eigendistance(analyze(a).inv); }

}  // namespace shellrange
