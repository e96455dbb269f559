#include "shellrange/ranges.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "shellrange/config.hpp"
#include "shellrange/errors.hpp"

namespace shellrange {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.14159265358979323846;

// Relative threshold for numerical rank of the dual quadric and conic.
constexpr double kRankTol = 1e-10;

// <Mx, x> = p (m12 + m21)/2 + q i (m12 - m21)/2 + r (m22 - m11)/2 + s (m11 + m22)/2.
Eigen::Matrix<Complex, 1, 4> form_row(const Mat2C& m) {
  const Complex i(0.0, 1.0);
  Eigen::Matrix<Complex, 1, 4> row;
  row << 0.5 * (m(0, 1) + m(1, 0)), 0.5 * i * (m(0, 1) - m(1, 0)),
      0.5 * (m(1, 1) - m(0, 0)), 0.5 * (m(0, 0) + m(1, 1));
  return row;
}

template <typename Mat>
int numerical_rank(const Mat& g) {
  Eigen::JacobiSVD<Mat> svd(g);
  const auto& sv = svd.singularValues();
  if (!(sv(0) > 0.0)) return 0;
  int r = 0;
  for (int k = 0; k < sv.size(); ++k) {
    if (sv(k) > kRankTol * sv(0)) ++r;
  }
  return r;
}

// pCK point (x, z, w) -> BCK point (2x, z - w, z + w).
Eigen::Matrix3d pck_to_bck2() {
  Eigen::Matrix3d p;
  p << 2, 0, 0, 0, 1, -1, 0, 1, 1;
  return p;
}

Eigen::Matrix4d pck_to_bck3() {
  Eigen::Matrix4d p;
  p << 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 1, -1, 0, 0, 1, 1;
  return p;
}

// Inverse of a dual matrix, unit Frobenius norm, negative at `inside`.
template <typename Mat, typename Vec>
Mat signed_primal(const Mat& dual, const Vec& inside) {
  Mat q = dual.inverse();
  q /= q.norm();
  if (inside.dot(q * inside) > 0.0) q = -q;
  return q;
}

HPoint bck2(double x, double z) { return HPoint::planar(Model::BCK2, x, z); }

HPoint as_bck2(const HPoint& p) {
  if (dimension(p.model) != 2) {
    throw ModelDimensionMismatch("expected a point of the hyperbolic plane");
  }
  return transcribe(p, Model::BCK2);
}

RangeCase range_case(SpectralClass cls, bool normal) {
  switch (cls) {
    case SpectralClass::RealElliptic:
    case SpectralClass::NonRealParabolic:
      return normal ? RangeCase::PointOrdinary : RangeCase::Circle;
    case SpectralClass::QuasiElliptic:
    case SpectralClass::QuasiHyperbolic:
      return normal ? RangeCase::Segment : RangeCase::ProperEllipse;
    case SpectralClass::RealHyperbolic:
      return normal ? RangeCase::ClosedLine : RangeCase::DistanceBand;
    case SpectralClass::SemiReal:
      return normal ? RangeCase::ClosedHalfLine : RangeCase::EllipticParabola;
    case SpectralClass::RealParabolic:
      return normal ? RangeCase::PointAsymptotic : RangeCase::Horodisk;
  }
  return RangeCase::PointOrdinary;
}

struct EllipseFrame {
  Eigen::Vector2d center;
  Eigen::Matrix2d axes;       // columns: unit directions
  Eigen::Vector2d half;       // half-lengths along the columns
};

EllipseFrame ellipse_frame(const Eigen::Matrix3d& q) {
  const Eigen::Matrix2d q2 = q.topLeftCorner<2, 2>();
  const Eigen::Vector2d b = q.topRightCorner<2, 1>();
  EllipseFrame f;
  f.center = -q2.ldlt().solve(b);
  const double k = -b.dot(f.center) - q(2, 2);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(q2);
  if (es.eigenvalues().minCoeff() <= 0.0 || k < 0.0) {
    throw ConsistencyError("primal conic is not an ellipse");
  }
  f.axes.col(0) = es.eigenvectors().col(0);
  f.axes.col(1) = es.eigenvectors().col(1);
  f.half << std::sqrt(k / es.eigenvalues()(0)), std::sqrt(k / es.eigenvalues()(1));
  return f;
}

const HPoint& asymptotic_focus(const RangeDescriptor& d) {
  for (const auto& f : d.foci) {
    if (is_asymptotic(f)) return f;
  }
  throw ConsistencyError("parabolic range without an asymptotic focus");
}

Complex real_eigenvalue(const RangeDescriptor& d) {
  const auto& l = d.eigenvalues;
  return std::abs(l[0].imag()) <= std::abs(l[1].imag()) ? l[0] : l[1];
}

Complex nonreal_eigenvalue(const RangeDescriptor& d) {
  const auto& l = d.eigenvalues;
  return std::abs(l[0].imag()) > std::abs(l[1].imag()) ? l[0] : l[1];
}

}  // namespace

std::string_view to_string(ShellCase c) {
  switch (c) {
    case ShellCase::Point: return "point";
    case ShellCase::Line: return "line";
    case ShellCase::Horosphere: return "horosphere";
    case ShellCase::Tube: return "tube";
  }
  return "unknown";
}

std::string_view to_string(RangeCase c) {
  switch (c) {
    case RangeCase::PointOrdinary: return "point-ordinary";
    case RangeCase::Segment: return "segment";
    case RangeCase::ClosedLine: return "closed-line";
    case RangeCase::ClosedHalfLine: return "closed-half-line";
    case RangeCase::PointAsymptotic: return "point-asymptotic";
    case RangeCase::Circle: return "circle";
    case RangeCase::ProperEllipse: return "proper-ellipse";
    case RangeCase::DistanceBand: return "distance-band";
    case RangeCase::EllipticParabola: return "elliptic-parabola";
    case RangeCase::Horodisk: return "horodisk";
  }
  return "unknown";
}

ShellCase shell_case_from_string(std::string_view s) {
  for (auto c : {ShellCase::Point, ShellCase::Line, ShellCase::Horosphere, ShellCase::Tube}) {
    if (to_string(c) == s) return c;
  }
  throw std::invalid_argument("unknown shell case: " + std::string(s));
}

RangeCase range_case_from_string(std::string_view s) {
  for (int k = 0; k <= static_cast<int>(RangeCase::Horodisk); ++k) {
    const auto c = static_cast<RangeCase>(k);
    if (to_string(c) == s) return c;
  }
  throw std::invalid_argument("unknown range case: " + std::string(s));
}

bool is_non_normal_case(RangeCase c) {
  switch (c) {
    case RangeCase::Circle:
    case RangeCase::ProperEllipse:
    case RangeCase::DistanceBand:
    case RangeCase::EllipticParabola:
    case RangeCase::Horodisk:
      return true;
    default:
      return false;
  }
}

double RangeDescriptor::touch_height_bck() const {
  return (touch_height - 1.0) / (touch_height + 1.0);
}

MomentMap moment_map(const Mat2C& a) {
  const auto ra = form_row(a);
  const auto rn = form_row(a.adjoint() * a);
  MomentMap m;
  m.M.row(0) = ra.real();
  m.M.row(1) = ra.imag();
  m.M.row(2) = rn.real();
  m.M.row(3) << 0.0, 0.0, 0.0, 1.0;
  return m;
}

DualQuadric shell_dual_quadric(const Mat2C& a) {
  const Eigen::Matrix4d m = moment_map(a).M;
  const Eigen::Vector4d j(1.0, 1.0, 1.0, -1.0);
  DualQuadric q;
  q.G = m * j.asDiagonal() * m.transpose();
  q.G = 0.5 * (q.G + q.G.transpose());
  q.rank = numerical_rank(q.G);
  return q;
}

ConicBCK conformal_dual_conic(const Mat2C& a) {
  const Eigen::Matrix4d g = shell_dual_quadric(a).G;
  const std::array<int, 3> keep{0, 2, 3};
  Eigen::Matrix3d gp;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) gp(r, c) = g(keep[r], keep[c]);
  }
  const Eigen::Matrix3d p = pck_to_bck2();
  ConicBCK out;
  out.Gc = p * gp * p.transpose();
  out.Gc = 0.5 * (out.Gc + out.Gc.transpose());
  const double n = out.Gc.norm();
  if (n > 0.0) out.Gc /= n;
  if (out.Gc(2, 2) > 0.0) out.Gc = -out.Gc;
  out.rank = numerical_rank(out.Gc);
  if (out.rank == 3) {
    // Centre of the pCK ellipse: (Re tr A / 2, tr(A*A) / 2).
    const double cx = 0.5 * (a(0, 0) + a(1, 1)).real();
    const double cz = 0.5 * (a.adjoint() * a).trace().real();
    const Eigen::Vector3d inside = p * Eigen::Vector3d(cx, cz, 1.0);
    out.primal = signed_primal(out.Gc, inside);
  }
  return out;
}

std::pair<HPoint, HPoint> extract_foci(const ConicBCK& c) {
  if (c.rank != 3) throw WrongCase("focus extraction needs a rank-3 dual conic");
  const Eigen::Vector3d g0(1.0, 1.0, -1.0);
  // det(Gc + l G0) = det(G0) det(G0 Gc + l I).
  const Eigen::Matrix3d n = g0.asDiagonal() * c.Gc;
  Eigen::EigenSolver<Eigen::Matrix3d> es(n, false);
  std::array<Complex, 3> ev{es.eigenvalues()(0), es.eigenvalues()(1), es.eigenvalues()(2)};

  // Roots of a defective cluster scatter by sqrt(eps); their mean does not.
  const double scale = 1.0 + std::max({std::abs(ev[0]), std::abs(ev[1]), std::abs(ev[2])});
  const double cluster = 1e-5 * scale;
  std::vector<double> roots;
  std::array<bool, 3> used{};
  for (int i = 0; i < 3; ++i) {
    if (used[i]) continue;
    Complex sum = ev[i];
    int count = 1;
    used[i] = true;
    for (int j = i + 1; j < 3; ++j) {
      if (!used[j] && std::abs(ev[j] - ev[i]) <= cluster) {
        sum += ev[j];
        ++count;
        used[j] = true;
      }
    }
    const Complex mean = sum / static_cast<double>(count);
    if (std::abs(mean.imag()) <= cluster) roots.push_back(-mean.real());
  }

  struct Candidate {
    HPoint p, q;
    double residual;
  };
  std::optional<Candidate> best;
  for (double lambda : roots) {
    const Eigen::Matrix3d h = c.Gc + lambda * Eigen::Matrix3d(g0.asDiagonal());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> sh(h);
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int x, int y) {
      return std::abs(sh.eigenvalues()(x)) > std::abs(sh.eigenvalues()(y));
    });
    const double mu1 = sh.eigenvalues()(idx[0]);
    const double mu2 = sh.eigenvalues()(idx[1]);
    const double mu3 = sh.eigenvalues()(idx[2]);
    if (!(std::abs(mu1) > 0.0)) continue;
    const Eigen::Vector3d e1 = sh.eigenvectors().col(idx[0]);
    const Eigen::Vector3d e2 = sh.eigenvectors().col(idx[1]);
    Eigen::Vector3d l1, l2;
    if (std::abs(mu2) <= 1e-8 * std::abs(mu1)) {
      l1 = l2 = e1;
    } else if (mu1 * mu2 < 0.0) {
      l1 = std::sqrt(std::abs(mu1)) * e1 + std::sqrt(std::abs(mu2)) * e2;
      l2 = std::sqrt(std::abs(mu1)) * e1 - std::sqrt(std::abs(mu2)) * e2;
    } else {
      continue;  // imaginary pair
    }
    auto affine = [](const Eigen::Vector3d& v, HPoint& out) {
      if (std::abs(v(2)) <= 1e-12 * v.norm()) return false;
      out = bck2(v(0) / v(2), v(1) / v(2));
      return out.x * out.x + out.z * out.z <= 1.0 + 1e-6;
    };
    HPoint p, q;
    if (!affine(l1, p) || !affine(l2, q)) continue;
    const double residual = std::abs(mu3) / std::abs(mu1);
    if (!best || residual < best->residual) best = Candidate{p, q, residual};
  }
  if (!best) throw NoRealLinePair("no degenerate member of the confocal pencil is a real point pair");
  auto before = [](const HPoint& a, const HPoint& b) {
    return a.x < b.x || (a.x == b.x && a.z < b.z);
  };
  if (before(best->q, best->p)) std::swap(best->p, best->q);
  return {best->p, best->q};
}

ShellDescriptor dw_shell(const Mat2C& a) {
  const Spectrum s = analyze(a);
  const bool equal = s.inv.absD == 0.0;
  ShellDescriptor d;
  if (s.normal) {
    d.kind = equal ? ShellCase::Point : ShellCase::Line;
  } else {
    d.kind = equal ? ShellCase::Horosphere : ShellCase::Tube;
  }
  d.asymptotic_points.push_back({s.lambda1});
  if (!equal) d.asymptotic_points.push_back({s.lambda2});
  switch (d.kind) {
    case ShellCase::Point:
    case ShellCase::Line:
      d.radius = 0.0;
      break;
    case ShellCase::Horosphere:
      d.radius = kInf;
      break;
    case ShellCase::Tube:
      d.radius = half_arcosh_excess(s.inv.U - s.inv.absD, 2.0 * s.inv.absD);
      break;
  }
  const double nrm = operator_norm(a);
  d.touch_height = nrm * nrm;
  d.dual_quadric = shell_dual_quadric(a);
  if (!s.normal && d.dual_quadric.rank == 4) {
    const Eigen::Matrix4d p = pck_to_bck3();
    Eigen::Matrix4d gb = p * d.dual_quadric.G * p.transpose();
    gb /= gb.norm();
    const Complex c = 0.5 * (a(0, 0) + a(1, 1));
    const double cz = 0.5 * (a.adjoint() * a).trace().real();
    const Eigen::Vector4d inside = p * Eigen::Vector4d(c.real(), c.imag(), cz, 1.0);
    d.primal_bck = signed_primal(gb, inside);
  }
  return d;
}

RangeDescriptor conformal_range(const Mat2C& a) {
  const Spectrum s = analyze(a);
  RangeDescriptor d;
  d.kind = range_case(s.cls, s.normal);
  d.spectral_class = s.cls;
  d.eigenvalues = {s.lambda1, s.lambda2};

  const HPoint p1 = embed(s.lambda1, Model::BCK2);
  const HPoint p2 = embed(s.lambda2, Model::BCK2);
  d.foci.push_back(p1);
  if (std::hypot(p1.x - p2.x, p1.z - p2.z) > kTol.geo) d.foci.push_back(p2);

  const SemiAxes ax = semi_axes(s.inv);
  d.sPlus = ax.sPlus;
  d.sMinus = ax.sMinus;
  d.sF = ax.sF;
  const CharacteristicValues cv = characteristic_values(triple_ratio(s.inv));
  d.chiPlus = cv.chiPlus;
  d.chiMinus = cv.chiMinus;
  d.chiE = cv.chiE;

  d.conic = conformal_dual_conic(a);
  const double nrm = operator_norm(a);
  d.touch_height = nrm * nrm;

  if (d.kind == RangeCase::EllipticParabola && d.conic.primal && d.foci.size() == 2) {
    const HPoint& l0 = asymptotic_focus(d);
    const HPoint& l1 = (&l0 == &d.foci[0]) ? d.foci[1] : d.foci[0];
    const Eigen::Matrix3d& q = *d.conic.primal;
    const Eigen::Vector3d h0(l0.x, l0.z, 1.0);
    const Eigen::Vector3d dir(l1.x - l0.x, l1.z - l0.z, 0.0);
    const double qa = dir.dot(q * dir);
    const double qb = h0.dot(q * dir);
    const double qc = h0.dot(q * h0);
    const double disc = std::sqrt(std::max(qb * qb - qa * qc, 0.0));
    const double big = -(qb + std::copysign(disc, qb));
    double s1 = big / qa;
    if (big != 0.0) {
      const double s2 = qc / big;
      if (std::abs(s2) > std::abs(s1)) s1 = s2;
    }
    d.vertex = bck2(l0.x + s1 * dir(0), l0.z + s1 * dir(1));
  }
  return d;
}

NumericalRangeDescriptor numerical_range(const Mat2C& a) {
  const Spectrum s = analyze(a);
  NumericalRangeDescriptor d;
  d.foci = {s.lambda1, s.lambda2};
  d.sPlusE = std::sqrt(0.5 * (s.inv.U + s.inv.absD));
  d.sMinusE = std::sqrt(0.5 * std::max(s.inv.U - s.inv.absD, 0.0));
  d.sFE = std::sqrt(s.inv.absD);
  return d;
}

double ellipse_membership(const RangeDescriptor& d, const HPoint& p) {
  switch (d.kind) {
    case RangeCase::PointOrdinary:
    case RangeCase::Segment:
    case RangeCase::Circle:
    case RangeCase::ProperEllipse:
      break;
    default:
      throw WrongCase("ellipse membership needs an ordinary h-ellipse");
  }
  if (dimension(p.model) != 2) throw ModelDimensionMismatch("expected a planar point");
  const HPoint f1 = transcribe(d.foci.front(), p.model);
  const HPoint f2 = transcribe(d.foci.back(), p.model);
  return dist(p, f1) + dist(p, f2) - 2.0 * d.sPlus;
}

double parabola_membership(const RangeDescriptor& d, const HPoint& p) {
  if (d.kind != RangeCase::EllipticParabola || !d.vertex) {
    throw WrongCase("parabola membership needs an h-elliptic parabola");
  }
  if (dimension(p.model) != 2) throw ModelDimensionMismatch("expected a planar point");
  // Work in Ph, where moving the asymptotic focus to 0 is a translation.
  const double shift = real_eigenvalue(d).real();
  const Complex l = nonreal_eigenvalue(d);
  auto moved = [shift](HPoint h) {
    h = transcribe(h, Model::PH2);
    h.x -= shift;
    return h;
  };
  const HPoint x = moved(p);
  const HPoint lam = HPoint::planar(Model::PH2, l.real() - shift, std::abs(l.imag()));
  const HPoint v = moved(*d.vertex);
  auto d0 = [](const HPoint& h) { return horo_signed_distance(h, HoroAnchor::Bottom); };
  return dist(x, lam) + d0(x) + d0(lam) - 2.0 * d0(v);
}

double conic_value(const ConicBCK& c, const HPoint& p) {
  if (!c.primal) throw WrongCase("conic has no primal form");
  const HPoint b = as_bck2(p);
  const Eigen::Vector3d h(b.x, b.z, 1.0);
  return h.dot(*c.primal * h);
}

std::vector<HPoint> boundary_polyline(const RangeDescriptor& d, int n, Model model) {
  if (n < 8) throw std::invalid_argument("boundary polyline needs at least 8 points");
  if (dimension(model) != 2) throw ModelDimensionMismatch("boundary polylines are planar");
  if (d.foci.size() < 2 && !is_non_normal_case(d.kind)) {
    throw WrongCase("point ranges have no boundary curve");
  }
  std::vector<HPoint> out;
  out.reserve(static_cast<std::size_t>(n));
  if (!is_non_normal_case(d.kind)) {
    const HPoint& a = d.foci[0];
    const HPoint& b = d.foci[1];
    for (int k = 0; k < n; ++k) {
      const double u = static_cast<double>(k) / (n - 1);
      const HPoint q = bck2(a.x + u * (b.x - a.x), a.z + u * (b.z - a.z));
      out.push_back(transcribe(q, model));
    }
    return out;
  }
  if (!d.conic.primal) throw ConsistencyError("non-normal range without a primal conic");
  const EllipseFrame f = ellipse_frame(*d.conic.primal);
  for (int k = 0; k < n; ++k) {
    const double th = 2.0 * kPi * k / n;
    const Eigen::Vector2d local(f.half(0) * std::cos(th), f.half(1) * std::sin(th));
    Eigen::Vector2d q = f.center + f.axes * local;
    // The ellipse touches the absolute; push rounding overshoot back onto it.
    const double r2 = q.squaredNorm();
    if (r2 > 1.0) q /= std::sqrt(r2);
    out.push_back(transcribe(bck2(q(0), q(1)), model));
  }
  return out;
}

EuclideanAxes principal_axes(const RangeDescriptor& d) {
  EuclideanAxes ax;
  if (!is_non_normal_case(d.kind)) {
    const HPoint& a = d.foci.front();
    const HPoint& b = d.foci.back();
    ax.center = {0.5 * (a.x + b.x), 0.5 * (a.z + b.z)};
    ax.axis1 = {{{a.x, a.z}, {b.x, b.z}}};
    ax.axis2 = {{ax.center, ax.center}};
    return ax;
  }
  if (!d.conic.primal) throw ConsistencyError("non-normal range without a primal conic");
  const EllipseFrame f = ellipse_frame(*d.conic.primal);
  ax.center = {f.center(0), f.center(1)};
  const int major = f.half(0) >= f.half(1) ? 0 : 1;
  auto ends = [&](int k) {
    const Eigen::Vector2d e = f.half(k) * f.axes.col(k);
    return std::array<std::array<double, 2>, 2>{
        {{f.center(0) - e(0), f.center(1) - e(1)}, {f.center(0) + e(0), f.center(1) + e(1)}}};
  };
  ax.axis1 = ends(major);
  ax.axis2 = ends(1 - major);
  return ax;
}

}  // namespace shellrange
