#include "shellrange/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Geometry>
#include <boost/geometry.hpp>
#include <boost/geometry/geometries/multi_point.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>

#include "shellrange/config.hpp"
#include "shellrange/errors.hpp"

namespace shellrange {

namespace bg = boost::geometry;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.14159265358979323846;
constexpr double kGolden = 0.6180339887498948482;

// Below this 1 - |p|^2 a BCK point carries too few significant digits for
// the distance-based parabola predicate; the conic still covers it.
constexpr double kParabolaGap = 1e-6;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double uniform01(std::uint64_t seed, std::uint64_t index, std::uint64_t stream) {
  const std::uint64_t h = splitmix64(seed ^ splitmix64(2 * index + stream));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

HPoint bck(const HPoint& p) {
  return transcribe(p, dimension(p.model) == 2 ? Model::BCK2 : Model::BCK3);
}

Eigen::Vector3d vec3(const HPoint& p) { return {p.x, p.y, p.z}; }

double segment_distance(const Eigen::Vector3d& x, const Eigen::Vector3d& a,
                        const Eigen::Vector3d& b) {
  const Eigen::Vector3d ab = b - a;
  const double len2 = ab.squaredNorm();
  double u = len2 > 0.0 ? (x - a).dot(ab) / len2 : 0.0;
  u = std::clamp(u, 0.0, 1.0);
  return (x - (a + u * ab)).norm();
}

// Points within h-distance r of the h-line with ends n1, n2 (unit vectors),
// scaled by cosh^2 r; <= 0 inside.
double tube_value(const Eigen::Vector3d& x, const Eigen::Vector3d& n1,
                  const Eigen::Vector3d& n2, double r) {
  const double ch2 = std::cosh(r) * std::cosh(r);
  const double lhs = 2.0 * (1.0 - x.dot(n1)) * (1.0 - x.dot(n2)) / (1.0 - n1.dot(n2));
  return lhs / ch2 - (1.0 - x.squaredNorm());
}

// Horoball at n whose supporting plane z = h touches it from above.
double horo_value(const Eigen::Vector3d& x, const Eigen::Vector3d& n, double h) {
  const double nz = n.z();
  const double k = (h - nz) * (h - nz) / (1.0 - 2.0 * nz * h + nz * nz);
  const double c = 1.0 / k - 1.0;
  const double s = 1.0 - n.dot(x);
  return x.squaredNorm() - 1.0 + c * s * s;
}

void finish(Report& r, double tol) {
  r.max_violation = std::max(r.max_conic_violation, r.max_synthetic_violation);
  r.pass = r.max_violation <= tol;
}

void require_target(const SampleCloud& cloud, Target t) {
  if (cloud.target != t) {
    throw KindMismatch("sample cloud target does not match the descriptor kind");
  }
}

}  // namespace

std::string_view to_string(Target t) {
  switch (t) {
    case Target::Shell3D: return "shell";
    case Target::ConformalRange2D: return "conformal-range";
    case Target::NumericalRange2D: return "numerical-range";
  }
  return "unknown";
}

Eigen::Vector2cd sample_vector(std::size_t index, std::size_t n, std::uint64_t seed) {
  if (index == 0) return {1.0, 0.0};
  if (index == 1) return {0.0, 1.0};
  const std::size_t j = index - 2;
  const std::size_t lattice = (n > 2 ? n - 2 + 1 : 1) / 2;
  double c2, phi;
  if (j % 2 == 0) {
    const double i = static_cast<double>(j / 2);
    c2 = 1.0 - 2.0 * (i + 0.5) / static_cast<double>(std::max<std::size_t>(lattice, 1));
    const double frac = i * kGolden - std::floor(i * kGolden);
    phi = 2.0 * kPi * frac;
  } else {
    c2 = 2.0 * uniform01(seed, index, 0) - 1.0;
    phi = 2.0 * kPi * uniform01(seed, index, 1);
  }
  c2 = std::clamp(c2, -1.0, 1.0);
  const double ct = std::sqrt(0.5 * (1.0 + c2));
  const double st = std::sqrt(0.5 * (1.0 - c2));
  return {ct, std::polar(st, phi)};
}

SampleCloud sample(const Mat2C& a, Target target, Model model, std::size_t n,
                   std::uint64_t seed) {
  if (n < 1) throw TooFewSamples("sampling needs at least one point");
  if (target == Target::Shell3D && dimension(model) != 3) {
    throw ModelDimensionMismatch("the shell lives in a spatial model");
  }
  if (target == Target::ConformalRange2D && dimension(model) != 2) {
    throw ModelDimensionMismatch("the conformal range lives in a planar model");
  }
  SampleCloud cloud;
  cloud.target = target;
  cloud.model = model;
  cloud.seed = seed;
  cloud.count = n;
  if (target == Target::NumericalRange2D) {
    cloud.values.reserve(n);
  } else {
    cloud.points.reserve(n);
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Eigen::Vector2cd x = sample_vector(k, n, seed);
    const Eigen::Vector2cd y = a * x;
    const Complex q = x.dot(y);  // conjugates x
    if (target == Target::NumericalRange2D) {
      cloud.values.push_back(q);
      continue;
    }
    const double nn = y.squaredNorm();
    switch (model) {
      case Model::PCK3:
        cloud.points.push_back(HPoint::spatial(model, q.real(), q.imag(), nn));
        break;
      case Model::BCK3:
        cloud.points.push_back(HPoint::spatial(model, 2.0 * q.real() / (nn + 1.0),
                                               2.0 * q.imag() / (nn + 1.0),
                                               (nn - 1.0) / (nn + 1.0)));
        break;
      case Model::PCK2:
        cloud.points.push_back(HPoint::planar(model, q.real(), nn));
        break;
      case Model::BCK2:
        cloud.points.push_back(
            HPoint::planar(model, 2.0 * q.real() / (nn + 1.0), (nn - 1.0) / (nn + 1.0)));
        break;
      case Model::PH2: {
        // z_pCK - x_pCK^2 = (Im q)^2 + |Ax - q x|^2, both terms exact-signed.
        const double res = (y - q * x).squaredNorm();
        cloud.points.push_back(
            HPoint::planar(model, q.real(), std::sqrt(q.imag() * q.imag() + res)));
        break;
      }
    }
  }
  return cloud;
}

Report verify_membership(const SampleCloud& cloud, const RangeDescriptor& d, double tol) {
  require_target(cloud, Target::ConformalRange2D);
  Report r;
  r.count = cloud.points.size();
  const bool conic = is_non_normal_case(d.kind) && d.conic.primal.has_value();
  const HPoint f1 = d.foci.front();
  const HPoint f2 = d.foci.back();
  const Eigen::Vector3d n1 = vec3(f1), n2 = vec3(f2);
  const double h = d.touch_height_bck();
  double conic_max = -kInf, synth_max = -kInf;
  for (const HPoint& p : cloud.points) {
    const HPoint b = bck(p);
    const Eigen::Vector3d x = vec3(b);
    if (conic) conic_max = std::max(conic_max, conic_value(d.conic, b));
    double v = -kInf;
    switch (d.kind) {
      case RangeCase::PointOrdinary:
      case RangeCase::Segment:
      case RangeCase::ClosedLine:
      case RangeCase::ClosedHalfLine:
      case RangeCase::PointAsymptotic:
        v = segment_distance(x, n1, n2);
        break;
      case RangeCase::Circle:
      case RangeCase::ProperEllipse:
        v = ellipse_membership(d, p);
        break;
      case RangeCase::DistanceBand:
        v = tube_value(x, n1, n2, d.sMinus);
        break;
      case RangeCase::Horodisk:
        v = horo_value(x, n1, h);
        break;
      case RangeCase::EllipticParabola: {
        const bool fine = p.model == Model::PH2
                              ? !is_asymptotic(p)
                              : 1.0 - x.squaredNorm() > kParabolaGap;
        if (fine) {
          v = parabola_membership(d, p);
        } else {
          ++r.skipped;
        }
        break;
      }
    }
    synth_max = std::max(synth_max, v);
  }
  r.max_conic_violation = conic ? conic_max : 0.0;
  r.max_synthetic_violation = synth_max == -kInf ? 0.0 : synth_max;
  finish(r, tol);
  return r;
}

Report verify_membership(const SampleCloud& cloud, const ShellDescriptor& d, double tol) {
  require_target(cloud, Target::Shell3D);
  Report r;
  r.count = cloud.points.size();
  const Eigen::Vector3d n1 = vec3(embed(d.asymptotic_points.front(), Model::BCK3));
  const Eigen::Vector3d n2 = vec3(embed(d.asymptotic_points.back(), Model::BCK3));
  const double h = (d.touch_height - 1.0) / (d.touch_height + 1.0);
  double conic_max = -kInf, synth_max = -kInf;
  for (const HPoint& p : cloud.points) {
    const Eigen::Vector3d x = vec3(bck(p));
    if (d.primal_bck) {
      const Eigen::Vector4d hx(x.x(), x.y(), x.z(), 1.0);
      conic_max = std::max(conic_max, hx.dot(*d.primal_bck * hx));
    }
    double v = 0.0;
    switch (d.kind) {
      case ShellCase::Point:
      case ShellCase::Line:
        v = segment_distance(x, n1, n2);
        break;
      case ShellCase::Tube:
        v = tube_value(x, n1, n2, d.radius);
        break;
      case ShellCase::Horosphere:
        v = horo_value(x, n1, h);
        break;
    }
    synth_max = std::max(synth_max, v);
  }
  r.max_conic_violation = d.primal_bck ? conic_max : 0.0;
  r.max_synthetic_violation = synth_max == -kInf ? 0.0 : synth_max;
  finish(r, tol);
  return r;
}

Report verify_membership(const SampleCloud& cloud, const NumericalRangeDescriptor& d,
                         double tol) {
  require_target(cloud, Target::NumericalRange2D);
  Report r;
  r.count = cloud.values.size();
  double synth_max = -kInf;
  for (const Complex& w : cloud.values) {
    const double v = std::abs(w - d.foci[0]) + std::abs(w - d.foci[1]) - 2.0 * d.sPlusE;
    synth_max = std::max(synth_max, v);
  }
  r.max_synthetic_violation = synth_max == -kInf ? 0.0 : synth_max;
  finish(r, tol);
  return r;
}

AxesEstimate empirical_axes(const SampleCloud& cloud) {
  require_target(cloud, Target::ConformalRange2D);
  if (cloud.points.size() < 10000) {
    throw TooFewSamples("axis estimation needs at least 10^4 points");
  }
  using Pt = bg::model::d2::point_xy<double>;
  std::vector<HPoint> pts;
  pts.reserve(cloud.points.size());
  bg::model::multi_point<Pt> mp;
  bool touches = false;
  for (const HPoint& p : cloud.points) {
    const HPoint b = bck(p);
    touches = touches || is_asymptotic(b);
    pts.push_back(b);
    bg::append(mp, Pt(b.x, b.z));
  }
  bg::model::polygon<Pt> hull;
  bg::convex_hull(mp, hull);
  std::vector<HPoint> verts;
  for (const Pt& v : hull.outer()) verts.push_back(HPoint::planar(Model::BCK2, v.x(), v.y()));
  if (verts.size() > 1) verts.pop_back();  // closing point

  // Farthest pair: hyperbolic unless the cloud reaches the absolute.
  HPoint pa = pts.front(), pb = pts.front();
  double best = -1.0;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      const double e = std::hypot(verts[i].x - verts[j].x, verts[i].z - verts[j].z);
      const double dd = touches ? e : dist(verts[i], verts[j]);
      if (dd > best) {
        best = dd;
        pa = verts[i];
        pb = verts[j];
      }
    }
  }
  AxesEstimate est;
  est.sPlusEst = touches ? kInf : 0.5 * std::max(best, 0.0);

  const Eigen::Vector2d a(pa.x, pa.z), b(pb.x, pb.z);
  const Eigen::Vector2d dir = b - a;
  if (dir.norm() <= 1e-14) return est;
  const Eigen::Vector2d u = dir.normalized();
  const Eigen::Vector2d nrm(-u.y(), u.x());
  const double c = nrm.dot(a);
  // Axis line and its pole; h-perpendiculars to the axis pass through the pole.
  const Eigen::Vector3d axis(nrm.x(), nrm.y(), -c);
  const Eigen::Vector3d pole(nrm.x(), nrm.y(), c);
  const HPoint mid = HPoint::planar(Model::BCK2, 0.5 * (a.x() + b.x()), 0.5 * (a.y() + b.y()));

  struct Foot {
    double pos, off;
    bool left;
  };
  std::vector<Foot> feet;
  feet.reserve(pts.size());
  double lo = kInf, hi = -kInf;
  for (const HPoint& p : pts) {
    if (is_asymptotic(p)) continue;
    const Eigen::Vector3d hp(p.x, p.z, 1.0);
    const Eigen::Vector3d foot_h = axis.cross(hp.cross(pole));
    if (std::abs(foot_h.z()) <= 1e-300) continue;
    const HPoint f = HPoint::planar(Model::BCK2, foot_h.x() / foot_h.z(), foot_h.y() / foot_h.z());
    if (is_asymptotic(f)) continue;
    const double side = (Eigen::Vector2d(f.x, f.z) - Eigen::Vector2d(mid.x, mid.z)).dot(u);
    const double pos = std::copysign(dist(mid, f), side);
    const double off = dist(p, f);
    if (!std::isfinite(pos) || !std::isfinite(off)) continue;
    feet.push_back({pos, off, nrm.dot(Eigen::Vector2d(p.x, p.z)) - c < 0.0});
    lo = std::min(lo, pos);
    hi = std::max(hi, pos);
  }
  if (feet.empty()) return est;
  const std::size_t bins =
      std::max<std::size_t>(10, static_cast<std::size_t>(std::sqrt(feet.size()) / 2));
  std::vector<double> left(bins, 0.0), right(bins, 0.0);
  const double width = hi > lo ? (hi - lo) / static_cast<double>(bins) : 1.0;
  for (const Foot& f : feet) {
    std::size_t k = static_cast<std::size_t>((f.pos - lo) / width);
    k = std::min(k, bins - 1);
    double& slot = f.left ? left[k] : right[k];
    slot = std::max(slot, f.off);
  }
  for (std::size_t k = 0; k < bins; ++k) {
    est.sMinusEst = std::max(est.sMinusEst, 0.5 * (left[k] + right[k]));
  }
  return est;
}

}  // namespace shellrange
