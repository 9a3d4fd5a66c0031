#include "foldrep/moebius.hpp"

#include <algorithm>
#include <cmath>

#include "foldrep/error.hpp"

namespace foldrep {

namespace {

Vec2 unit(Vec2 v) {
  const double n = std::hypot(v.x, v.y);
  return {v.x / n, v.y / n};
}

double cross(Vec2 u, Vec2 v) { return u.x * v.y - u.y * v.x; }

// Orientation-preserving matrix with columns proportional to (inf_image, zero_image).
Mat2 frame_from_columns(Vec2 inf_image, Vec2 zero_image) {
  Mat2 m{inf_image.x, zero_image.x, inf_image.y, zero_image.y};
  if (m.det() < 0.0) {
    m.b = -m.b;
    m.d = -m.d;
  }
  const double s = std::sqrt(m.det());
  return {m.a / s, m.b / s, m.c / s, m.d / s};
}

}  // namespace

double Mat2::max_abs_diff(const Mat2& o) const {
  return std::max({std::abs(a - o.a), std::abs(b - o.b), std::abs(c - o.c), std::abs(d - o.d)});
}

std::string to_string(IsometryClass cls) {
  switch (cls) {
    case IsometryClass::Identity: return "Identity";
    case IsometryClass::Elliptic: return "Elliptic";
    case IsometryClass::Parabolic: return "Parabolic";
    case IsometryClass::Hyperbolic: return "Hyperbolic";
  }
  return "?";
}

HPoint::HPoint(double x_, double y_) : x(x_), y(y_) {
  if (!(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
    throw Error(ErrorKind::InvalidInput, "half-plane point needs y > 0");
  }
}

BoundaryPoint BoundaryPoint::from_vector(Vec2 v) {
  if (v.y == 0.0) return infinity();
  return real(v.x / v.y);
}

Vec2 BoundaryPoint::vector() const {
  if (infinite_) return {1.0, 0.0};
  return unit({value_, 1.0});
}

bool BoundaryPoint::approx_equal(const BoundaryPoint& o, double tol) const {
  return std::abs(cross(vector(), o.vector())) <= tol;
}

bool Geodesic::approx_equal(const Geodesic& o, double tol) const {
  return (p.approx_equal(o.p, tol) && q.approx_equal(o.q, tol)) ||
         (p.approx_equal(o.q, tol) && q.approx_equal(o.p, tol));
}

namespace {

// PSL(2,R) representative: positive trace, or the first nonzero entry positive
// when the trace vanishes.
Mat2 sign_normalized(const Mat2& m) {
  bool flip = false;
  const double tr = m.a + m.d;
  if (std::abs(tr) > kTraceZeroTol) {
    flip = tr < 0.0;
  } else if (m.a != 0.0) {
    flip = m.a < 0.0;
  } else if (m.b != 0.0) {
    flip = m.b < 0.0;
  } else {
    flip = m.c < 0.0;
  }
  return flip ? Mat2{-m.a, -m.b, -m.c, -m.d} : m;
}

}  // namespace

MoebiusTransform::MoebiusTransform(double a, double b, double c, double d) {
  const double det = a * d - b * c;
  if (!(det > 0.0) || !std::isfinite(det)) {
    throw Error(ErrorKind::InvalidMatrix, "matrix must have positive finite determinant");
  }
  const double s = 1.0 / std::sqrt(det);
  m_ = sign_normalized({a * s, b * s, c * s, d * s});
}

MoebiusTransform MoebiusTransform::unimodular(const Mat2& m) {
  if (!std::isfinite(m.a) || !std::isfinite(m.b) || !std::isfinite(m.c) || !std::isfinite(m.d)) {
    throw Error(ErrorKind::InvalidMatrix, "matrix entries must be finite");
  }
  MoebiusTransform g;
  g.m_ = sign_normalized(m);
  return g;
}

MoebiusTransform MoebiusTransform::diagonal(double s) { return MoebiusTransform(s, 0.0, 0.0, 1.0 / s); }

MoebiusTransform MoebiusTransform::imaginary_translation(double length) {
  return diagonal(std::exp(0.5 * length));
}

Isometry::Isometry(const Mat2& m) {
  const double det = m.det();
  if (det == 0.0 || !std::isfinite(det)) {
    throw Error(ErrorKind::InvalidMatrix, "isometry matrix must be invertible");
  }
  const double s = 1.0 / std::sqrt(std::abs(det));
  m_ = {m.a * s, m.b * s, m.c * s, m.d * s};
}

Isometry Isometry::reflection(const Geodesic& g) {
  const Vec2 p = g.p.vector();
  const Vec2 q = g.q.vector();
  const Mat2 cols{p.x, q.x, p.y, q.y};
  return Isometry(cols * Mat2{1.0, 0.0, 0.0, -1.0} * cols.inverse());
}

MoebiusTransform Isometry::to_moebius() const {
  if (!preserves_orientation()) {
    throw Error(ErrorKind::InvalidInput, "orientation-reversing isometry is not in PSL(2,R)");
  }
  return MoebiusTransform(m_);
}

MoebiusTransform Isometry::conjugate(const MoebiusTransform& g) const {
  return MoebiusTransform(m_ * g.matrix() * m_.inverse());
}

HPoint Isometry::apply(const HPoint& p) const {
  // For det < 0 the action is on the conjugate point.
  const double y = preserves_orientation() ? p.y : -p.y;
  const double den_re = m_.c * p.x + m_.d;
  const double den_im = m_.c * y;
  const double num_re = m_.a * p.x + m_.b;
  const double num_im = m_.a * y;
  const double n2 = den_re * den_re + den_im * den_im;
  const double re = (num_re * den_re + num_im * den_im) / n2;
  // Imaginary part equals |det| * Im(z) / |cz+d|^2, kept positive analytically.
  const double im = std::abs(m_.det()) * p.y / n2;
  return HPoint(re, im);
}

BoundaryPoint Isometry::apply(const BoundaryPoint& p) const { return BoundaryPoint::from_vector(m_ * p.vector()); }

MoebiusTransform compose(const MoebiusTransform& g, const MoebiusTransform& h) { return g * h; }

IsometryClass classify(const MoebiusTransform& g) {
  const Mat2& m = g.matrix();
  if (m.max_abs_diff(Mat2{}) <= kIdentityTol) return IsometryClass::Identity;
  const double t = std::abs(g.trace());
  if (std::abs(t - 2.0) < kParabolicBand) return IsometryClass::Parabolic;
  return t > 2.0 ? IsometryClass::Hyperbolic : IsometryClass::Elliptic;
}

double translation_length(const MoebiusTransform& g) {
  if (classify(g) != IsometryClass::Hyperbolic) return 0.0;
  return 2.0 * std::acosh(std::abs(g.trace()) / 2.0);
}

FixedPoints fixed_points(const MoebiusTransform& g) {
  if (classify(g) != IsometryClass::Hyperbolic) {
    throw Error(ErrorKind::NotHyperbolic, "fixed points requested for a non-hyperbolic element");
  }
  const Mat2& m = g.matrix();
  const double t = g.trace();  // > 2 by normalization
  const double big = 0.5 * (t + std::sqrt((t - 2.0) * (t + 2.0)));
  const double small = 1.0 / big;
  auto eigenvector = [&m](double lambda) {
    const Vec2 u{m.b, lambda - m.a};
    const Vec2 v{lambda - m.d, m.c};
    return unit(std::hypot(u.x, u.y) >= std::hypot(v.x, v.y) ? u : v);
  };
  return {eigenvector(small), eigenvector(big)};
}

Geodesic axis(const MoebiusTransform& g) {
  const FixedPoints f = fixed_points(g);
  return {BoundaryPoint::from_vector(f.repelling), BoundaryPoint::from_vector(f.attracting)};
}

MoebiusTransform geodesic_frame(const Geodesic& g) {
  return MoebiusTransform(frame_from_columns(g.q.vector(), g.p.vector()));
}

MoebiusTransform axis_frame(const MoebiusTransform& g, std::optional<HPoint> anchor) {
  const FixedPoints f = fixed_points(g);
  const MoebiusTransform base(frame_from_columns(f.attracting, f.repelling));
  if (!anchor) return base;
  const HPoint local = apply(base.inverse(), *anchor);
  const double h = std::hypot(local.x, local.y);
  return base * MoebiusTransform::diagonal(std::sqrt(h));
}

MoebiusTransform translation_along(const MoebiusTransform& g, double length) {
  const MoebiusTransform frame = axis_frame(g);
  return frame * MoebiusTransform::imaginary_translation(length) * frame.inverse();
}

HPoint apply(const MoebiusTransform& g, const HPoint& p) { return Isometry(g).apply(p); }

BoundaryPoint apply(const MoebiusTransform& g, const BoundaryPoint& p) { return Isometry(g).apply(p); }

double distance(const HPoint& p, const HPoint& q) {
  const double chord = std::hypot(p.x - q.x, p.y - q.y);
  return 2.0 * std::asinh(chord / (2.0 * std::sqrt(p.y * q.y)));
}

double distance_to_geodesic(const HPoint& p, const Geodesic& g) {
  const HPoint local = apply(geodesic_frame(g).inverse(), p);
  return std::asinh(std::abs(local.x) / local.y);
}

HPoint project_to_geodesic(const HPoint& p, const Geodesic& line) {
  const MoebiusTransform frame = geodesic_frame(line);
  const HPoint local = apply(frame.inverse(), p);
  return apply(frame, HPoint(0.0, std::hypot(local.x, local.y)));
}

HPoint common_perpendicular_foot(const Geodesic& from, const Geodesic& to) {
  const MoebiusTransform inv = geodesic_frame(from).inverse();
  const BoundaryPoint u = apply(inv, to.p);
  const BoundaryPoint v = apply(inv, to.q);
  if (u.is_infinite() || v.is_infinite() || !(u.value() * v.value() > 0.0)) {
    throw Error(ErrorKind::InvalidInput, "geodesics are not ultraparallel");
  }
  return apply(geodesic_frame(from), HPoint(0.0, std::sqrt(u.value() * v.value())));
}

}  // namespace foldrep
