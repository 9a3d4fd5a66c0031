#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>

namespace foldrep {

// Tolerances shared by the whole library.
inline constexpr double kTraceZeroTol = 1e-12;
inline constexpr double kParabolicBand = 1e-9;
inline constexpr double kIdentityTol = 1e-9;

/// Column vector in R^2; used as a homogeneous coordinate on the boundary circle.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/// Plain 2x2 real matrix, row-major. No normalization is applied.
struct Mat2 {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  double det() const { return a * d - b * c; }
  double trace() const { return a + d; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Vec2 operator*(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  /// Inverse up to scale (the adjugate divided by det).
  Mat2 inverse() const {
    const double k = 1.0 / det();
    return {d * k, -b * k, -c * k, a * k};
  }
  double max_abs_diff(const Mat2& o) const;
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

enum class IsometryClass { Identity, Elliptic, Parabolic, Hyperbolic };

std::string to_string(IsometryClass cls);

/// Point of the upper half-plane.
struct HPoint {
  double x = 0.0;
  double y = 1.0;

  HPoint() = default;
  /// Throws InvalidInput unless y > 0.
  HPoint(double x_, double y_);
};

/// Point of the boundary circle R ∪ {∞}. Infinity is a tag, not a large float.
class BoundaryPoint {
 public:
  static BoundaryPoint infinity() { return BoundaryPoint(true, 0.0); }
  static BoundaryPoint real(double v) { return BoundaryPoint(false, v); }
  /// Point represented by the homogeneous vector (v.x : v.y).
  static BoundaryPoint from_vector(Vec2 v);

  bool is_infinite() const { return infinite_; }
  double value() const { return value_; }
  /// Unit homogeneous vector; (1, 0) for infinity.
  Vec2 vector() const;

  bool approx_equal(const BoundaryPoint& o, double tol) const;
  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;

 private:
  BoundaryPoint(bool inf, double v) : infinite_(inf), value_(v) {}
  bool infinite_ = false;
  double value_ = 0.0;
};

/// Complete geodesic, given by its two ideal endpoints. Equality ignores order.
struct Geodesic {
  BoundaryPoint p = BoundaryPoint::real(0.0);
  BoundaryPoint q = BoundaryPoint::infinity();

  bool approx_equal(const Geodesic& o, double tol) const;
  friend bool operator==(const Geodesic& l, const Geodesic& r) {
    return (l.p == r.p && l.q == r.q) || (l.p == r.q && l.q == r.p);
  }
};

/// Element of PSL(2,R), stored as a unit-determinant matrix with a canonical
/// sign: trace >= 0, and for trace 0 the first nonzero of (a, b, c) is positive.
class MoebiusTransform {
 public:
  MoebiusTransform() = default;
  /// Rescales to determinant one and applies the sign convention.
  /// Throws InvalidMatrix if the determinant is not positive or not finite.
  MoebiusTransform(double a, double b, double c, double d);
  explicit MoebiusTransform(const Mat2& m) : MoebiusTransform(m.a, m.b, m.c, m.d) {}

  static MoebiusTransform identity() { return {}; }
  /// Wraps entries already in canonical form, without rescaling.
  static MoebiusTransform from_canonical(const Mat2& m) {
    MoebiusTransform g;
    g.m_ = m;
    return g;
  }
  /// Product of unit-determinant matrices: the determinant is not recomputed,
  /// since for long products it is dominated by cancellation.
  static MoebiusTransform unimodular(const Mat2& m);
  /// diag(s, 1/s); z -> s^2 z.
  static MoebiusTransform diagonal(double s);
  /// Translation by `length` along the imaginary axis, towards infinity.
  static MoebiusTransform imaginary_translation(double length);

  double a() const { return m_.a; }
  double b() const { return m_.b; }
  double c() const { return m_.c; }
  double d() const { return m_.d; }
  const Mat2& matrix() const { return m_; }
  std::array<double, 4> entries() const { return {m_.a, m_.b, m_.c, m_.d}; }

  double trace() const { return m_.a + m_.d; }
  MoebiusTransform inverse() const { return MoebiusTransform(m_.d, -m_.b, -m_.c, m_.a); }
  MoebiusTransform operator*(const MoebiusTransform& o) const { return MoebiusTransform(m_ * o.m_); }

  /// Largest entrywise difference between the canonical representatives.
  double distance_to(const MoebiusTransform& o) const { return m_.max_abs_diff(o.m_); }
  bool approx_equal(const MoebiusTransform& o, double tol) const { return distance_to(o) <= tol; }
  friend bool operator==(const MoebiusTransform&, const MoebiusTransform&) = default;

 private:
  Mat2 m_{};
};

/// Element of PGL(2,R): orientation-preserving when det > 0, reversing otherwise.
/// Orientation-reversing elements act on the half-plane by z -> (a z̄ + b)/(c z̄ + d).
class Isometry {
 public:
  Isometry() = default;
  /// Rescales to |det| = 1; throws InvalidMatrix on a singular matrix.
  explicit Isometry(const Mat2& m);
  Isometry(const MoebiusTransform& g) : m_(g.matrix()) {}  // NOLINT: implicit by intent

  static Isometry identity() { return {}; }
  /// z -> -z̄, the reflection in the imaginary axis.
  static Isometry standard_reflection() { return Isometry(Mat2{1.0, 0.0, 0.0, -1.0}); }
  /// Reflection in the geodesic through the given endpoints.
  static Isometry reflection(const Geodesic& g);

  const Mat2& matrix() const { return m_; }
  bool preserves_orientation() const { return m_.det() > 0.0; }
  Isometry inverse() const { return Isometry(m_.inverse()); }
  Isometry operator*(const Isometry& o) const { return Isometry(m_ * o.m_); }

  /// Requires preserves_orientation().
  MoebiusTransform to_moebius() const;
  /// h g h^{-1}; always lands in PSL(2,R).
  MoebiusTransform conjugate(const MoebiusTransform& g) const;
  HPoint apply(const HPoint& p) const;
  BoundaryPoint apply(const BoundaryPoint& p) const;

 private:
  Mat2 m_{};
};

MoebiusTransform compose(const MoebiusTransform& g, const MoebiusTransform& h);
IsometryClass classify(const MoebiusTransform& g);
double translation_length(const MoebiusTransform& g);

/// Repelling and attracting fixed points of a hyperbolic element, as unit
/// homogeneous vectors. Throws NotHyperbolic.
struct FixedPoints {
  Vec2 repelling;
  Vec2 attracting;
};
FixedPoints fixed_points(const MoebiusTransform& g);

/// Oriented axis: p is the repelling endpoint, q the attracting one.
/// Throws NotHyperbolic.
Geodesic axis(const MoebiusTransform& g);

/// Orientation-preserving isometry taking the imaginary axis to axis(g), with 0
/// going to the repelling and ∞ to the attracting endpoint, so that
/// frame^{-1} g frame = imaginary_translation(translation_length(g)).
/// The remaining freedom (a translation along the axis) is fixed by sending i to
/// `anchor` projected onto the axis, or to an arbitrary point when absent.
MoebiusTransform axis_frame(const MoebiusTransform& g, std::optional<HPoint> anchor = std::nullopt);

/// Translation by `length` along the axis of g, in g's direction.
MoebiusTransform translation_along(const MoebiusTransform& g, double length);

HPoint apply(const MoebiusTransform& g, const HPoint& p);
BoundaryPoint apply(const MoebiusTransform& g, const BoundaryPoint& p);
double distance(const HPoint& p, const HPoint& q);
double distance_to_geodesic(const HPoint& p, const Geodesic& g);
/// Closest point of `line` to `p`.
HPoint project_to_geodesic(const HPoint& p, const Geodesic& line);
/// Foot on `from` of the common perpendicular between two disjoint geodesics.
/// Throws InvalidInput if the geodesics meet or share an endpoint.
HPoint common_perpendicular_foot(const Geodesic& from, const Geodesic& to);

/// Orientation-preserving isometry with 0 -> g.p and ∞ -> g.q.
MoebiusTransform geodesic_frame(const Geodesic& g);

}  // namespace foldrep
