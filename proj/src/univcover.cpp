#include "foldrep/univcover.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "foldrep/error.hpp"

namespace foldrep {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCentralTol = 1e-8;
constexpr double kRoundingTol = 0.1;
constexpr double kRelatorTol = 1e-8;

double angle01(Vec2 v) {
  double t = std::atan2(v.y, v.x) / kPi;
  t -= std::floor(t);
  return t >= 1.0 ? 0.0 : t;
}

Vec2 direction(double u) { return {std::cos(kPi * u), std::sin(kPi * u)}; }

// Increase of any lift of g between parameters 0 and u, for u in [0, 1).
// The oriented angle between g·v(0) and g·v(u) has sine det(g)·sin(πu) > 0,
// so it lies in (0, π) and no branch choice is involved.
double lift_increment(const Mat2& g, double u) {
  const Vec2 w0 = g * direction(0.0);
  const Vec2 wu = g * direction(u);
  return std::atan2(std::sin(kPi * u), w0.x * wu.x + w0.y * wu.y) / kPi;
}

void require_hyperbolic_boundary(const PantsRep& rep) {
  static constexpr const char* kNames[] = {"alpha", "beta", "gamma"};
  for (int s = 0; s < 3; ++s) {
    if (classify(rep.boundary(s)) != IsometryClass::Hyperbolic) {
      throw Error(ErrorKind::BoundaryNotHyperbolic, std::string(kNames[s]) + " is not hyperbolic");
    }
  }
}

}  // namespace

double LiftedIsometry::eval(double x) const {
  const double fl = std::floor(x);
  return offset + lift_increment(base.matrix(), x - fl) + fl;
}

double lift_circle_map(const MoebiusTransform& g, double x) { return standard_lift(g).eval(x); }

LiftedIsometry standard_lift(const MoebiusTransform& g) { return {g, angle01(g.matrix() * direction(0.0))}; }

LiftedIsometry canonical_lift(const MoebiusTransform& g) {
  const FixedPoints f = fixed_points(g);  // throws NotHyperbolic
  const double theta = angle01(f.attracting);
  return {g, theta - lift_increment(g.matrix(), theta)};
}

LiftedIsometry lifted_compose(const LiftedIsometry& g, const LiftedIsometry& h) {
  return {g.base * h.base, g.eval(h.offset)};
}

LiftedIsometry lifted_inverse(const LiftedIsometry& g) {
  const LiftedIsometry h = standard_lift(g.base.inverse());
  const double k = std::round(g.eval(h.offset));
  return {h.base, h.offset - k};
}

int central_integer(const LiftedIsometry& g) {
  if (g.base.matrix().max_abs_diff(Mat2{}) > kCentralTol) {
    throw Error(ErrorKind::NotCentral, "lifted element does not cover the identity");
  }
  const double k = std::round(g.offset);
  if (std::abs(g.offset - k) >= kRoundingTol) {
    throw Error(ErrorKind::AmbiguousRounding, "offset " + std::to_string(g.offset) + " is far from an integer");
  }
  return static_cast<int>(k);
}

int euler_class_pants(const PantsRep& rep) {
  require_hyperbolic_boundary(rep);
  const auto b = rep.boundaries();
  LiftedIsometry acc = canonical_lift(b[0]);
  acc = lifted_compose(acc, canonical_lift(b[1]));
  acc = lifted_compose(acc, canonical_lift(b[2]));
  return central_integer(acc);
}

int euler_parity_pants(const PantsRep& rep) {
  require_hyperbolic_boundary(rep);
  const auto b = rep.boundaries();
  // Canonical representatives already have nonnegative trace.
  const Mat2 prod = b[0].matrix() * b[1].matrix() * b[2].matrix();
  return prod.trace() > 0.0 ? 0 : 1;
}

Word surface_relator(int genus) {
  std::vector<Letter> r;
  for (int i = 0; i < genus; ++i) {
    const int a = 2 * i, b = 2 * i + 1;
    r.insert(r.end(), {make_letter(a), make_letter(b), make_letter(a, true), make_letter(b, true)});
  }
  return Word(std::move(r));
}

int euler_class_commutator(std::span<const MoebiusTransform> images, int genus) {
  if (genus < 1 || images.size() != static_cast<std::size_t>(2 * genus)) {
    throw Error(ErrorKind::InvalidInput, "need 2g images");
  }
  return euler_class_relator(images, surface_relator(genus));
}

int euler_class_relator(std::span<const MoebiusTransform> images, const Word& relator) {
  std::vector<LiftedIsometry> lifts;
  lifts.reserve(images.size());
  for (const auto& g : images) lifts.push_back(standard_lift(g));
  return euler_class_relator(lifts, relator);
}

int euler_class_relator(std::span<const LiftedIsometry> lifts, const Word& relator) {
  std::vector<MoebiusTransform> bases;
  bases.reserve(lifts.size());
  for (const auto& l : lifts) bases.push_back(l.base);
  const MoebiusTransform value = evaluate(bases, relator);
  if (value.matrix().max_abs_diff(Mat2{}) > kRelatorTol) {
    throw Error(ErrorKind::RelatorViolated, "relator deviates from identity by " +
                                                format_deviation(value.matrix().max_abs_diff(Mat2{})));
  }
  LiftedIsometry acc{MoebiusTransform::identity(), 0.0};
  for (Letter l : relator) {
    const LiftedIsometry& g = lifts[static_cast<std::size_t>(generator_of(l))];
    acc = lifted_compose(acc, is_inverted(l) ? lifted_inverse(g) : g);
  }
  return central_integer(acc);
}

}  // namespace foldrep
