#include "foldrep/pants.hpp"

#include <cmath>

#include "foldrep/error.hpp"
#include "foldrep/univcover.hpp"

namespace foldrep {

namespace {

constexpr double kFixedPointTol = 1e-8;
constexpr double kCommuteTol = 1e-9;

struct Triple {
  double A, B, C;
};

Triple exponentials(const BoundaryLengths& l) {
  return {std::exp(0.5 * l.a), std::exp(0.5 * l.b), std::exp(0.5 * l.c)};
}

void require_positive(const BoundaryLengths& l) {
  if (!(l.a > 0.0) || !(l.b > 0.0) || !(l.c > 0.0)) {
    throw Error(ErrorKind::NonPositiveLength, "boundary lengths must be positive");
  }
}

double nu_of(double B, double x) { return (B + x) * (1.0 / B - x); }

// Sine of the angle between v and g·v; zero iff v is a fixed direction of g.
double fixing_defect(const MoebiusTransform& g, Vec2 v) {
  const Vec2 w = g.matrix() * v;
  return std::abs(w.x * v.y - w.y * v.x) / std::hypot(w.x, w.y);
}

}  // namespace

std::string to_string(Branch b) {
  switch (b) {
    case Branch::Generic: return "generic";
    case Branch::Upper: return "upper";
    case Branch::Lower: return "lower";
    case Branch::Diagonal: return "diagonal";
  }
  return "?";
}

Branch parse_branch(const std::string& s) {
  if (s == "generic") return Branch::Generic;
  if (s == "upper") return Branch::Upper;
  if (s == "lower") return Branch::Lower;
  if (s == "diagonal") return Branch::Diagonal;
  throw Error(ErrorKind::InvalidInput, "unknown branch '" + s + "'");
}

std::string to_string(PantsClass c) {
  switch (c) {
    case PantsClass::Geometric: return "Geometric";
    case PantsClass::NongeometricNonabelianA: return "NongeometricNonabelianA";
    case PantsClass::NongeometricNonabelianB: return "NongeometricNonabelianB";
    case PantsClass::Abelian: return "Abelian";
    case PantsClass::NongeometricGeneric: return "NongeometricGeneric";
  }
  return "?";
}

bool PantsNormalForm::same_class(const PantsNormalForm& o, double tol) const {
  return std::abs(A - o.A) <= tol && std::abs(B - o.B) <= tol && std::abs(C - o.C) <= tol &&
         epsilon == o.epsilon && branch == o.branch;
}

double normal_form_x(const BoundaryLengths& lengths, int epsilon) {
  require_positive(lengths);
  const auto [A, B, C] = exponentials(lengths);
  return (epsilon * (C + 1.0 / C) - A * B - 1.0 / (A * B)) / (A - 1.0 / A);
}

bool on_degenerate_locus(const BoundaryLengths& lengths) {
  const double x = normal_form_x(lengths, +1);
  return std::abs(nu_of(std::exp(0.5 * lengths.b), x) - 1.0) < kDegenerateTol;
}

PantsRep build_pants_rep(const BoundaryLengths& lengths, int epsilon, Branch branch) {
  require_positive(lengths);
  if (epsilon != 1 && epsilon != -1) throw Error(ErrorKind::BadParameter, "epsilon must be +1 or -1");
  const auto [A, B, C] = exponentials(lengths);
  const double x = normal_form_x(lengths, epsilon);
  const double nu = nu_of(B, x);
  const bool degenerate = epsilon == 1 && std::abs(nu - 1.0) < kDegenerateTol;

  double y = 0.0, z = 0.0;
  if (branch == Branch::Generic) {
    if (degenerate) {
      throw Error(ErrorKind::InvalidBranch, "generic branch requested on the degenerate locus (nu = 1)");
    }
    y = nu - 1.0;
    z = 1.0;
  } else {
    if (!degenerate) {
      throw Error(ErrorKind::InvalidBranch, "triangular branch requested off the degenerate locus");
    }
    if (branch == Branch::Upper) y = 1.0;
    if (branch == Branch::Lower) z = 1.0;
  }
  return {MoebiusTransform::diagonal(A), MoebiusTransform(B + x, y, z, 1.0 / B - x)};
}

BoundaryLengths boundary_lengths(const PantsRep& rep) {
  static constexpr const char* kNames[] = {"alpha", "beta", "gamma"};
  double out[3];
  for (int s = 0; s < 3; ++s) {
    const MoebiusTransform g = rep.boundary(s);
    if (classify(g) != IsometryClass::Hyperbolic) {
      throw Error(ErrorKind::BoundaryNotHyperbolic, std::string(kNames[s]) + " is not hyperbolic");
    }
    out[s] = translation_length(g);
  }
  return {out[0], out[1], out[2]};
}

PantsNormalForm normal_form(const PantsRep& rep) {
  const BoundaryLengths l = boundary_lengths(rep);
  const MoebiusTransform frame = axis_frame(rep.alpha);
  const MoebiusTransform beta = frame.inverse() * rep.beta * frame;  // positive trace by normalization

  PantsNormalForm nf;
  nf.A = std::exp(0.5 * l.a);
  nf.B = std::exp(0.5 * l.b);
  nf.C = std::exp(0.5 * l.c);
  nf.x = beta.a() - nf.B;
  nf.nu = nu_of(nf.B, nf.x);
  nf.epsilon = nf.A * beta.a() + beta.d() / nf.A > 0.0 ? 1 : -1;

  const FixedPoints f = fixed_points(rep.alpha);
  const bool fixes_attracting = fixing_defect(rep.beta, f.attracting) <= kFixedPointTol;
  const bool fixes_repelling = fixing_defect(rep.beta, f.repelling) <= kFixedPointTol;
  if (fixes_attracting && fixes_repelling) {
    nf.branch = Branch::Diagonal;
  } else if (fixes_attracting) {
    nf.branch = Branch::Upper;
    nf.y = 1.0;
  } else if (fixes_repelling) {
    nf.branch = Branch::Lower;
    nf.z = 1.0;
  } else {
    nf.branch = Branch::Generic;
    nf.y = beta.b() * beta.c();
    nf.z = 1.0;
  }
  return nf;
}

PantsClass classify_pants_rep(const PantsRep& rep) {
  boundary_lengths(rep);  // hyperbolicity check
  if (std::abs(euler_class_pants(rep)) == 1) return PantsClass::Geometric;
  if ((rep.alpha * rep.beta).approx_equal(rep.beta * rep.alpha, kCommuteTol)) return PantsClass::Abelian;
  switch (normal_form(rep).branch) {
    case Branch::Upper: return PantsClass::NongeometricNonabelianA;
    case Branch::Lower: return PantsClass::NongeometricNonabelianB;
    case Branch::Diagonal: return PantsClass::Abelian;
    case Branch::Generic: break;
  }
  return PantsClass::NongeometricGeneric;
}

PantsRep fold_pants(const PantsRep& rep) {
  if (classify_pants_rep(rep) != PantsClass::Geometric) {
    throw Error(ErrorKind::NotGeometric, "only geometric pants representations can be folded");
  }
  const BoundaryLengths l = boundary_lengths(rep);
  return build_pants_rep(l, +1, on_degenerate_locus(l) ? Branch::Upper : Branch::Generic);
}

PantsRep unfold_pants(const PantsRep& rep) {
  if (classify_pants_rep(rep) == PantsClass::Geometric) {
    throw Error(ErrorKind::AlreadyGeometric, "representation is already geometric");
  }
  return build_pants_rep(boundary_lengths(rep), -1, Branch::Generic);
}

PantsRep abelianize(const PantsRep& rep) {
  if (classify(rep.alpha) != IsometryClass::Hyperbolic) {
    throw Error(ErrorKind::BoundaryNotHyperbolic, "alpha is not hyperbolic");
  }
  const FixedPoints f = fixed_points(rep.alpha);
  Vec2 common, other;
  if (fixing_defect(rep.beta, f.attracting) <= kFixedPointTol) {
    common = f.attracting;
    other = f.repelling;
  } else if (fixing_defect(rep.beta, f.repelling) <= kFixedPointTol) {
    common = f.repelling;
    other = f.attracting;
  } else {
    throw Error(ErrorKind::NotElementary, "alpha and beta share no boundary fixed point");
  }
  // ∞ -> common point, 0 -> the other end of α's axis (the preserved line).
  const MoebiusTransform frame = geodesic_frame({BoundaryPoint::from_vector(other), BoundaryPoint::from_vector(common)});
  const MoebiusTransform a = frame.inverse() * rep.alpha * frame;
  const MoebiusTransform b = frame.inverse() * rep.beta * frame;
  return {MoebiusTransform(a.a(), 0.0, 0.0, a.d()), MoebiusTransform(b.a(), 0.0, 0.0, b.d())};
}

}  // namespace foldrep
