#pragma once

#include <span>

#include "foldrep/moebius.hpp"
#include "foldrep/pants_rep.hpp"
#include "foldrep/word.hpp"

namespace foldrep {

// The boundary circle is the projective line of directions, parametrized by
// θ ↦ (cos πθ, sin πθ) with period 1, increasing counterclockwise. A lift of
// g ∈ PSL(2,R) to the universal cover is a monotone degree-one map f̃ of R
// covering the action of g on directions; it is determined by f̃(0).

/// Element of the universal cover of PSL(2,R).
struct LiftedIsometry {
  MoebiusTransform base;
  double offset = 0.0;  // f̃(0)

  /// Value of the lifted circle map at any real x.
  double eval(double x) const;
  /// Composition with the deck translation x ↦ x + k.
  LiftedIsometry deck_translated(int k) const { return {base, offset + k}; }
};

/// Lift with f̃(0) in [0, 1), evaluated at x.
double lift_circle_map(const MoebiusTransform& g, double x);

/// Lift with offset in [0, 1).
LiftedIsometry standard_lift(const MoebiusTransform& g);
/// Lift through the one-parameter subgroup of a hyperbolic element: the one
/// fixing the lifts of its boundary fixed points. Throws NotHyperbolic.
LiftedIsometry canonical_lift(const MoebiusTransform& g);
LiftedIsometry lifted_compose(const LiftedIsometry& g, const LiftedIsometry& h);
LiftedIsometry lifted_inverse(const LiftedIsometry& g);

/// Integer k with G = (x ↦ x + k). Throws NotCentral if the base is not the
/// identity within 1e-8, AmbiguousRounding if the offset is 0.1 or more away
/// from an integer.
int central_integer(const LiftedIsometry& g);

/// Euler class s(α)s(β)s(γ) with canonical lifts of the boundary images.
/// Throws BoundaryNotHyperbolic.
int euler_class_pants(const PantsRep& rep);
/// 0 if the product of positive-trace SL(2,R) lifts of α, β, γ is +Id, 1 if -Id.
int euler_parity_pants(const PantsRep& rep);

/// Euler class of a closed-surface representation given by images of a_1, b_1,
/// ..., a_g, b_g satisfying ∏[a_i, b_i] = 1 within 1e-8. Throws RelatorViolated.
int euler_class_commutator(std::span<const MoebiusTransform> images, int genus);
/// Same for an arbitrary one-relator presentation in which every generator has
/// exponent sum zero; lifts are the standard ones unless `lifts` is given.
int euler_class_relator(std::span<const MoebiusTransform> images, const Word& relator);
int euler_class_relator(std::span<const LiftedIsometry> lifts, const Word& relator);

/// Standard relator a b A B c d C D ... for genus g.
Word surface_relator(int genus);

}  // namespace foldrep
