#pragma once

#include <string>

#include "foldrep/moebius.hpp"
#include "foldrep/pants_rep.hpp"

namespace foldrep {

inline constexpr double kDegenerateTol = 1e-9;

/// Prescribed translation lengths of α, β, γ.
struct BoundaryLengths {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  double operator[](int slot) const { return slot == 0 ? a : (slot == 1 ? b : c); }
};

/// Shape of the off-diagonal pair (y, z) of β in normal form.
enum class Branch { Generic, Upper, Lower, Diagonal };

enum class PantsClass {
  Geometric,
  NongeometricNonabelianA,  // upper triangular: common fixed point is α's attracting one
  NongeometricNonabelianB,  // lower triangular: common fixed point is α's repelling one
  Abelian,
  NongeometricGeneric,
};

std::string to_string(Branch b);
std::string to_string(PantsClass c);
Branch parse_branch(const std::string& s);

/// Conjugacy invariant of a pants representation: after conjugating so that
/// α = diag(A, 1/A), the positive-trace lift of β is [[B+x, y], [z, 1/B-x]]
/// with (y, z) scaled to a canonical representative of its branch.
struct PantsNormalForm {
  double A = 1.0, B = 1.0, C = 1.0;
  int epsilon = 1;
  double x = 0.0;
  double nu = 1.0;
  Branch branch = Branch::Generic;
  double y = 0.0, z = 0.0;

  /// Agreement of (A, B, C, ε, branch) within `tol`.
  bool same_class(const PantsNormalForm& o, double tol = 1e-8) const;
};

/// x and ν from the closed-form trace relation.
double normal_form_x(const BoundaryLengths& lengths, int epsilon);
/// True when ε = +1 would put (a, b, c) on the locus ν = 1, i.e. one length is
/// the sum of the other two.
bool on_degenerate_locus(const BoundaryLengths& lengths);

/// Throws NonPositiveLength, InvalidBranch.
PantsRep build_pants_rep(const BoundaryLengths& lengths, int epsilon, Branch branch = Branch::Generic);
/// Throws BoundaryNotHyperbolic naming the failing boundary.
BoundaryLengths boundary_lengths(const PantsRep& rep);
PantsClass classify_pants_rep(const PantsRep& rep);
PantsNormalForm normal_form(const PantsRep& rep);
/// Throws NotGeometric.
PantsRep fold_pants(const PantsRep& rep);
/// Throws AlreadyGeometric.
PantsRep unfold_pants(const PantsRep& rep);
/// Diagonal parts after moving the common fixed point to ∞. Throws NotElementary.
PantsRep abelianize(const PantsRep& rep);

}  // namespace foldrep
