#pragma once

#include <array>
#include <vector>

#include "foldrep/moebius.hpp"
#include "foldrep/pants_rep.hpp"
#include "foldrep/surface.hpp"

namespace foldrep {

/// Pants label: +1 geometric, -1 orientation-reversed geometric, 0 folded.
using Labeling = std::vector<int>;

/// 0 when the colors agree, π otherwise.
double bending_angle(int c1, int c2);

/// Greedy labeling with sum k: |k| pants labeled sign(k), the rest 0.
/// Throws ExtremalClass when |k| >= 2g - 2.
Labeling prescribe_labeling(const PantsDecomposition& pd, int k);

/// Fold of a geometric pants along a triskelion lamination, and for each
/// boundary the orientation-preserving map carrying the geometric boundary
/// holonomy to the folded one (unipotent, fixing the chosen endpoint).
struct TriskelionFold {
  PantsRep rep;
  std::array<Isometry, 3> boundaryMaps;
};
/// Uses the attracting endpoint of each boundary axis. Throws NotGeometric.
TriskelionFold triskelion_fold(const PantsRep& geometric);

struct FoldResult {
  SurfaceRep j;
  SurfaceRep rho;
};

/// Throws InvalidInput on a malformed labeling; propagates assembly errors.
FoldResult fold_surface(const PantsDecomposition& pd, const FNCoordinates& fn, const Labeling& labels);

/// Largest distance to the identity over commutators of generator pairs.
double max_generator_commutator(const SurfaceRep& rep);

}  // namespace foldrep
