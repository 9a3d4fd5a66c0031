#pragma once

#include <array>

#include "foldrep/moebius.hpp"

namespace foldrep {

/// Representation of the pair-of-pants group <α, β, γ | αβγ = 1>, given by
/// the images of the free generators α and β. γ is derived as (αβ)^{-1}.
struct PantsRep {
  MoebiusTransform alpha;
  MoebiusTransform beta;

  MoebiusTransform gamma() const { return (alpha * beta).inverse(); }
  /// Slot 0, 1, 2 are α, β, γ.
  MoebiusTransform boundary(int slot) const;
  std::array<MoebiusTransform, 3> boundaries() const { return {alpha, beta, gamma()}; }
  /// Conjugates both generators by h (orientation-reversing h is allowed).
  PantsRep conjugated(const Isometry& h) const { return {h.conjugate(alpha), h.conjugate(beta)}; }
};

inline MoebiusTransform PantsRep::boundary(int slot) const {
  switch (slot) {
    case 0: return alpha;
    case 1: return beta;
    default: return gamma();
  }
}

}  // namespace foldrep
