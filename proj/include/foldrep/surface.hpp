#pragma once

#include <array>
#include <string>
#include <vector>

#include "foldrep/moebius.hpp"
#include "foldrep/pants.hpp"
#include "foldrep/pants_rep.hpp"
#include "foldrep/word.hpp"

namespace foldrep {

inline constexpr double kRelationTol = 1e-8;

/// One boundary slot of one pants (slot 0, 1, 2 = α, β, γ).
struct CuffEnd {
  int pants = 0;
  int slot = 0;
  friend bool operator==(const CuffEnd&, const CuffEnd&) = default;
};

struct Cuff {
  CuffEnd first;
  CuffEnd second;
};

/// Pants glued along cuffs. A cuff may join two slots of the same pants.
struct PantsDecomposition {
  int pantsCount = 0;
  std::vector<Cuff> cuffs;
};

/// Checks the matching and connectivity and returns the genus.
/// Throws UnmatchedSlot, Disconnected, BadCount.
int validate_decomposition(const PantsDecomposition& pd);

/// Fenchel–Nielsen coordinates indexed by cuff.
struct FNCoordinates {
  std::vector<double> lengths;
  std::vector<double> twists;
};

/// Length of each pants boundary slot read off the cuff lengths.
BoundaryLengths pants_lengths(const PantsDecomposition& pd, const FNCoordinates& fn, int pants);

/// One-relator presentation of the surface group derived from the graph of
/// groups of a decomposition (spanning tree plus one HNN letter per extra cuff).
struct Presentation {
  int genus = 0;
  int numGenerators = 0;
  Word relator;
  /// Gluing orientation: the cuff goes from `near` to `far`; tree cuffs point
  /// away from pants 0.
  std::vector<CuffEnd> nearEnd, farEnd;
  std::vector<bool> isTree;
  /// Word of the near boundary of each cuff.
  std::vector<Word> cuffWords;
  /// Words of the three boundary loops of each pants.
  std::vector<std::array<Word, 3>> boundaryWords;
  /// Generators left by the Tietze reduction ("raw" generators): a pants
  /// symbol (pants, slot 0 or 1) or the HNN letter of a non-tree cuff.
  struct Source {
    bool isLetter = false;
    int pants = -1;
    int slot = -1;
    int cuff = -1;
  };
  std::vector<Source> rawSources;
  /// The raw generators are Nielsen-reduced on a reference geometry so that
  /// the final generators move a basepoint little. Each final generator as a
  /// word in raw generators, and each raw generator as a word in final ones.
  std::vector<Word> generatorWords;
  std::vector<Word> rawWords;

  friend bool operator==(const Presentation& l, const Presentation& r) {
    return l.numGenerators == r.numGenerators && l.relator == r.relator && l.cuffWords == r.cuffWords;
  }
};

/// Throws the errors of validate_decomposition, PresentationMismatch if the
/// reduction does not end with 2g generators and one relator.
Presentation build_presentation(const PantsDecomposition& pd);

/// Surface-group representation stored as a graph of groups.
struct SurfaceRep {
  PantsDecomposition decomposition;
  FNCoordinates coordinates;
  Presentation presentation;
  /// Pants representations in their own frames, and the transports between
  /// the frames across each cuff (near to far). Empty for a loaded dump.
  std::vector<PantsRep> localPants;
  std::vector<MoebiusTransform> gluings;
  /// Pants representations conjugated into the common frame.
  std::vector<PantsRep> pants;
  std::vector<MoebiusTransform> generators;

  int genus() const { return presentation.genus; }
};

/// Builds the common frame from local pants reps and gluings and checks every
/// relation. Throws RelatorViolated.
SurfaceRep glue(const PantsDecomposition& pd, const FNCoordinates& fn, const Presentation& pres,
                std::vector<PantsRep> localPants, std::vector<MoebiusTransform> gluings);

/// Largest deviation from the identity over the relator and all cuff relations.
double relation_residue(const SurfaceRep& rep);

SurfaceRep assemble_fuchsian(const PantsDecomposition& pd, const FNCoordinates& fn);

/// Transport across a cuff in the zero-twist seam convention, before twisting.
MoebiusTransform seam_frame(const PantsRep& local, int slot);

MoebiusTransform evaluate_word(const SurfaceRep& rep, const Word& w);

/// Sum of the pants Euler classes. Throws BoundaryNotHyperbolic.
int euler_class_surface(const SurfaceRep& rep);
/// Euler class computed from the relator in the universal cover.
int euler_class_presentation(const SurfaceRep& rep);

/// Earthquake of `amount` along a cuff. Throws NotHyperbolicCuff, BadIndex.
SurfaceRep twist_cuff(const SurfaceRep& rep, int cuff, double amount);

/// Words of a standard generating set a1, b1, a2, b2 with [a1,b1][a2,b2] = 1
/// for a genus-2 presentation with the two-pants (theta) combinatorics.
/// Throws PresentationMismatch when the presentation has another shape.
std::array<Word, 4> standard_genus2_words(const Presentation& pres);
std::vector<MoebiusTransform> standard_genus2_generators(const SurfaceRep& rep);

}  // namespace foldrep
