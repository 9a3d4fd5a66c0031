#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "foldrep/domination.hpp"
#include "foldrep/folding.hpp"
#include "foldrep/moebius.hpp"
#include "foldrep/pants_rep.hpp"
#include "foldrep/surface.hpp"

namespace foldrep {

using Json = nlohmann::ordered_json;

/// Parse failures and missing files raise InvalidInput.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string dump_json(const Json& j);

Json to_json(const MoebiusTransform& g);
MoebiusTransform transform_from_json(const Json& j);

Json to_json(const PantsRep& rep);
PantsRep pants_from_json(const Json& j);

struct SurfaceInput {
  PantsDecomposition decomposition;
  FNCoordinates coordinates;
};
/// {"pants": [...], "cuffs": [[[p, s], [p, s]], ...], "lengths": {...}, "twists": {...}}.
/// Lengths and twists may be objects keyed by cuff index or plain arrays;
/// missing twists default to zero.
SurfaceInput surface_from_json(const Json& j);
Json to_json(const SurfaceInput& s);

/// {"labels": {pantsId: -1|0|1}}.
Labeling labeling_from_json(const Json& j, int pantsCount);
Json labeling_to_json(const Labeling& labels);

/// Representation dump: decomposition, coordinates, presentation, generator
/// and pants matrices.
Json to_json(const SurfaceRep& rep);
/// Restores the global data of a dump; gluing data is not stored.
/// Throws PresentationMismatch if the stored relator disagrees with the decomposition.
SurfaceRep rep_from_json(const Json& j);

Json to_json(const DominationCertificate& c);
/// Columns word, lambda_j, lambda_rho, ratio.
void write_spectrum_csv(std::ostream& out, const WordList& words, const Spectrum& s);

/// Axes of the pants boundary holonomies drawn in the Poincaré disk.
std::string axes_svg(const SurfaceRep& rep);

}  // namespace foldrep
