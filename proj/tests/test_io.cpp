#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "foldrep/error.hpp"
#include "foldrep/io.hpp"
#include "foldrep/pants.hpp"

using namespace foldrep;

namespace {

SurfaceInput load(const std::string& name) { return surface_from_json(read_json_file(std::string(FOLDREP_DATA_DIR) + "/" + name)); }

}  // namespace

TEST(Io, TransformRoundTripIsExact) {
  const MoebiusTransform g(1.3, 0.7, -2.1, 0.4);
  const Json j = Json::parse(dump_json(to_json(g)));
  EXPECT_EQ(transform_from_json(j), g);
  EXPECT_THROW(transform_from_json(Json::parse(R"({"m":[1,2,2,1]})")), Error);
}

TEST(Io, PantsRoundTrip) {
  const PantsRep rep = build_pants_rep({1.0, 1.5, 0.8}, -1);
  const PantsRep back = pants_from_json(Json::parse(dump_json(to_json(rep))));
  EXPECT_EQ(back.alpha, rep.alpha);
  EXPECT_EQ(back.beta, rep.beta);
}

TEST(Io, SurfaceRepRoundTripIsBitIdentical) {
  const SurfaceInput s = load("g3.json");
  const SurfaceRep rep = assemble_fuchsian(s.decomposition, s.coordinates);
  const std::string text = dump_json(to_json(rep));
  const SurfaceRep back = rep_from_json(Json::parse(text));
  EXPECT_EQ(back.generators, rep.generators);
  EXPECT_EQ(euler_class_surface(back), euler_class_surface(rep));
  EXPECT_EQ(euler_class_presentation(back), euler_class_presentation(rep));
  EXPECT_EQ(dump_json(to_json(back)), text);
}

TEST(Io, SurfaceInputForms) {
  const Json arrays = Json::parse(R"({"pants": 2, "cuffs": [[[0,0],[1,0]],[[0,1],[1,1]],[[0,2],[1,2]]],
                                      "lengths": [1, 2, 3], "twists": [0, 0.5, 0]})");
  const SurfaceInput s = surface_from_json(arrays);
  EXPECT_EQ(s.decomposition.pantsCount, 2);
  EXPECT_EQ(s.coordinates.lengths[1], 2.0);
  EXPECT_EQ(s.coordinates.twists[1], 0.5);
  EXPECT_THROW(surface_from_json(Json::parse(R"({"pants": 2})")), Error);
}

TEST(Io, LabelingForms) {
  EXPECT_EQ(labeling_from_json(Json::parse(R"({"labels": {"0": 1, "1": 0}})"), 2), (Labeling{1, 0}));
  EXPECT_EQ(labeling_from_json(Json::parse("[-1, 0]"), 2), (Labeling{-1, 0}));
  EXPECT_EQ(labeling_from_json(labeling_to_json({0, 1}), 2), (Labeling{0, 1}));
  EXPECT_THROW(labeling_from_json(Json::parse("[1]"), 2), Error);
  EXPECT_THROW(labeling_from_json(Json::parse("[1, 3]"), 2), Error);
}

TEST(Io, CertificateFields) {
  const SurfaceInput s = load("g2.json");
  const auto c = strictly_dominated_fold(s.decomposition, s.coordinates, 0, 0.05, 4);
  const Json j = to_json(c);
  for (const char* key : {"verdict", "supRatio", "witness", "t", "maxWordLen", "eulerRho", "excludedWords"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["verdict"], "StrictlyDominated");
  std::ostringstream csv;
  write_spectrum_csv(csv, *c.words, c.spectrum);
  const std::string text = csv.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "word,lambda_j,lambda_rho,ratio");
}

TEST(Io, AxesSvg) {
  const SurfaceInput s = load("g2.json");
  const std::string svg = axes_svg(assemble_fuchsian(s.decomposition, s.coordinates));
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("polyline"), std::string::npos);
}
