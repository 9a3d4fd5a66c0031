#include "foldrep/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "foldrep/error.hpp"

namespace foldrep {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_short(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed ") + what + ": " + e.what());
  }
}

std::vector<double> per_cuff(const Json& j, std::size_t n, const char* key, bool required) {
  std::vector<double> out(n, 0.0);
  if (!j.contains(key)) {
    if (required) throw Error(ErrorKind::InvalidInput, std::string("missing '") + key + "'");
    return out;
  }
  const Json& v = j.at(key);
  if (v.is_array()) {
    if (v.size() != n) throw Error(ErrorKind::InvalidInput, std::string("'") + key + "' needs one entry per cuff");
    for (std::size_t i = 0; i < n; ++i) out[i] = v[i].get<double>();
    return out;
  }
  std::vector<bool> seen(n, false);
  for (auto it = v.begin(); it != v.end(); ++it) {
    const std::size_t i = std::stoul(it.key());
    if (i >= n) throw Error(ErrorKind::BadIndex, std::string("'") + key + "' names cuff " + it.key());
    out[i] = it.value().get<double>();
    seen[i] = true;
  }
  if (required && std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error(ErrorKind::InvalidInput, std::string("'") + key + "' misses a cuff");
  }
  return out;
}

Json keyed(const std::vector<double>& v) {
  Json out = Json::object();
  for (std::size_t i = 0; i < v.size(); ++i) out[std::to_string(i)] = v[i];
  return out;
}

// Cayley transform of the half-plane onto the unit disk.
std::pair<double, double> to_disk(double x, double y) {
  const double den = x * x + (y + 1.0) * (y + 1.0);
  return {(x * x + y * y - 1.0) / den, -2.0 * x / den};
}

std::pair<double, double> boundary_to_disk(const BoundaryPoint& p) {
  if (p.is_infinite()) return {1.0, 0.0};
  return to_disk(p.value(), 0.0);
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  out << text;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const MoebiusTransform& g) {
  const auto e = g.entries();
  return Json{{"m", {e[0], e[1], e[2], e[3]}}};
}

MoebiusTransform transform_from_json(const Json& j) {
  return guarded("matrix", [&] {
    const Json& m = j.is_array() ? j : j.at("m");
    if (m.size() != 4) throw Error(ErrorKind::InvalidInput, "matrix needs 4 entries");
    const Mat2 raw{m[0].get<double>(), m[1].get<double>(), m[2].get<double>(), m[3].get<double>()};
    const MoebiusTransform g(raw);
    // Keep written matrices bit-exact; renormalizing would perturb the last digit.
    const double scale = std::max({1.0, std::abs(raw.a), std::abs(raw.b), std::abs(raw.c), std::abs(raw.d)});
    return g.matrix().max_abs_diff(raw) <= 1e-12 * scale ? MoebiusTransform::from_canonical(raw) : g;
  });
}

Json to_json(const PantsRep& rep) { return Json{{"alpha", to_json(rep.alpha)}, {"beta", to_json(rep.beta)}}; }

PantsRep pants_from_json(const Json& j) {
  return guarded("pants representation",
                 [&] { return PantsRep{transform_from_json(j.at("alpha")), transform_from_json(j.at("beta"))}; });
}

SurfaceInput surface_from_json(const Json& j) {
  return guarded("surface", [&] {
    SurfaceInput s;
    const Json& p = j.at("pants");
    s.decomposition.pantsCount = p.is_array() ? static_cast<int>(p.size()) : p.get<int>();
    for (const Json& c : j.at("cuffs")) {
      if (c.size() != 2) throw Error(ErrorKind::InvalidInput, "a cuff joins exactly two slots");
      s.decomposition.cuffs.push_back({{c[0].at(0).get<int>(), c[0].at(1).get<int>()},
                                       {c[1].at(0).get<int>(), c[1].at(1).get<int>()}});
    }
    const std::size_t n = s.decomposition.cuffs.size();
    s.coordinates.lengths = per_cuff(j, n, "lengths", true);
    s.coordinates.twists = per_cuff(j, n, "twists", false);
    return s;
  });
}

Json to_json(const SurfaceInput& s) {
  Json pants = Json::array();
  for (int p = 0; p < s.decomposition.pantsCount; ++p) pants.push_back(p);
  Json cuffs = Json::array();
  for (const Cuff& c : s.decomposition.cuffs) {
    cuffs.push_back({{c.first.pants, c.first.slot}, {c.second.pants, c.second.slot}});
  }
  return Json{{"pants", pants},
              {"cuffs", cuffs},
              {"lengths", keyed(s.coordinates.lengths)},
              {"twists", keyed(s.coordinates.twists)}};
}

Labeling labeling_from_json(const Json& j, int pantsCount) {
  return guarded("labeling", [&] {
    Labeling out(static_cast<std::size_t>(pantsCount), 0);
    std::vector<bool> seen(out.size(), false);
    const Json& v = j.is_object() && j.contains("labels") ? j.at("labels") : j;
    auto set = [&](std::size_t i, int label) {
      if (i >= out.size()) throw Error(ErrorKind::BadIndex, "label for missing pants " + std::to_string(i));
      if (label < -1 || label > 1) throw Error(ErrorKind::InvalidInput, "labels must be -1, 0 or 1");
      out[i] = label;
      seen[i] = true;
    };
    if (v.is_array()) {
      for (std::size_t i = 0; i < v.size(); ++i) set(i, v[i].get<int>());
    } else {
      for (auto it = v.begin(); it != v.end(); ++it) set(std::stoul(it.key()), it.value().get<int>());
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      throw Error(ErrorKind::InvalidInput, "every pants needs a label");
    }
    return out;
  });
}

Json labeling_to_json(const Labeling& labels) {
  Json m = Json::object();
  for (std::size_t i = 0; i < labels.size(); ++i) m[std::to_string(i)] = labels[i];
  return Json{{"labels", m}};
}

Json to_json(const SurfaceRep& rep) {
  const Presentation& pres = rep.presentation;
  Json gens = Json::array();
  for (const auto& g : rep.generators) gens.push_back(to_json(g));
  Json cuffWords = Json::array();
  for (const Word& w : pres.cuffWords) cuffWords.push_back(w.to_string());
  Json pants = Json::array();
  for (const auto& p : rep.pants) pants.push_back(to_json(p));
  return Json{{"genus", pres.genus},
              {"surface", to_json(SurfaceInput{rep.decomposition, rep.coordinates})},
              {"relator", pres.relator.to_string()},
              {"cuffWords", cuffWords},
              {"generators", gens},
              {"pantsReps", pants}};
}

SurfaceRep rep_from_json(const Json& j) {
  return guarded("representation dump", [&] {
    SurfaceRep rep;
    const SurfaceInput s = surface_from_json(j.at("surface"));
    rep.decomposition = s.decomposition;
    rep.coordinates = s.coordinates;
    rep.presentation = build_presentation(rep.decomposition);
    if (j.contains("relator") && Word::parse(j.at("relator").get<std::string>()) != rep.presentation.relator) {
      throw Error(ErrorKind::PresentationMismatch, "stored relator disagrees with the decomposition");
    }
    for (const Json& g : j.at("generators")) rep.generators.push_back(transform_from_json(g));
    for (const Json& p : j.at("pantsReps")) rep.pants.push_back(pants_from_json(p));
    if (rep.generators.size() != static_cast<std::size_t>(rep.presentation.numGenerators) ||
        rep.pants.size() != static_cast<std::size_t>(rep.decomposition.pantsCount)) {
      throw Error(ErrorKind::PresentationMismatch, "dump has the wrong number of generators or pants");
    }
    return rep;
  });
}

Json to_json(const DominationCertificate& c) {
  return Json{{"verdict", to_string(c.verdict)},
              {"supRatio", c.supRatio},
              {"witness", c.witness},
              {"t", c.t},
              {"maxWordLen", c.maxWordLen},
              {"eulerRho", c.eulerRho},
              {"excludedWords", c.excludedWords},
              {"wordCount", c.wordCount},
              {"cuffRatios", c.cuffRatios},
              {"scope", "finite probe over the enumerated words"}};
}

void write_spectrum_csv(std::ostream& out, const WordList& words, const Spectrum& s) {
  out << "word,lambda_j,lambda_rho,ratio\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << word_to_string(words[s.word[i]]) << ',' << fmt(s.lambdaJ[i]) << ',' << fmt(s.lambdaRho[i]) << ','
        << fmt(s.ratio(i)) << '\n';
  }
}

std::string axes_svg(const SurfaceRep& rep) {
  constexpr double kScale = 200.0;
  constexpr double kCenter = 220.0;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"440\" height=\"440\" viewBox=\"0 0 440 440\">\n";
  svg << "<circle cx=\"220\" cy=\"220\" r=\"200\" fill=\"none\" stroke=\"black\"/>\n";
  auto point = [&](std::pair<double, double> w) {
    return fmt_short(kCenter + kScale * w.first) + "," + fmt_short(kCenter - kScale * w.second);
  };
  static constexpr const char* kColors[] = {"#c0392b", "#2471a3", "#229954"};
  for (std::size_t p = 0; p < rep.pants.size(); ++p) {
    for (int s = 0; s < 3; ++s) {
      const MoebiusTransform g = rep.pants[p].boundary(s);
      if (classify(g) != IsometryClass::Hyperbolic) continue;
      const Geodesic line = axis(g);
      const MoebiusTransform frame = geodesic_frame(line);
      std::string pts = point(boundary_to_disk(line.p));
      for (int k = -40; k <= 40; ++k) {
        const HPoint h = apply(frame, HPoint(0.0, std::exp(0.25 * k)));
        pts += " " + point(to_disk(h.x, h.y));
      }
      pts += " " + point(boundary_to_disk(line.q));
      svg << "<polyline fill=\"none\" stroke=\"" << kColors[s] << "\" points=\"" << pts << "\"><title>pants " << p
          << " slot " << s << "</title></polyline>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace foldrep
