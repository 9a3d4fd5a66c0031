#include "cli.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "foldrep/domination.hpp"
#include "foldrep/error.hpp"
#include "foldrep/folding.hpp"
#include "foldrep/io.hpp"
#include "foldrep/pants.hpp"
#include "foldrep/surface.hpp"
#include "foldrep/univcover.hpp"

using namespace foldrep;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotCertified = 1;
constexpr int kExitInput = 2;

std::size_t word_cap() {
  const char* env = std::getenv("FOLDREP_WORD_CAP");
  if (env == nullptr || *env == '\0') return kDefaultWordCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw Error(ErrorKind::BadParameter, "FOLDREP_WORD_CAP must be a positive integer");
  return static_cast<std::size_t>(v);
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

BoundaryLengths parse_lengths(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "bad length '" + item + "'");
    }
  }
  if (v.size() != 3) throw Error(ErrorKind::InvalidInput, "--lengths needs three comma-separated values");
  return {v[0], v[1], v[2]};
}

int parse_sign(const std::string& text) {
  if (text == "+1" || text == "1") return 1;
  if (text == "-1") return -1;
  throw Error(ErrorKind::InvalidInput, "--epsilon must be +1 or -1");
}

void check_t(double t) {
  if (!(t >= 0.0 && t < 1.0)) throw Error(ErrorKind::BadParameter, "t must lie in [0, 1)");
}

void check_len(int n) {
  if (n < 1) throw Error(ErrorKind::BadParameter, "--max-word-len must be at least 1");
}

int report(const DominationCertificate& c, const std::string& out, const std::string& csv) {
  emit(out, dump_json(to_json(c)));
  if (!csv.empty()) {
    std::ostringstream s;
    write_spectrum_csv(s, *c.words, c.spectrum);
    write_text_file(csv, s.str());
  }
  return c.verdict == Verdict::StrictlyDominated ? kExitOk : kExitNotCertified;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Surface-group representations into PSL(2,R): assembly, folding, domination probes"};
  app.require_subcommand(1);
  std::function<int()> action;

  // pants
  auto* pants = app.add_subcommand("pants", "single pair-of-pants representations");
  pants->require_subcommand(1);
  std::string lengths, epsilon = "-1", branch = "generic", repPath, out;

  auto* pBuild = pants->add_subcommand("build", "normal-form representation with given boundary lengths");
  pBuild->add_option("--lengths", lengths, "a,b,c")->required();
  pBuild->add_option("--epsilon", epsilon, "+1 or -1")->capture_default_str();
  pBuild->add_option("--branch", branch, "generic|upper|lower|diagonal")->capture_default_str();
  pBuild->add_option("--out", out, "output file (default stdout)");
  pBuild->callback([&] {
    action = [&] {
      const PantsRep rep = build_pants_rep(parse_lengths(lengths), parse_sign(epsilon), parse_branch(branch));
      emit(out, dump_json(to_json(rep)));
      return kExitOk;
    };
  });

  auto* pClassify = pants->add_subcommand("classify", "print the class and normal form");
  pClassify->add_option("--rep", repPath)->required();
  pClassify->callback([&] {
    action = [&] {
      const PantsRep rep = pants_from_json(read_json_file(repPath));
      const PantsClass cls = classify_pants_rep(rep);
      const PantsNormalForm nf = normal_form(rep);
      Json j{{"class", to_string(cls)},
             {"eulerClass", euler_class_pants(rep)},
             {"epsilon", nf.epsilon},
             {"branch", to_string(nf.branch)},
             {"A", nf.A},
             {"B", nf.B},
             {"C", nf.C},
             {"x", nf.x},
             {"nu", nf.nu}};
      std::cout << dump_json(j);
      return kExitOk;
    };
  });

  for (const bool folding : {true, false}) {
    auto* sub = pants->add_subcommand(folding ? "fold" : "unfold",
                                      folding ? "nongeometric rep with equal boundary lengths"
                                              : "geometric rep with equal boundary lengths");
    sub->add_option("--rep", repPath)->required();
    sub->add_option("--out", out);
    sub->callback([&, folding] {
      action = [&, folding] {
        const PantsRep rep = pants_from_json(read_json_file(repPath));
        emit(out, dump_json(to_json(folding ? fold_pants(rep) : unfold_pants(rep))));
        return kExitOk;
      };
    });
  }

  // surface assemble
  std::string surfacePath;
  auto* surface = app.add_subcommand("surface", "closed surfaces");
  surface->require_subcommand(1);
  auto* sAssemble = surface->add_subcommand("assemble", "Fuchsian representation from Fenchel–Nielsen data");
  sAssemble->add_option("--surface", surfacePath)->required();
  sAssemble->add_option("--out", out);
  sAssemble->callback([&] {
    action = [&] {
      const SurfaceInput s = surface_from_json(read_json_file(surfacePath));
      emit(out, dump_json(to_json(assemble_fuchsian(s.decomposition, s.coordinates))));
      return kExitOk;
    };
  });

  // euler
  std::string method = "pants";
  auto* euler = app.add_subcommand("euler", "Euler class of a representation dump");
  euler->add_option("--rep", repPath)->required();
  euler->add_option("--method", method, "pants (additivity) or relator (universal cover)")->capture_default_str();
  euler->callback([&] {
    action = [&] {
      const SurfaceRep rep = rep_from_json(read_json_file(repPath));
      if (method == "pants") {
        std::cout << euler_class_surface(rep) << "\n";
      } else if (method == "relator") {
        std::cout << euler_class_presentation(rep) << "\n";
      } else {
        throw Error(ErrorKind::InvalidInput, "unknown method '" + method + "'");
      }
      return kExitOk;
    };
  });

  // fold
  std::string labelsPath, outJ;
  int k = 0;
  auto* fold = app.add_subcommand("fold", "fold a Fuchsian assembly along a labeling");
  fold->add_option("--surface", surfacePath)->required();
  auto* labelsOpt = fold->add_option("--labels", labelsPath, "labeling JSON");
  auto* eulerOpt = fold->add_option("--euler", k, "prescribed Euler class (greedy labeling)");
  labelsOpt->excludes(eulerOpt);
  fold->add_option("--out", out, "folded representation dump");
  fold->add_option("--out-j", outJ, "Fuchsian representation dump");
  fold->callback([&] {
    action = [&] {
      const SurfaceInput s = surface_from_json(read_json_file(surfacePath));
      Labeling labels;
      if (!labelsPath.empty()) {
        labels = labeling_from_json(read_json_file(labelsPath), s.decomposition.pantsCount);
      } else if (eulerOpt->count() > 0) {
        labels = prescribe_labeling(s.decomposition, k);
      } else {
        throw Error(ErrorKind::InvalidInput, "fold needs --labels or --euler");
      }
      const FoldResult r = fold_surface(s.decomposition, s.coordinates, labels);
      emit(out, dump_json(to_json(r.rho)));
      if (!outJ.empty()) write_text_file(outJ, dump_json(to_json(r.j)));
      return kExitOk;
    };
  });

  // certify
  double t = 0.05;
  int maxLen = 8;
  std::string csvPath;
  auto* certify = app.add_subcommand("certify", "finite strict-domination probes");
  certify->require_subcommand(1);
  auto* cFold = certify->add_subcommand("fold", "Fuchsian j against a fold of its shrunk copy");
  cFold->add_option("--surface", surfacePath)->required();
  cFold->add_option("--euler", k)->required();
  cFold->add_option("--shrink", t)->capture_default_str();
  cFold->add_option("--max-word-len", maxLen)->capture_default_str();
  cFold->add_option("--out", out);
  cFold->add_option("--spectrum", csvPath, "also write the spectrum CSV");
  cFold->callback([&] {
    action = [&] {
      check_t(t);
      check_len(maxLen);
      const SurfaceInput s = surface_from_json(read_json_file(surfacePath));
      return report(strictly_dominated_fold(s.decomposition, s.coordinates, k, t, maxLen, word_cap()), out, csvPath);
    };
  });
  auto* cUnfold = certify->add_subcommand("unfold-direction", "fold ρ against a lengthened Fuchsian j′");
  cUnfold->add_option("--surface", surfacePath)->required();
  cUnfold->add_option("--labels", labelsPath)->required();
  cUnfold->add_option("--lengthen", t)->capture_default_str();
  cUnfold->add_option("--max-word-len", maxLen)->capture_default_str();
  cUnfold->add_option("--out", out);
  cUnfold->add_option("--spectrum", csvPath, "also write the spectrum CSV");
  cUnfold->callback([&] {
    action = [&] {
      check_t(t);
      check_len(maxLen);
      const SurfaceInput s = surface_from_json(read_json_file(surfacePath));
      const Labeling labels = labeling_from_json(read_json_file(labelsPath), s.decomposition.pantsCount);
      return report(dominating_fuchsian(s.decomposition, s.coordinates, labels, t, maxLen, word_cap()), out,
                    csvPath);
    };
  });

  // spectrum
  std::string jPath, rhoPath;
  auto* spectrum = app.add_subcommand("spectrum", "length ratios of two representation dumps");
  spectrum->add_option("--j", jPath)->required();
  spectrum->add_option("--rho", rhoPath)->required();
  spectrum->add_option("--max-word-len", maxLen)->capture_default_str();
  spectrum->add_option("--out", out);
  spectrum->callback([&] {
    action = [&] {
      check_len(maxLen);
      const SurfaceRep j = rep_from_json(read_json_file(jPath));
      const SurfaceRep rho = rep_from_json(read_json_file(rhoPath));
      const WordList words = enumerate_words(j.presentation.numGenerators, maxLen, word_cap());
      std::ostringstream s;
      write_spectrum_csv(s, words, ratio_spectrum(j, rho, words));
      emit(out, s.str());
      return kExitOk;
    };
  });

  // axes-svg
  auto* svg = app.add_subcommand("axes-svg", "draw the pants boundary axes in the Poincaré disk");
  svg->add_option("--rep", repPath)->required();
  svg->add_option("--out", out);
  svg->callback([&] {
    action = [&] {
      emit(out, axes_svg(rep_from_json(read_json_file(repPath))));
      return kExitOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }
  try {
    return action ? action() : kExitInput;
  } catch (const Error& e) {
    std::cerr << "foldrep: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "foldrep: " << e.what() << "\n";
    return kExitInput;
  }
}
