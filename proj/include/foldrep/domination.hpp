#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "foldrep/folding.hpp"
#include "foldrep/surface.hpp"
#include "foldrep/word.hpp"

namespace foldrep {

inline constexpr std::size_t kDefaultWordCap = 10'000'000;
inline constexpr double kDegenerateLength = 1e-9;
inline constexpr double kDegenerateViolation = 1e-6;
inline constexpr double kStrictMargin = 1e-9;

/// Cyclically reduced words up to a length, one per class under rotation and
/// inversion, sorted by length and enumerated depth-first within a length.
/// Letters are stored back to back; words of length L occupy a contiguous block.
class WordList {
 public:
  int numGenerators() const { return numGenerators_; }
  int maxLen() const { return maxLen_; }
  std::size_t size() const { return blockStart_.empty() ? 0 : blockStart_.back(); }

  std::span<const Letter> operator[](std::size_t i) const;
  Word word(std::size_t i) const {
    const auto s = (*this)[i];
    return Word(std::vector<Letter>(s.begin(), s.end()));
  }

 private:
  friend WordList enumerate_words(int, int, std::size_t);
  int numGenerators_ = 0;
  int maxLen_ = 0;
  std::vector<Letter> letters_;
  // blockStart_[L-1] is the index of the first word of length L; the last
  // entry is the total count. letterStart_ mirrors it in letters_.
  std::vector<std::size_t> blockStart_;
  std::vector<std::size_t> letterStart_;
};

/// Throws BadParameter for non-positive arguments, BudgetExceeded past `cap`.
WordList enumerate_words(int numGenerators, int maxLen, std::size_t cap = kDefaultWordCap);

/// Translation lengths under j and ρ for the words with λ_j >= 1e-9.
struct Spectrum {
  std::vector<std::uint32_t> word;  // index into the word list
  std::vector<double> lambdaJ;
  std::vector<double> lambdaRho;
  std::size_t excluded = 0;

  std::size_t size() const { return word.size(); }
  double ratio(std::size_t i) const { return lambdaRho[i] / lambdaJ[i]; }
};

/// Throws PresentationMismatch, DegenerateViolation.
Spectrum ratio_spectrum(const SurfaceRep& j, const SurfaceRep& rho, const WordList& words);

/// Lengths scaled by 1 - t. Throws BadParameter unless 0 <= t < 1.
FNCoordinates cuff_shrink(const FNCoordinates& fn, double t);
/// Lengths scaled by 1 / (1 - t). Throws BadParameter unless 0 <= t < 1.
FNCoordinates cuff_lengthen(const FNCoordinates& fn, double t);

enum class Verdict { StrictlyDominated, NotCertified };
std::string to_string(Verdict v);

/// Outcome of a finite probe: it covers only the enumerated words.
struct DominationCertificate {
  Verdict verdict = Verdict::NotCertified;
  double supRatio = 0.0;
  std::string witness;
  double t = 0.0;
  int maxWordLen = 0;
  int eulerRho = 0;
  std::size_t wordCount = 0;
  std::size_t excludedWords = 0;
  std::vector<double> cuffRatios;
  std::shared_ptr<const WordList> words;
  Spectrum spectrum;
};

/// Builds the certificate for a pair; the witness is the shortest word within
/// 1e-9 of the sup.
DominationCertificate certify_pair(const SurfaceRep& j, const SurfaceRep& rho,
                                   std::shared_ptr<const WordList> words, double t);

/// Fuchsian j against the fold of a uniformly shrunk j with Euler class k.
/// Throws ExtremalClass, BadParameter.
DominationCertificate strictly_dominated_fold(const PantsDecomposition& pd, const FNCoordinates& fn, int k,
                                              double t, std::shared_ptr<const WordList> words);
DominationCertificate strictly_dominated_fold(const PantsDecomposition& pd, const FNCoordinates& fn, int k,
                                              double t, int maxLen, std::size_t cap = kDefaultWordCap);

/// Fold ρ with the given labels against a uniformly lengthened Fuchsian j′.
/// Throws BadParameter when the labels are all +1 or all -1.
DominationCertificate dominating_fuchsian(const PantsDecomposition& pd, const FNCoordinates& fn,
                                          const Labeling& labels, double t, std::shared_ptr<const WordList> words);
DominationCertificate dominating_fuchsian(const PantsDecomposition& pd, const FNCoordinates& fn,
                                          const Labeling& labels, double t, int maxLen,
                                          std::size_t cap = kDefaultWordCap);

}  // namespace foldrep
