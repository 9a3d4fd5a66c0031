#include "foldrep/domination.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "foldrep/error.hpp"

namespace foldrep {

namespace {

struct Enumerator {
  int letterCount;
  std::size_t cap;
  std::vector<Letter> w;
  std::vector<Letter>& out;
  std::size_t count = 0;

  void fill(std::size_t pos, Letter lowest) {
    if (pos == w.size()) {
      if (w.size() > 1 && w.back() == inverse_letter(w.front())) return;
      if (!is_canonical_cyclic(w)) return;
      if (++count > cap) {
        throw Error(ErrorKind::BudgetExceeded, "word enumeration exceeds the cap of " + std::to_string(cap));
      }
      out.insert(out.end(), w.begin(), w.end());
      return;
    }
    for (int l = lowest; l < letterCount; ++l) {
      const auto letter = static_cast<Letter>(l);
      if (letter == inverse_letter(w[pos - 1])) continue;
      w[pos] = letter;
      fill(pos + 1, lowest);
    }
  }
};

// Translation length straight from the trace, without building a transform.
double length_of(const std::vector<Mat2>& images, std::span<const Letter> word) {
  Mat2 m = images[word[0]];
  for (std::size_t i = 1; i < word.size(); ++i) m = m * images[word[i]];
  // The factors have unit determinant; recomputing det here would lose precision.
  const double t = std::abs(m.trace());
  if (std::abs(t - 2.0) < kParabolicBand || t < 2.0) return 0.0;
  return 2.0 * std::acosh(0.5 * t);
}

std::vector<Mat2> letter_images(const SurfaceRep& rep) {
  std::vector<Mat2> out;
  for (const auto& g : rep.generators) {
    const Mat2& m = g.matrix();
    out.push_back(m);
    out.push_back({m.d, -m.b, -m.c, m.a});
  }
  return out;
}

double translation_length_of(const SurfaceRep& rep, const Word& w) { return translation_length(evaluate_word(rep, w)); }

}  // namespace

std::span<const Letter> WordList::operator[](std::size_t i) const {
  const auto it = std::upper_bound(blockStart_.begin(), blockStart_.end(), i);
  const auto block = static_cast<std::size_t>(it - blockStart_.begin()) - 1;
  const std::size_t len = block + 1;
  return {letters_.data() + letterStart_[block] + (i - blockStart_[block]) * len, len};
}

WordList enumerate_words(int numGenerators, int maxLen, std::size_t cap) {
  if (numGenerators < 1 || numGenerators > kMaxGenerators || maxLen < 1) {
    throw Error(ErrorKind::BadParameter, "need 1..26 generators and maxLen >= 1");
  }
  WordList list;
  list.numGenerators_ = numGenerators;
  list.maxLen_ = maxLen;
  Enumerator en{2 * numGenerators, cap, {}, list.letters_};
  for (int len = 1; len <= maxLen; ++len) {
    list.blockStart_.push_back(en.count);
    list.letterStart_.push_back(list.letters_.size());
    en.w.assign(static_cast<std::size_t>(len), 0);
    for (int g = 0; g < numGenerators; ++g) {
      // The least letter of a canonical word is a positive generator and comes first.
      en.w[0] = make_letter(g);
      en.fill(1, make_letter(g));
    }
  }
  list.blockStart_.push_back(en.count);
  list.letterStart_.push_back(list.letters_.size());
  return list;
}

Spectrum ratio_spectrum(const SurfaceRep& j, const SurfaceRep& rho, const WordList& words) {
  if (!(j.presentation == rho.presentation) || j.presentation.numGenerators != words.numGenerators()) {
    throw Error(ErrorKind::PresentationMismatch, "representations and word list use different presentations");
  }
  const auto ij = letter_images(j);
  const auto ir = letter_images(rho);
  Spectrum s;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto w = words[i];
    const double lj = length_of(ij, w);
    const double lr = length_of(ir, w);
    if (lj < kDegenerateLength) {
      ++s.excluded;
      if (lr >= kDegenerateViolation) {
        throw Error(ErrorKind::DegenerateViolation,
                    "word " + word_to_string(w) + " is degenerate for j but has length " + std::to_string(lr));
      }
      continue;
    }
    s.word.push_back(static_cast<std::uint32_t>(i));
    s.lambdaJ.push_back(lj);
    s.lambdaRho.push_back(lr);
  }
  return s;
}

FNCoordinates cuff_shrink(const FNCoordinates& fn, double t) {
  if (!(t >= 0.0 && t < 1.0)) throw Error(ErrorKind::BadParameter, "t must lie in [0, 1)");
  FNCoordinates out = fn;
  for (double& l : out.lengths) l *= 1.0 - t;
  return out;
}

FNCoordinates cuff_lengthen(const FNCoordinates& fn, double t) {
  if (!(t >= 0.0 && t < 1.0)) throw Error(ErrorKind::BadParameter, "t must lie in [0, 1)");
  FNCoordinates out = fn;
  for (double& l : out.lengths) l /= 1.0 - t;
  return out;
}

std::string to_string(Verdict v) { return v == Verdict::StrictlyDominated ? "StrictlyDominated" : "NotCertified"; }

DominationCertificate certify_pair(const SurfaceRep& j, const SurfaceRep& rho,
                                   std::shared_ptr<const WordList> words, double t) {
  DominationCertificate c;
  c.spectrum = ratio_spectrum(j, rho, *words);
  c.t = t;
  c.maxWordLen = words->maxLen();
  c.wordCount = words->size();
  c.excludedWords = c.spectrum.excluded;
  c.eulerRho = euler_class_surface(rho);
  for (const Word& w : j.presentation.cuffWords) {
    c.cuffRatios.push_back(translation_length_of(rho, w) / translation_length_of(j, w));
  }

  const Spectrum& s = c.spectrum;
  double sup = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) sup = std::max(sup, s.ratio(i));
  c.supRatio = sup;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.ratio(i) >= sup - kStrictMargin) {
      c.witness = word_to_string((*words)[s.word[i]]);
      break;
    }
  }
  bool strict = s.size() > 0 && sup < 1.0 - kStrictMargin;
  // Re-check every record rather than trusting the accumulator.
  for (std::size_t i = 0; strict && i < s.size(); ++i) strict = s.ratio(i) < 1.0 - kStrictMargin;
  c.verdict = strict ? Verdict::StrictlyDominated : Verdict::NotCertified;
  c.words = std::move(words);
  return c;
}

DominationCertificate strictly_dominated_fold(const PantsDecomposition& pd, const FNCoordinates& fn, int k,
                                              double t, std::shared_ptr<const WordList> words) {
  const Labeling labels = prescribe_labeling(pd, k);
  const FNCoordinates shrunk = cuff_shrink(fn, t);
  const SurfaceRep j = assemble_fuchsian(pd, fn);
  const SurfaceRep rho = fold_surface(pd, shrunk, labels).rho;
  return certify_pair(j, rho, std::move(words), t);
}

DominationCertificate strictly_dominated_fold(const PantsDecomposition& pd, const FNCoordinates& fn, int k,
                                              double t, int maxLen, std::size_t cap) {
  const int genus = validate_decomposition(pd);
  prescribe_labeling(pd, k);
  cuff_shrink(fn, t);
  auto words = std::make_shared<const WordList>(enumerate_words(2 * genus, maxLen, cap));
  return strictly_dominated_fold(pd, fn, k, t, std::move(words));
}

DominationCertificate dominating_fuchsian(const PantsDecomposition& pd, const FNCoordinates& fn,
                                          const Labeling& labels, double t, std::shared_ptr<const WordList> words) {
  const bool allPlus = std::all_of(labels.begin(), labels.end(), [](int l) { return l == 1; });
  const bool allMinus = std::all_of(labels.begin(), labels.end(), [](int l) { return l == -1; });
  if (labels.empty() || allPlus || allMinus) {
    throw Error(ErrorKind::BadParameter, "labels all +1 or all -1 give a Fuchsian representation");
  }
  const FNCoordinates longer = cuff_lengthen(fn, t);
  const SurfaceRep rho = fold_surface(pd, fn, labels).rho;
  const SurfaceRep j = assemble_fuchsian(pd, longer);
  return certify_pair(j, rho, std::move(words), t);
}

DominationCertificate dominating_fuchsian(const PantsDecomposition& pd, const FNCoordinates& fn,
                                          const Labeling& labels, double t, int maxLen, std::size_t cap) {
  const int genus = validate_decomposition(pd);
  cuff_lengthen(fn, t);
  auto words = std::make_shared<const WordList>(enumerate_words(2 * genus, maxLen, cap));
  return dominating_fuchsian(pd, fn, labels, t, std::move(words));
}

}  // namespace foldrep
