#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "foldrep/domination.hpp"
#include "foldrep/error.hpp"
#include "foldrep/io.hpp"

using namespace foldrep;

namespace {

SurfaceInput load(const std::string& name) { return surface_from_json(read_json_file(std::string(FOLDREP_DATA_DIR) + "/" + name)); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidInput;
}

// Brute force: all cyclically reduced words of each length, grouped into
// classes under rotation and inversion.
std::map<int, std::size_t> class_counts(int gens, int maxLen) {
  std::map<int, std::size_t> out;
  for (int len = 1; len <= maxLen; ++len) {
    std::set<std::vector<Letter>> classes;
    std::vector<Letter> w(static_cast<std::size_t>(len), 0);
    const int letters = 2 * gens;
    std::size_t total = 1;
    for (int i = 0; i < len; ++i) total *= static_cast<std::size_t>(letters);
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (int i = 0; i < len; ++i) {
        w[static_cast<std::size_t>(i)] = static_cast<Letter>(c % static_cast<std::size_t>(letters));
        c /= static_cast<std::size_t>(letters);
      }
      bool reduced = true;
      for (int i = 0; i < len && reduced; ++i) {
        const Letter next = w[static_cast<std::size_t>((i + 1) % len)];
        if (len > 1 && next == inverse_letter(w[static_cast<std::size_t>(i)])) reduced = false;
      }
      if (!reduced) continue;
      std::vector<Letter> best;
      for (int dir = 0; dir < 2; ++dir) {
        std::vector<Letter> base = w;
        if (dir == 1) {
          base.assign(w.rbegin(), w.rend());
          for (Letter& l : base) l = inverse_letter(l);
        }
        for (int r = 0; r < len; ++r) {
          std::vector<Letter> rot(base.begin() + r, base.end());
          rot.insert(rot.end(), base.begin(), base.begin() + r);
          if (best.empty() || rot < best) best = rot;
        }
      }
      classes.insert(best);
    }
    out[len] = classes.size();
  }
  return out;
}

}  // namespace

TEST(Domination, EnumerationMatchesBruteForce) {
  for (int gens : {1, 2, 3}) {
    const int maxLen = gens == 3 ? 4 : 6;
    const WordList words = enumerate_words(gens, maxLen);
    const auto expected = class_counts(gens, maxLen);
    std::map<int, std::size_t> got;
    for (std::size_t i = 0; i < words.size(); ++i) got[static_cast<int>(words[i].size())]++;
    EXPECT_EQ(got, expected) << gens << " generators";
  }
}

TEST(Domination, EnumeratedWordsAreCanonical) {
  const WordList words = enumerate_words(4, 5);
  std::set<Word> seen;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const Word w = words.word(i);
    EXPECT_TRUE(w.is_cyclically_reduced());
    EXPECT_EQ(w.canonical_cyclic(), w);
    EXPECT_TRUE(seen.insert(w).second);
  }
}

TEST(Domination, EnumerationBudget) {
  EXPECT_EQ(kind_of([] { enumerate_words(4, 8, 1000); }), ErrorKind::BudgetExceeded);
  EXPECT_EQ(kind_of([] { enumerate_words(0, 3); }), ErrorKind::BadParameter);
  EXPECT_EQ(kind_of([] { enumerate_words(2, 0); }), ErrorKind::BadParameter);
}

TEST(Domination, CuffScaling) {
  const FNCoordinates fn{{2.0, 1.0}, {0.3, 0.0}};
  EXPECT_NEAR(cuff_lengthen(fn, 0.05).lengths[0], 2.0 / 0.95, 1e-15);
  EXPECT_NEAR(cuff_shrink(fn, 0.05).lengths[0], 1.9, 1e-15);
  EXPECT_EQ(cuff_shrink(fn, 0.0).lengths, fn.lengths);
  EXPECT_EQ(cuff_shrink(fn, 0.3).twists, fn.twists);
  const FNCoordinates round = cuff_shrink(cuff_lengthen(fn, 0.2), 0.2);
  for (std::size_t i = 0; i < fn.lengths.size(); ++i) EXPECT_NEAR(round.lengths[i], fn.lengths[i], 1e-12);
  EXPECT_EQ(kind_of([&] { cuff_shrink(fn, 1.0); }), ErrorKind::BadParameter);
  EXPECT_EQ(kind_of([&] { cuff_lengthen(fn, -0.1); }), ErrorKind::BadParameter);
}

TEST(Domination, SelfSpectrumIsOne) {
  const SurfaceInput s = load("g2.json");
  const SurfaceRep j = assemble_fuchsian(s.decomposition, s.coordinates);
  const WordList words = enumerate_words(4, 5);
  const Spectrum sp = ratio_spectrum(j, j, words);
  EXPECT_EQ(sp.size() + sp.excluded, words.size());
  for (std::size_t i = 0; i < sp.size(); ++i) EXPECT_DOUBLE_EQ(sp.ratio(i), 1.0);
}

TEST(Domination, ShrunkFoldIsStrictlyDominated) {
  const SurfaceInput s = load("g2.json");
  const auto c = strictly_dominated_fold(s.decomposition, s.coordinates, 0, 0.05, 6);
  EXPECT_EQ(c.verdict, Verdict::StrictlyDominated);
  EXPECT_LT(c.supRatio, 1.0);
  EXPECT_EQ(c.eulerRho, 0);
  for (double r : c.cuffRatios) EXPECT_NEAR(r, 0.95, 1e-9);
  // Soundness: every record is below the threshold.
  for (std::size_t i = 0; i < c.spectrum.size(); ++i) EXPECT_LT(c.spectrum.ratio(i), 1.0 - kStrictMargin);
}

TEST(Domination, UnshrunkFoldIsNotCertified) {
  const SurfaceInput s = load("g2.json");
  const auto c = strictly_dominated_fold(s.decomposition, s.coordinates, 1, 0.0, 6);
  EXPECT_EQ(c.verdict, Verdict::NotCertified);
  EXPECT_NEAR(c.supRatio, 1.0, 1e-7);
}

TEST(Domination, SupRatioDecreasesWithShrinking) {
  const SurfaceInput s = load("g2.json");
  auto words = std::make_shared<const WordList>(enumerate_words(4, 6));
  double prev = INFINITY;
  for (double t : {0.01, 0.02, 0.05, 0.1}) {
    const auto c = strictly_dominated_fold(s.decomposition, s.coordinates, 0, t, words);
    EXPECT_LE(c.supRatio, prev + 1e-9) << t;
    prev = c.supRatio;
  }
}

TEST(Domination, CertificatesAreDeterministic) {
  const SurfaceInput s = load("g2.json");
  const auto a = strictly_dominated_fold(s.decomposition, s.coordinates, -1, 0.05, 5);
  const auto b = strictly_dominated_fold(s.decomposition, s.coordinates, -1, 0.05, 5);
  EXPECT_EQ(dump_json(to_json(a)), dump_json(to_json(b)));
}

TEST(Domination, DominatingFuchsian) {
  const SurfaceInput s = load("g2.json");
  const auto c = dominating_fuchsian(s.decomposition, s.coordinates, {1, 0}, 0.05, 6);
  EXPECT_EQ(c.verdict, Verdict::StrictlyDominated);
  EXPECT_EQ(kind_of([&] { dominating_fuchsian(s.decomposition, s.coordinates, {1, 1}, 0.05, 4); }),
            ErrorKind::BadParameter);
  EXPECT_EQ(kind_of([&] { dominating_fuchsian(s.decomposition, s.coordinates, {-1, -1}, 0.05, 4); }),
            ErrorKind::BadParameter);
}

TEST(Domination, MismatchedPresentations) {
  const SurfaceRep g2 = assemble_fuchsian(load("g2.json").decomposition, load("g2.json").coordinates);
  const SurfaceRep g3 = assemble_fuchsian(load("g3.json").decomposition, load("g3.json").coordinates);
  const WordList words = enumerate_words(4, 3);
  EXPECT_EQ(kind_of([&] { ratio_spectrum(g2, g3, words); }), ErrorKind::PresentationMismatch);
}

TEST(Domination, ExtremalClassRejected) {
  const SurfaceInput s = load("g2.json");
  EXPECT_EQ(kind_of([&] { strictly_dominated_fold(s.decomposition, s.coordinates, 2, 0.05, 4); }),
            ErrorKind::ExtremalClass);
}
