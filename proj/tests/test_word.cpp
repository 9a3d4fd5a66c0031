#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "foldrep/error.hpp"
#include "foldrep/word.hpp"

using namespace foldrep;

TEST(Word, ParseAndPrint) {
  EXPECT_EQ(Word::parse("aBc").to_string(), "aBc");
  EXPECT_TRUE(Word::parse("").empty());
  EXPECT_TRUE(Word::parse("1").empty());
  EXPECT_THROW(Word::parse("a?"), Error);
}

TEST(Word, SignedIndices) {
  const std::vector<int> idx = {1, -2, 3};
  const Word w = Word::from_signed(idx);
  EXPECT_EQ(w.to_string(), "aBc");
  EXPECT_EQ(w.signed_indices(), idx);
  EXPECT_EQ(w.max_generator(), 2);
}

TEST(Word, FreeReduction) {
  EXPECT_EQ(Word::parse("abBA").freely_reduced().size(), 0u);
  EXPECT_EQ((Word::parse("ab") * Word::parse("Bc")).to_string(), "ac");
  EXPECT_EQ(Word::parse("aBc").inverse().to_string(), "CbA");
  EXPECT_EQ(Word::parse("ab").power(-2).to_string(), "BABA");
}

TEST(Word, CyclicReduction) {
  EXPECT_EQ(Word::parse("abcA").cyclically_reduced().to_string(), "bc");
  EXPECT_TRUE(Word::parse("abAB").is_cyclically_reduced());
  EXPECT_FALSE(Word::parse("abA").is_cyclically_reduced());
}

TEST(Word, CanonicalCyclicIdentifiesConjugatesAndInverses) {
  const Word w = Word::parse("abCa");
  const Word c = w.canonical_cyclic();
  EXPECT_EQ(Word::parse("bCaa").canonical_cyclic(), c);
  EXPECT_EQ(w.inverse().canonical_cyclic(), c);
  EXPECT_EQ((Word::parse("D") * w * Word::parse("d")).canonical_cyclic(), c);
  EXPECT_TRUE(is_canonical_cyclic(c.letters()));
}

TEST(Word, EvaluateEmptyIsIdentity) {
  const std::vector<MoebiusTransform> images = {MoebiusTransform::diagonal(2.0)};
  EXPECT_EQ(evaluate(images, Word()), MoebiusTransform());
  EXPECT_THROW(evaluate(images, Word::parse("b")), Error);
}

TEST(Word, EvaluateInverseCancels) {
  const std::vector<MoebiusTransform> images = {MoebiusTransform(2.0, 1.0, 3.0, 2.0), MoebiusTransform::diagonal(3.0)};
  const Word w = Word::parse("abAb");
  const Word raw(std::vector<Letter>{0, 2, 1, 2, 3, 0, 2, 3});
  EXPECT_TRUE(evaluate(images, w * w.inverse()).approx_equal(MoebiusTransform(), 1e-10));
  EXPECT_TRUE(evaluate(images, raw).approx_equal(evaluate(images, raw.freely_reduced()), 1e-10));
}
