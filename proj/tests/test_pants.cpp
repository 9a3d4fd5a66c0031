#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>

#include "foldrep/error.hpp"
#include "foldrep/pants.hpp"
#include "foldrep/univcover.hpp"

using namespace foldrep;

namespace {

void expect_lengths(const PantsRep& rep, const BoundaryLengths& l, double tol) {
  const BoundaryLengths back = boundary_lengths(rep);
  EXPECT_NEAR(back.a, l.a, tol);
  EXPECT_NEAR(back.b, l.b, tol);
  EXPECT_NEAR(back.c, l.c, tol);
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST(Pants, BranchNames) {
  for (Branch b : {Branch::Generic, Branch::Upper, Branch::Lower, Branch::Diagonal}) {
    EXPECT_EQ(parse_branch(to_string(b)), b);
  }
  EXPECT_THROW(parse_branch("sideways"), Error);
}

TEST(Pants, DegenerateLocus) {
  EXPECT_TRUE(on_degenerate_locus({1.0, 2.0, 3.0}));
  EXPECT_TRUE(on_degenerate_locus({3.0, 1.0, 2.0}));
  EXPECT_FALSE(on_degenerate_locus({1.0, 1.0, 1.0}));
}

TEST(Pants, BuildRoundTripsLengths) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.2, 4.0);
  for (int i = 0; i < 100; ++i) {
    const BoundaryLengths l{u(rng), u(rng), u(rng)};
    if (on_degenerate_locus(l)) continue;
    for (int eps : {1, -1}) expect_lengths(build_pants_rep(l, eps), l, 1e-8);
  }
}

TEST(Pants, GeometricIsClassifiedGeometric) {
  const BoundaryLengths l{1.0, 1.5, 2.0};
  EXPECT_EQ(classify_pants_rep(build_pants_rep(l, -1)), PantsClass::Geometric);
  EXPECT_EQ(classify_pants_rep(build_pants_rep(l, 1)), PantsClass::NongeometricGeneric);
}

TEST(Pants, NormalFormIsConjugationInvariant) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const BoundaryLengths l{0.7, 1.2, 2.4};
  for (int eps : {1, -1}) {
    const PantsRep rep = build_pants_rep(l, eps);
    const PantsNormalForm nf = normal_form(rep);
    EXPECT_EQ(nf.epsilon, eps);
    for (int i = 0; i < 10; ++i) {
      const double a = 1.5 + u(rng), b = u(rng), c = u(rng);
      const MoebiusTransform h(a, b, c, (1 + b * c) / a);
      EXPECT_TRUE(normal_form(rep.conjugated(h)).same_class(nf));
    }
  }
}

TEST(Pants, FoldAndUnfoldSwapTheSign) {
  const BoundaryLengths l{1.0, 1.3, 0.8};
  const PantsRep geometric = build_pants_rep(l, -1);
  const PantsRep folded = fold_pants(geometric);
  expect_lengths(folded, l, 1e-9);
  EXPECT_EQ(euler_class_pants(folded), 0);
  const PantsRep back = unfold_pants(folded);
  EXPECT_EQ(classify_pants_rep(back), PantsClass::Geometric);
  EXPECT_TRUE(normal_form(back).same_class(normal_form(geometric)));
}

TEST(Pants, FoldOnDegenerateLocusUsesUpperBranch) {
  const BoundaryLengths l{1.0, 2.0, 3.0};
  EXPECT_EQ(classify_pants_rep(fold_pants(build_pants_rep(l, -1))), PantsClass::NongeometricNonabelianA);
}

TEST(Pants, FoldErrors) {
  const BoundaryLengths l{1.0, 1.0, 1.0};
  EXPECT_EQ(kind_of([&] { fold_pants(build_pants_rep(l, 1)); }), ErrorKind::NotGeometric);
  EXPECT_EQ(kind_of([&] { unfold_pants(build_pants_rep(l, -1)); }), ErrorKind::AlreadyGeometric);
}

TEST(Pants, AbelianizeOffLocus) {
  EXPECT_EQ(kind_of([] { abelianize(build_pants_rep({1.0, 1.0, 1.0}, 1)); }), ErrorKind::NotElementary);
  const BoundaryLengths l{0.5, 1.0, 1.5};
  const PantsRep ab = abelianize(build_pants_rep(l, 1, Branch::Lower));
  EXPECT_EQ(classify_pants_rep(ab), PantsClass::Abelian);
  expect_lengths(ab, l, 1e-9);
}

TEST(Pants, BuildErrors) {
  EXPECT_EQ(kind_of([] { build_pants_rep({-1.0, 1.0, 1.0}, 1); }), ErrorKind::NonPositiveLength);
  EXPECT_EQ(kind_of([] { build_pants_rep({1.0, 1.0, 1.0}, 0); }), ErrorKind::BadParameter);
  EXPECT_EQ(kind_of([] { build_pants_rep({1.0, 1.0, 1.0}, 1, Branch::Upper); }), ErrorKind::InvalidBranch);
  EXPECT_EQ(kind_of([] { build_pants_rep({1.0, 2.0, 3.0}, -1, Branch::Upper); }), ErrorKind::InvalidBranch);
}

TEST(Pants, BoundaryLengthsNeedHyperbolicBoundaries) {
  const PantsRep rep{MoebiusTransform(0.0, -1.0, 1.0, 0.0), MoebiusTransform::diagonal(2.0)};
  EXPECT_EQ(kind_of([&] { boundary_lengths(rep); }), ErrorKind::BoundaryNotHyperbolic);
}

TEST(Pants, NormalFormCoordinateMatchesFormula) {
  const BoundaryLengths l{1.0, 1.4, 2.2};
  for (int eps : {1, -1}) {
    EXPECT_NEAR(normal_form(build_pants_rep(l, eps)).x, normal_form_x(l, eps), 1e-9);
  }
}
