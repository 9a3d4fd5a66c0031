#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "foldrep/error.hpp"
#include "foldrep/pants.hpp"
#include "foldrep/univcover.hpp"

using namespace foldrep;

namespace {

MoebiusTransform rotation(double angle) {
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  return MoebiusTransform(c, s, -s, c);
}

}  // namespace

TEST(UnivCover, StandardLiftOffsetInUnitInterval) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    const double a = 1.0 + std::abs(u(rng)), b = u(rng), c = u(rng);
    const LiftedIsometry l = standard_lift(MoebiusTransform(a, b, c, (1 + b * c) / a));
    EXPECT_GE(l.offset, 0.0);
    EXPECT_LT(l.offset, 1.0);
  }
}

TEST(UnivCover, LiftIsMonotoneAndEquivariant) {
  const MoebiusTransform g(2.0, 1.0, 1.0, 1.0);
  const LiftedIsometry l = standard_lift(g);
  double prev = l.eval(-1.0);
  for (double x = -0.95; x <= 2.0; x += 0.05) {
    const double v = l.eval(x);
    EXPECT_GT(v, prev);
    EXPECT_NEAR(l.eval(x + 1.0), v + 1.0, 1e-12);
    prev = v;
  }
}

TEST(UnivCover, HalfTurnSquaresToUnitShift) {
  const LiftedIsometry h = standard_lift(rotation(M_PI));
  EXPECT_NEAR(h.offset, 0.5, 1e-12);
  EXPECT_EQ(central_integer(lifted_compose(h, h)), 1);
}

TEST(UnivCover, RotationsAddUp) {
  const LiftedIsometry q = standard_lift(rotation(M_PI / 2));
  LiftedIsometry acc = q;
  for (int i = 1; i < 8; ++i) acc = lifted_compose(acc, q);
  // Eight quarter turns make two full turns in whichever direction q turns.
  EXPECT_TRUE(q.offset == 0.25 || q.offset == 0.75);
  EXPECT_EQ(central_integer(acc), static_cast<int>(std::lround(8 * q.offset)));
}

TEST(UnivCover, InverseAndDeckShift) {
  const LiftedIsometry g = standard_lift(MoebiusTransform(3.0, 1.0, 2.0, 1.0));
  EXPECT_EQ(central_integer(lifted_compose(g, lifted_inverse(g))), 0);
  EXPECT_EQ(central_integer(lifted_compose(g.deck_translated(3), lifted_inverse(g))), 3);
}

TEST(UnivCover, CentralIntegerErrors) {
  try {
    central_integer(standard_lift(MoebiusTransform::diagonal(2.0)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCentral);
  }
}

TEST(UnivCover, CanonicalLiftHasFixedPoints) {
  const LiftedIsometry l = canonical_lift(MoebiusTransform(2.0, 3.0, 1.0, 2.0));
  int signChanges = 0;
  for (int i = 0; i < 1000; ++i) {
    const double x = i / 1000.0, y = (i + 1) / 1000.0;
    if ((l.eval(x) - x) * (l.eval(y) - y) <= 0.0) ++signChanges;
  }
  EXPECT_GE(signChanges, 2);
  EXPECT_THROW(canonical_lift(rotation(1.0)), Error);
}

TEST(UnivCover, EulerClassOfPantsBySign) {
  for (double a : {0.5, 1.0, 2.5}) {
    const BoundaryLengths l{a, 1.0, 1.3};
    EXPECT_EQ(std::abs(euler_class_pants(build_pants_rep(l, -1))), 1);
    EXPECT_EQ(euler_class_pants(build_pants_rep(l, 1)), 0);
    EXPECT_EQ(euler_parity_pants(build_pants_rep(l, -1)), 1);
    EXPECT_EQ(euler_parity_pants(build_pants_rep(l, 1)), 0);
  }
}

TEST(UnivCover, SurfaceRelatorShape) {
  EXPECT_EQ(surface_relator(2).to_string(), "abABcdCD");
  EXPECT_EQ(surface_relator(3).size(), 12u);
}

TEST(UnivCover, CommutatorClassOfAbelianRepIsZero) {
  const std::vector<MoebiusTransform> images = {MoebiusTransform::diagonal(2.0), MoebiusTransform::diagonal(3.0),
                                                rotation(0.4), rotation(1.1)};
  EXPECT_EQ(euler_class_commutator(images, 2), 0);
}

TEST(UnivCover, CommutatorRejectsBrokenRelation) {
  const std::vector<MoebiusTransform> images = {MoebiusTransform::diagonal(2.0), MoebiusTransform(1.0, 1.0, 0.0, 1.0),
                                                MoebiusTransform(), MoebiusTransform()};
  try {
    euler_class_commutator(images, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RelatorViolated);
  }
}

TEST(UnivCover, RelatorClassIgnoresLiftChoice) {
  const std::vector<MoebiusTransform> commuting = {rotation(0.7), rotation(1.9), MoebiusTransform::diagonal(2.0),
                                                   MoebiusTransform::diagonal(5.0)};
  const Word relator = surface_relator(2);
  const int ref = euler_class_relator(commuting, relator);
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> k(-4, 4);
  for (int i = 0; i < 20; ++i) {
    std::vector<LiftedIsometry> lifts;
    for (const auto& g : commuting) lifts.push_back(standard_lift(g).deck_translated(k(rng)));
    EXPECT_EQ(euler_class_relator(lifts, relator), ref);
  }
}
