#include "foldrep/folding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "foldrep/error.hpp"
#include "foldrep/pants.hpp"

namespace foldrep {

namespace {

Isometry reflection_through(Vec2 p, Vec2 q) {
  const Mat2 cols{p.x, q.x, p.y, q.y};
  return Isometry(cols * Mat2{1.0, 0.0, 0.0, -1.0} * cols.inverse());
}

// Unipotent map fixing p that conjugates j to rho; both must fix p with the
// same multiplier there.
Isometry boundary_map(const MoebiusTransform& j, const MoebiusTransform& rho, Vec2 p) {
  const Mat2 q{p.x, -p.y, p.y, p.x};
  const Mat2 qi = q.inverse();
  const Mat2 a = qi * j.matrix() * q;
  Mat2 b = qi * rho.matrix() * q;
  if (a.a * b.a < 0.0) b = {-b.a, -b.b, -b.c, -b.d};
  const double u = (b.b - a.b) / (a.d - a.a);
  return Isometry(q * Mat2{1.0, u, 0.0, 1.0} * qi);
}

}  // namespace

double bending_angle(int c1, int c2) {
  if (std::abs(c1) != 1 || std::abs(c2) != 1) throw Error(ErrorKind::InvalidInput, "colors must be +1 or -1");
  return 0.5 * (1 - c1 * c2) * std::numbers::pi;
}

Labeling prescribe_labeling(const PantsDecomposition& pd, int k) {
  const int genus = validate_decomposition(pd);
  if (std::abs(k) >= 2 * genus - 2) {
    throw Error(ErrorKind::ExtremalClass, "Euler class " + std::to_string(k) + " is extremal or beyond for genus " +
                                              std::to_string(genus));
  }
  Labeling labels(static_cast<std::size_t>(pd.pantsCount), 0);
  for (int i = 0; i < std::abs(k); ++i) labels[static_cast<std::size_t>(i)] = k > 0 ? 1 : -1;
  return labels;
}

TriskelionFold triskelion_fold(const PantsRep& geometric) {
  if (classify_pants_rep(geometric) != PantsClass::Geometric) {
    throw Error(ErrorKind::NotGeometric, "triskelion fold needs a geometric pants representation");
  }
  const auto g = geometric.boundaries();
  std::array<Vec2, 3> p;
  for (int s = 0; s < 3; ++s) p[static_cast<std::size_t>(s)] = fixed_points(g[static_cast<std::size_t>(s)]).attracting;
  const Isometry rab = reflection_through(p[0], p[1]);
  const Isometry rbc = reflection_through(p[1], p[2]);
  const Isometry rca = reflection_through(p[2], p[0]);

  TriskelionFold out;
  out.rep.alpha = (rca * Isometry(g[0]) * rab).to_moebius();
  out.rep.beta = (rab * Isometry(g[1]) * rbc).to_moebius();
  const auto r = out.rep.boundaries();
  for (std::size_t s = 0; s < 3; ++s) out.boundaryMaps[s] = boundary_map(g[s], r[s], p[s]);
  return out;
}

FoldResult fold_surface(const PantsDecomposition& pd, const FNCoordinates& fn, const Labeling& labels) {
  FoldResult out{assemble_fuchsian(pd, fn), {}};
  const SurfaceRep& j = out.j;
  if (labels.size() != static_cast<std::size_t>(pd.pantsCount)) {
    throw Error(ErrorKind::InvalidInput, "need one label per pants");
  }
  const Isometry reverse = Isometry::standard_reflection();
  std::vector<PantsRep> local;
  std::vector<std::array<Isometry, 3>> maps;
  for (std::size_t p = 0; p < labels.size(); ++p) {
    const PantsRep& geo = j.localPants[p];
    switch (labels[p]) {
      case 1:
        local.push_back(geo);
        maps.push_back({Isometry(), Isometry(), Isometry()});
        break;
      case -1:
        local.push_back(geo.conjugated(reverse));
        maps.push_back({reverse, reverse, reverse});
        break;
      case 0: {
        TriskelionFold f = triskelion_fold(geo);
        local.push_back(f.rep);
        maps.push_back(f.boundaryMaps);
        break;
      }
      default:
        throw Error(ErrorKind::InvalidInput, "labels must be -1, 0 or 1");
    }
  }

  // Transport across each cuff so that the piecewise boundary maps agree.
  const Presentation& pres = j.presentation;
  std::vector<MoebiusTransform> gluings;
  for (std::size_t e = 0; e < pd.cuffs.size(); ++e) {
    const CuffEnd a = pres.nearEnd[e], b = pres.farEnd[e];
    const Isometry& la = maps[static_cast<std::size_t>(a.pants)][static_cast<std::size_t>(a.slot)];
    const Isometry& lb = maps[static_cast<std::size_t>(b.pants)][static_cast<std::size_t>(b.slot)];
    Isometry k = la * Isometry(j.gluings[e]) * lb.inverse();
    if (!k.preserves_orientation()) {
      k = Isometry::reflection(axis(local[static_cast<std::size_t>(a.pants)].boundary(a.slot))) * k;
    }
    gluings.push_back(k.to_moebius());
  }
  out.rho = glue(pd, fn, pres, std::move(local), std::move(gluings));
  return out;
}

double max_generator_commutator(const SurfaceRep& rep) {
  double worst = 0.0;
  const auto& g = rep.generators;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t k = i + 1; k < g.size(); ++k) {
      const MoebiusTransform c = g[i] * g[k] * g[i].inverse() * g[k].inverse();
      worst = std::max(worst, c.matrix().max_abs_diff(Mat2{}));
    }
  }
  return worst;
}

}  // namespace foldrep
