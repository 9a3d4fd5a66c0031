#include "foldrep/surface.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "foldrep/error.hpp"
#include "foldrep/univcover.hpp"

namespace foldrep {

namespace {

// z -> -1/z; swaps the ends of the imaginary axis.
const MoebiusTransform kSwap(0.0, 1.0, -1.0, 0.0);

Word substitute(const Word& w, int symbol, const Word& replacement) {
  const Word inv = replacement.inverse();
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (generator_of(l) == symbol) {
      const Word& r = is_inverted(l) ? inv : replacement;
      out.insert(out.end(), r.begin(), r.end());
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out)).freely_reduced();
}

// Replaces every generator by its image word.
Word rewrite(const Word& w, const std::vector<Word>& images) {
  std::vector<Letter> out;
  for (Letter l : w) {
    const Word& r = images[static_cast<std::size_t>(generator_of(l))];
    if (is_inverted(l)) {
      const Word ri = r.inverse();
      out.insert(out.end(), ri.begin(), ri.end());
    } else {
      out.insert(out.end(), r.begin(), r.end());
    }
  }
  return Word(std::move(out)).freely_reduced();
}

int occurrences(const Word& w, int symbol) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [symbol](Letter l) { return generator_of(l) == symbol; }));
}

Word renumbered(const Word& w, const std::vector<int>& index) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back(make_letter(index[static_cast<std::size_t>(generator_of(l))], is_inverted(l)));
  return Word(std::move(out));
}

bool is_rotation(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  for (std::size_t s = 0; s < std::max<std::size_t>(n, 1); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = a[(s + i) % n] == b[i];
    if (ok) return true;
  }
  return false;
}

double distance_to_identity(const MoebiusTransform& g) { return g.matrix().max_abs_diff(Mat2{}); }

// Sum of cosh d(p, g p) over the generators; convex in p.
double spread(const std::vector<MoebiusTransform>& gens, double x, double s) {
  const HPoint p(x, std::exp(s));
  double total = 0.0;
  for (const auto& g : gens) {
    const HPoint q = apply(g, p);
    total += 1.0 + ((p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y)) / (2.0 * p.y * q.y);
  }
  return total;
}

// Isometry taking i to a point that is moved little by every generator, so
// that conjugated matrices have small entries and long products keep their
// precision.
MoebiusTransform balancing_frame(const std::vector<MoebiusTransform>& gens) {
  double x = 0.0, s = 0.0, step = 1.0;
  double f = spread(gens, x, s);
  constexpr double h = 1e-6;
  for (int it = 0; it < 500 && step > 1e-10; ++it) {
    const double gx = (spread(gens, x + h, s) - spread(gens, x - h, s)) / (2 * h);
    const double gs = (spread(gens, x, s + h) - spread(gens, x, s - h)) / (2 * h);
    const double norm = std::hypot(gx, gs);
    if (norm < 1e-12) break;
    // Metric gradient: the x direction is scaled by y^2.
    const double y = std::exp(s);
    const double dx = -gx * y * y, ds = -gs;
    const double dn = std::hypot(dx / y, ds);
    const double nx = x + step * dx / dn, ns = s + step * ds / dn;
    const double nf = spread(gens, nx, ns);
    if (nf < f) {
      x = nx;
      s = ns;
      f = nf;
      step *= 1.5;
    } else {
      step *= 0.5;
    }
  }
  const double r = std::exp(0.5 * s);
  return MoebiusTransform(r, x / r, 0.0, 1.0 / r);
}

}  // namespace

int validate_decomposition(const PantsDecomposition& pd) {
  const int n = pd.pantsCount;
  if (n < 2 || n % 2 != 0) {
    throw Error(ErrorKind::BadCount, "need an even number (at least 2) of pants, got " + std::to_string(n));
  }
  std::vector<int> uses(static_cast<std::size_t>(3 * n), 0);
  for (std::size_t e = 0; e < pd.cuffs.size(); ++e) {
    for (const CuffEnd& end : {pd.cuffs[e].first, pd.cuffs[e].second}) {
      if (end.pants < 0 || end.pants >= n || end.slot < 0 || end.slot > 2) {
        throw Error(ErrorKind::BadIndex, "cuff " + std::to_string(e) + " refers to a missing slot");
      }
      ++uses[static_cast<std::size_t>(3 * end.pants + end.slot)];
    }
  }
  for (int i = 0; i < 3 * n; ++i) {
    if (uses[static_cast<std::size_t>(i)] != 1) {
      throw Error(ErrorKind::UnmatchedSlot, "slot " + std::to_string(i % 3) + " of pants " + std::to_string(i / 3) +
                                                " is used " + std::to_string(uses[static_cast<std::size_t>(i)]) +
                                                " times");
    }
  }
  const int genus = (n + 2) / 2;
  if (static_cast<int>(pd.cuffs.size()) != 3 * genus - 3) {
    throw Error(ErrorKind::BadCount, "cuff count does not match pants count");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const int p = queue.front();
    queue.pop_front();
    for (const Cuff& c : pd.cuffs) {
      for (auto [a, b] : {std::pair{c.first, c.second}, std::pair{c.second, c.first}}) {
        if (a.pants == p && !seen[static_cast<std::size_t>(b.pants)]) {
          seen[static_cast<std::size_t>(b.pants)] = true;
          queue.push_back(b.pants);
        }
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error(ErrorKind::Disconnected, "adjacency graph of the pants is not connected");
  }
  return genus;
}

BoundaryLengths pants_lengths(const PantsDecomposition& pd, const FNCoordinates& fn, int pants) {
  double l[3] = {0.0, 0.0, 0.0};
  for (std::size_t e = 0; e < pd.cuffs.size(); ++e) {
    for (const CuffEnd& end : {pd.cuffs[e].first, pd.cuffs[e].second}) {
      if (end.pants == pants) l[end.slot] = fn.lengths.at(e);
    }
  }
  return {l[0], l[1], l[2]};
}

Presentation raw_presentation(const PantsDecomposition& pd) {
  Presentation pres;
  pres.genus = validate_decomposition(pd);
  const int np = pd.pantsCount;
  const int nc = static_cast<int>(pd.cuffs.size());

  pres.nearEnd.resize(static_cast<std::size_t>(nc));
  pres.farEnd.resize(static_cast<std::size_t>(nc));
  pres.isTree.assign(static_cast<std::size_t>(nc), false);
  std::vector<bool> assigned(static_cast<std::size_t>(nc), false);
  std::vector<bool> seen(static_cast<std::size_t>(np), false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const int p = queue.front();
    queue.pop_front();
    for (int e = 0; e < nc; ++e) {
      const Cuff& c = pd.cuffs[static_cast<std::size_t>(e)];
      for (auto [a, b] : {std::pair{c.first, c.second}, std::pair{c.second, c.first}}) {
        if (assigned[static_cast<std::size_t>(e)] || a.pants != p || seen[static_cast<std::size_t>(b.pants)]) continue;
        assigned[static_cast<std::size_t>(e)] = true;
        pres.isTree[static_cast<std::size_t>(e)] = true;
        pres.nearEnd[static_cast<std::size_t>(e)] = a;
        pres.farEnd[static_cast<std::size_t>(e)] = b;
        seen[static_cast<std::size_t>(b.pants)] = true;
        queue.push_back(b.pants);
      }
    }
  }

  // Symbols: 2p, 2p+1 for α_p, β_p; then one letter per non-tree cuff.
  std::vector<int> letterOf(static_cast<std::size_t>(nc), -1);
  int symbols = 2 * np;
  for (int e = 0; e < nc; ++e) {
    if (pres.isTree[static_cast<std::size_t>(e)]) continue;
    pres.nearEnd[static_cast<std::size_t>(e)] = pd.cuffs[static_cast<std::size_t>(e)].first;
    pres.farEnd[static_cast<std::size_t>(e)] = pd.cuffs[static_cast<std::size_t>(e)].second;
    letterOf[static_cast<std::size_t>(e)] = symbols++;
  }
  auto boundary = [](CuffEnd end) {
    const Letter a = make_letter(2 * end.pants), b = make_letter(2 * end.pants + 1);
    if (end.slot == 0) return Word{a};
    if (end.slot == 1) return Word{b};
    return Word{inverse_letter(b), inverse_letter(a)};
  };

  std::vector<Word> relations;
  for (int e = 0; e < nc; ++e) {
    const Word x = boundary(pres.nearEnd[static_cast<std::size_t>(e)]);
    const Word y = boundary(pres.farEnd[static_cast<std::size_t>(e)]);
    if (pres.isTree[static_cast<std::size_t>(e)]) {
      relations.push_back(x * y);
    } else {
      const Word t = Word::generator(letterOf[static_cast<std::size_t>(e)]);
      relations.push_back(t.inverse() * x.inverse() * t * y.inverse());
    }
  }

  std::vector<Word> definition;
  for (int s = 0; s < symbols; ++s) definition.push_back(Word::generator(s));
  std::vector<bool> eliminated(static_cast<std::size_t>(symbols), false);

  // Prefer eliminating pants symbols from the far end of the tree.
  std::vector<int> preference;
  for (int s = 2 * np - 1; s >= 0; --s) preference.push_back(s);
  for (int s = symbols - 1; s >= 2 * np; --s) preference.push_back(s);

  while (relations.size() > 1) {
    int symbol = -1;
    std::size_t rel = 0;
    for (int s : preference) {
      if (eliminated[static_cast<std::size_t>(s)]) continue;
      for (std::size_t r = 0; r < relations.size(); ++r) {
        if (occurrences(relations[r], s) == 1) {
          symbol = s;
          rel = r;
          break;
        }
      }
      if (symbol >= 0) break;
    }
    if (symbol < 0) throw Error(ErrorKind::PresentationMismatch, "Tietze reduction got stuck");

    const Word& r = relations[rel];
    const auto pos = static_cast<std::size_t>(
        std::find_if(r.begin(), r.end(), [symbol](Letter l) { return generator_of(l) == symbol; }) - r.begin());
    const Word u(std::vector<Letter>(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos)));
    const Word v(std::vector<Letter>(r.begin() + static_cast<std::ptrdiff_t>(pos) + 1, r.end()));
    // r = u s v  =>  s = u^-1 v^-1;  r = u s^-1 v  =>  s = v u.
    const Word replacement = is_inverted(r[pos]) ? v * u : u.inverse() * v.inverse();

    relations.erase(relations.begin() + static_cast<std::ptrdiff_t>(rel));
    for (Word& w : relations) w = substitute(w, symbol, replacement);
    for (Word& w : definition) w = substitute(w, symbol, replacement);
    eliminated[static_cast<std::size_t>(symbol)] = true;
  }

  std::vector<int> index(static_cast<std::size_t>(symbols), -1);
  for (int s = 0; s < symbols; ++s) {
    if (eliminated[static_cast<std::size_t>(s)]) continue;
    index[static_cast<std::size_t>(s)] = pres.numGenerators++;
    Presentation::Source src;
    if (s < 2 * np) {
      src.pants = s / 2;
      src.slot = s % 2;
    } else {
      src.isLetter = true;
      src.cuff = static_cast<int>(std::find(letterOf.begin(), letterOf.end(), s) - letterOf.begin());
    }
    pres.rawSources.push_back(src);
    pres.generatorWords.push_back(Word::generator(index[static_cast<std::size_t>(s)]));
    pres.rawWords.push_back(Word::generator(index[static_cast<std::size_t>(s)]));
  }
  if (pres.numGenerators != 2 * pres.genus) {
    throw Error(ErrorKind::PresentationMismatch, "reduction left " + std::to_string(pres.numGenerators) +
                                                     " generators, expected " + std::to_string(2 * pres.genus));
  }
  pres.relator = renumbered(relations.front().cyclically_reduced(), index);

  auto expand = [&](const Word& w) {
    Word out = w;
    for (int s = 0; s < symbols; ++s) {
      if (eliminated[static_cast<std::size_t>(s)]) out = substitute(out, s, definition[static_cast<std::size_t>(s)]);
    }
    return renumbered(out, index);
  };
  for (int p = 0; p < np; ++p) {
    pres.boundaryWords.push_back({expand(boundary({p, 0})), expand(boundary({p, 1})), expand(boundary({p, 2}))});
  }
  for (int e = 0; e < nc; ++e) {
    const CuffEnd near = pres.nearEnd[static_cast<std::size_t>(e)];
    pres.cuffWords.push_back(pres.boundaryWords[static_cast<std::size_t>(near.pants)][static_cast<std::size_t>(near.slot)]);
  }
  return pres;
}

MoebiusTransform seam_frame(const PantsRep& local, int slot) {
  const MoebiusTransform g = local.boundary(slot);
  const MoebiusTransform next = local.boundary((slot + 1) % 3);
  return axis_frame(g, common_perpendicular_foot(axis(g), axis(next)));
}

namespace {

using LD = long double;

// Matrix products along the gluing tree lose digits in double precision once
// frames sit far from the basepoint; they are carried in extended precision
// and rounded once at the end.
struct MatL {
  LD a = 1, b = 0, c = 0, d = 1;

  static MatL of(const Mat2& m) { return {m.a, m.b, m.c, m.d}; }
  MatL operator*(const MatL& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  MatL inverse() const {
    const LD k = 1 / (a * d - b * c);
    return {d * k, -b * k, -c * k, a * k};
  }
};

MoebiusTransform rounded(const MatL& m) {
  const LD s = 1 / std::sqrt(m.a * m.d - m.b * m.c);
  LD a = m.a * s, b = m.b * s, c = m.c * s, d = m.d * s;
  const auto tr = static_cast<double>(a + d);
  if (std::abs(tr) <= kTraceZeroTol) return MoebiusTransform(Mat2{double(a), double(b), double(c), double(d)});
  if (tr < 0) {
    a = -a;
    b = -b;
    c = -c;
    d = -d;
  }
  return MoebiusTransform::from_canonical({double(a), double(b), double(c), double(d)});
}

std::vector<MatL> place_frames(const PantsDecomposition& pd, const Presentation& pres,
                               const std::vector<MoebiusTransform>& gluings, const MatL& root) {
  const auto np = static_cast<std::size_t>(pd.pantsCount);
  std::vector<MatL> frame(np);
  std::vector<bool> placed(np, false);
  frame[0] = root;
  placed[0] = true;
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t e = 0; e < pd.cuffs.size(); ++e) {
      if (!pres.isTree[e]) continue;
      const auto near = static_cast<std::size_t>(pres.nearEnd[e].pants);
      const auto far = static_cast<std::size_t>(pres.farEnd[e].pants);
      if (placed[near] && !placed[far]) {
        frame[far] = frame[near] * MatL::of(gluings[e].matrix());
        placed[far] = true;
        progress = true;
      }
    }
  }
  return frame;
}

std::vector<MatL> raw_images(const Presentation& pres, const std::vector<PantsRep>& local,
                             const std::vector<MoebiusTransform>& gluings, const std::vector<MatL>& frame) {
  std::vector<MatL> out;
  for (const auto& src : pres.rawSources) {
    if (src.isLetter) {
      const auto e = static_cast<std::size_t>(src.cuff);
      const MatL& mn = frame[static_cast<std::size_t>(pres.nearEnd[e].pants)];
      const MatL& mf = frame[static_cast<std::size_t>(pres.farEnd[e].pants)];
      out.push_back(mn * MatL::of(gluings[e].matrix()) * mf.inverse());
    } else {
      const MatL& m = frame[static_cast<std::size_t>(src.pants)];
      out.push_back(m * MatL::of(local[static_cast<std::size_t>(src.pants)].boundary(src.slot).matrix()) * m.inverse());
    }
  }
  return out;
}

std::vector<MatL> final_images(const Presentation& pres, const std::vector<MatL>& raw) {
  std::vector<MatL> out;
  for (const Word& w : pres.generatorWords) {
    MatL acc;
    for (Letter l : w) {
      const MatL& g = raw[static_cast<std::size_t>(generator_of(l))];
      acc = acc * (is_inverted(l) ? g.inverse() : g);
    }
    out.push_back(acc);
  }
  return out;
}

std::pair<std::vector<PantsRep>, std::vector<MoebiusTransform>> fuchsian_pieces(const PantsDecomposition& pd,
                                                                                const Presentation& pres,
                                                                                const FNCoordinates& fn) {
  std::vector<PantsRep> local;
  for (int p = 0; p < pd.pantsCount; ++p) {
    const PantsRep nf = build_pants_rep(pants_lengths(pd, fn, p), -1);
    const auto b = nf.boundaries();
    local.push_back(nf.conjugated(balancing_frame({b.begin(), b.end()}).inverse()));
  }
  std::vector<MoebiusTransform> gluings;
  for (std::size_t e = 0; e < pd.cuffs.size(); ++e) {
    const CuffEnd a = pres.nearEnd[e], b = pres.farEnd[e];
    const MoebiusTransform na = seam_frame(local[static_cast<std::size_t>(a.pants)], a.slot);
    const MoebiusTransform nb = seam_frame(local[static_cast<std::size_t>(b.pants)], b.slot);
    gluings.push_back(na * kSwap * MoebiusTransform::imaginary_translation(fn.twists[e]) * nb.inverse());
  }
  return {std::move(local), std::move(gluings)};
}

double frobenius2(const Mat2& m) { return m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d; }

// Greedy Nielsen reduction on the Fuchsian structure with unit cuffs and no
// twists: replace a generator by its product with another one while that
// shrinks the total squared norm at the balanced basepoint.
void nielsen_reduce(Presentation& pres, const PantsDecomposition& pd) {
  const std::size_t nc = pd.cuffs.size();
  const FNCoordinates ref{std::vector<double>(nc, 1.0), std::vector<double>(nc, 0.0)};
  const auto [local, gluings] = fuchsian_pieces(pd, pres, ref);
  const auto frames = place_frames(pd, pres, gluings, MatL{});
  std::vector<MoebiusTransform> gens;
  for (const MatL& g : raw_images(pres, local, gluings, frames)) gens.push_back(rounded(g));

  auto rebalance = [&gens] {
    const MoebiusTransform b = balancing_frame(gens);
    const MoebiusTransform bi = b.inverse();
    for (auto& g : gens) g = bi * g * b;
  };
  rebalance();
  const std::size_t n = gens.size();
  for (int round = 0; round < 500; ++round) {
    double cost = 0.0;
    for (const auto& g : gens) cost += frobenius2(g.matrix());
    double best = cost * (1.0 - 1e-9);
    std::size_t bi = 0, bj = 0;
    bool inverted = false, left = false, found = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        for (bool inv : {false, true}) {
          const MoebiusTransform h = inv ? gens[j].inverse() : gens[j];
          for (bool onLeft : {false, true}) {
            const MoebiusTransform cand = onLeft ? h * gens[i] : gens[i] * h;
            const double c = cost - frobenius2(gens[i].matrix()) + frobenius2(cand.matrix());
            if (c < best) {
              best = c;
              bi = i;
              bj = j;
              inverted = inv;
              left = onLeft;
              found = true;
            }
          }
        }
      }
    }
    if (!found) break;
    const MoebiusTransform h = inverted ? gens[bj].inverse() : gens[bj];
    gens[bi] = left ? h * gens[bi] : gens[bi] * h;
    const Word hw = inverted ? pres.generatorWords[bj].inverse() : pres.generatorWords[bj];
    pres.generatorWords[bi] = left ? hw * pres.generatorWords[bi] : pres.generatorWords[bi] * hw;
    // Old generator i in terms of the new one.
    const Word hi = Word{make_letter(static_cast<int>(bj), !inverted)};
    const Word gi = Word::generator(static_cast<int>(bi));
    const Word old = left ? hi * gi : gi * hi;
    for (Word& w : pres.rawWords) w = substitute(w, static_cast<int>(bi), old);
    rebalance();
  }

  pres.relator = rewrite(pres.relator, pres.rawWords).cyclically_reduced();
  for (auto& words : pres.boundaryWords) {
    for (Word& w : words) w = rewrite(w, pres.rawWords);
  }
  for (Word& w : pres.cuffWords) w = rewrite(w, pres.rawWords);
}

}  // namespace

Presentation build_presentation(const PantsDecomposition& pd) {
  Presentation pres = raw_presentation(pd);
  nielsen_reduce(pres, pd);
  return pres;
}

SurfaceRep glue(const PantsDecomposition& pd, const FNCoordinates& fn, const Presentation& pres,
                std::vector<PantsRep> localPants, std::vector<MoebiusTransform> gluings) {
  SurfaceRep rep;
  rep.decomposition = pd;
  rep.coordinates = fn;
  rep.presentation = pres;
  rep.localPants = std::move(localPants);
  rep.gluings = std::move(gluings);

  auto frames = place_frames(pd, pres, rep.gluings, MatL{});
  std::vector<MoebiusTransform> first;
  for (const MatL& g : final_images(pres, raw_images(pres, rep.localPants, rep.gluings, frames))) {
    first.push_back(rounded(g));
  }
  // Recompute with the basepoint moved to where the generators are balanced.
  frames = place_frames(pd, pres, rep.gluings, MatL::of(balancing_frame(first).inverse().matrix()));
  for (const MatL& g : final_images(pres, raw_images(pres, rep.localPants, rep.gluings, frames))) {
    rep.generators.push_back(rounded(g));
  }
  for (std::size_t p = 0; p < frames.size(); ++p) {
    const MatL& m = frames[p];
    const MatL mi = m.inverse();
    rep.pants.push_back({rounded(m * MatL::of(rep.localPants[p].alpha.matrix()) * mi),
                         rounded(m * MatL::of(rep.localPants[p].beta.matrix()) * mi)});
  }

  const double residue = relation_residue(rep);
  if (!(residue <= kRelationTol)) {
    throw Error(ErrorKind::RelatorViolated, "assembled relations deviate by " + format_deviation(residue));
  }
  return rep;
}

double relation_residue(const SurfaceRep& rep) {
  const Presentation& pres = rep.presentation;
  double worst = distance_to_identity(evaluate_word(rep, pres.relator));
  for (std::size_t p = 0; p < rep.pants.size(); ++p) {
    for (int s = 0; s < 3; ++s) {
      const MoebiusTransform w = evaluate_word(rep, pres.boundaryWords[p][static_cast<std::size_t>(s)]);
      const MoebiusTransform b = rep.pants[p].boundary(s);
      // Far pants carry large entries; compare them at their own scale.
      const double scale = std::max({1.0, std::abs(b.a()), std::abs(b.b()), std::abs(b.c()), std::abs(b.d())});
      worst = std::max(worst, w.distance_to(b) / scale);
    }
  }
  for (std::size_t e = 0; e < pres.cuffWords.size(); ++e) {
    if (!pres.isTree[e]) continue;
    const CuffEnd a = pres.nearEnd[e], b = pres.farEnd[e];
    const MoebiusTransform x = rep.pants[static_cast<std::size_t>(a.pants)].boundary(a.slot);
    const MoebiusTransform y = rep.pants[static_cast<std::size_t>(b.pants)].boundary(b.slot);
    worst = std::max(worst, distance_to_identity(x * y));
  }
  return worst;
}

SurfaceRep assemble_fuchsian(const PantsDecomposition& pd, const FNCoordinates& fn) {
  const Presentation pres = build_presentation(pd);
  if (fn.lengths.size() != pd.cuffs.size() || fn.twists.size() != pd.cuffs.size()) {
    throw Error(ErrorKind::InvalidInput, "need one length and one twist per cuff");
  }
  for (std::size_t e = 0; e < fn.lengths.size(); ++e) {
    if (!(fn.lengths[e] > 0.0) || !std::isfinite(fn.lengths[e])) {
      throw Error(ErrorKind::NonPositiveLength, "cuff " + std::to_string(e) + " has length " + std::to_string(fn.lengths[e]));
    }
    if (!std::isfinite(fn.twists[e])) throw Error(ErrorKind::InvalidInput, "cuff " + std::to_string(e) + " twist is not finite");
  }
  auto [local, gluings] = fuchsian_pieces(pd, pres, fn);
  return glue(pd, fn, pres, std::move(local), std::move(gluings));
}

MoebiusTransform evaluate_word(const SurfaceRep& rep, const Word& w) { return evaluate(rep.generators, w); }

int euler_class_surface(const SurfaceRep& rep) {
  int total = 0;
  for (const PantsRep& p : rep.pants) total += euler_class_pants(p);
  return total;
}

int euler_class_presentation(const SurfaceRep& rep) {
  return euler_class_relator(rep.generators, rep.presentation.relator);
}

SurfaceRep twist_cuff(const SurfaceRep& rep, int cuff, double amount) {
  if (cuff < 0 || cuff >= static_cast<int>(rep.decomposition.cuffs.size())) {
    throw Error(ErrorKind::BadIndex, "no cuff " + std::to_string(cuff));
  }
  if (rep.gluings.empty()) throw Error(ErrorKind::InvalidInput, "representation carries no gluing data");
  const auto e = static_cast<std::size_t>(cuff);
  const CuffEnd far = rep.presentation.farEnd[e];
  const MoebiusTransform g = rep.localPants[static_cast<std::size_t>(far.pants)].boundary(far.slot);
  if (classify(g) != IsometryClass::Hyperbolic) {
    throw Error(ErrorKind::NotHyperbolicCuff, "cuff " + std::to_string(cuff) + " holonomy is not hyperbolic");
  }
  if (amount == 0.0) return rep;
  std::vector<MoebiusTransform> gluings = rep.gluings;
  gluings[e] = gluings[e] * translation_along(g, amount);
  FNCoordinates fn = rep.coordinates;
  fn.twists[e] += amount;
  return glue(rep.decomposition, fn, rep.presentation, rep.localPants, std::move(gluings));
}

std::array<Word, 4> standard_genus2_words(const Presentation& pres) {
  if (pres.genus != 2 || pres.numGenerators != 4) {
    throw Error(ErrorKind::PresentationMismatch, "standard generators need a genus-2 presentation");
  }
  // Generators x0, x1, t1, t2 of the theta reduction.
  std::array<Word, 4> words = {Word::parse("d"), Word::parse("A"), Word::parse("AdC"), Word::parse("B")};
  for (Word& w : words) w = rewrite(w, pres.rawWords);
  Word product;
  const Word rel = surface_relator(2);
  for (Letter l : rel) {
    const Word& w = words[static_cast<std::size_t>(generator_of(l))];
    product = product * (is_inverted(l) ? w.inverse() : w);
  }
  if (!is_rotation(product.cyclically_reduced(), pres.relator)) {
    throw Error(ErrorKind::PresentationMismatch, "presentation is not the two-pants reduction");
  }
  return words;
}

std::vector<MoebiusTransform> standard_genus2_generators(const SurfaceRep& rep) {
  std::vector<MoebiusTransform> out;
  for (const Word& w : standard_genus2_words(rep.presentation)) out.push_back(evaluate_word(rep, w));
  return out;
}

}  // namespace foldrep
