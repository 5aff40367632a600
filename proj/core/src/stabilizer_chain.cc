#include "orbitals/stabilizer_chain.h"

#include <algorithm>
#include <deque>

#include "orbitals/errors.h"

namespace orbitals {

namespace {

using Level = StabilizerChain::Level;

void ComputeOrbit(std::size_t degree, Level& level) {
  level.orbit.clear();
  level.transversal.assign(degree, std::nullopt);
  level.transversal[level.base_point - 1] = Permutation::Identity(degree);
  level.orbit.push_back(level.base_point);
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    const Point x = level.orbit[head];
    for (const Permutation& s : level.generators) {
      const Point y = s[x];
      if (!level.transversal[y - 1]) {
        level.transversal[y - 1] = *level.transversal[x - 1] * s;
        level.orbit.push_back(y);
      }
    }
  }
}

struct SiftResult {
  Permutation residue;
  // Index of the level where sifting stopped; levels.size() if it passed
  // through every level.
  std::size_t drop_level;
};

SiftResult Sift(const std::vector<Level>& levels, Permutation element,
                std::size_t start) {
  for (std::size_t l = start; l < levels.size(); ++l) {
    const Point image = element[levels[l].base_point];
    const auto& u = levels[l].transversal[image - 1];
    if (!u) return {std::move(element), l};
    element = element * u->Inverse();
  }
  return {std::move(element), levels.size()};
}

bool FixesAll(const Permutation& p, std::span<const Point> points) {
  return std::all_of(points.begin(), points.end(),
                     [&](Point b) { return p.Fixes(b); });
}

}  // namespace

StabilizerChain StabilizerChain::Build(std::size_t degree,
                                       std::span<const Permutation> generators,
                                       std::span<const Point> base_prefix) {
  std::vector<Permutation> strong;
  for (const Permutation& g : generators) {
    if (g.degree() != degree) {
      ThrowDomainError("generator of degree " + std::to_string(g.degree()) +
                       " in a group of degree " + std::to_string(degree));
    }
    if (!g.IsIdentity() &&
        std::find(strong.begin(), strong.end(), g) == strong.end()) {
      strong.push_back(g);
    }
  }

  std::vector<Point> base;
  for (Point b : base_prefix) {
    if (b < 1 || b > degree) {
      ThrowDomainError("base point " + std::to_string(b) + " outside 1.." +
                       std::to_string(degree));
    }
    if (std::find(base.begin(), base.end(), b) != base.end()) {
      ThrowDomainError("repeated base point " + std::to_string(b));
    }
    base.push_back(b);
  }
  for (const Permutation& s : strong) {
    if (FixesAll(s, base)) base.push_back(*s.FirstMovedPoint());
  }

  StabilizerChain chain;
  chain.degree_ = degree;
  chain.levels_.resize(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    Level& level = chain.levels_[i];
    level.base_point = base[i];
    for (const Permutation& s : strong) {
      if (FixesAll(s, std::span<const Point>(base).first(i))) {
        level.generators.push_back(s);
      }
    }
    ComputeOrbit(degree, level);
  }

  // Deterministic Schreier-Sims: check every Schreier generator of level i
  // against the chain below it, adding residues as new strong generators.
  std::vector<Level>& levels = chain.levels_;
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    for (std::size_t oi = 0; !extended && oi < levels[i].orbit.size(); ++oi) {
      const Point beta = levels[i].orbit[oi];
      for (std::size_t si = 0; si < levels[i].generators.size(); ++si) {
        const Level& lv = levels[i];
        const Permutation& s = lv.generators[si];
        const Permutation ug = *lv.transversal[beta - 1] * s;
        const Permutation& u_image = *lv.transversal[s[beta] - 1];
        if (ug == u_image) continue;
        SiftResult sifted = Sift(levels, ug * u_image.Inverse(), i + 1);
        const bool passed = sifted.drop_level == levels.size();
        if (passed && sifted.residue.IsIdentity()) continue;

        std::size_t j = sifted.drop_level;
        if (passed) {
          Level fresh;
          fresh.base_point = *sifted.residue.FirstMovedPoint();
          levels.push_back(std::move(fresh));
        }
        for (std::size_t l = i + 1; l <= j; ++l) {
          levels[l].generators.push_back(sifted.residue);
          ComputeOrbit(degree, levels[l]);
        }
        i = static_cast<std::ptrdiff_t>(j);
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }
  return chain;
}

std::vector<Point> StabilizerChain::Base() const {
  std::vector<Point> base;
  base.reserve(levels_.size());
  for (const Level& level : levels_) base.push_back(level.base_point);
  return base;
}

BigInt StabilizerChain::Order() const {
  BigInt order = 1;
  for (const Level& level : levels_) order *= level.orbit.size();
  return order;
}

bool StabilizerChain::Contains(const Permutation& element) const {
  if (element.degree() != degree_) return false;
  SiftResult sifted = Sift(levels_, element, 0);
  return sifted.drop_level == levels_.size() && sifted.residue.IsIdentity();
}

std::vector<Permutation> StabilizerChain::StabilizerGenerators(
    std::size_t i) const {
  if (i >= levels_.size()) return {};
  return levels_[i].generators;
}

}  // namespace orbitals
