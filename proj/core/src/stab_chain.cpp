#include "nilbound/stab_chain.hpp"

#include <stdexcept>

namespace nilbound {

StabChain::StabChain(std::size_t degree, std::span<const Point> base_prefix) : degree_(degree) {
  std::vector<bool> used(degree, false);
  for (Point b : base_prefix) {
    if (b >= degree)
      throw std::out_of_range("base point out of range");
    if (used[b])
      throw std::invalid_argument("repeated base point");
    used[b] = true;
    add_level(b);
  }
}

void StabChain::add_level(Point base) {
  Level level;
  level.base = base;
  level.orbit.push_back(base);
  level.transversal.resize(degree_);
  level.transversal_inv.resize(degree_);
  level.transversal[base] = Permutation::identity(degree_);
  level.transversal_inv[base] = Permutation::identity(degree_);
  levels_.push_back(std::move(level));
}

std::pair<Permutation, std::size_t> StabChain::strip(Permutation g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level &level = levels_[i];
    const Point beta = g[level.base];
    if (!level.transversal[beta])
      return {std::move(g), i};
    g = g * *level.transversal_inv[beta];
  }
  return {std::move(g), levels_.size()};
}

bool StabChain::contains(const Permutation &g) const {
  if (g.degree() != degree_)
    return false;
  return strip(g, 0).first.is_identity();
}

void StabChain::extend(const Permutation &g) {
  if (g.degree() != degree_)
    throw std::invalid_argument("degree mismatch");
  extend_at(0, g);
}

void StabChain::extend_at(std::size_t i, const Permutation &g) {
  if (strip(g, i).first.is_identity())
    return;
  if (i == levels_.size())
    add_level(*g.first_moved_point());

  Level &level = levels_[i];
  level.gens.push_back(g);
  const std::size_t old_orbit = level.orbit.size();
  const std::size_t ngens = level.gens.size();

  // Old orbit points were already closed under the old generators, so only
  // the new generator needs to be applied to them.
  for (std::size_t idx = 0; idx < level.orbit.size(); ++idx) {
    const Point beta = level.orbit[idx];
    const std::size_t first_gen = idx < old_orbit ? ngens - 1 : 0;
    for (std::size_t s = first_gen; s < ngens; ++s) {
      const Permutation &gen = level.gens[s];
      const Point gamma = gen[beta];
      Permutation candidate = *level.transversal[beta] * gen;
      if (!level.transversal[gamma]) {
        level.transversal_inv[gamma] = candidate.inverse();
        level.transversal[gamma] = std::move(candidate);
        level.orbit.push_back(gamma);
      } else {
        Permutation schreier = candidate * *level.transversal_inv[gamma];
        if (!schreier.is_identity())
          extend_at(i + 1, schreier);
      }
    }
  }
}

std::vector<Permutation> StabChain::generators(std::size_t level) const {
  if (level >= levels_.size())
    return {};
  return levels_[level].gens;
}

BigInt StabChain::order() const {
  BigInt result = 1;
  for (const Level &level : levels_)
    result *= level.orbit.size();
  return result;
}

void StabChain::for_each_element(const std::function<void(const Permutation &)> &visit) const {
  // g = u_{m-1} ... u_0, built from the deepest level outward.
  std::function<void(std::size_t, const Permutation &)> walk =
      [&](std::size_t level, const Permutation &prefix) {
        if (level == 0) {
          visit(prefix);
          return;
        }
        const Level &l = levels_[level - 1];
        for (Point beta : l.orbit)
          walk(level - 1, prefix * *l.transversal[beta]);
      };
  walk(levels_.size(), Permutation::identity(degree_));
}

} // namespace nilbound
