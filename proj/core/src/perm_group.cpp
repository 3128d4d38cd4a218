#include "autorb/perm_group.hpp"

#include <climits>
#include <stdexcept>

namespace autorb {

PermutationGroup::PermutationGroup(std::vector<Permutation> gens) {
  if (gens.empty())
    throw std::invalid_argument("generator list must be non-empty");
  degree_ = gens.front().degree();
  for (const Permutation& g : gens)
    if (g.degree() != degree_)
      throw std::invalid_argument("generator degree mismatch");
  generators_ = std::move(gens);

  for (const Permutation& g : generators_) {
    auto [rem, level] = sift(g, 0);
    if (!rem.is_identity()) place_remainder(std::move(rem), level);
  }
  close_chain();

  order_ = 1;
  for (Level& lvl : levels_) {
    base_.push_back(lvl.base_point);
    orbit_lengths_.push_back(lvl.orbit.size());
    // saturate: an order past 2^64-1 is far beyond any enumeration cap anyway
    if (order_ > ULLONG_MAX / lvl.orbit.size())
      order_ = ULLONG_MAX;
    else
      order_ *= lvl.orbit.size();
    for (const Permutation& g : lvl.gens) strong_generators_.push_back(g);
  }
}

std::pair<Permutation, std::size_t> PermutationGroup::sift(Permutation p,
                                                           std::size_t from) const {
  for (std::size_t lvl = from; lvl < levels_.size(); ++lvl) {
    const Level& level = levels_[lvl];
    unsigned image = p[level.base_point];
    int pos = level.position[image];
    if (pos < 0) return {std::move(p), lvl};
    p = compose(p, level.transversal_inv[static_cast<std::size_t>(pos)]);
  }
  return {std::move(p), levels_.size()};
}

void PermutationGroup::place_remainder(Permutation rem, std::size_t level) {
  if (level == levels_.size()) {
    Level fresh;
    fresh.base_point = smallest_moved_point(rem);
    levels_.push_back(std::move(fresh));
  }
  levels_[level].gens.push_back(std::move(rem));
  rebuild_orbit(level);
}

void PermutationGroup::rebuild_orbit(std::size_t level) {
  Level& lvl = levels_[level];
  lvl.orbit.assign(1, lvl.base_point);
  lvl.position.assign(degree_, -1);
  lvl.position[lvl.base_point] = 0;
  lvl.transversal.assign(1, Permutation(degree_));
  lvl.transversal_inv.assign(1, Permutation(degree_));

  for (std::size_t at = 0; at < lvl.orbit.size(); ++at) {
    unsigned point = lvl.orbit[at];
    // every strong generator stored at this level or deeper fixes the base
    // prefix, so all of them act on this fundamental orbit
    for (std::size_t j = level; j < levels_.size(); ++j) {
      for (const Permutation& g : levels_[j].gens) {
        unsigned image = g[point];
        if (lvl.position[image] >= 0) continue;
        Permutation rep = compose(lvl.transversal[at], g);
        lvl.position[image] = static_cast<int>(lvl.orbit.size());
        lvl.orbit.push_back(image);
        lvl.transversal_inv.push_back(inverse(rep));
        lvl.transversal.push_back(std::move(rep));
      }
    }
  }
}

void PermutationGroup::close_chain() {
  // Repeatedly check every Schreier generator against the rest of the chain;
  // restart after any addition so orbits and transversals stay current. The
  // chain is a strong generating set exactly when a full pass adds nothing.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t lvl = 0; lvl < levels_.size() && !changed; ++lvl) {
      rebuild_orbit(lvl);
      std::vector<Permutation> gens;
      for (std::size_t j = lvl; j < levels_.size(); ++j)
        for (const Permutation& g : levels_[j].gens) gens.push_back(g);

      std::size_t orbit_len = levels_[lvl].orbit.size();
      for (std::size_t at = 0; at < orbit_len && !changed; ++at) {
        for (const Permutation& g : gens) {
          const Level& level = levels_[lvl];
          unsigned image = g[level.orbit[at]];
          int pos = level.position[image];
          if (pos < 0) continue;
          Permutation schreier = compose(compose(level.transversal[at], g),
                                         level.transversal_inv[static_cast<std::size_t>(pos)]);
          if (schreier.is_identity()) continue;
          auto [rem, drop] = sift(std::move(schreier), lvl + 1);
          if (rem.is_identity()) continue;
          place_remainder(std::move(rem), drop);
          changed = true;
          break;
        }
      }
    }
  }
}

bool PermutationGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_)
    throw std::invalid_argument("degree mismatch in membership test");
  auto [rem, level] = sift(p, 0);
  return level == levels_.size() && rem.is_identity();
}

}  // namespace autorb
