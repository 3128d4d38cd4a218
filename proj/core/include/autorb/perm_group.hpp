#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "autorb/permutation.hpp"

namespace autorb {

/// Permutation group backed by a base and strong generating set, built with
/// a deterministic Schreier-Sims procedure. Immutable after construction and
/// safe to share across threads.
class PermutationGroup {
 public:
  /// gens must be non-empty and of uniform degree.
  explicit PermutationGroup(std::vector<Permutation> gens);

  unsigned degree() const { return degree_; }
  unsigned long long order() const { return order_; }
  bool contains(const Permutation& p) const;

  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& strong_generators() const { return strong_generators_; }
  const std::vector<unsigned>& base() const { return base_; }
  const std::vector<std::size_t>& fundamental_orbit_lengths() const { return orbit_lengths_; }

 private:
  struct Level {
    unsigned base_point = 0;
    std::vector<Permutation> gens;         // strong generators first used here
    std::vector<unsigned> orbit;           // BFS order, orbit[0] == base_point
    std::vector<int> position;             // point -> orbit index, -1 if absent
    std::vector<Permutation> transversal;  // aligned with orbit
    std::vector<Permutation> transversal_inv;
  };

  // Returns the remainder and the level at which sifting stopped
  // (levels_.size() when the whole chain was traversed).
  std::pair<Permutation, std::size_t> sift(Permutation p, std::size_t from) const;

  void place_remainder(Permutation rem, std::size_t level);
  void rebuild_orbit(std::size_t level);
  void close_chain();

  unsigned degree_ = 0;
  unsigned long long order_ = 1;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  std::vector<Permutation> strong_generators_;
  std::vector<unsigned> base_;
  std::vector<std::size_t> orbit_lengths_;
};

}  // namespace autorb
