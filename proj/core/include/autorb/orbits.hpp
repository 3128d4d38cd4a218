#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "autorb/element_table.hpp"
#include "autorb/structure.hpp"

namespace autorb {

/// Cheap automorphism invariants of one element: its order, its conjugacy
/// class size, and the class sizes of its proper powers g^d over the divisors
/// d > 1 of its order (ascending). Elements in the same automorphism orbit
/// always share a profile; the converse may fail.
struct InvariantProfile {
  unsigned element_order = 1;
  std::uint32_t class_size = 1;
  std::vector<std::uint32_t> power_class_sizes;

  friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
  friend std::strong_ordering operator<=>(const InvariantProfile&,
                                          const InvariantProfile&) = default;
};

/// Ordered element indices whose closure is the whole group; the first entry
/// is pinned to the element the sequence was grown from, and no proper prefix
/// generates.
struct GeneratingSequence {
  std::vector<std::uint32_t> indices;
};

/// An automorphism as a permutation of table indices.
struct AutomorphismWitness {
  std::vector<std::uint32_t> mapping;
};

/// Sealed partition of table indices into automorphism orbits. root[i] is the
/// smallest index in i's orbit.
struct OrbitPartition {
  std::vector<std::uint32_t> root;
  std::vector<std::uint32_t> representatives;  // sorted
  std::size_t class_count = 0;

  bool same_orbit(std::uint32_t a, std::uint32_t b) const { return root[a] == root[b]; }
  std::uint32_t representative_of(std::uint32_t i) const { return root[i]; }
  std::vector<std::size_t> orbit_sizes() const;  // aligned with representatives
};

struct SearchLimits {
  std::size_t max_order = ElementTable::kDefaultCap;
  unsigned long long node_budget = 100'000'000ull;
  unsigned workers = 1;
};

InvariantProfile invariant_profile(const ElementTable& table,
                                   const ConjugacyPartition& classes,
                                   std::uint32_t g);

GeneratingSequence generating_sequence_from(const ElementTable& table, std::uint32_t g);

/// Searches for an automorphism mapping g to h. Returns nullopt only after an
/// exhaustive search proves no such automorphism exists. Throws
/// BudgetExceededError when the backtracking node budget runs out, so an
/// aborted search is never mistaken for a verified separation.
std::optional<AutomorphismWitness> find_automorphism_mapping(
    const ElementTable& table, std::uint32_t g, std::uint32_t h,
    const SearchLimits& limits = {});
std::optional<AutomorphismWitness> find_automorphism_mapping(
    const ElementTable& table, const ConjugacyPartition& classes, std::uint32_t g,
    std::uint32_t h, const SearchLimits& limits = {});

/// Exact orbit partition of the table under the full automorphism group.
OrbitPartition automorphism_orbits(const ElementTable& table,
                                   const SearchLimits& limits = {});

std::size_t omega(const ElementTable& table, const SearchLimits& limits = {});

/// True iff the subgroup is a union of orbit classes, i.e. fixed setwise by
/// every automorphism.
bool is_characteristic(const ElementTable& table, const SubgroupHandle& subgroup,
                       const OrbitPartition& partition);

}  // namespace autorb
