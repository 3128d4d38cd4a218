#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "autorb/element_table.hpp"

namespace autorb {

/// Subgroup of a table-presented group, stored as sorted element indices.
struct SubgroupHandle {
  std::vector<std::uint32_t> members;  // sorted, always contains 0
  std::size_t parent_order = 0;

  std::size_t size() const { return members.size(); }
  bool contains(std::uint32_t index) const;
  bool is_whole_group() const { return members.size() == parent_order; }
};

/// Partition of a table into conjugacy classes. representatives[c] is the
/// smallest element index in class c; classes are numbered by representative.
struct ConjugacyPartition {
  std::vector<std::uint32_t> class_id;
  std::vector<std::uint32_t> class_sizes;
  std::vector<std::uint32_t> representatives;

  std::size_t class_count() const { return representatives.size(); }
  std::uint32_t size_of_class_of(std::uint32_t element) const {
    return class_sizes[class_id[element]];
  }
};

ConjugacyPartition conjugacy_classes(const ElementTable& table);

SubgroupHandle centralizer(const ElementTable& table, std::uint32_t g);
SubgroupHandle center(const ElementTable& table);
SubgroupHandle derived_subgroup(const ElementTable& table);

/// Smallest subgroup containing the seed indices.
SubgroupHandle subgroup_closure(const ElementTable& table,
                                std::span<const std::uint32_t> seed);

/// Ascending chain 1 = Z0 <= Z1 <= ... until it stabilizes.
std::vector<SubgroupHandle> upper_central_series(const ElementTable& table);
/// Descending chain G = g1 >= g2 >= ... until it stabilizes.
std::vector<SubgroupHandle> lower_central_series(const ElementTable& table);

bool is_abelian(const ElementTable& table);
bool is_soluble(const ElementTable& table);
/// Nilpotency class, or nullopt when the lower central series stalls above 1.
std::optional<unsigned> nilpotency_class(const ElementTable& table);

unsigned exponent(const ElementTable& table);
/// Sorted set of element orders occurring in the subset.
std::vector<unsigned> spectrum(const ElementTable& table,
                               std::span<const std::uint32_t> subset);

/// Requires order > 1.
bool is_simple(const ElementTable& table);
/// Abelian of prime exponent; false for the trivial group.
bool is_elementary_abelian(const ElementTable& table);

}  // namespace autorb
