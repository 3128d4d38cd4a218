#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "autorb/perm_group.hpp"

namespace autorb {

/// Exhaustive indexed listing of a small group. Index 0 is the identity and
/// elements are ordered by (element order, image array), so indices are
/// stable across runs. Immutable after construction.
class ElementTable {
 public:
  static constexpr std::size_t kDefaultCap = 5000;

  /// Throws CapacityError when order(group) > cap.
  static ElementTable enumerate(const PermutationGroup& group,
                                std::size_t cap = kDefaultCap);

  std::size_t size() const { return elements_.size(); }
  unsigned degree() const { return elements_.front().degree(); }

  const Permutation& element(std::uint32_t i) const { return elements_[i]; }
  std::uint32_t mul(std::uint32_t i, std::uint32_t j) const {
    return mul_[static_cast<std::size_t>(i) * elements_.size() + j];
  }
  std::uint32_t inv(std::uint32_t i) const { return inv_[i]; }
  unsigned element_order(std::uint32_t i) const { return orders_[i]; }

  std::optional<std::uint32_t> index_of(const Permutation& p) const;

  /// h^{-1} g h
  std::uint32_t conjugate(std::uint32_t g, std::uint32_t h) const {
    return mul(mul(inv(h), g), h);
  }
  /// g^{-1} h^{-1} g h
  std::uint32_t commutator(std::uint32_t g, std::uint32_t h) const {
    return mul(mul(mul(inv(g), inv(h)), g), h);
  }
  std::uint32_t power(std::uint32_t g, unsigned e) const;

 private:
  ElementTable() = default;

  std::vector<Permutation> elements_;
  std::vector<unsigned> orders_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> inv_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
};

}  // namespace autorb
