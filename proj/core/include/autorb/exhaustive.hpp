#pragma once

#include <cstdint>
#include <vector>

#include "autorb/element_table.hpp"
#include "autorb/orbits.hpp"

namespace autorb {

/// Brute-force reference path: enumerates every automorphism of a small group
/// by trying all generator-image tuples with full consistency checking and no
/// invariant-based pruning. Exponential in general; intended for groups small
/// enough that the answer can anchor the search-based implementation.
std::vector<std::vector<std::uint32_t>> exhaustive_automorphisms(const ElementTable& table);

/// Orbit partition obtained by fusing under every automorphism found above.
OrbitPartition exhaustive_orbit_partition(const ElementTable& table);

}  // namespace autorb
