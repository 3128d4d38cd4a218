#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "autorb/permutation.hpp"

namespace autorb {

/// Disjoint-cycle string with 1-based points; "()" for the identity.
std::string to_cycle_string(const Permutation& p);

/// Parses 1-based disjoint-cycle notation against a fixed degree.
Permutation parse_cycle_string(std::string_view text, unsigned degree);

/// Ingested generator file: a `degree N` header followed by one permutation
/// per non-empty line in 1-based cycle notation. `#` starts a comment line.
struct GeneratorFile {
  unsigned degree = 0;
  std::vector<Permutation> generators;
};

GeneratorFile read_generator_file(std::istream& in);
GeneratorFile read_generator_file(const std::filesystem::path& path);

}  // namespace autorb
