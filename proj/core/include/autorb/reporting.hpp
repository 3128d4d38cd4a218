#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "autorb/element_table.hpp"
#include "autorb/orbits.hpp"
#include "autorb/structure.hpp"

namespace autorb {

struct OrbitRow {
  std::string rep;  // 1-based cycle notation
  std::size_t size = 0;
  unsigned element_order = 1;
  std::size_t class_size = 1;
};

/// Per-group result: order, omega, and one row per orbit sorted by
/// (element order, orbit size, representative index).
struct GroupReport {
  std::string group;
  std::size_t order = 0;
  std::size_t omega = 0;
  std::vector<OrbitRow> rows;
};

GroupReport make_group_report(const std::string& label, const ElementTable& table,
                              const ConjugacyPartition& classes,
                              const OrbitPartition& partition);

nlohmann::ordered_json group_report_json(const GroupReport& report);
std::string group_report_table(const GroupReport& report);

/// Single-file JSON cache mapping canonical specs to group reports. Entries
/// written by a different tool version are ignored and overwritten.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path path);

  std::optional<GroupReport> lookup(const std::string& canonical_spec) const;
  void store(const std::string& canonical_spec, const GroupReport& report);
  void save() const;

 private:
  std::filesystem::path path_;
  nlohmann::ordered_json entries_;
};

}  // namespace autorb
