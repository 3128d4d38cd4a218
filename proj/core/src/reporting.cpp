#include "autorb/reporting.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "autorb/perm_io.hpp"
#include "autorb/version.hpp"

namespace autorb {

GroupReport make_group_report(const std::string& label, const ElementTable& table,
                              const ConjugacyPartition& classes,
                              const OrbitPartition& partition) {
  GroupReport report;
  report.group = label;
  report.order = table.size();
  report.omega = partition.class_count;

  std::vector<std::size_t> sizes = partition.orbit_sizes();
  for (std::size_t i = 0; i < partition.representatives.size(); ++i) {
    std::uint32_t rep = partition.representatives[i];
    OrbitRow row;
    row.rep = to_cycle_string(table.element(rep));
    row.size = sizes[i];
    row.element_order = table.element_order(rep);
    row.class_size = classes.size_of_class_of(rep);
    report.rows.push_back(std::move(row));
  }

  // representatives are ascending, so index order breaks the remaining ties
  std::vector<std::size_t> idx(report.rows.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const OrbitRow& ra = report.rows[a];
    const OrbitRow& rb = report.rows[b];
    if (ra.element_order != rb.element_order) return ra.element_order < rb.element_order;
    return ra.size < rb.size;
  });
  std::vector<OrbitRow> sorted;
  sorted.reserve(report.rows.size());
  for (std::size_t i : idx) sorted.push_back(std::move(report.rows[i]));
  report.rows = std::move(sorted);
  return report;
}

nlohmann::ordered_json group_report_json(const GroupReport& report) {
  nlohmann::ordered_json out;
  out["group"] = report.group;
  out["order"] = report.order;
  out["omega"] = report.omega;
  out["orbits"] = nlohmann::ordered_json::array();
  for (const OrbitRow& row : report.rows) {
    nlohmann::ordered_json r;
    r["rep"] = row.rep;
    r["size"] = row.size;
    r["element_order"] = row.element_order;
    r["class_size"] = row.class_size;
    out["orbits"].push_back(std::move(r));
  }
  return out;
}

std::string group_report_table(const GroupReport& report) {
  std::size_t rep_width = 3;
  for (const OrbitRow& row : report.rows) rep_width = std::max(rep_width, row.rep.size());

  std::ostringstream out;
  out << "group: " << report.group << '\n';
  out << "order: " << report.order << '\n';
  out << "omega: " << report.omega << '\n';
  out << std::left << std::setw(static_cast<int>(rep_width + 2)) << "rep"
      << std::setw(8) << "size" << std::setw(15) << "element_order"
      << "class_size" << '\n';
  for (const OrbitRow& row : report.rows) {
    out << std::left << std::setw(static_cast<int>(rep_width + 2)) << row.rep
        << std::setw(8) << row.size << std::setw(15) << row.element_order
        << row.class_size << '\n';
  }
  return out.str();
}

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {
  entries_ = nlohmann::ordered_json::object();
  std::ifstream in(path_);
  if (!in) return;
  nlohmann::ordered_json parsed = nlohmann::ordered_json::parse(in, nullptr, false);
  if (parsed.is_object()) entries_ = std::move(parsed);
}

std::optional<GroupReport> ResultCache::lookup(const std::string& canonical_spec) const {
  auto it = entries_.find(canonical_spec);
  if (it == entries_.end()) return std::nullopt;
  const nlohmann::ordered_json& entry = *it;
  if (!entry.is_object() || entry.value("tool_version", "") != kVersion) return std::nullopt;
  if (!entry.contains("orbit_summary")) return std::nullopt;

  const nlohmann::ordered_json& summary = entry["orbit_summary"];
  GroupReport report;
  report.group = summary.value("group", canonical_spec);
  report.order = summary.value("order", std::size_t{0});
  report.omega = entry.value("omega", std::size_t{0});
  for (const auto& r : summary.value("orbits", nlohmann::ordered_json::array())) {
    OrbitRow row;
    row.rep = r.value("rep", "");
    row.size = r.value("size", std::size_t{0});
    row.element_order = r.value("element_order", 1u);
    row.class_size = r.value("class_size", std::size_t{0});
    report.rows.push_back(std::move(row));
  }
  return report;
}

void ResultCache::store(const std::string& canonical_spec, const GroupReport& report) {
  nlohmann::ordered_json entry;
  entry["omega"] = report.omega;
  entry["orbit_summary"] = group_report_json(report);
  entry["tool_version"] = kVersion;
  entries_[canonical_spec] = std::move(entry);
}

void ResultCache::save() const {
  std::ofstream out(path_);
  if (!out) throw std::runtime_error("cannot write cache file: " + path_.string());
  out << entries_.dump(2) << '\n';
}

}  // namespace autorb
