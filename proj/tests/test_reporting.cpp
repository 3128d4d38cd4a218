#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "autorb/catalog.hpp"
#include "autorb/orbits.hpp"
#include "autorb/reporting.hpp"
#include "autorb/structure.hpp"

using namespace autorb;

namespace {

GroupReport report_for(const std::string& spec_text) {
  ElementTable t = ElementTable::enumerate(realize(parse_spec(spec_text)), 5000);
  ConjugacyPartition classes = conjugacy_classes(t);
  OrbitPartition partition = automorphism_orbits(t);
  return make_group_report(spec_text, t, classes, partition);
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const char* name)
      : path(std::filesystem::temp_directory_path() / name) {
    std::filesystem::remove(path);
  }
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("orbit rows are sorted by order, size, representative") {
  GroupReport sym3 = report_for("Sym(3)");
  REQUIRE(sym3.rows.size() == 3);
  CHECK(sym3.rows[0].rep == "()");
  CHECK(sym3.rows[0].size == 1);
  CHECK(sym3.rows[1].size == 3);
  CHECK(sym3.rows[1].element_order == 2);
  CHECK(sym3.rows[2].size == 2);
  CHECK(sym3.rows[2].element_order == 3);

  GroupReport heis = report_for("Heis(3,1)");
  REQUIRE(heis.rows.size() == 3);
  CHECK(heis.rows[0].size == 1);
  CHECK(heis.rows[1].size == 2);
  CHECK(heis.rows[2].size == 24);
}

TEST_CASE("group report json schema") {
  nlohmann::ordered_json json = group_report_json(report_for("Q8"));
  CHECK(json["group"] == "Q8");
  CHECK(json["order"] == 8);
  CHECK(json["omega"] == 3);
  REQUIRE(json["orbits"].size() == 3);
  const nlohmann::ordered_json& row = json["orbits"][0];
  auto it = row.begin();
  CHECK(it.key() == "rep");
  ++it;
  CHECK(it.key() == "size");
  ++it;
  CHECK(it.key() == "element_order");
  ++it;
  CHECK(it.key() == "class_size");
}

TEST_CASE("result cache round trips and honors versions") {
  TempFile tmp("autorb-test-cache.json");
  GroupReport original = report_for("Alt(5)");
  {
    ResultCache cache(tmp.path);
    CHECK_FALSE(cache.lookup("Alt(5)").has_value());
    cache.store("Alt(5)", original);
    cache.save();
  }
  {
    ResultCache cache(tmp.path);
    auto hit = cache.lookup("Alt(5)");
    REQUIRE(hit.has_value());
    CHECK(hit->omega == original.omega);
    CHECK(hit->order == original.order);
    REQUIRE(hit->rows.size() == original.rows.size());
    for (std::size_t i = 0; i < hit->rows.size(); ++i) {
      CHECK(hit->rows[i].rep == original.rows[i].rep);
      CHECK(hit->rows[i].size == original.rows[i].size);
    }
    CHECK(group_report_json(*hit) == group_report_json(original));
  }

  // a stale version is a miss
  {
    std::ifstream in(tmp.path);
    nlohmann::ordered_json raw = nlohmann::ordered_json::parse(in);
    raw["Alt(5)"]["tool_version"] = "0.0.0";
    std::ofstream out(tmp.path);
    out << raw.dump(2);
  }
  {
    ResultCache cache(tmp.path);
    CHECK_FALSE(cache.lookup("Alt(5)").has_value());
  }
}
