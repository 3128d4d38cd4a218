#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "autorb/catalog.hpp"
#include "autorb/harness.hpp"
#include "autorb/structure.hpp"

using namespace autorb;

namespace {

ElementTable table_of(const PermutationGroup& g) { return ElementTable::enumerate(g, 5000); }

std::vector<std::uint32_t> sorted_class_sizes(const ConjugacyPartition& c) {
  std::vector<std::uint32_t> sizes = c.class_sizes;
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

TEST_CASE("conjugacy classes of small groups") {
  CHECK(sorted_class_sizes(conjugacy_classes(table_of(symmetric(3)))) ==
        std::vector<std::uint32_t>{1, 2, 3});
  CHECK(sorted_class_sizes(conjugacy_classes(table_of(alternating(5)))) ==
        std::vector<std::uint32_t>{1, 12, 12, 15, 20});
  CHECK(conjugacy_classes(table_of(elementary_abelian(2, 3))).class_count() == 8);
}

TEST_CASE("conjugacy satisfies orbit-stabilizer counting") {
  for (const char* spec : {"Sym(4)", "Q8", "Heis(3,1)", "PSL(2,7)", "SL(2,5)"}) {
    ElementTable t = ElementTable::enumerate(realize(parse_spec(spec)), 5000);
    ConjugacyPartition classes = conjugacy_classes(t);
    CAPTURE(spec);
    CHECK(std::accumulate(classes.class_sizes.begin(), classes.class_sizes.end(), 0u) ==
          t.size());
    CHECK(classes.class_id[0] == 0);
    CHECK(classes.class_sizes[0] == 1);
    for (std::uint32_t g = 0; g < t.size(); ++g) {
      std::size_t centralizer_order = centralizer(t, g).size();
      CHECK(classes.size_of_class_of(g) * centralizer_order == t.size());
    }
  }
}

TEST_CASE("centralizer basics") {
  ElementTable sym3 = table_of(symmetric(3));
  CHECK(centralizer(sym3, 0).size() == 6);
  std::uint32_t transposition = 1;  // first non-identity element has order 2
  REQUIRE(sym3.element_order(transposition) == 2);
  CHECK(centralizer(sym3, transposition).size() == 2);

  ElementTable heis = table_of(heisenberg(3, 1));
  SubgroupHandle z = center(heis);
  REQUIRE(z.size() == 3);
  for (std::uint32_t m : z.members) CHECK(centralizer(heis, m).size() == 27);
  CHECK_THROWS_AS(centralizer(sym3, 100), std::out_of_range);
}

TEST_CASE("center of known groups") {
  CHECK(center(table_of(alternating(5))).size() == 1);
  CHECK(center(table_of(heisenberg(2, 1))).size() == 2);
  CHECK(center(table_of(sl2(5))).size() == 2);
  ElementTable abelian = table_of(cyclic(12));
  CHECK(center(abelian).size() == 12);
}

TEST_CASE("derived subgroups") {
  CHECK(derived_subgroup(table_of(symmetric(3))).size() == 3);
  CHECK(derived_subgroup(table_of(alternating(5))).size() == 60);  // perfect
  for (auto [p, n] : {std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{2u, 2u}}) {
    ElementTable t = table_of(heisenberg(p, n));
    SubgroupHandle derived = derived_subgroup(t);
    SubgroupHandle z = center(t);
    CAPTURE(p);
    CAPTURE(n);
    CHECK(derived.size() == p);
    CHECK(derived.members == z.members);
  }
}

TEST_CASE("derived subgroup and center are normal") {
  for (const char* spec : {"Sym(4)", "D(5)", "SL(2,5)", "Heis(2,2)"}) {
    ElementTable t = ElementTable::enumerate(realize(parse_spec(spec)), 5000);
    CAPTURE(spec);
    for (const SubgroupHandle& sub : {derived_subgroup(t), center(t)}) {
      for (std::uint32_t m : sub.members)
        for (std::uint32_t h = 0; h < t.size(); ++h)
          CHECK(sub.contains(t.conjugate(m, h)));
    }
  }
}

TEST_CASE("Lagrange across the roster") {
  for (const std::string& spec_text : catalog_roster()) {
    GroupSpec spec = parse_spec(spec_text);
    if (spec.order() > 700) continue;
    ElementTable t = ElementTable::enumerate(realize(spec), 5000);
    CAPTURE(spec_text);
    CHECK(t.size() % derived_subgroup(t).size() == 0);
    CHECK(t.size() % center(t).size() == 0);
    if (t.size() > 1) {
      std::vector<std::uint32_t> seed{1};
      CHECK(t.size() % subgroup_closure(t, seed).size() == 0);
    }
  }
}

TEST_CASE("central series shapes") {
  std::vector<SubgroupHandle> heis_upper = upper_central_series(table_of(heisenberg(3, 1)));
  REQUIRE(heis_upper.size() == 3);
  CHECK(heis_upper[0].size() == 1);
  CHECK(heis_upper[1].size() == 3);
  CHECK(heis_upper[2].size() == 27);

  std::vector<SubgroupHandle> alt5_upper = upper_central_series(table_of(alternating(5)));
  CHECK(alt5_upper.size() == 1);  // stalls at the trivial subgroup

  std::vector<SubgroupHandle> abelian_upper = upper_central_series(table_of(cyclic(6)));
  REQUIRE(abelian_upper.size() == 2);
  CHECK(abelian_upper[1].size() == 6);

  std::vector<SubgroupHandle> heis_lower = lower_central_series(table_of(heisenberg(3, 1)));
  REQUIRE(heis_lower.size() == 3);
  CHECK(heis_lower[0].size() == 27);
  CHECK(heis_lower[1].size() == 3);
  CHECK(heis_lower[2].size() == 1);
}

TEST_CASE("upper and lower central series have equal length for nilpotent groups") {
  for (const char* spec : {"Heis(2,1)", "Heis(2,2)", "Heis(3,1)", "C(8)", "Q8", "EA(3,2)"}) {
    ElementTable t = ElementTable::enumerate(realize(parse_spec(spec)), 5000);
    CAPTURE(spec);
    REQUIRE(nilpotency_class(t).has_value());
    CHECK(upper_central_series(t).size() == lower_central_series(t).size());
  }
}

TEST_CASE("solubility and nilpotency") {
  CHECK(is_soluble(table_of(symmetric(3))));
  CHECK_FALSE(nilpotency_class(table_of(symmetric(3))).has_value());
  CHECK(nilpotency_class(table_of(heisenberg(2, 2))) == 2);
  CHECK_FALSE(is_soluble(table_of(alternating(5))));
  CHECK(nilpotency_class(table_of(cyclic(1))) == 0);
  CHECK(is_soluble(table_of(cyclic(1))));
  CHECK_FALSE(is_soluble(table_of(asl2_4())));
}

TEST_CASE("exponent and spectrum") {
  ElementTable alt5 = table_of(alternating(5));
  std::vector<std::uint32_t> everything(alt5.size());
  std::iota(everything.begin(), everything.end(), 0);
  CHECK(spectrum(alt5, everything) == std::vector<unsigned>{1, 2, 3, 5});
  CHECK(exponent(alt5) == 30);

  CHECK(exponent(table_of(elementary_abelian(5, 1))) == 5);
  CHECK(exponent(table_of(elementary_abelian(2, 4))) == 2);
  CHECK(exponent(table_of(heisenberg(2, 1))) == 4);
  CHECK(exponent(table_of(heisenberg(3, 1))) == 3);

  ElementTable sym3 = table_of(symmetric(3));
  SubgroupHandle derived = derived_subgroup(sym3);
  CHECK(spectrum(sym3, derived.members) == std::vector<unsigned>{1, 3});
}

TEST_CASE("simplicity") {
  CHECK(is_simple(table_of(alternating(5))));
  CHECK_FALSE(is_simple(table_of(symmetric(3))));
  CHECK(is_simple(table_of(psl2(7))));
  CHECK_FALSE(is_simple(table_of(sl2(5))));
  CHECK(is_simple(table_of(cyclic(5))));
  CHECK_THROWS_AS(is_simple(table_of(cyclic(1))), std::invalid_argument);
}

TEST_CASE("elementary abelian recognition") {
  CHECK(is_elementary_abelian(table_of(elementary_abelian(3, 2))));
  CHECK(is_elementary_abelian(table_of(cyclic(2))));
  CHECK_FALSE(is_elementary_abelian(table_of(cyclic(4))));
  CHECK_FALSE(is_elementary_abelian(table_of(heisenberg(3, 1))));  // exponent 3 but non-abelian
  CHECK_FALSE(is_elementary_abelian(table_of(cyclic(1))));
}

TEST_CASE("subgroup closure") {
  ElementTable sym3 = table_of(symmetric(3));
  CHECK(subgroup_closure(sym3, {}).size() == 1);
  std::vector<std::uint32_t> transposition{1};
  CHECK(subgroup_closure(sym3, transposition).size() == 2);

  ElementTable sym5 = ElementTable::enumerate(symmetric(5), 5000);
  // the 5-cycles inside the Sym(5) table generate Alt(5)
  std::vector<std::uint32_t> five_cycles;
  for (std::uint32_t i = 0; i < sym5.size(); ++i)
    if (sym5.element_order(i) == 5) five_cycles.push_back(i);
  REQUIRE(five_cycles.size() == 24);
  CHECK(subgroup_closure(sym5, five_cycles).size() == 60);
}
