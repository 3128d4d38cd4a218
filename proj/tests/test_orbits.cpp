#include <doctest.h>

#include <algorithm>

#include "autorb/catalog.hpp"
#include "autorb/errors.hpp"
#include "autorb/exhaustive.hpp"
#include "autorb/harness.hpp"
#include "autorb/orbits.hpp"
#include "test_support.hpp"

using namespace autorb;

namespace {

ElementTable table_of(const PermutationGroup& g) { return ElementTable::enumerate(g, 5000); }

std::vector<std::size_t> sorted_orbit_sizes(const OrbitPartition& p) {
  std::vector<std::size_t> sizes = p.orbit_sizes();
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

TEST_CASE("invariant profiles") {
  ElementTable sym3 = table_of(symmetric(3));
  ConjugacyPartition classes = conjugacy_classes(sym3);
  InvariantProfile identity = invariant_profile(sym3, classes, 0);
  CHECK(identity.element_order == 1);
  CHECK(identity.class_size == 1);
  CHECK(identity.power_class_sizes.empty());

  InvariantProfile transposition = invariant_profile(sym3, classes, 1);
  CHECK(transposition.element_order == 2);
  CHECK(transposition.class_size == 3);
  CHECK(transposition.power_class_sizes == std::vector<std::uint32_t>{1});

  ElementTable q8 = table_of(quaternion8());
  ConjugacyPartition q8_classes = conjugacy_classes(q8);
  std::uint32_t unit = 2;  // first element of order 4
  REQUIRE(q8.element_order(unit) == 4);
  InvariantProfile quaternion_unit = invariant_profile(q8, q8_classes, unit);
  CHECK(quaternion_unit.class_size == 2);
  CHECK(quaternion_unit.power_class_sizes == std::vector<std::uint32_t>{1, 1});
}

TEST_CASE("generating sequences are pinned and greedy-minimal") {
  ElementTable c5 = table_of(cyclic(5));
  GeneratingSequence from_identity = generating_sequence_from(c5, 0);
  CHECK(from_identity.indices == std::vector<std::uint32_t>{0, 1});

  ElementTable d4 = table_of(heisenberg(2, 1));
  SubgroupHandle d4_center = center(d4);
  for (std::uint32_t g = 0; g < d4.size(); ++g) {
    GeneratingSequence seq = generating_sequence_from(d4, g);
    CHECK(seq.indices.front() == g);
    // the group is 2-generated; pinning a non-central first element costs at
    // most one extra generator
    if (!d4_center.contains(g)) CHECK(seq.indices.size() <= 3);
    CHECK(subgroup_closure(d4, seq.indices).size() == d4.size());
    // no proper prefix generates
    std::vector<std::uint32_t> prefix(seq.indices.begin(), seq.indices.end() - 1);
    if (!prefix.empty())
      CHECK(subgroup_closure(d4, prefix).size() < d4.size());
  }

  ElementTable alt5 = table_of(alternating(5));
  std::uint32_t five_cycle = 0;
  for (std::uint32_t i = 0; i < alt5.size(); ++i)
    if (alt5.element_order(i) == 5) {
      five_cycle = i;
      break;
    }
  CHECK(generating_sequence_from(alt5, five_cycle).indices.size() == 2);
}

TEST_CASE("witness search finds inner automorphisms") {
  ElementTable sym3 = table_of(symmetric(3));
  // elements 1..3 are the transpositions
  auto witness = find_automorphism_mapping(sym3, 1, 2);
  REQUIRE(witness.has_value());
  CHECK(witness->mapping[1] == 2);
  CHECK(witness->mapping[0] == 0);
  CHECK(test::holds_homomorphism_identity(sym3, witness->mapping));
}

TEST_CASE("profile mismatch short-circuits to none") {
  ElementTable q8 = table_of(quaternion8());
  std::uint32_t minus_one = 1;  // unique element of order 2
  std::uint32_t unit = 2;
  REQUIRE(q8.element_order(minus_one) == 2);
  REQUIRE(q8.element_order(unit) == 4);
  CHECK_FALSE(find_automorphism_mapping(q8, unit, minus_one).has_value());
}

TEST_CASE("the two 5-cycle classes of Alt(5) fuse under an outer witness") {
  ElementTable alt5 = table_of(alternating(5));
  ConjugacyPartition classes = conjugacy_classes(alt5);
  std::uint32_t first = 0, second = 0;
  for (std::uint32_t i = 0; i < alt5.size() && second == 0; ++i) {
    if (alt5.element_order(i) != 5) continue;
    if (first == 0) first = i;
    else if (classes.class_id[i] != classes.class_id[first]) second = i;
  }
  REQUIRE(first != 0);
  REQUIRE(second != 0);
  auto witness = find_automorphism_mapping(alt5, first, second);
  REQUIRE(witness.has_value());
  CHECK(witness->mapping[first] == second);
  CHECK(test::holds_homomorphism_identity(alt5, witness->mapping));
}

TEST_CASE("witnesses above order 64 hold on sampled pairs") {
  ElementTable t = table_of(psl2(7));
  ConjugacyPartition classes = conjugacy_classes(t);
  std::uint32_t a = 0, b = 0;
  for (std::uint32_t i = 0; i < t.size() && b == 0; ++i) {
    if (t.element_order(i) != 7) continue;
    if (a == 0) a = i;
    else if (classes.class_id[i] != classes.class_id[a]) b = i;
  }
  REQUIRE(b != 0);
  auto witness = find_automorphism_mapping(t, a, b);
  REQUIRE(witness.has_value());
  CHECK(witness->mapping[a] == b);
  CHECK(test::holds_homomorphism_identity(t, witness->mapping));
}

TEST_CASE("verified separation in C4 x C2") {
  // order-2 elements split into the square class {x^2} and the rest
  ElementTable t = table_of(direct_product(cyclic(4), cyclic(2)));
  ConjugacyPartition classes = conjugacy_classes(t);
  std::vector<std::uint32_t> involutions;
  for (std::uint32_t i = 0; i < t.size(); ++i)
    if (t.element_order(i) == 2) involutions.push_back(i);
  REQUIRE(involutions.size() == 3);

  OrbitPartition p = automorphism_orbits(t);
  CHECK(p.class_count == 4);
  InvariantProfile a = invariant_profile(t, classes, involutions[0]);
  InvariantProfile b = invariant_profile(t, classes, involutions[1]);
  CHECK(a == b);  // the profile cannot split them; only the search can
}

TEST_CASE("budget exhaustion throws instead of claiming separation") {
  ElementTable t = table_of(psl2(7));
  SearchLimits tight;
  tight.node_budget = 1;
  ConjugacyPartition classes = conjugacy_classes(t);
  std::uint32_t a = 0, b = 0;
  for (std::uint32_t i = 0; i < t.size() && b == 0; ++i) {
    if (t.element_order(i) != 7) continue;
    if (a == 0) a = i;
    else if (classes.class_id[i] != classes.class_id[a]) b = i;
  }
  REQUIRE(b != 0);
  CHECK_THROWS_AS(find_automorphism_mapping(t, a, b, tight), BudgetExceededError);
}

TEST_CASE("orbit partitions of known groups") {
  CHECK(automorphism_orbits(table_of(elementary_abelian(2, 3))).class_count == 2);
  CHECK(automorphism_orbits(table_of(alternating(5))).class_count == 4);

  OrbitPartition d4 = automorphism_orbits(table_of(heisenberg(2, 1)));
  CHECK(d4.class_count == 4);
  CHECK(sorted_orbit_sizes(d4) == std::vector<std::size_t>{1, 1, 2, 4});

  OrbitPartition heis = automorphism_orbits(table_of(heisenberg(3, 1)));
  CHECK(heis.class_count == 3);
  CHECK(sorted_orbit_sizes(heis) == std::vector<std::size_t>{1, 2, 24});
}

TEST_CASE("omega of catalog examples") {
  CHECK(omega(table_of(symmetric(3))) == 3);
  CHECK(omega(table_of(heisenberg(3, 1))) == 3);
  CHECK(omega(table_of(quaternion8())) == 3);
  CHECK(omega(table_of(direct_product(alternating(5), elementary_abelian(2, 1)))) == 8);
  CHECK(omega(table_of(direct_product(symmetric(3), elementary_abelian(2, 1)))) == 5);
  CHECK(omega(table_of(psl2(7))) == 5);
}

TEST_CASE("identity is always a singleton orbit") {
  for (const char* spec : {"C(12)", "Q8", "Sym(4)", "PSL(2,5)", "Heis(2,2)"}) {
    OrbitPartition p = automorphism_orbits(ElementTable::enumerate(realize(parse_spec(spec)), 5000));
    CAPTURE(spec);
    CHECK(p.root[0] == 0);
    CHECK(p.orbit_sizes()[0] == 1);
  }
}

TEST_CASE("orbit partition equals the exhaustive reference at order <= 32") {
  for (const std::string& spec_text : catalog_roster()) {
    GroupSpec spec = parse_spec(spec_text);
    if (spec.order() > 32) continue;
    ElementTable t = ElementTable::enumerate(realize(spec), 5000);
    CAPTURE(spec_text);
    CHECK(automorphism_orbits(t).root == exhaustive_orbit_partition(t).root);
  }
}

TEST_CASE("exhaustive reference automorphism counts") {
  CHECK(exhaustive_automorphisms(table_of(symmetric(3))).size() == 6);
  CHECK(exhaustive_automorphisms(table_of(quaternion8())).size() == 24);
  CHECK(exhaustive_automorphisms(table_of(elementary_abelian(2, 3))).size() == 168);
  CHECK(exhaustive_automorphisms(table_of(cyclic(8))).size() == 4);
}

TEST_CASE("orbits refine profiles and coarsen conjugacy") {
  for (const char* spec : {"Sym(4)", "SL(2,5)", "Heis(2,2)", "PSL(2,7)"}) {
    ElementTable t = ElementTable::enumerate(realize(parse_spec(spec)), 5000);
    ConjugacyPartition classes = conjugacy_classes(t);
    OrbitPartition p = automorphism_orbits(t);
    CAPTURE(spec);
    CHECK(p.class_count <= classes.class_count());
    for (std::uint32_t i = 0; i < t.size(); ++i) {
      // conjugate elements share an orbit
      CHECK(p.root[i] == p.root[classes.representatives[classes.class_id[i]]]);
      // orbit-mates share a profile
      CHECK(invariant_profile(t, classes, i) ==
            invariant_profile(t, classes, p.root[i]));
    }
  }
}

TEST_CASE("worker count does not change the sealed partition") {
  for (const char* spec : {"SL(2,5)", "PSL(2,9)", "Heis(2,2)", "C(4) x C(2)"}) {
    ElementTable t = ElementTable::enumerate(realize(parse_spec(spec)), 5000);
    SearchLimits serial;
    SearchLimits parallel;
    parallel.workers = 4;
    CAPTURE(spec);
    CHECK(automorphism_orbits(t, serial).root == automorphism_orbits(t, parallel).root);
  }
}

TEST_CASE("characteristic subgroup detection") {
  ElementTable sym3 = table_of(symmetric(3));
  OrbitPartition p3 = automorphism_orbits(sym3);
  CHECK(is_characteristic(sym3, derived_subgroup(sym3), p3));
  CHECK(is_characteristic(sym3, center(sym3), p3));

  // D4 has two Klein subgroups swapped by an outer automorphism
  ElementTable d4 = table_of(heisenberg(2, 1));
  OrbitPartition p4 = automorphism_orbits(d4);
  CHECK(is_characteristic(d4, center(d4), p4));
  std::uint32_t reflection = 0;
  SubgroupHandle z = center(d4);
  for (std::uint32_t i = 0; i < d4.size(); ++i)
    if (d4.element_order(i) == 2 && !z.contains(i)) {
      reflection = i;
      break;
    }
  REQUIRE(reflection != 0);
  std::vector<std::uint32_t> seed{reflection, z.members[1]};
  SubgroupHandle klein = subgroup_closure(d4, seed);
  REQUIRE(klein.size() == 4);
  CHECK_FALSE(is_characteristic(d4, klein, p4));
}

TEST_CASE("capacity errors from the orbit computations") {
  ElementTable t = table_of(symmetric(4));
  SearchLimits tiny;
  tiny.max_order = 10;
  CHECK_THROWS_AS(automorphism_orbits(t, tiny), CapacityError);
  CHECK_THROWS_AS(omega(t, tiny), CapacityError);
  CHECK_THROWS_AS(find_automorphism_mapping(t, 1, 2, tiny), CapacityError);
}
