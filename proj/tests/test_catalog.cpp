#include <doctest.h>

#include <algorithm>

#include "autorb/catalog.hpp"
#include "autorb/errors.hpp"
#include "autorb/gf.hpp"
#include "autorb/orbits.hpp"
#include "autorb/structure.hpp"
#include "test_support.hpp"

using namespace autorb;

namespace {

ElementTable table_of(const PermutationGroup& g) { return ElementTable::enumerate(g, 5000); }

std::vector<std::uint32_t> sorted_class_sizes(const ElementTable& t) {
  ConjugacyPartition c = conjugacy_classes(t);
  std::vector<std::uint32_t> sizes = c.class_sizes;
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

TEST_CASE("constructor orders match closed forms") {
  CHECK(cyclic(1).order() == 1);
  CHECK(cyclic(7).order() == 7);
  CHECK(elementary_abelian(2, 4).order() == 16);
  CHECK(dihedral(4).order() == 8);
  CHECK(quaternion8().order() == 8);
  CHECK(symmetric(6).order() == 720);
  CHECK(alternating(5).order() == 60);
  CHECK(alternating(2).order() == 1);
  CHECK(psl2(4).order() == 60);
  CHECK(psl2(5).order() == 60);
  CHECK(psl2(7).order() == 168);
  CHECK(psl2(8).order() == 504);
  CHECK(psl2(9).order() == 360);
  CHECK(psl2(11).order() == 660);
  CHECK(sl2(4).order() == 60);
  CHECK(sl2(5).order() == 120);
  CHECK(asl2_4().order() == 960);
  CHECK(heisenberg(2, 1).order() == 8);
  CHECK(heisenberg(3, 1).order() == 27);
  CHECK(heisenberg(2, 2).order() == 32);
  CHECK(heisenberg(5, 1).order() == 125);
}

TEST_CASE("constructor parameter validation") {
  CHECK_THROWS_AS(cyclic(0), UnsupportedParameterError);
  CHECK_THROWS_AS(elementary_abelian(4, 2), UnsupportedParameterError);
  CHECK_THROWS_AS(dihedral(2), UnsupportedParameterError);
  CHECK_THROWS_AS(psl2(6), UnsupportedParameterError);
  CHECK_THROWS_AS(sl2(7), UnsupportedParameterError);
  CHECK_THROWS_AS(heisenberg(6, 1), UnsupportedParameterError);
  CHECK_THROWS_AS(heisenberg(3, 4, 5000), CapacityError);  // 3^9 = 19683
}

TEST_CASE("heisenberg groups satisfy the defining relations") {
  for (auto [p, n] : {std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{2u, 2u},
                      std::pair{5u, 1u}}) {
    PermutationGroup g = heisenberg(p, n);
    ElementTable t = table_of(g);
    CAPTURE(p);
    CAPTURE(n);

    std::vector<std::uint32_t> a(n), b(n);
    for (unsigned i = 0; i < n; ++i) {
      a[i] = *t.index_of(g.generators()[i]);
      b[i] = *t.index_of(g.generators()[n + i]);
    }
    std::uint32_t c = t.commutator(a[0], b[0]);
    CHECK(c != 0);
    CHECK(t.power(c, p) == 0);
    for (unsigned i = 0; i < n; ++i) {
      CHECK(t.commutator(a[i], c) == 0);
      CHECK(t.commutator(b[i], c) == 0);
      CHECK(t.commutator(a[i], b[i]) == c);
      for (unsigned j = 0; j < n; ++j) {
        if (i != j) {
          CHECK(t.commutator(a[i], b[j]) == 0);
          CHECK(t.commutator(a[i], a[j]) == 0);
          CHECK(t.commutator(b[i], b[j]) == 0);
        }
      }
    }
    SubgroupHandle z = center(t);
    CHECK(z.size() == p);
    CHECK(derived_subgroup(t).members == z.members);
  }
}

TEST_CASE("heisenberg(2,1) is the dihedral group of order 8") {
  ElementTable heis = table_of(heisenberg(2, 1));
  ElementTable d4 = table_of(dihedral(4));
  CHECK(heis.size() == d4.size());
  CHECK(exponent(heis) == 4);
  CHECK(exponent(d4) == 4);
  CHECK(sorted_class_sizes(heis) == sorted_class_sizes(d4));
  CHECK(omega(heis) == omega(d4));
}

TEST_CASE("psl2(5) and alt(5) agree on invariants") {
  ElementTable a = table_of(psl2(5));
  ElementTable b = table_of(alternating(5));
  CHECK(a.size() == b.size());
  CHECK(sorted_class_sizes(a) == sorted_class_sizes(b));
  std::vector<std::uint32_t> all_a(a.size()), all_b(b.size());
  for (std::uint32_t i = 0; i < a.size(); ++i) all_a[i] = i;
  for (std::uint32_t i = 0; i < b.size(); ++i) all_b[i] = i;
  CHECK(spectrum(a, all_a) == spectrum(b, all_b));
  CHECK(omega(a) == omega(b));
}

TEST_CASE("asl2(4) structure") {
  PermutationGroup g = asl2_4();
  ElementTable t = table_of(g);
  CHECK(t.size() == 960);
  // point stabilizer of the zero vector is the SL(2,4) complement
  std::size_t stabilizer = 0;
  for (std::uint32_t i = 0; i < t.size(); ++i)
    if (t.element(i)[0] == 0) ++stabilizer;
  CHECK(stabilizer == 60);
  CHECK_FALSE(is_soluble(t));
}

TEST_CASE("direct products multiply orders and centers") {
  PermutationGroup s3c2 = direct_product(symmetric(3), cyclic(2));
  CHECK(s3c2.order() == 12);
  CHECK(s3c2.degree() == 5);

  for (auto [a, b] : {std::pair{symmetric(3), cyclic(4)},
                      std::pair{quaternion8(), cyclic(3)},
                      std::pair{dihedral(4), elementary_abelian(2, 2)}}) {
    PermutationGroup product = direct_product(a, b);
    CHECK(product.order() == a.order() * b.order());
    std::size_t za = center(table_of(a)).size();
    std::size_t zb = center(table_of(b)).size();
    CHECK(center(table_of(product)).size() == za * zb);
  }
}

TEST_CASE("field tables satisfy the field axioms") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u}) {
    const GaloisField& f = GaloisField::of(q);
    CAPTURE(q);
    for (unsigned a = 0; a < q; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.mul(a, 0) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (unsigned b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (unsigned c = 0; c < q; ++c) {
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
          CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
        }
      }
    }
  }
}

TEST_CASE("primitive elements have full multiplicative order") {
  for (unsigned q : {4u, 8u, 9u, 11u}) {
    const GaloisField& f = GaloisField::of(q);
    unsigned g = f.primitive_element();
    CAPTURE(q);
    unsigned x = g;
    unsigned order = 1;
    while (x != 1) {
      x = f.mul(x, g);
      ++order;
    }
    CHECK(order == q - 1);
  }
}

TEST_CASE("spec parsing round trips") {
  GroupSpec spec = parse_spec("Alt(5) x EA(2,2)");
  REQUIRE(spec.factors.size() == 2);
  CHECK(spec.factors[0].kind == AtomKind::Alternating);
  CHECK(spec.factors[0].params == std::vector<unsigned>{5});
  CHECK(spec.factors[1].kind == AtomKind::ElementaryAbelian);
  CHECK(spec.canonical() == "Alt(5) x EA(2,2)");
  CHECK(parse_spec(spec.canonical()) == spec);

  CHECK(parse_spec("alt(5)X ea( 2 , 2 )") == spec);
  CHECK(parse_spec("q8").canonical() == "Q8");
  CHECK(parse_spec("heis(3,1) x alt(5)").canonical() == "Heis(3,1) x Alt(5)");
  CHECK(parse_spec("Heis(3,1) x Alt(5)").order() == 1620);
}

TEST_CASE("spec parsing failures") {
  CHECK_THROWS_AS(parse_spec("PSL(2,6)"), UnsupportedParameterError);
  CHECK_THROWS_AS(parse_spec("Foo(3)"), ParseError);
  CHECK_THROWS_AS(parse_spec("C()"), ParseError);
  CHECK_THROWS_AS(parse_spec("C(3) y D(4)"), ParseError);
  CHECK_THROWS_AS(parse_spec(""), ParseError);
  CHECK_THROWS_AS(parse_spec("EA(2)"), ParseError);
  try {
    parse_spec("C(2) x Bogus(1)");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 7);
  }
}

TEST_CASE("realize enforces the order cap up front") {
  CHECK_THROWS_AS(realize(parse_spec("Sym(12)"), 5000), CapacityError);
  CHECK_THROWS_AS(realize(parse_spec("C(200)"), 100), CapacityError);
  CHECK(realize(parse_spec("C(1)")).order() == 1);
  CHECK(realize(parse_spec("Heis(3,1) x Alt(5)")).order() == 1620);
}
