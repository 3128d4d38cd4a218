#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "autorb/element_table.hpp"
#include "autorb/perm_group.hpp"

namespace autorb {

PermutationGroup cyclic(unsigned n);
PermutationGroup elementary_abelian(unsigned p, unsigned k);
/// Dihedral group of order 2m acting on m vertices, m >= 3.
PermutationGroup dihedral(unsigned m);
PermutationGroup quaternion8();
PermutationGroup symmetric(unsigned n);
PermutationGroup alternating(unsigned n);

/// Action on the q+1 points of the projective line; q in {4,5,7,8,9,11}.
PermutationGroup psl2(unsigned q);
/// Action on the q^2-1 nonzero vectors of F_q^2; q in {4,5}.
PermutationGroup sl2(unsigned q);
/// Affine group SL(2,F4) acting on the 16 vectors of F4^2; order 960.
PermutationGroup asl2_4();

/// Unitriangular (n+2)x(n+2) matrices over F_p with n-dimensional off-diagonal
/// blocks, in the right-regular representation; order p^(2n+1).
PermutationGroup heisenberg(unsigned p, unsigned n,
                            std::size_t cap = ElementTable::kDefaultCap);

/// Action on the disjoint union of the two domains.
PermutationGroup direct_product(const PermutationGroup& a, const PermutationGroup& b);

enum class AtomKind {
  Cyclic,
  ElementaryAbelian,
  Dihedral,
  Quaternion8,
  Symmetric,
  Alternating,
  Psl2,
  Sl2,
  Asl2,
  Heisenberg,
};

/// Parsed catalog expression: a flat direct product of named atoms.
struct GroupSpec {
  struct Atom {
    AtomKind kind;
    std::vector<unsigned> params;
    friend bool operator==(const Atom&, const Atom&) = default;
  };

  std::vector<Atom> factors;

  std::string canonical() const;
  /// Closed-form group order (saturating at 2^64-1).
  unsigned long long order() const;
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Grammar: spec := atom ( "x" atom )*, atom names case-insensitive.
GroupSpec parse_spec(std::string_view text);

/// Constructs the named group, checking the closed-form order against the cap
/// before building anything.
PermutationGroup realize(const GroupSpec& spec,
                         std::size_t max_order = ElementTable::kDefaultCap);

}  // namespace autorb
