#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace autorb {

/// A bijection of {0..degree-1}, stored as its image array.
class Permutation {
 public:
  /// Identity on `degree` points.
  explicit Permutation(unsigned degree);
  /// Takes ownership of an image array; validates that it is a bijection.
  explicit Permutation(std::vector<unsigned> images);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  unsigned operator[](unsigned point) const { return images_[point]; }
  const std::vector<unsigned>& images() const { return images_; }
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<unsigned> images_;
};

/// compose(p, q) applies p first, then q.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

/// Order as the lcm of cycle lengths.
unsigned element_order(const Permutation& p);

/// Smallest point with p[point] != point; degree() for the identity.
unsigned smallest_moved_point(const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

}  // namespace autorb
