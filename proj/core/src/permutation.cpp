#include "autorb/permutation.hpp"

#include <climits>
#include <numeric>
#include <stdexcept>

namespace autorb {

Permutation::Permutation(unsigned degree) : images_(degree) {
  if (degree == 0) throw std::invalid_argument("permutation degree must be positive");
  for (unsigned i = 0; i < degree; ++i) images_[i] = i;
}

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("permutation degree must be positive");
  std::vector<bool> seen(images_.size(), false);
  for (unsigned v : images_) {
    if (v >= images_.size() || seen[v])
      throw std::invalid_argument("image array is not a bijection");
    seen[v] = true;
  }
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("degree mismatch in compose");
  std::vector<unsigned> images(p.degree());
  for (unsigned i = 0; i < p.degree(); ++i) images[i] = q[p[i]];
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<unsigned> images(p.degree());
  for (unsigned i = 0; i < p.degree(); ++i) images[p[i]] = i;
  return Permutation(std::move(images));
}

unsigned element_order(const Permutation& p) {
  std::vector<bool> visited(p.degree(), false);
  unsigned long long order = 1;
  for (unsigned i = 0; i < p.degree(); ++i) {
    if (visited[i]) continue;
    unsigned len = 0;
    for (unsigned j = i; !visited[j]; j = p[j]) {
      visited[j] = true;
      ++len;
    }
    unsigned long long g = std::gcd<unsigned long long>(order, len);
    if (order / g > ULLONG_MAX / len)
      throw std::overflow_error("element order overflow");
    order = order / g * len;
  }
  if (order > UINT_MAX) throw std::overflow_error("element order overflow");
  return static_cast<unsigned>(order);
}

unsigned smallest_moved_point(const Permutation& p) {
  for (unsigned i = 0; i < p.degree(); ++i)
    if (p[i] != i) return i;
  return p.degree();
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  // FNV-1a over the image array
  std::size_t h = 14695981039346656037ull;
  for (unsigned v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace autorb
