#include "autorb/exhaustive.hpp"

#include <algorithm>

#include "autorb/structure.hpp"

namespace autorb {

namespace {

constexpr std::uint32_t kFree = 0xffffffffu;

// Standalone partial-map propagation, kept separate from the pair-search
// implementation on purpose. Maps are copied per branch: simple over fast.
struct Partial {
  std::vector<std::uint32_t> image;
  std::vector<std::uint32_t> preimage;
  std::vector<std::uint32_t> defined;
};

bool assign(const ElementTable& t, Partial& p, std::uint32_t x, std::uint32_t y) {
  if (p.image[x] != kFree) return p.image[x] == y;
  if (p.preimage[y] != kFree) return false;
  p.image[x] = y;
  p.preimage[y] = x;
  p.defined.push_back(x);
  std::size_t from = p.defined.size() - 1;
  for (std::size_t q = from; q < p.defined.size(); ++q) {
    std::uint32_t a = p.defined[q];
    for (std::size_t k = 0; k < p.defined.size(); ++k) {
      std::uint32_t b = p.defined[k];
      std::uint32_t ab = t.mul(a, b);
      std::uint32_t img = t.mul(p.image[a], p.image[b]);
      if (p.image[ab] != kFree) {
        if (p.image[ab] != img) return false;
      } else if (p.preimage[img] != kFree) {
        return false;
      } else {
        p.image[ab] = img;
        p.preimage[img] = ab;
        p.defined.push_back(ab);
      }
      std::uint32_t ba = t.mul(b, a);
      img = t.mul(p.image[b], p.image[a]);
      if (p.image[ba] != kFree) {
        if (p.image[ba] != img) return false;
      } else if (p.preimage[img] != kFree) {
        return false;
      } else {
        p.image[ba] = img;
        p.preimage[img] = ba;
        p.defined.push_back(ba);
      }
    }
  }
  return true;
}

void enumerate(const ElementTable& t, const std::vector<std::uint32_t>& gens,
               std::size_t level, const Partial& state,
               std::vector<std::vector<std::uint32_t>>& found) {
  if (level == gens.size()) {
    if (state.defined.size() == t.size()) found.push_back(state.image);
    return;
  }
  for (std::uint32_t target = 0; target < t.size(); ++target) {
    Partial branch = state;
    if (assign(t, branch, gens[level], target))
      enumerate(t, gens, level + 1, branch, found);
  }
}

}  // namespace

std::vector<std::vector<std::uint32_t>> exhaustive_automorphisms(const ElementTable& table) {
  const std::size_t n = table.size();

  // minimal generating sequence, grown greedily from the smallest indices
  std::vector<std::uint32_t> gens;
  SubgroupHandle closed = subgroup_closure(table, gens);
  while (closed.size() < n) {
    for (std::uint32_t i = 0; i < n; ++i) {
      if (!closed.contains(i)) {
        gens.push_back(i);
        break;
      }
    }
    closed = subgroup_closure(table, gens);
  }

  Partial root;
  root.image.assign(n, kFree);
  root.preimage.assign(n, kFree);
  root.image[0] = 0;
  root.preimage[0] = 0;
  root.defined.push_back(0);

  std::vector<std::vector<std::uint32_t>> found;
  enumerate(table, gens, 0, root, found);
  return found;
}

OrbitPartition exhaustive_orbit_partition(const ElementTable& table) {
  const std::size_t n = table.size();
  std::vector<std::uint32_t> parent(n);
  for (std::uint32_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  };

  for (const std::vector<std::uint32_t>& alpha : exhaustive_automorphisms(table))
    for (std::uint32_t i = 0; i < n; ++i) unite(i, alpha[i]);

  OrbitPartition partition;
  partition.root.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) partition.root[i] = find(i);
  for (std::uint32_t i = 0; i < n; ++i)
    if (partition.root[i] == i) partition.representatives.push_back(i);
  partition.class_count = partition.representatives.size();
  return partition;
}

}  // namespace autorb
