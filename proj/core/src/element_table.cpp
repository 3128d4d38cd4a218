#include "autorb/element_table.hpp"

#include <algorithm>
#include <stdexcept>

#include "autorb/errors.hpp"

namespace autorb {

ElementTable ElementTable::enumerate(const PermutationGroup& group, std::size_t cap) {
  if (group.order() > cap) throw CapacityError(group.order(), cap);
  const std::size_t n = static_cast<std::size_t>(group.order());

  ElementTable table;
  table.elements_.reserve(n);
  table.index_.reserve(n * 2);

  // breadth-first closure from the identity under right multiplication
  table.elements_.emplace_back(group.degree());
  table.index_.emplace(table.elements_.front(), 0);
  for (std::size_t at = 0; at < table.elements_.size(); ++at) {
    for (const Permutation& g : group.generators()) {
      Permutation next = compose(table.elements_[at], g);
      if (table.index_.contains(next)) continue;
      table.index_.emplace(next, 0);
      table.elements_.push_back(std::move(next));
    }
  }
  if (table.elements_.size() != n)
    throw std::logic_error("closure size disagrees with stabilizer chain order");

  std::sort(table.elements_.begin(), table.elements_.end(),
            [](const Permutation& a, const Permutation& b) {
              unsigned oa = autorb::element_order(a);
              unsigned ob = autorb::element_order(b);
              if (oa != ob) return oa < ob;
              return a < b;
            });

  table.orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    table.orders_[i] = autorb::element_order(table.elements_[i]);
    table.index_[table.elements_[i]] = static_cast<std::uint32_t>(i);
  }

  // Column mul(., g) for each generator, then a Cayley-graph spanning tree
  // turns every remaining column into one lookup per entry:
  // elements[k] = elements[parent] * gen  implies
  // mul(i, k) = mul_by_gen[mul(i, parent)][gen].
  const std::size_t gen_count = group.generators().size();
  std::vector<std::uint32_t> mul_by_gen(n * gen_count);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t g = 0; g < gen_count; ++g)
      mul_by_gen[i * gen_count + g] =
          table.index_.at(compose(table.elements_[i], group.generators()[g]));

  std::vector<std::int64_t> parent(n, -1);
  std::vector<std::uint32_t> via_gen(n, 0);
  std::vector<std::uint32_t> bfs_order;
  bfs_order.reserve(n);
  bfs_order.push_back(0);
  parent[0] = 0;
  for (std::size_t at = 0; at < bfs_order.size(); ++at) {
    std::uint32_t k = bfs_order[at];
    for (std::size_t g = 0; g < gen_count; ++g) {
      std::uint32_t next = mul_by_gen[k * gen_count + g];
      if (parent[next] >= 0) continue;
      parent[next] = k;
      via_gen[next] = static_cast<std::uint32_t>(g);
      bfs_order.push_back(next);
    }
  }
  if (bfs_order.size() != n)
    throw std::logic_error("Cayley graph is not connected under the generators");

  table.mul_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) table.mul_[i * n] = static_cast<std::uint32_t>(i);
  for (std::size_t at = 1; at < bfs_order.size(); ++at) {
    std::uint32_t k = bfs_order[at];
    std::uint32_t p = static_cast<std::uint32_t>(parent[k]);
    std::size_t g = via_gen[k];
    for (std::size_t i = 0; i < n; ++i)
      table.mul_[i * n + k] = mul_by_gen[table.mul_[i * n + p] * gen_count + g];
  }

  table.inv_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    table.inv_[i] = table.index_.at(inverse(table.elements_[i]));

  return table;
}

std::optional<std::uint32_t> ElementTable::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t ElementTable::power(std::uint32_t g, unsigned e) const {
  std::uint32_t acc = 0;
  std::uint32_t base = g;
  while (e > 0) {
    if (e & 1u) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1u;
  }
  return acc;
}

}  // namespace autorb
