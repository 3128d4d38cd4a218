#include "autorb/structure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace autorb {

namespace {

SubgroupHandle handle_from_flags(const std::vector<char>& member, std::size_t n) {
  SubgroupHandle h;
  h.parent_order = n;
  for (std::uint32_t i = 0; i < n; ++i)
    if (member[i]) h.members.push_back(i);
  return h;
}

// Pairwise product closure of the flagged set; the worklist doubles as the
// member list, so every ordered pair is eventually combined.
void close_under_products(const ElementTable& t, std::vector<char>& member,
                          std::vector<std::uint32_t>& list) {
  for (std::size_t a = 0; a < list.size(); ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      std::uint32_t x = t.mul(list[a], list[b]);
      if (!member[x]) {
        member[x] = 1;
        list.push_back(x);
      }
      x = t.mul(list[b], list[a]);
      if (!member[x]) {
        member[x] = 1;
        list.push_back(x);
      }
    }
  }
}

SubgroupHandle closure_of(const ElementTable& t, std::vector<char> member) {
  if (!member[0]) member[0] = 1;
  std::vector<std::uint32_t> list;
  for (std::uint32_t i = 0; i < t.size(); ++i)
    if (member[i]) list.push_back(i);
  close_under_products(t, member, list);
  return handle_from_flags(member, t.size());
}

// Derived subgroup of the listed subset (which must form a subgroup).
std::vector<std::uint32_t> derived_of(const ElementTable& t,
                                      const std::vector<std::uint32_t>& sub) {
  std::vector<char> member(t.size(), 0);
  member[0] = 1;
  for (std::uint32_t a : sub)
    for (std::uint32_t b : sub) member[t.commutator(a, b)] = 1;
  std::vector<std::uint32_t> list;
  for (std::uint32_t i = 0; i < t.size(); ++i)
    if (member[i]) list.push_back(i);
  close_under_products(t, member, list);
  std::sort(list.begin(), list.end());
  return list;
}

}  // namespace

bool SubgroupHandle::contains(std::uint32_t index) const {
  return std::binary_search(members.begin(), members.end(), index);
}

ConjugacyPartition conjugacy_classes(const ElementTable& table) {
  const std::size_t n = table.size();
  ConjugacyPartition part;
  part.class_id.assign(n, 0xffffffffu);
  for (std::uint32_t g = 0; g < n; ++g) {
    if (part.class_id[g] != 0xffffffffu) continue;
    std::uint32_t cls = static_cast<std::uint32_t>(part.representatives.size());
    part.representatives.push_back(g);
    std::vector<std::uint32_t> stack{g};
    part.class_id[g] = cls;
    std::uint32_t count = 0;
    while (!stack.empty()) {
      std::uint32_t x = stack.back();
      stack.pop_back();
      ++count;
      for (std::uint32_t h = 0; h < n; ++h) {
        std::uint32_t y = table.conjugate(x, h);
        if (part.class_id[y] == 0xffffffffu) {
          part.class_id[y] = cls;
          stack.push_back(y);
        }
      }
    }
    part.class_sizes.push_back(count);
  }
  return part;
}

SubgroupHandle centralizer(const ElementTable& table, std::uint32_t g) {
  if (g >= table.size()) throw std::out_of_range("element index out of range");
  SubgroupHandle h;
  h.parent_order = table.size();
  for (std::uint32_t x = 0; x < table.size(); ++x)
    if (table.mul(x, g) == table.mul(g, x)) h.members.push_back(x);
  return h;
}

SubgroupHandle center(const ElementTable& table) {
  const std::size_t n = table.size();
  SubgroupHandle h;
  h.parent_order = n;
  for (std::uint32_t x = 0; x < n; ++x) {
    bool central = true;
    for (std::uint32_t g = 0; g < n; ++g) {
      if (table.mul(x, g) != table.mul(g, x)) {
        central = false;
        break;
      }
    }
    if (central) h.members.push_back(x);
  }
  return h;
}

SubgroupHandle derived_subgroup(const ElementTable& table) {
  const std::size_t n = table.size();
  std::vector<char> member(n, 0);
  member[0] = 1;
  for (std::uint32_t g = 0; g < n; ++g)
    for (std::uint32_t h = 0; h < n; ++h) member[table.commutator(g, h)] = 1;
  return closure_of(table, std::move(member));
}

SubgroupHandle subgroup_closure(const ElementTable& table,
                                std::span<const std::uint32_t> seed) {
  std::vector<char> member(table.size(), 0);
  member[0] = 1;
  for (std::uint32_t s : seed) {
    if (s >= table.size()) throw std::out_of_range("seed index out of range");
    member[s] = 1;
  }
  return closure_of(table, std::move(member));
}

std::vector<SubgroupHandle> upper_central_series(const ElementTable& table) {
  const std::size_t n = table.size();
  std::vector<SubgroupHandle> series;
  std::vector<char> in_z(n, 0);
  in_z[0] = 1;
  SubgroupHandle z;
  z.parent_order = n;
  z.members = {0};
  series.push_back(z);
  for (;;) {
    SubgroupHandle next;
    next.parent_order = n;
    for (std::uint32_t g = 0; g < n; ++g) {
      bool ok = true;
      for (std::uint32_t h = 0; h < n; ++h) {
        if (!in_z[table.commutator(g, h)]) {
          ok = false;
          break;
        }
      }
      if (ok) next.members.push_back(g);
    }
    if (next.members.size() == series.back().members.size()) break;
    std::fill(in_z.begin(), in_z.end(), 0);
    for (std::uint32_t m : next.members) in_z[m] = 1;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<SubgroupHandle> lower_central_series(const ElementTable& table) {
  const std::size_t n = table.size();
  std::vector<SubgroupHandle> series;
  SubgroupHandle whole;
  whole.parent_order = n;
  whole.members.resize(n);
  std::iota(whole.members.begin(), whole.members.end(), 0);
  series.push_back(std::move(whole));
  for (;;) {
    const std::vector<std::uint32_t>& current = series.back().members;
    std::vector<char> member(n, 0);
    member[0] = 1;
    for (std::uint32_t a : current)
      for (std::uint32_t h = 0; h < n; ++h) member[table.commutator(a, h)] = 1;
    SubgroupHandle next = closure_of(table, std::move(member));
    if (next.members.size() == current.size()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_abelian(const ElementTable& table) {
  const std::size_t n = table.size();
  for (std::uint32_t g = 0; g < n; ++g)
    for (std::uint32_t h = g + 1; h < n; ++h)
      if (table.mul(g, h) != table.mul(h, g)) return false;
  return true;
}

bool is_soluble(const ElementTable& table) {
  std::vector<std::uint32_t> current(table.size());
  std::iota(current.begin(), current.end(), 0);
  while (current.size() > 1) {
    std::vector<std::uint32_t> next = derived_of(table, current);
    if (next.size() == current.size()) return false;
    current = std::move(next);
  }
  return true;
}

std::optional<unsigned> nilpotency_class(const ElementTable& table) {
  std::vector<SubgroupHandle> series = lower_central_series(table);
  if (series.back().size() != 1) return std::nullopt;
  return static_cast<unsigned>(series.size() - 1);
}

unsigned exponent(const ElementTable& table) {
  unsigned long long e = 1;
  for (std::uint32_t i = 0; i < table.size(); ++i)
    e = std::lcm<unsigned long long>(e, table.element_order(i));
  return static_cast<unsigned>(e);
}

std::vector<unsigned> spectrum(const ElementTable& table,
                               std::span<const std::uint32_t> subset) {
  std::vector<unsigned> orders;
  orders.reserve(subset.size());
  for (std::uint32_t i : subset) orders.push_back(table.element_order(i));
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  return orders;
}

bool is_simple(const ElementTable& table) {
  if (table.size() <= 1)
    throw std::invalid_argument("simplicity is undefined for the trivial group");
  ConjugacyPartition classes = conjugacy_classes(table);
  for (std::uint32_t cls = 0; cls < classes.class_count(); ++cls) {
    if (classes.representatives[cls] == 0) continue;
    std::vector<std::uint32_t> members;
    for (std::uint32_t i = 0; i < table.size(); ++i)
      if (classes.class_id[i] == cls) members.push_back(i);
    SubgroupHandle normal_closure = subgroup_closure(table, members);
    if (normal_closure.size() < table.size()) return false;
  }
  return true;
}

bool is_elementary_abelian(const ElementTable& table) {
  if (table.size() <= 1) return false;
  if (!is_abelian(table)) return false;
  unsigned e = exponent(table);
  if (e < 2) return false;
  for (unsigned d = 2; d * d <= e; ++d)
    if (e % d == 0) return false;
  return true;
}

}  // namespace autorb
