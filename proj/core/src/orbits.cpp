#include "autorb/orbits.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

#include "autorb/errors.hpp"

namespace autorb {

namespace {

constexpr std::uint32_t kUnset = 0xffffffffu;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<std::uint32_t>(i);
  }

  std::uint32_t find(std::uint32_t x) {
    std::uint32_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      std::uint32_t up = parent_[x];
      parent_[x] = root;
      x = up;
    }
    return root;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // keep the smaller index as root
    parent_[b] = a;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

// Partial group homomorphism grown generator by generator. Definitions are
// appended to a trail, so a failed branch rolls back in O(definitions).
class PartialMap {
 public:
  explicit PartialMap(const ElementTable& t)
      : table_(t), map_(t.size(), kUnset), preimage_(t.size(), kUnset) {
    map_[0] = 0;
    preimage_[0] = 0;
    trail_.push_back(0);
  }

  std::size_t mark() const { return trail_.size(); }

  void rollback(std::size_t mark) {
    while (trail_.size() > mark) {
      std::uint32_t x = trail_.back();
      trail_.pop_back();
      preimage_[map_[x]] = kUnset;
      map_[x] = kUnset;
    }
  }

  // Defines s -> t and closes the map under products. Definitions already on
  // the trail are left in place on failure; the caller rolls back.
  bool extend(std::uint32_t s, std::uint32_t t) {
    if (map_[s] != kUnset) return map_[s] == t;
    if (preimage_[t] != kUnset) return false;
    std::size_t begin = trail_.size();
    define(s, t);
    for (std::size_t q = begin; q < trail_.size(); ++q) {
      std::uint32_t x = trail_[q];
      for (std::size_t k = 0; k < trail_.size(); ++k) {
        std::uint32_t y = trail_[k];
        if (!check_product(x, y) || !check_product(y, x)) return false;
      }
    }
    return true;
  }

  bool complete() const { return trail_.size() == table_.size(); }
  const std::vector<std::uint32_t>& mapping() const { return map_; }

 private:
  void define(std::uint32_t x, std::uint32_t y) {
    map_[x] = y;
    preimage_[y] = x;
    trail_.push_back(x);
  }

  bool check_product(std::uint32_t a, std::uint32_t b) {
    std::uint32_t dom = table_.mul(a, b);
    std::uint32_t img = table_.mul(map_[a], map_[b]);
    if (map_[dom] != kUnset) return map_[dom] == img;
    if (preimage_[img] != kUnset) return false;
    define(dom, img);
    return true;
  }

  const ElementTable& table_;
  std::vector<std::uint32_t> map_;
  std::vector<std::uint32_t> preimage_;
  std::vector<std::uint32_t> trail_;
};

}  // namespace

std::vector<std::size_t> OrbitPartition::orbit_sizes() const {
  std::vector<std::size_t> sizes(representatives.size(), 0);
  for (std::uint32_t r : root) {
    std::size_t at = static_cast<std::size_t>(
        std::lower_bound(representatives.begin(), representatives.end(), r) -
        representatives.begin());
    ++sizes[at];
  }
  return sizes;
}

InvariantProfile invariant_profile(const ElementTable& table,
                                   const ConjugacyPartition& classes,
                                   std::uint32_t g) {
  if (g >= table.size()) throw std::out_of_range("element index out of range");
  InvariantProfile profile;
  profile.element_order = table.element_order(g);
  profile.class_size = classes.size_of_class_of(g);
  for (unsigned d = 2; d <= profile.element_order; ++d) {
    if (profile.element_order % d != 0) continue;
    profile.power_class_sizes.push_back(classes.size_of_class_of(table.power(g, d)));
  }
  return profile;
}

GeneratingSequence generating_sequence_from(const ElementTable& table, std::uint32_t g) {
  if (g >= table.size()) throw std::out_of_range("element index out of range");
  GeneratingSequence seq;
  seq.indices.push_back(g);
  SubgroupHandle closed = subgroup_closure(table, seq.indices);
  while (closed.size() < table.size()) {
    std::uint32_t next = 0;
    for (std::uint32_t i = 0; i < table.size(); ++i) {
      if (!closed.contains(i)) {
        next = i;
        break;
      }
    }
    seq.indices.push_back(next);
    closed = subgroup_closure(table, seq.indices);
  }
  return seq;
}

namespace {

// Backtracking over candidate images of a generating sequence pinned at
// seq[0] -> target. Candidate lists are profile-filtered, which keeps the
// search exhaustive: automorphisms preserve profiles.
struct PairSearch {
  const ElementTable& table;
  const std::vector<std::uint32_t>& seq;
  const std::vector<std::vector<std::uint32_t>>& candidates;
  unsigned long long budget;
  unsigned long long nodes = 0;
  PartialMap map;

  PairSearch(const ElementTable& t, const std::vector<std::uint32_t>& s,
             const std::vector<std::vector<std::uint32_t>>& cand,
             unsigned long long node_budget)
      : table(t), seq(s), candidates(cand), budget(node_budget), map(t) {}

  bool run(std::size_t level) {
    if (level == seq.size()) return map.complete();
    for (std::uint32_t t : candidates[level]) {
      if (++nodes > budget) throw BudgetExceededError(budget);
      std::size_t mark = map.mark();
      if (map.extend(seq[level], t) && run(level + 1)) return true;
      map.rollback(mark);
    }
    return false;
  }
};

std::vector<InvariantProfile> all_profiles(const ElementTable& table,
                                           const ConjugacyPartition& classes) {
  std::vector<InvariantProfile> profiles;
  profiles.reserve(table.size());
  for (std::uint32_t i = 0; i < table.size(); ++i)
    profiles.push_back(invariant_profile(table, classes, i));
  return profiles;
}

std::optional<AutomorphismWitness> search_pair(const ElementTable& table,
                                               const std::vector<InvariantProfile>& profiles,
                                               std::uint32_t g, std::uint32_t h,
                                               const SearchLimits& limits) {
  if (profiles[g] != profiles[h]) return std::nullopt;
  if (g == h) {
    AutomorphismWitness identity;
    identity.mapping.resize(table.size());
    for (std::uint32_t i = 0; i < table.size(); ++i) identity.mapping[i] = i;
    return identity;
  }

  GeneratingSequence seq = generating_sequence_from(table, g);
  std::vector<std::vector<std::uint32_t>> candidates(seq.indices.size());
  candidates[0].push_back(h);
  for (std::size_t level = 1; level < seq.indices.size(); ++level) {
    const InvariantProfile& want = profiles[seq.indices[level]];
    for (std::uint32_t i = 0; i < table.size(); ++i)
      if (profiles[i] == want) candidates[level].push_back(i);
  }

  PairSearch search(table, seq.indices, candidates, limits.node_budget);
  if (!search.run(0)) return std::nullopt;
  return AutomorphismWitness{search.map.mapping()};
}

struct PendingPair {
  std::uint32_t from = 0;
  std::uint32_t to = 0;
};

}  // namespace

std::optional<AutomorphismWitness> find_automorphism_mapping(
    const ElementTable& table, const ConjugacyPartition& classes, std::uint32_t g,
    std::uint32_t h, const SearchLimits& limits) {
  if (table.size() > limits.max_order) throw CapacityError(table.size(), limits.max_order);
  if (g >= table.size() || h >= table.size())
    throw std::out_of_range("element index out of range");
  std::vector<InvariantProfile> profiles = all_profiles(table, classes);
  return search_pair(table, profiles, g, h, limits);
}

std::optional<AutomorphismWitness> find_automorphism_mapping(const ElementTable& table,
                                                             std::uint32_t g,
                                                             std::uint32_t h,
                                                             const SearchLimits& limits) {
  if (table.size() > limits.max_order) throw CapacityError(table.size(), limits.max_order);
  return find_automorphism_mapping(table, conjugacy_classes(table), g, h, limits);
}

OrbitPartition automorphism_orbits(const ElementTable& table, const SearchLimits& limits) {
  const std::size_t n = table.size();
  if (n > limits.max_order) throw CapacityError(n, limits.max_order);

  ConjugacyPartition classes = conjugacy_classes(table);
  std::vector<InvariantProfile> profiles = all_profiles(table, classes);

  UnionFind uf(n);
  // inner automorphisms first: conjugacy classes collapse immediately
  for (std::uint32_t i = 0; i < n; ++i)
    uf.unite(i, classes.representatives[classes.class_id[i]]);

  // candidate cells: elements sharing a profile, ordered by smallest member
  std::map<InvariantProfile, std::vector<std::uint32_t>> by_profile;
  for (std::uint32_t i = 0; i < n; ++i) by_profile[profiles[i]].push_back(i);
  std::vector<std::vector<std::uint32_t>> cells;
  cells.reserve(by_profile.size());
  for (auto& [profile, members] : by_profile) cells.push_back(std::move(members));
  std::sort(cells.begin(), cells.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  std::vector<PendingPair> separated;
  auto is_separated = [&](std::uint32_t ra, std::uint32_t rb) {
    for (const PendingPair& p : separated) {
      std::uint32_t x = uf.find(p.from);
      std::uint32_t y = uf.find(p.to);
      if ((x == ra && y == rb) || (x == rb && y == ra)) return true;
    }
    return false;
  };

  unsigned workers = std::max(1u, limits.workers);
  for (;;) {
    // Deterministic batch of unresolved pairs: smallest-first within each
    // profile cell, at most one search per root pair.
    std::vector<PendingPair> batch;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> batch_roots;
    for (const std::vector<std::uint32_t>& cell : cells) {
      if (batch.size() >= workers) break;
      for (std::size_t a = 0; a + 1 < cell.size() && batch.size() < workers; ++a) {
        std::uint32_t ra = uf.find(cell[a]);
        for (std::size_t b = a + 1; b < cell.size() && batch.size() < workers; ++b) {
          std::uint32_t rb = uf.find(cell[b]);
          if (ra == rb || is_separated(ra, rb)) continue;
          std::pair<std::uint32_t, std::uint32_t> key{std::min(ra, rb), std::max(ra, rb)};
          bool queued = false;
          for (const auto& existing : batch_roots)
            if (existing == key) {
              queued = true;
              break;
            }
          if (queued) continue;
          batch.push_back({cell[a], cell[b]});
          batch_roots.push_back(key);
        }
      }
    }
    if (batch.empty()) break;

    std::vector<std::optional<AutomorphismWitness>> results(batch.size());
    if (batch.size() == 1 || workers == 1) {
      for (std::size_t i = 0; i < batch.size(); ++i)
        results[i] = search_pair(table, profiles, batch[i].from, batch[i].to, limits);
    } else {
      std::vector<std::exception_ptr> errors(batch.size());
      std::vector<std::thread> pool;
      pool.reserve(batch.size());
      for (std::size_t i = 0; i < batch.size(); ++i) {
        pool.emplace_back([&, i] {
          try {
            results[i] = search_pair(table, profiles, batch[i].from, batch[i].to, limits);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        });
      }
      for (std::thread& t : pool) t.join();
      for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
    }

    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (results[i]) {
        const std::vector<std::uint32_t>& mapping = results[i]->mapping;
        for (std::uint32_t x = 0; x < n; ++x) uf.unite(x, mapping[x]);
      } else {
        separated.push_back(batch[i]);
      }
    }
  }

  OrbitPartition partition;
  partition.root.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) partition.root[i] = uf.find(i);
  for (std::uint32_t i = 0; i < n; ++i)
    if (partition.root[i] == i) partition.representatives.push_back(i);
  partition.class_count = partition.representatives.size();
  return partition;
}

std::size_t omega(const ElementTable& table, const SearchLimits& limits) {
  return automorphism_orbits(table, limits).class_count;
}

bool is_characteristic(const ElementTable& table, const SubgroupHandle& subgroup,
                       const OrbitPartition& partition) {
  std::vector<char> in_subgroup(table.size(), 0);
  for (std::uint32_t m : subgroup.members) in_subgroup[m] = 1;
  for (std::uint32_t i = 0; i < table.size(); ++i)
    if (in_subgroup[i] != in_subgroup[partition.root[i]]) return false;
  return true;
}

}  // namespace autorb
