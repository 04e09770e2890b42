#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "gncg/group.hpp"

namespace gncg {

/// Smallest subgroup of G containing all of gens (closure under product;
/// inverses follow because the group is finite).
inline Subgroup generated_subgroup(const GroupTable& g, const std::vector<Elem>& gens) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  std::vector<Elem> members;
  in[GroupTable::identity] = 1;
  members.push_back(GroupTable::identity);
  std::vector<Elem> queue;
  for (Elem x : gens) {
    if (x < 0 || x >= g.order()) throw std::invalid_argument("generator index out of range");
    queue.push_back(x);
  }
  while (!queue.empty()) {
    Elem x = queue.back();
    queue.pop_back();
    if (in[static_cast<std::size_t>(x)]) continue;
    in[static_cast<std::size_t>(x)] = 1;
    members.push_back(x);
    for (std::size_t i = 0; i < members.size(); ++i) {
      Elem m = members[i];
      Elem p = g.mul(x, m);
      Elem q = g.mul(m, x);
      if (!in[static_cast<std::size_t>(p)]) queue.push_back(p);
      if (!in[static_cast<std::size_t>(q)]) queue.push_back(q);
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(members), g.order()};
}

/// Greedy deterministic generating set: repeatedly adjoin the smallest member
/// not yet generated. The trivial subgroup yields {identity}.
inline std::vector<Elem> minimal_generators(const GroupTable& g, const Subgroup& h) {
  std::vector<Elem> gens;
  Subgroup cur = trivial_subgroup(g);
  while (cur.size() < h.size()) {
    Elem next = -1;
    for (Elem m : h.members)
      if (!cur.contains(m)) {
        next = m;
        break;
      }
    if (next < 0) throw std::logic_error("generator search failed");
    gens.push_back(next);
    cur = generated_subgroup(g, gens);
  }
  if (gens.empty()) gens.push_back(GroupTable::identity);
  return gens;
}

/// All subgroups of G, deduplicated and sorted by (size, member list).
struct SubgroupCatalog {
  std::vector<Subgroup> subgroups;
  std::map<int, std::vector<std::size_t>> by_order;

  const Subgroup* find(const std::vector<Elem>& members) const {
    for (const Subgroup& s : subgroups)
      if (s.members == members) return &s;
    return nullptr;
  }
};

/// Complete subgroup catalog, computed by closing the cyclic subgroups under
/// pairwise join <A u B> to a fixpoint. Every subgroup is a join of cyclic
/// subgroups, so the closure is exhaustive without visiting 2^|G| subsets.
inline SubgroupCatalog enumerate_subgroups(const GroupTable& g, int max_order = detail::kMaxGroupOrder) {
  if (g.order() > max_order) throw SizeCapError("subgroup enumeration order cap exceeded");
  std::set<std::vector<Elem>> seen;
  std::vector<Subgroup> list;
  auto add = [&](Subgroup s) {
    if (seen.insert(s.members).second) list.push_back(std::move(s));
  };
  for (Elem x = 0; x < g.order(); ++x) add(generated_subgroup(g, {x}));
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const auto& a = list[i].members;
      const auto& b = list[j].members;
      if (std::includes(a.begin(), a.end(), b.begin(), b.end()) ||
          std::includes(b.begin(), b.end(), a.begin(), a.end()))
        continue;
      std::vector<Elem> gens;
      gens.reserve(a.size() + b.size());
      gens.insert(gens.end(), a.begin(), a.end());
      gens.insert(gens.end(), b.begin(), b.end());
      add(generated_subgroup(g, gens));
    }
  }
  SubgroupCatalog catalog;
  catalog.subgroups = std::move(list);
  std::sort(catalog.subgroups.begin(), catalog.subgroups.end(),
            [](const Subgroup& x, const Subgroup& y) {
              if (x.size() != y.size()) return x.size() < y.size();
              return x.members < y.members;
            });
  for (std::size_t i = 0; i < catalog.subgroups.size(); ++i)
    catalog.by_order[catalog.subgroups[i].size()].push_back(i);
  return catalog;
}

}  // namespace gncg
