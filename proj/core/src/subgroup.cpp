#include "ncgraph/subgroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncg {

std::vector<elem_t> Subgroup::elements() const {
  std::vector<elem_t> out;
  out.reserve(order);
  members.for_each_set([&](std::size_t i) { out.push_back(static_cast<elem_t>(i)); });
  return out;
}

Subgroup centralizer(const FiniteGroup& g, elem_t x) {
  if (x >= g.order()) throw std::invalid_argument("element index out of range");
  Subgroup s{&g, DynBitset(g.order()), 0, {}};
  for (elem_t h = 0; h < g.order(); ++h)
    if (g.commute(h, x)) s.members.set(h);
  s.order = static_cast<std::uint32_t>(s.members.count());
  return s;
}

Subgroup center(const FiniteGroup& g) {
  Subgroup s{&g, DynBitset(g.order()), 0, {}};
  for (elem_t x = 0; x < g.order(); ++x) {
    bool central = true;
    for (elem_t h = 0; h < g.order() && central; ++h) central = g.commute(x, h);
    if (central) s.members.set(x);
  }
  s.order = static_cast<std::uint32_t>(s.members.count());
  return s;
}

Subgroup closure_from(const FiniteGroup& g, const DynBitset& base_members,
                      std::span<const elem_t> base_gens,
                      std::span<const elem_t> extra_gens) {
  Subgroup s{&g, base_members, 0, {}};
  s.members.set(kIdentity);
  std::vector<elem_t> gens;
  gens.reserve(base_gens.size() + extra_gens.size());
  for (elem_t x : base_gens)
    if (x != kIdentity) gens.push_back(x);
  for (elem_t x : extra_gens)
    if (x != kIdentity) gens.push_back(x);

  std::vector<elem_t> queue;
  s.members.for_each_set([&](std::size_t i) { queue.push_back(static_cast<elem_t>(i)); });
  for (elem_t x : gens)
    if (!s.members.test(x)) {
      s.members.set(x);
      queue.push_back(x);
    }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const std::uint16_t* row = g.row(queue[qi]);
    for (elem_t t : gens) {
      elem_t y = row[t];
      if (!s.members.test(y)) {
        s.members.set(y);
        queue.push_back(y);
      }
    }
  }
  s.order = static_cast<std::uint32_t>(s.members.count());
  s.generators = std::move(gens);
  return s;
}

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const elem_t> seed) {
  for (elem_t x : seed)
    if (x >= g.order()) throw std::invalid_argument("element index out of range");
  DynBitset base(g.order());
  base.set(kIdentity);
  return closure_from(g, base, {}, seed);
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (elem_t x : g.generator_indices()) {
    bool ok = true;
    h.members.for_each_set([&](std::size_t m) {
      if (ok && !h.members.test(g.conjugate(static_cast<elem_t>(m), x))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  Subgroup s{&g, DynBitset(g.order()), 0, {}};
  std::vector<elem_t> mem = h.elements();
  for (elem_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (elem_t m : mem)
      if (!h.members.test(g.conjugate(m, x))) {
        ok = false;
        break;
      }
    if (ok) s.members.set(x);
  }
  s.order = static_cast<std::uint32_t>(s.members.count());
  return s;
}

DynBitset centre_of_members(const FiniteGroup& g, const DynBitset& members) {
  std::vector<elem_t> mem;
  members.for_each_set([&](std::size_t i) { mem.push_back(static_cast<elem_t>(i)); });
  DynBitset out(g.order());
  for (elem_t x : mem) {
    bool central = true;
    for (elem_t h : mem)
      if (!g.commute(x, h)) {
        central = false;
        break;
      }
    if (central) out.set(x);
  }
  return out;
}

bool members_abelian(const FiniteGroup& g, const DynBitset& members) {
  std::vector<elem_t> mem;
  members.for_each_set([&](std::size_t i) { mem.push_back(static_cast<elem_t>(i)); });
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (std::size_t j = i + 1; j < mem.size(); ++j)
      if (!g.commute(mem[i], mem[j])) return false;
  return true;
}

MaterializedSubgroup subgroup_as_group(const Subgroup& h, std::string name) {
  const FiniteGroup& g = *h.parent;
  std::vector<elem_t> to_parent = h.elements();
  std::vector<std::int32_t> to_local(g.order(), -1);
  for (std::size_t i = 0; i < to_parent.size(); ++i)
    to_local[to_parent[i]] = static_cast<std::int32_t>(i);

  const std::size_t m = to_parent.size();
  std::vector<std::vector<elem_t>> table(m, std::vector<elem_t>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::int32_t k = to_local[g.product(to_parent[i], to_parent[j])];
      if (k < 0) throw std::logic_error("member set is not closed");
      table[i][j] = static_cast<elem_t>(k);
    }
  return MaterializedSubgroup{FiniteGroup::from_cayley_table(table, std::move(name)),
                              std::move(to_parent)};
}

}  // namespace ncg
