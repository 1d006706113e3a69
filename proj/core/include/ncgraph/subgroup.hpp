#pragma once

#include <span>
#include <string>
#include <vector>

#include "ncgraph/bitset.hpp"
#include "ncgraph/group.hpp"

namespace ncg {

/// A subgroup of a parent group as a dense member set over element indices.
/// `generators` is a (not necessarily minimal) generating set when known.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  DynBitset members;
  std::uint32_t order = 0;
  std::vector<elem_t> generators;

  bool contains(elem_t g) const { return members.test(g); }
  std::vector<elem_t> elements() const;
  bool is_whole() const { return parent && order == parent->order(); }
};

/// C_G(g) = { h : hg = gh }.
Subgroup centralizer(const FiniteGroup& g, elem_t x);

/// Z(G), the intersection of all centralizers.
Subgroup center(const FiniteGroup& g);

/// Smallest subgroup containing `seed` (closure inside the Cayley table).
Subgroup subgroup_closure(const FiniteGroup& g, std::span<const elem_t> seed);

/// Closure of `base_members` together with `extra_gens`, where `base_gens`
/// generates the base set.  Used by the lattice's adjoin-one-element loop.
Subgroup closure_from(const FiniteGroup& g, const DynBitset& base_members,
                      std::span<const elem_t> base_gens,
                      std::span<const elem_t> extra_gens);

/// true iff xHx^-1 = H for all x (tested on a generating set of G).
bool is_normal(const FiniteGroup& g, const Subgroup& h);

/// N_G(H) = { x : xHx^-1 = H }.
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);

/// Z(H) for a member set H: members commuting with every member.
DynBitset centre_of_members(const FiniteGroup& g, const DynBitset& members);

/// true iff every pair of members commutes.
bool members_abelian(const FiniteGroup& g, const DynBitset& members);

/// A subgroup materialized as a group in its own right.  Local indices are
/// the members in ascending parent order, so the identity stays at 0.
struct MaterializedSubgroup {
  FiniteGroup group;
  std::vector<elem_t> to_parent;
};
MaterializedSubgroup subgroup_as_group(const Subgroup& h, std::string name);

}  // namespace ncg
