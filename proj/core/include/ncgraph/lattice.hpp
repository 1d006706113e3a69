#pragma once

#include <vector>

#include "ncgraph/subgroup.hpp"

namespace ncg {

inline constexpr std::uint32_t kDefaultLatticeCap = 400;

/// The complete subgroup lattice of a group whose order is within the
/// lattice cap.  Subgroups are deduplicated by member set and sorted by
/// (order, member set), so ids are canonical for a given group.
struct SubgroupLattice {
  const FiniteGroup* parent = nullptr;
  std::vector<Subgroup> subgroups;
  /// leq[i].test(j) iff subgroups[i] <= subgroups[j].
  std::vector<DynBitset> leq;
  std::vector<std::uint32_t> maximal_ids;
  std::uint32_t frattini_id = 0;
  std::uint32_t trivial_id = 0;
  std::uint32_t whole_id = 0;
  /// per-subgroup flags
  std::vector<char> abelian;
  std::vector<char> normal;
  /// elem_in_maximal[x] has bit k set iff x lies in maximal_ids[k].
  std::vector<DynBitset> elem_in_maximal;

  const Subgroup& frattini() const { return subgroups[frattini_id]; }
  std::size_t maximal_count() const { return maximal_ids.size(); }
  const Subgroup& maximal(std::size_t k) const { return subgroups[maximal_ids[k]]; }
  std::uint32_t index_of(std::uint32_t id) const {
    return parent->order() / subgroups[id].order;
  }
};

/// Enumerates every subgroup by repeatedly adjoining one element to each
/// known subgroup and closing, to a fixpoint; any subgroup <g1,...,gk> is
/// reached along the chain <g1> <= <g1,g2> <= ....  Throws cap_error when
/// the group order exceeds `cap`.
SubgroupLattice all_subgroups(const FiniteGroup& g,
                              std::uint32_t cap = kDefaultLatticeCap);

/// Proper subgroups with no proper intermediate overgroup.
std::vector<const Subgroup*> maximal_subgroups(const SubgroupLattice& lat);

/// Intersection of all maximal subgroups (the whole group when none exist).
const Subgroup& frattini(const SubgroupLattice& lat);

/// Ids of subgroups maximal among proper normal subgroups.
std::vector<std::uint32_t> maximal_normal_ids(const SubgroupLattice& lat);

}  // namespace ncg
