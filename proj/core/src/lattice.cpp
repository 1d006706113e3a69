#include "ncgraph/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace ncg {

SubgroupLattice all_subgroups(const FiniteGroup& g, std::uint32_t cap) {
  if (g.order() > cap)
    throw cap_error("subgroup lattice cap exceeded for group " + g.name());

  const std::uint32_t n = g.order();
  std::vector<Subgroup> found;
  std::unordered_map<DynBitset, std::uint32_t, DynBitsetHash> ids;

  DynBitset triv(n);
  triv.set(kIdentity);
  found.push_back(Subgroup{&g, triv, 1, {}});
  ids.emplace(triv, 0);

  // adjoin one element to each known subgroup and close, to a fixpoint
  for (std::size_t wi = 0; wi < found.size(); ++wi) {
    const DynBitset base = found[wi].members;
    const std::vector<elem_t> gens = found[wi].generators;
    for (elem_t x = 0; x < n; ++x) {
      if (base.test(x)) continue;
      Subgroup cand = closure_from(g, base, gens, std::span<const elem_t>(&x, 1));
      if (!ids.count(cand.members)) {
        ids.emplace(cand.members, static_cast<std::uint32_t>(found.size()));
        found.push_back(std::move(cand));
      }
    }
  }

  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.members.lex_less(b.members);
  });

  SubgroupLattice lat;
  lat.parent = &g;
  lat.subgroups = std::move(found);
  const std::size_t k = lat.subgroups.size();
  lat.trivial_id = 0;
  lat.whole_id = static_cast<std::uint32_t>(k - 1);

  lat.leq.assign(k, DynBitset(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (lat.subgroups[i].order <= lat.subgroups[j].order &&
          lat.subgroups[i].members.is_subset_of(lat.subgroups[j].members))
        lat.leq[i].set(j);

  for (std::size_t i = 0; i + 1 < k; ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < k && maximal; ++j)
      if (j != i && j != lat.whole_id && lat.leq[i].test(j)) maximal = false;
    if (maximal) lat.maximal_ids.push_back(static_cast<std::uint32_t>(i));
  }

  if (lat.maximal_ids.empty()) {
    lat.frattini_id = lat.whole_id;
  } else {
    DynBitset inter(n, true);
    for (std::uint32_t id : lat.maximal_ids) inter &= lat.subgroups[id].members;
    auto it = std::find_if(lat.subgroups.begin(), lat.subgroups.end(),
                           [&](const Subgroup& s) { return s.members == inter; });
    if (it == lat.subgroups.end())
      throw std::logic_error("maximal-subgroup intersection missing from lattice");
    lat.frattini_id = static_cast<std::uint32_t>(it - lat.subgroups.begin());
  }

  lat.abelian.resize(k);
  lat.normal.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    lat.abelian[i] = members_abelian(g, lat.subgroups[i].members);
    lat.normal[i] = is_normal(g, lat.subgroups[i]);
  }

  lat.elem_in_maximal.assign(n, DynBitset(lat.maximal_ids.size()));
  for (std::size_t mi = 0; mi < lat.maximal_ids.size(); ++mi)
    lat.subgroups[lat.maximal_ids[mi]].members.for_each_set(
        [&](std::size_t x) { lat.elem_in_maximal[x].set(mi); });

  return lat;
}

std::vector<const Subgroup*> maximal_subgroups(const SubgroupLattice& lat) {
  std::vector<const Subgroup*> out;
  out.reserve(lat.maximal_ids.size());
  for (std::uint32_t id : lat.maximal_ids) out.push_back(&lat.subgroups[id]);
  return out;
}

const Subgroup& frattini(const SubgroupLattice& lat) { return lat.frattini(); }

std::vector<std::uint32_t> maximal_normal_ids(const SubgroupLattice& lat) {
  std::vector<std::uint32_t> out;
  const std::size_t k = lat.subgroups.size();
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (!lat.normal[i]) continue;
    bool top = true;
    for (std::size_t j = 0; j < k && top; ++j)
      if (j != i && j != lat.whole_id && lat.normal[j] && lat.leq[i].test(j)) top = false;
    if (top) out.push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

}  // namespace ncg
