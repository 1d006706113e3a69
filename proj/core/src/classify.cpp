#include "ncgraph/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncg {

const char* to_string(PGroupCase c) {
  switch (c) {
    case PGroupCase::i_abelian_or_minimal: return "i";
    case PGroupCase::ii_not_two_generated: return "ii";
    case PGroupCase::iiia_abelian_maximal: return "iii(a)";
    case PGroupCase::iiib_all_centres_equal: return "iii(b)";
    case PGroupCase::iiic_centre_exceeds: return "iii(c)";
  }
  return "?";
}

const char* to_string(NilpotentCase c) {
  switch (c) {
    case NilpotentCase::i_abelian: return "i";
    case NilpotentCase::ii_two_noncyclic_sylows: return "ii";
    case NilpotentCase::iiia_no_isolated_in_sylow: return "iii(a)";
    case NilpotentCase::iiib_isolated_in_sylow: return "iii(b)";
  }
  return "?";
}

PGroupClassification classify_p_group(const FiniteGroup& g, const SubgroupLattice& lat) {
  auto fac = factorize(g.order());
  if (fac.size() != 1) throw std::invalid_argument("not a p-group: " + g.name());

  StructuralPredicates pred = structural_predicates(g, lat);
  PGroupClassification out;
  out.p = pred.p;

  const bool case_i = pred.is_abelian || pred.is_minimal_nonabelian;
  const bool case_ii = !pred.is_abelian && !pred.is_two_generated;
  const bool case_iii = !pred.is_abelian && pred.is_two_generated &&
                        !pred.is_minimal_nonabelian;
  if (int(case_i) + int(case_ii) + int(case_iii) != 1)
    throw std::logic_error("p-group case predicates are not a trichotomy");

  if (case_i) {
    out.kase = PGroupCase::i_abelian_or_minimal;
    out.prediction.target = GraphKind::nc;
    out.prediction.empty_graph = pred.is_abelian;
    out.prediction.no_edges = true;
    return out;
  }
  if (case_ii) {
    out.kase = PGroupCase::ii_not_two_generated;
    out.prediction.target = GraphKind::nc;
    out.prediction.diameter = 2;
    out.prediction.isolated = std::vector<elem_t>{};
    return out;
  }

  // case iii: verified preconditions, then the sub-trichotomy
  DynBitset z = center(g).members;
  std::vector<std::uint32_t> abelian_max;
  for (std::uint32_t id : lat.maximal_ids) {
    if (!z.is_subset_of(lat.subgroups[id].members))
      throw std::logic_error("maximal subgroup not containing the centre in case iii");
    if (lat.abelian[id]) abelian_max.push_back(id);
  }
  if (abelian_max.size() > 1)
    throw std::logic_error("more than one abelian maximal subgroup in case iii");

  if (abelian_max.size() == 1) {
    out.kase = PGroupCase::iiia_abelian_maximal;
    out.abelian_maximal_id = abelian_max[0];
    out.prediction.target = GraphKind::nd;
    out.prediction.diameter = 2;
    DynBitset iso = lat.subgroups[abelian_max[0]].members;
    iso.and_not(lat.frattini().members);
    std::vector<elem_t> ids;
    iso.for_each_set([&](std::size_t x) { ids.push_back(static_cast<elem_t>(x)); });
    out.prediction.isolated = std::move(ids);
    return out;
  }

  bool some_bigger = false;
  for (std::uint32_t id : lat.maximal_ids) {
    DynBitset zm = centre_of_members(g, lat.subgroups[id].members);
    if (!z.is_subset_of(zm))
      throw std::logic_error("Z(G) not contained in a maximal subgroup centre");
    if (zm != z) some_bigger = true;
  }
  out.kase = some_bigger ? PGroupCase::iiic_centre_exceeds
                         : PGroupCase::iiib_all_centres_equal;
  out.prediction.target = GraphKind::nc;
  out.prediction.diameter = some_bigger ? 3 : 2;
  out.prediction.isolated = std::vector<elem_t>{};
  return out;
}

NilpotentClassification classify_nilpotent(const FiniteGroup& g, std::uint32_t lattice_cap) {
  auto fac = factorize(g.order());
  if (fac.size() < 2)
    throw std::invalid_argument("fewer than two prime divisors: " + g.name());
  if (!is_nilpotent_p_closure(g))
    throw std::invalid_argument("not nilpotent: " + g.name());

  NilpotentClassification out;
  Subgroup z = center(g);
  if (z.order == g.order()) {
    out.kase = NilpotentCase::i_abelian;
    out.prediction.target = GraphKind::nc;
    out.prediction.empty_graph = true;
    out.prediction.no_edges = true;
    return out;
  }

  std::vector<Subgroup> sylows;
  std::vector<std::uint32_t> primes;
  for (auto [p, a] : fac) {
    sylows.push_back(sylow_subgroup(g, p));
    primes.push_back(p);
  }
  auto sylow_cyclic = [&](const Subgroup& s) {
    bool cyc = false;
    s.members.for_each_set([&](std::size_t x) {
      if (g.element_order(static_cast<elem_t>(x)) == s.order) cyc = true;
    });
    return cyc;
  };
  std::vector<std::size_t> noncyclic;
  for (std::size_t i = 0; i < sylows.size(); ++i)
    if (!sylow_cyclic(sylows[i])) noncyclic.push_back(i);

  if (noncyclic.size() >= 2) {
    out.kase = NilpotentCase::ii_two_noncyclic_sylows;
    out.prediction.target = GraphKind::nc;
    out.prediction.diameter = 2;
    out.prediction.isolated = std::vector<elem_t>{};
    return out;
  }
  if (noncyclic.empty())
    throw std::logic_error("non-abelian nilpotent group with all Sylows cyclic");

  const std::size_t pi = noncyclic[0];
  const std::uint32_t p = primes[pi];
  const Subgroup& sp = sylows[pi];
  if (members_abelian(g, sp.members))
    throw std::logic_error("unique non-cyclic Sylow subgroup is abelian");
  out.sylow_prime = p;
  out.cyclic_part_order = g.order() / sp.order;

  // the complement H = product of the other (cyclic) Sylows
  std::vector<elem_t> hmem;
  for (elem_t x = 0; x < g.order(); ++x)
    if (g.element_order(x) % p != 0) hmem.push_back(x);
  Subgroup hsub = subgroup_closure(g, hmem);
  if (hsub.order != out.cyclic_part_order)
    throw std::logic_error("p'-part is not a complement");
  bool h_cyclic = false;
  hsub.members.for_each_set([&](std::size_t x) {
    if (g.element_order(static_cast<elem_t>(x)) == hsub.order) h_cyclic = true;
  });
  if (!h_cyclic) throw std::logic_error("complement is not cyclic");

  MaterializedSubgroup mp = subgroup_as_group(sp, g.name() + "!Sylow" + std::to_string(p));
  SubgroupLattice lat_p = all_subgroups(mp.group, lattice_cap);
  ElementGraph nc_p = build_graph(mp.group, GraphKind::nc, &lat_p);
  std::vector<elem_t> iso_local = nc_p.isolated_vertices();

  if (iso_local.empty()) {
    ComponentSummary sum = component_summary(nc_p);
    if (!sum.connected() || sum.overall.kind != Diameter::Kind::finite ||
        (sum.overall.value != 2 && sum.overall.value != 3))
      throw std::logic_error("Sylow nc graph not connected with diameter 2 or 3");
    out.kase = NilpotentCase::iiia_no_isolated_in_sylow;
    out.prediction.target = GraphKind::nc;
    out.prediction.diameter = sum.overall.value;
    out.prediction.isolated = std::vector<elem_t>{};
    return out;
  }

  out.kase = NilpotentCase::iiib_isolated_in_sylow;
  out.prediction.target = GraphKind::nd;
  out.prediction.diameter = 2;
  DynBitset iso_parent(g.order());
  for (elem_t v : iso_local) iso_parent.set(mp.to_parent[v]);
  std::vector<elem_t> iso;
  for (elem_t x = 0; x < g.order(); ++x) {
    if (z.members.test(x)) continue;
    auto [xp, xq] = p_decompose(g, x, p);
    if (iso_parent.test(xp) && g.element_order(xq) == hsub.order) iso.push_back(x);
  }
  out.prediction.isolated = std::move(iso);
  return out;
}

}  // namespace ncg
