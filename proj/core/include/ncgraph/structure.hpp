#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ncgraph/lattice.hpp"

namespace ncg {

/// (prime, multiplicity) pairs of n, ascending by prime.
std::vector<std::pair<std::uint32_t, std::uint32_t>> factorize(std::uint32_t n);

struct StructuralPredicates {
  bool is_abelian = false;
  bool is_nilpotent = false;
  bool is_p_group = false;
  std::uint32_t p = 0;  // the prime when is_p_group
  bool is_minimal_nonabelian = false;
  bool is_two_generated = false;
  std::uint32_t generation_rank = 0;  // log_p |G : Phi(G)|, p-groups only
};

StructuralPredicates structural_predicates(const FiniteGroup& g,
                                           const SubgroupLattice& lat);

/// Nilpotency via p-element closure: for every prime p | |G| the set of
/// p-elements must be closed under multiplication (equivalently the Sylow
/// p-subgroup is unique and normal).
bool is_nilpotent_p_closure(const FiniteGroup& g);

/// Lower central series G = g1 >= g2 >= ... with g_{k+1} = [g_k, G],
/// computed to its stable term.
std::vector<Subgroup> lower_central_series(const FiniteGroup& g);

/// Termination of the lower central series at the trivial subgroup.
bool is_nilpotent_lcs(const FiniteGroup& g);

bool is_cyclic(const FiniteGroup& g);

/// <x, y> = G, by closure with a Lagrange early exit: once the partial
/// closure holds more than half the elements it must be the whole group.
bool generates_pair(const FiniteGroup& g, elem_t x, elem_t y);

/// Same predicate through the maximal subgroups: a pair generates iff no
/// maximal subgroup contains both.
bool generates_pair(const FiniteGroup& g, const SubgroupLattice& lat, elem_t x, elem_t y);

bool is_two_generated(const FiniteGroup& g, const SubgroupLattice* lat = nullptr);

/// A Sylow p-subgroup, grown by adjoining normalizing p-elements.  Any
/// valid Sylow subgroup may be returned.
Subgroup sylow_subgroup(const FiniteGroup& g, std::uint32_t p);

/// x = x_p * x_p' as commuting p-part and p'-part (powers of x).
std::pair<elem_t, elem_t> p_decompose(const FiniteGroup& g, elem_t x, std::uint32_t p);

}  // namespace ncg
