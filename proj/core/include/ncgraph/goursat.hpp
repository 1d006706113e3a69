#pragma once

#include <optional>
#include <vector>

#include "ncgraph/lattice.hpp"

namespace ncg {

enum class GoursatKind { left, right, diagonal };

/// Description of one maximal subgroup of a direct product G x H:
///   left:     M_G x H for a maximal M_G of G
///   right:    G x M_H for a maximal M_H of H
///   diagonal: {(g,h) : theta(N1 g) = N2 h} for maximal normal N1, N2 with
///             isomorphic prime-cyclic quotients; theta sends a fixed
///             generator coset of G/N1 to the theta_power-th power of a
///             fixed generator coset of H/N2.
struct GoursatTriple {
  GoursatKind kind = GoursatKind::left;
  std::uint32_t left_id = 0;      // lattice id in latG (kind left)
  std::uint32_t right_id = 0;     // lattice id in latH (kind right)
  std::uint32_t n1_id = 0;        // lattice id in latG (kind diagonal)
  std::uint32_t n2_id = 0;        // lattice id in latH (kind diagonal)
  std::uint32_t prime = 0;        // quotient order q (kind diagonal)
  std::uint32_t theta_power = 0;  // 1..q-1 (kind diagonal)
};

/// All maximal subgroups of G x H from the factor lattices, as member sets
/// of `product` (which must be direct_product(g, h), index (a,b) = a*|H|+b).
/// Member sets are deduplicated.  Throws if some maximal normal subgroup has
/// non-prime index (a non-cyclic simple quotient; outside supported scope).
std::vector<std::pair<GoursatTriple, Subgroup>> goursat_maximal_subgroups(
    const FiniteGroup& g, const FiniteGroup& h, const SubgroupLattice& lat_g,
    const SubgroupLattice& lat_h, const FiniteGroup& product);

struct UniqueMaximalResult {
  bool unique = false;
  /// Lattice id (in lat_g) of the unique maximal subgroup M_G of G
  /// containing x; the corresponding maximal of G x H is M_G x H.
  std::optional<std::uint32_t> witness_id;
};

/// Whether (x, y) lies in a unique maximal subgroup of G x H, evaluated by
/// the three-clause criterion: <y> = H; x lies in a unique maximal M_G of G;
/// and every normal maximal subgroup of G whose index divides |H| equals
/// M_G.  Throws when G is cyclic (theorem hypothesis violation).
UniqueMaximalResult unique_maximal_membership(const FiniteGroup& g,
                                              const FiniteGroup& h,
                                              const SubgroupLattice& lat_g,
                                              const SubgroupLattice& lat_h,
                                              elem_t x, elem_t y);

/// Ids of maximal subgroups L of G with L normal and |G:L| dividing m.
std::vector<std::uint32_t> normal_maximals_with_index_dividing(
    const SubgroupLattice& lat_g, std::uint32_t m);

}  // namespace ncg
