#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncgraph/graph.hpp"
#include "ncgraph/structure.hpp"

namespace ncg {

/// Trichotomy (with sub-trichotomy) for a finite p-group.
enum class PGroupCase {
  i_abelian_or_minimal,
  ii_not_two_generated,
  iiia_abelian_maximal,
  iiib_all_centres_equal,
  iiic_centre_exceeds,
};
const char* to_string(PGroupCase c);

/// What a classification predicts about nc(G) or nd(G).
struct GraphPrediction {
  GraphKind target = GraphKind::nc;
  bool empty_graph = false;  // no vertices at all
  bool no_edges = false;
  std::optional<std::uint32_t> diameter;  // connected with exactly this diameter
  /// Exact isolated-vertex set of nc(G) when predicted.
  std::optional<std::vector<elem_t>> isolated;
};

struct PGroupClassification {
  PGroupCase kase = PGroupCase::i_abelian_or_minimal;
  std::uint32_t p = 0;
  GraphPrediction prediction;
  /// Lattice id of the abelian maximal subgroup (case iii(a)).
  std::optional<std::uint32_t> abelian_maximal_id;
};

/// Case analysis for a nontrivial finite p-group; evaluates every case
/// predicate by brute force and requires the trichotomy to pick exactly one.
PGroupClassification classify_p_group(const FiniteGroup& g, const SubgroupLattice& lat);

enum class NilpotentCase {
  i_abelian,
  ii_two_noncyclic_sylows,
  iiia_no_isolated_in_sylow,
  iiib_isolated_in_sylow,
};
const char* to_string(NilpotentCase c);

struct NilpotentClassification {
  NilpotentCase kase = NilpotentCase::i_abelian;
  GraphPrediction prediction;
  std::uint32_t sylow_prime = 0;  // prime of the non-abelian Sylow (case iii)
  std::uint32_t cyclic_part_order = 0;
};

/// Case analysis for a finite nilpotent group with at least two prime
/// divisors.  For case iii the non-abelian Sylow subgroup is materialized
/// and its nc graph computed.
NilpotentClassification classify_nilpotent(const FiniteGroup& g,
                                           std::uint32_t lattice_cap = kDefaultLatticeCap);

}  // namespace ncg
