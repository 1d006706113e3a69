#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncgraph/lattice.hpp"

namespace ncg {

enum class GraphKind {
  power,
  enhanced_power,
  commuting,
  non_generating,
  complete,
  generating,
  non_commuting,
  nc,
  nd,
};

const char* to_string(GraphKind k);
std::optional<GraphKind> graph_kind_from_string(const std::string& s);

/// A simple undirected graph on a subset of a group's elements, with dense
/// adjacency rows over vertex positions.
struct ElementGraph {
  const FiniteGroup* group = nullptr;
  GraphKind kind = GraphKind::nc;
  std::vector<elem_t> vertices;       // ascending element indices
  std::vector<std::int32_t> pos;      // element -> vertex position, -1 if absent
  std::vector<DynBitset> adj;

  bool has_vertex(elem_t x) const {
    return x < pos.size() && pos[x] >= 0;
  }
  std::size_t degree(std::size_t v) const { return adj[v].count(); }
  std::size_t edge_count() const;
  std::vector<elem_t> isolated_vertices() const;
};

/// Builds the requested graph.  Vertex sets: G \ {1} for the hierarchy
/// kinds (power .. complete, generating), G \ Z(G) for non_commuting and
/// nc, and the non-isolated vertices of nc for nd.  A lattice, when given,
/// provides the generation test through the maximal subgroups; otherwise
/// pairs are closed directly.
ElementGraph build_graph(const FiniteGroup& g, GraphKind kind,
                         const SubgroupLattice* lattice = nullptr);

/// Overall diameter: a number for a connected non-empty graph, a marker
/// otherwise.
struct Diameter {
  enum class Kind { empty, disconnected, finite } kind = Kind::empty;
  std::uint32_t value = 0;

  static Diameter empty() { return {}; }
  static Diameter disconnected() { return {Kind::disconnected, 0}; }
  static Diameter finite(std::uint32_t v) { return {Kind::finite, v}; }
  bool is_finite(std::uint32_t v) const { return kind == Kind::finite && value == v; }
  bool operator==(const Diameter&) const = default;
};
std::string to_string(const Diameter& d);

struct ComponentSummary {
  std::size_t component_count = 0;
  std::vector<std::uint32_t> sizes;      // by smallest contained vertex
  std::vector<std::uint32_t> diameters;  // aligned with sizes
  std::vector<elem_t> isolated_vertex_ids;
  Diameter overall;

  bool connected() const { return component_count == 1; }
};

/// Components by flood fill, exact per-component diameters by BFS from
/// every vertex.
ComponentSummary component_summary(const ElementGraph& g);

/// BFS shortest-path length between two vertices (element indices);
/// nullopt when unreachable.  Throws when either is not a vertex.
std::optional<std::uint32_t> distance(const ElementGraph& g, elem_t x, elem_t y);

/// All-pairs distances over vertex positions; 0xFFFF marks "unreachable".
std::vector<std::vector<std::uint16_t>> all_pairs_distances(const ElementGraph& g);

/// Induced subgraph on the given element indices (must be vertices).
ElementGraph induced_subgraph(const ElementGraph& g, const std::vector<elem_t>& verts);

/// Edge-subset relations between consecutive hierarchy graphs on G \ {1}.
/// commuting <= non_generating can fail exactly when G is 2-generated and
/// abelian; that case is flagged rather than asserted.
struct HierarchyReport {
  bool power_in_enhanced = false;
  bool enhanced_in_commuting = false;
  bool commuting_in_non_generating = false;
  bool non_generating_in_complete = false;
  bool exception_case = false;  // 2-generated and abelian
};
HierarchyReport hierarchy_check(const FiniteGroup& g,
                                const SubgroupLattice* lattice = nullptr);

}  // namespace ncg
