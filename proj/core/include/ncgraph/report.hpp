#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "ncgraph/checks.hpp"
#include "ncgraph/graph.hpp"

namespace ncg {

/// Undirected DOT text: kind and group in a comment header, vertices
/// labeled e<index> with the element order as an attribute, one edge line
/// per unordered pair, everything in ascending index order.
void export_dot(const ElementGraph& g, std::ostream& os);
void export_dot(const ElementGraph& g, const std::filesystem::path& path);

struct GraphStats {
  GraphKind kind = GraphKind::nc;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  Diameter diameter;
  std::size_t isolated = 0;
};
GraphStats graph_stats(const ElementGraph& g, const ComponentSummary& s);

struct GroupSection {
  std::string group;
  std::uint32_t order = 0;
  std::string predicates;      // empty when not computed
  std::string p_group_case;    // "-" when not applicable
  std::string nilpotent_case;  // "-" when not applicable
  std::vector<GraphStats> graphs;
  std::vector<Verdict> checks;
};

struct Report {
  std::string command;
  std::vector<GroupSection> sections;  // rendered sorted by group name
};

/// Byte-deterministic plain-text rendering; identical inputs give identical
/// bytes.
std::string render_report(const Report& report);
void export_report(const Report& report, const std::filesystem::path& path);

}  // namespace ncg
