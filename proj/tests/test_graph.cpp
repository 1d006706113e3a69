#include "doctest.h"

#include "ncgraph/corpus.hpp"
#include "ncgraph/graph.hpp"

using namespace ncg;

TEST_CASE("nc vertex sets") {
  // abelian: no vertices at all
  FiniteGroup c12 = builtin("C12");
  CHECK(build_graph(c12, GraphKind::nc).vertices.empty());

  // minimal non-abelian: vertices but no edges
  FiniteGroup q8 = builtin("Q8");
  ElementGraph nc = build_graph(q8, GraphKind::nc);
  CHECK(nc.vertices.size() == 6);
  CHECK(nc.edge_count() == 0);

  FiniteGroup s4 = builtin("S4");
  CHECK(build_graph(s4, GraphKind::nc).vertices.size() == 23);
}

TEST_CASE("edge-set identities across kinds") {
  for (const char* spec : {"S3", "S4", "Q8", "D12", "Heis3", "C8"}) {
    FiniteGroup g = builtin(spec);
    SubgroupLattice lat = all_subgroups(g);
    ElementGraph nc = build_graph(g, GraphKind::nc, &lat);
    ElementGraph nongen = build_graph(g, GraphKind::non_generating, &lat);
    ElementGraph commuting = build_graph(g, GraphKind::commuting, &lat);
    ElementGraph generating = build_graph(g, GraphKind::generating, &lat);
    ElementGraph complete = build_graph(g, GraphKind::complete, &lat);

    // generating = complete minus non_generating
    for (std::size_t v = 0; v < complete.vertices.size(); ++v) {
      DynBitset want = complete.adj[v];
      want.and_not(nongen.adj[v]);
      CHECK(want == generating.adj[v]);
    }
    // nc = (non_generating minus commuting) restricted to non-central vertices
    for (std::size_t v = 0; v < nc.vertices.size(); ++v) {
      elem_t x = nc.vertices[v];
      DynBitset want(nc.vertices.size());
      nongen.adj[nongen.pos[x]].for_each_set([&](std::size_t w) {
        elem_t y = nongen.vertices[w];
        if (nc.has_vertex(y) && !commuting.adj[commuting.pos[x]].test(w))
          want.set(nc.pos[y]);
      });
      CHECK(want == nc.adj[v]);
    }
  }
}

TEST_CASE("generation edges agree with and without a lattice") {
  for (const char* spec : {"S4", "D16", "C6"}) {
    FiniteGroup g = builtin(spec);
    SubgroupLattice lat = all_subgroups(g);
    ElementGraph with = build_graph(g, GraphKind::nc, &lat);
    ElementGraph without = build_graph(g, GraphKind::nc, nullptr);
    CHECK(with.adj == without.adj);
  }
}

TEST_CASE("component summary: edgeless graph") {
  FiniteGroup q8 = builtin("Q8");
  ComponentSummary s = component_summary(build_graph(q8, GraphKind::nc));
  CHECK(s.component_count == 6);
  CHECK(s.isolated_vertex_ids.size() == 6);
  CHECK(s.overall == Diameter::disconnected());
  for (std::uint32_t d : s.diameters) CHECK(d == 0);
}

TEST_CASE("component summary: empty graph") {
  FiniteGroup c5 = builtin("C5");
  ComponentSummary s = component_summary(build_graph(c5, GraphKind::nc));
  CHECK(s.component_count == 0);
  CHECK(s.overall == Diameter::empty());
  ComponentSummary nd = component_summary(build_graph(c5, GraphKind::nd));
  CHECK(nd.overall == Diameter::empty());
}

TEST_CASE("nc(S4) is connected with diameter 3") {
  FiniteGroup s4 = builtin("S4");
  SubgroupLattice lat = all_subgroups(s4);
  ElementGraph nc = build_graph(s4, GraphKind::nc, &lat);
  ComponentSummary s = component_summary(nc);
  CHECK(s.connected());
  CHECK(s.overall == Diameter::finite(3));

  // some pair realizes distance 3
  bool found = false;
  auto dist = all_pairs_distances(nc);
  for (std::size_t i = 0; i < nc.vertices.size() && !found; ++i)
    for (std::size_t j = 0; j < nc.vertices.size() && !found; ++j)
      if (dist[i][j] == 3) {
        found = true;
        CHECK(distance(nc, nc.vertices[i], nc.vertices[j]) == 3);
      }
  CHECK(found);
}

TEST_CASE("nd of nc(D16) is connected with diameter 2") {
  FiniteGroup g = builtin("D16");
  SubgroupLattice lat = all_subgroups(g);
  ElementGraph nc = build_graph(g, GraphKind::nc, &lat);
  CHECK(nc.isolated_vertices().size() == 4);
  for (elem_t v : nc.isolated_vertices()) CHECK(g.element_order(v) == 8);
  ElementGraph nd = build_graph(g, GraphKind::nd, &lat);
  CHECK(nd.vertices.size() == nc.vertices.size() - 4);
  CHECK(nd.isolated_vertices().empty());
  ComponentSummary s = component_summary(nd);
  CHECK(s.connected());
  CHECK(s.overall == Diameter::finite(2));
}

TEST_CASE("distance basics and errors") {
  FiniteGroup s4 = builtin("S4");
  ElementGraph nc = build_graph(s4, GraphKind::nc);
  elem_t v0 = nc.vertices[0];
  CHECK(distance(nc, v0, v0) == 0);
  std::size_t nb = nc.adj[0].first_set();
  CHECK(distance(nc, v0, nc.vertices[nb]) == 1);
  CHECK_THROWS_AS(distance(nc, kIdentity, v0), std::invalid_argument);

  // unreachable pairs in a disconnected graph
  FiniteGroup d16 = builtin("D16");
  ElementGraph d16nc = build_graph(d16, GraphKind::nc);
  elem_t iso = d16nc.isolated_vertices()[0];
  elem_t other = 0;
  for (std::size_t v = 0; v < d16nc.vertices.size(); ++v)
    if (d16nc.adj[v].any()) other = d16nc.vertices[v];
  CHECK(!distance(d16nc, iso, other).has_value());
}

TEST_CASE("hierarchy chain") {
  for (const char* spec : {"S4", "Q8", "C5", "Heis3", "D12"}) {
    FiniteGroup g = builtin(spec);
    SubgroupLattice lat = all_subgroups(g);
    HierarchyReport rep = hierarchy_check(g, &lat);
    CHECK_MESSAGE(rep.power_in_enhanced, spec);
    CHECK_MESSAGE(rep.enhanced_in_commuting, spec);
    CHECK_MESSAGE(rep.non_generating_in_complete, spec);
    if (!rep.exception_case) CHECK_MESSAGE(rep.commuting_in_non_generating, spec);
  }
  // documented exception: 2-generated abelian
  FiniteGroup k4 = builtin("C2xC2");
  HierarchyReport rep = hierarchy_check(k4);
  CHECK(rep.exception_case);
  CHECK(!rep.commuting_in_non_generating);
  // cyclic groups are 2-generated and abelian too: flagged, chain reported
  HierarchyReport c5 = hierarchy_check(builtin("C5"));
  CHECK(c5.exception_case);
}

TEST_CASE("no nc component has diameter 1") {
  for (const char* spec : {"S3", "S4", "A4", "D8", "D12", "D16", "Q8", "Q16", "Heis3",
                           "D8xC3", "S3xC2"}) {
    FiniteGroup g = builtin(spec);
    ComponentSummary s = component_summary(build_graph(g, GraphKind::nc));
    for (std::uint32_t d : s.diameters) CHECK_MESSAGE(d != 1, spec);
  }
}

TEST_CASE("non-commuting graph of a non-abelian group: connected, diameter 2") {
  for (const char* spec : {"S3", "S4", "A4", "D8", "Q16", "Heis3", "D8xC3"}) {
    FiniteGroup g = builtin(spec);
    ComponentSummary s = component_summary(build_graph(g, GraphKind::non_commuting));
    CHECK_MESSAGE(s.connected(), spec);
    CHECK_MESSAGE(s.overall == Diameter::finite(2), spec);
  }
}

TEST_CASE("nd never keeps an isolated vertex") {
  for (const char* spec : {"D16", "Q8", "D8xC3", "S4"}) {
    FiniteGroup g = builtin(spec);
    ElementGraph nc = build_graph(g, GraphKind::nc);
    ElementGraph nd = build_graph(g, GraphKind::nd);
    CHECK(nd.isolated_vertices().empty());
    CHECK(nd.vertices.size() == nc.vertices.size() - nc.isolated_vertices().size());
    CHECK(nd.edge_count() == nc.edge_count());
  }
}

TEST_CASE("generating graph of nilpotent 2-generated non-abelian groups") {
  // non-isolated part of the generating graph: connected with diameter <= 2
  for (const char* spec : {"D8", "Q8", "D16", "Q16", "Heis3"}) {
    FiniteGroup g = builtin(spec);
    SubgroupLattice lat = all_subgroups(g);
    ElementGraph gen = build_graph(g, GraphKind::generating, &lat);
    std::vector<elem_t> keep;
    for (std::size_t v = 0; v < gen.vertices.size(); ++v)
      if (gen.adj[v].any()) keep.push_back(gen.vertices[v]);
    REQUIRE_MESSAGE(!keep.empty(), spec);
    ComponentSummary s = component_summary(induced_subgraph(gen, keep));
    CHECK_MESSAGE(s.connected(), spec);
    REQUIRE(s.overall.kind == Diameter::Kind::finite);
    CHECK_MESSAGE(s.overall.value <= 2, spec);
  }
}

TEST_CASE("power and enhanced power edges on C6") {
  FiniteGroup c6 = builtin("C6");
  ElementGraph power = build_graph(c6, GraphKind::power);
  ElementGraph enhanced = build_graph(c6, GraphKind::enhanced_power);
  // every pair lies in <generator>, so both are complete on 5 vertices
  CHECK(enhanced.edge_count() == 10);
  CHECK(power.edge_count() == 10);  // cyclic: power graph is complete
  // by contrast on the Klein group the power graph is empty
  FiniteGroup k4 = builtin("C2xC2");
  CHECK(build_graph(k4, GraphKind::power).edge_count() == 0);
  CHECK(build_graph(k4, GraphKind::enhanced_power).edge_count() == 0);
  CHECK(build_graph(k4, GraphKind::commuting).edge_count() == 3);
}
