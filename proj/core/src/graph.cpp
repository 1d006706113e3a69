#include "ncgraph/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "ncgraph/structure.hpp"

namespace ncg {

const char* to_string(GraphKind k) {
  switch (k) {
    case GraphKind::power: return "power";
    case GraphKind::enhanced_power: return "enhanced_power";
    case GraphKind::commuting: return "commuting";
    case GraphKind::non_generating: return "non_generating";
    case GraphKind::complete: return "complete";
    case GraphKind::generating: return "generating";
    case GraphKind::non_commuting: return "non_commuting";
    case GraphKind::nc: return "nc";
    case GraphKind::nd: return "nd";
  }
  return "?";
}

std::optional<GraphKind> graph_kind_from_string(const std::string& s) {
  for (GraphKind k : {GraphKind::power, GraphKind::enhanced_power, GraphKind::commuting,
                      GraphKind::non_generating, GraphKind::complete, GraphKind::generating,
                      GraphKind::non_commuting, GraphKind::nc, GraphKind::nd})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

std::string to_string(const Diameter& d) {
  switch (d.kind) {
    case Diameter::Kind::empty: return "empty";
    case Diameter::Kind::disconnected: return "disconnected";
    case Diameter::Kind::finite: return std::to_string(d.value);
  }
  return "?";
}

std::size_t ElementGraph::edge_count() const {
  std::size_t deg = 0;
  for (const auto& row : adj) deg += row.count();
  return deg / 2;
}

std::vector<elem_t> ElementGraph::isolated_vertices() const {
  std::vector<elem_t> out;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (adj[v].none()) out.push_back(vertices[v]);
  return out;
}

namespace {

ElementGraph make_frame(const FiniteGroup& g, GraphKind kind, std::vector<elem_t> verts) {
  ElementGraph out;
  out.group = &g;
  out.kind = kind;
  out.vertices = std::move(verts);
  out.pos.assign(g.order(), -1);
  for (std::size_t i = 0; i < out.vertices.size(); ++i)
    out.pos[out.vertices[i]] = static_cast<std::int32_t>(i);
  out.adj.assign(out.vertices.size(), DynBitset(out.vertices.size()));
  return out;
}

std::vector<elem_t> nonidentity_vertices(const FiniteGroup& g) {
  std::vector<elem_t> v;
  for (elem_t x = 1; x < g.order(); ++x) v.push_back(x);
  return v;
}

std::vector<elem_t> noncentral_vertices(const FiniteGroup& g) {
  Subgroup z = center(g);
  std::vector<elem_t> v;
  for (elem_t x = 0; x < g.order(); ++x)
    if (!z.members.test(x)) v.push_back(x);
  return v;
}

/// cyc[x] = member set of <x>.
std::vector<DynBitset> cyclic_subgroup_bits(const FiniteGroup& g) {
  std::vector<DynBitset> cyc(g.order(), DynBitset(g.order()));
  for (elem_t x = 0; x < g.order(); ++x) {
    elem_t y = kIdentity;
    do {
      cyc[x].set(y);
      y = g.product(y, x);
    } while (y != kIdentity);
  }
  return cyc;
}

void add_edge(ElementGraph& gr, std::size_t i, std::size_t j) {
  gr.adj[i].set(j);
  gr.adj[j].set(i);
}

void fill_pairwise(ElementGraph& gr, const FiniteGroup& g,
                   const SubgroupLattice* lattice, GraphKind kind) {
  const auto& vs = gr.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const elem_t x = vs[i], y = vs[j];
      bool edge = false;
      switch (kind) {
        case GraphKind::commuting: edge = g.commute(x, y); break;
        case GraphKind::non_commuting: edge = !g.commute(x, y); break;
        case GraphKind::complete: edge = true; break;
        case GraphKind::non_generating:
          edge = lattice ? !generates_pair(g, *lattice, x, y) : !generates_pair(g, x, y);
          break;
        case GraphKind::generating:
          edge = lattice ? generates_pair(g, *lattice, x, y) : generates_pair(g, x, y);
          break;
        case GraphKind::nc:
          edge = !g.commute(x, y) &&
                 (lattice ? !generates_pair(g, *lattice, x, y) : !generates_pair(g, x, y));
          break;
        default: break;
      }
      if (edge) add_edge(gr, i, j);
    }
}

}  // namespace

ElementGraph build_graph(const FiniteGroup& g, GraphKind kind,
                         const SubgroupLattice* lattice) {
  switch (kind) {
    case GraphKind::power: {
      ElementGraph gr = make_frame(g, kind, nonidentity_vertices(g));
      auto cyc = cyclic_subgroup_bits(g);
      const auto& vs = gr.vertices;
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
          if (cyc[vs[j]].test(vs[i]) || cyc[vs[i]].test(vs[j])) add_edge(gr, i, j);
      return gr;
    }
    case GraphKind::enhanced_power: {
      ElementGraph gr = make_frame(g, kind, nonidentity_vertices(g));
      auto cyc = cyclic_subgroup_bits(g);
      // row(x) accumulates every <z> containing x
      std::vector<DynBitset> reach(g.order(), DynBitset(g.order()));
      for (elem_t z = 0; z < g.order(); ++z)
        cyc[z].for_each_set([&](std::size_t x) { reach[x] |= cyc[z]; });
      const auto& vs = gr.vertices;
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
          if (reach[vs[i]].test(vs[j])) add_edge(gr, i, j);
      return gr;
    }
    case GraphKind::commuting:
    case GraphKind::non_generating:
    case GraphKind::complete:
    case GraphKind::generating: {
      ElementGraph gr = make_frame(g, kind, nonidentity_vertices(g));
      fill_pairwise(gr, g, lattice, kind);
      return gr;
    }
    case GraphKind::non_commuting:
    case GraphKind::nc: {
      ElementGraph gr = make_frame(g, kind, noncentral_vertices(g));
      fill_pairwise(gr, g, lattice, kind);
      return gr;
    }
    case GraphKind::nd: {
      ElementGraph nc = build_graph(g, GraphKind::nc, lattice);
      std::vector<elem_t> keep;
      for (std::size_t v = 0; v < nc.vertices.size(); ++v)
        if (nc.adj[v].any()) keep.push_back(nc.vertices[v]);
      ElementGraph gr = induced_subgraph(nc, keep);
      gr.kind = GraphKind::nd;
      return gr;
    }
  }
  throw std::invalid_argument("unknown graph kind");
}

ElementGraph induced_subgraph(const ElementGraph& g, const std::vector<elem_t>& verts) {
  ElementGraph out;
  out.group = g.group;
  out.kind = g.kind;
  out.vertices = verts;
  std::sort(out.vertices.begin(), out.vertices.end());
  out.pos.assign(g.pos.size(), -1);
  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    if (!g.has_vertex(out.vertices[i]))
      throw std::invalid_argument("vertex not in graph");
    out.pos[out.vertices[i]] = static_cast<std::int32_t>(i);
  }
  out.adj.assign(out.vertices.size(), DynBitset(out.vertices.size()));
  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    const DynBitset& row = g.adj[g.pos[out.vertices[i]]];
    for (std::size_t j = i + 1; j < out.vertices.size(); ++j)
      if (row.test(g.pos[out.vertices[j]])) add_edge(out, i, j);
  }
  return out;
}

namespace {

/// BFS from `src` over positions; returns eccentricity and visited set.
std::pair<std::uint32_t, DynBitset> bfs(const ElementGraph& g, std::size_t src) {
  DynBitset visited(g.vertices.size());
  DynBitset frontier(g.vertices.size());
  visited.set(src);
  frontier.set(src);
  std::uint32_t level = 0;
  for (;;) {
    DynBitset next(g.vertices.size());
    frontier.for_each_set([&](std::size_t v) { next |= g.adj[v]; });
    next.and_not(visited);
    if (next.none()) break;
    visited |= next;
    frontier = std::move(next);
    ++level;
  }
  return {level, std::move(visited)};
}

}  // namespace

ComponentSummary component_summary(const ElementGraph& g) {
  ComponentSummary out;
  const std::size_t nv = g.vertices.size();
  if (nv == 0) {
    out.overall = Diameter::empty();
    return out;
  }
  DynBitset seen(nv);
  std::uint32_t max_diam = 0;
  for (std::size_t v = 0; v < nv; ++v) {
    if (seen.test(v)) continue;
    auto [ecc0, comp] = bfs(g, v);
    std::uint32_t diam = ecc0;
    comp.for_each_set([&](std::size_t u) {
      if (u != v) diam = std::max(diam, bfs(g, u).first);
    });
    out.sizes.push_back(static_cast<std::uint32_t>(comp.count()));
    out.diameters.push_back(diam);
    max_diam = std::max(max_diam, diam);
    seen |= comp;
  }
  out.component_count = out.sizes.size();
  out.isolated_vertex_ids = g.isolated_vertices();
  out.overall = out.component_count == 1 ? Diameter::finite(max_diam)
                                         : Diameter::disconnected();
  return out;
}

std::optional<std::uint32_t> distance(const ElementGraph& g, elem_t x, elem_t y) {
  if (!g.has_vertex(x) || !g.has_vertex(y))
    throw std::invalid_argument("vertex not in graph");
  const std::size_t src = static_cast<std::size_t>(g.pos[x]);
  const std::size_t dst = static_cast<std::size_t>(g.pos[y]);
  if (src == dst) return 0;
  DynBitset visited(g.vertices.size());
  DynBitset frontier(g.vertices.size());
  visited.set(src);
  frontier.set(src);
  std::uint32_t level = 0;
  for (;;) {
    DynBitset next(g.vertices.size());
    frontier.for_each_set([&](std::size_t v) { next |= g.adj[v]; });
    next.and_not(visited);
    if (next.none()) return std::nullopt;
    ++level;
    if (next.test(dst)) return level;
    visited |= next;
    frontier = std::move(next);
  }
}

std::vector<std::vector<std::uint16_t>> all_pairs_distances(const ElementGraph& g) {
  const std::size_t nv = g.vertices.size();
  std::vector<std::vector<std::uint16_t>> dist(nv, std::vector<std::uint16_t>(nv, 0xFFFF));
  for (std::size_t s = 0; s < nv; ++s) {
    auto& row = dist[s];
    row[s] = 0;
    DynBitset visited(nv), frontier(nv);
    visited.set(s);
    frontier.set(s);
    std::uint16_t level = 0;
    for (;;) {
      DynBitset next(nv);
      frontier.for_each_set([&](std::size_t v) { next |= g.adj[v]; });
      next.and_not(visited);
      if (next.none()) break;
      ++level;
      next.for_each_set([&](std::size_t v) { row[v] = level; });
      visited |= next;
      frontier = std::move(next);
    }
  }
  return dist;
}

HierarchyReport hierarchy_check(const FiniteGroup& g, const SubgroupLattice* lattice) {
  ElementGraph power = build_graph(g, GraphKind::power, lattice);
  ElementGraph enhanced = build_graph(g, GraphKind::enhanced_power, lattice);
  ElementGraph commuting = build_graph(g, GraphKind::commuting, lattice);
  ElementGraph nongen = build_graph(g, GraphKind::non_generating, lattice);

  auto subset = [](const ElementGraph& a, const ElementGraph& b) {
    for (std::size_t v = 0; v < a.adj.size(); ++v)
      if (!a.adj[v].is_subset_of(b.adj[v])) return false;
    return true;
  };

  HierarchyReport rep;
  rep.power_in_enhanced = subset(power, enhanced);
  rep.enhanced_in_commuting = subset(enhanced, commuting);
  rep.commuting_in_non_generating = subset(commuting, nongen);
  rep.non_generating_in_complete = true;
  bool abelian = center(g).order == g.order();
  rep.exception_case = abelian && is_two_generated(g, lattice);
  return rep;
}

}  // namespace ncg
