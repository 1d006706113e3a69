#include "ncgraph/checks.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace ncg {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not_applicable";
  }
  return "?";
}

const std::vector<std::string>& all_check_ids() {
  static const std::vector<std::string> ids = {
      "P2.1", "P2.2", "C2.3", "C2.4", "P2.5", "P3.1", "P3.2", "L3.3", "T3.5",
      "T1.1", "L4.1", "T1.2", "L5.1", "P5.2", "L5.3", "T5.4", "C5.5", "T1.3"};
  return ids;
}

GroupContext::GroupContext(std::shared_ptr<const FiniteGroup> group,
                           std::uint32_t lattice_cap)
    : group_(std::move(group)), lattice_cap_(lattice_cap) {}

void GroupContext::set_factors(std::shared_ptr<GroupContext> left,
                               std::shared_ptr<GroupContext> right) {
  left_ = std::move(left);
  right_ = std::move(right);
}

const SubgroupLattice& GroupContext::lattice() {
  if (!lattice_) lattice_ = all_subgroups(*group_, lattice_cap_);
  return *lattice_;
}

const StructuralPredicates& GroupContext::predicates() {
  if (!predicates_) predicates_ = structural_predicates(*group_, lattice());
  return *predicates_;
}

const DynBitset& GroupContext::centre() {
  if (!centre_) centre_ = center(*group_).members;
  return *centre_;
}

const ElementGraph& GroupContext::graph(GraphKind kind) {
  auto it = graphs_.find(kind);
  if (it != graphs_.end()) return it->second;
  const SubgroupLattice* lat = lattice_available() ? &lattice() : nullptr;
  if (kind == GraphKind::nd) {
    const ElementGraph& nc = graph(GraphKind::nc);
    std::vector<elem_t> keep;
    for (std::size_t v = 0; v < nc.vertices.size(); ++v)
      if (nc.adj[v].any()) keep.push_back(nc.vertices[v]);
    ElementGraph nd = induced_subgraph(nc, keep);
    nd.kind = GraphKind::nd;
    return graphs_.emplace(kind, std::move(nd)).first->second;
  }
  return graphs_.emplace(kind, build_graph(*group_, kind, lat)).first->second;
}

const ComponentSummary& GroupContext::summary(GraphKind kind) {
  auto it = summaries_.find(kind);
  if (it != summaries_.end()) return it->second;
  return summaries_.emplace(kind, component_summary(graph(kind))).first->second;
}

const std::vector<std::vector<std::uint16_t>>& GroupContext::nc_distances() {
  if (!nc_dist_) nc_dist_ = all_pairs_distances(graph(GraphKind::nc));
  return *nc_dist_;
}

const std::vector<DynBitset>& GroupContext::maximal_centres() {
  if (!maximal_centres_) {
    const SubgroupLattice& lat = lattice();
    std::vector<DynBitset> zs;
    zs.reserve(lat.maximal_ids.size());
    for (std::uint32_t id : lat.maximal_ids)
      zs.push_back(centre_of_members(*group_, lat.subgroups[id].members));
    maximal_centres_ = std::move(zs);
  }
  return *maximal_centres_;
}

const std::vector<DynBitset>& GroupContext::contains_not_centralizing() {
  if (!cnc_) {
    const SubgroupLattice& lat = lattice();
    const auto& zs = maximal_centres();
    std::vector<DynBitset> out(group_->order(), DynBitset(lat.maximal_ids.size()));
    for (std::size_t k = 0; k < lat.maximal_ids.size(); ++k) {
      const DynBitset& mem = lat.subgroups[lat.maximal_ids[k]].members;
      mem.for_each_set([&](std::size_t x) {
        if (!zs[k].test(x)) out[x].set(k);
      });
    }
    cnc_ = std::move(out);
  }
  return *cnc_;
}

std::optional<PGroupClassification> GroupContext::p_group_classification() {
  if (!classified_p_) {
    classified_p_ = true;
    if (group_->order() > 1 && factorize(group_->order()).size() == 1)
      p_class_ = classify_p_group(*group_, lattice());
  }
  return p_class_;
}

std::optional<NilpotentClassification> GroupContext::nilpotent_classification() {
  if (!classified_nilp_) {
    classified_nilp_ = true;
    if (factorize(group_->order()).size() >= 2 && is_nilpotent_p_closure(*group_))
      nilp_class_ = classify_nilpotent(*group_, lattice_cap_);
  }
  return nilp_class_;
}

namespace {

Verdict make(const std::string& id, GroupContext& ctx, CheckStatus st,
             std::string predicted, std::string observed, std::string detail = "") {
  return Verdict{id, ctx.group().name(), st, std::move(predicted), std::move(observed),
                 std::move(detail)};
}

Verdict na(const std::string& id, GroupContext& ctx, std::string why) {
  return make(id, ctx, CheckStatus::not_applicable, "-", "-", std::move(why));
}

std::string summary_string(const ComponentSummary& s) {
  std::ostringstream os;
  os << "components=" << s.component_count << " diameter=" << to_string(s.overall)
     << " isolated=" << s.isolated_vertex_ids.size();
  return os.str();
}

/// "connected with diameter 2", asserted as: connected, diameter <= 2, and
/// exactly 2 when the graph has at least two vertices.
bool connected_diameter_two(const ComponentSummary& s, std::size_t vertex_count) {
  if (!s.connected() || s.overall.kind != Diameter::Kind::finite) return false;
  if (s.overall.value > 2) return false;
  return vertex_count < 2 || s.overall.value == 2;
}

bool sets_equal(const std::vector<elem_t>& a, const std::vector<elem_t>& b) {
  return a == b;  // both ascending by construction
}

std::string ids_string(const std::vector<elem_t>& v, std::size_t limit = 12) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size() && i < limit; ++i) {
    if (i) os << ",";
    os << v[i];
  }
  if (v.size() > limit) os << ",...";
  os << "}";
  return os.str();
}

// --- individual checks ----------------------------------------------------

Verdict check_p21(GroupContext& ctx) {
  const ComponentSummary& s = ctx.summary(GraphKind::nc);
  if (ctx.graph(GraphKind::nc).vertices.empty())
    return na("P2.1", ctx, "nc has no vertices");
  for (std::size_t c = 0; c < s.diameters.size(); ++c)
    if (s.diameters[c] == 1)
      return make("P2.1", ctx, CheckStatus::fail, "no component of diameter 1",
                  "component of diameter 1",
                  "component index " + std::to_string(c));
  return make("P2.1", ctx, CheckStatus::pass, "no component of diameter 1",
              summary_string(s));
}

Verdict check_p22(GroupContext& ctx) {
  if (ctx.centre().count() == ctx.group().order())
    return na("P2.2", ctx, "abelian");
  const ElementGraph& g = ctx.graph(GraphKind::non_commuting);
  const ComponentSummary& s = ctx.summary(GraphKind::non_commuting);
  bool ok = connected_diameter_two(s, g.vertices.size());
  return make("P2.2", ctx, ok ? CheckStatus::pass : CheckStatus::fail,
              "connected, diameter 2", summary_string(s));
}

Verdict check_c23(GroupContext& ctx) {
  const SubgroupLattice& lat = ctx.lattice();
  const ElementGraph& nc = ctx.graph(GraphKind::nc);
  std::size_t tested = 0;
  for (std::size_t i = 0; i + 1 < lat.subgroups.size(); ++i) {
    if (lat.abelian[i]) continue;
    ++tested;
    DynBitset verts = lat.subgroups[i].members;
    verts.and_not(centre_of_members(ctx.group(), lat.subgroups[i].members));
    std::vector<elem_t> ids;
    verts.for_each_set([&](std::size_t x) { ids.push_back(static_cast<elem_t>(x)); });
    ElementGraph sub = induced_subgraph(nc, ids);
    ComponentSummary s = component_summary(sub);
    if (!connected_diameter_two(s, ids.size()))
      return make("C2.3", ctx, CheckStatus::fail,
                  "induced subgraph on H \\ Z(H) connected with diameter 2",
                  summary_string(s),
                  "subgroup of order " + std::to_string(lat.subgroups[i].order));
  }
  if (tested == 0) return na("C2.3", ctx, "no proper non-abelian subgroup");
  return make("C2.3", ctx, CheckStatus::pass,
              "induced subgraph on H \\ Z(H) connected with diameter 2",
              "holds for " + std::to_string(tested) + " subgroups");
}

Verdict check_c24(GroupContext& ctx) {
  if (ctx.centre().count() == ctx.group().order())
    return na("C2.4", ctx, "abelian");
  if (ctx.predicates().is_two_generated)
    return na("C2.4", ctx, "2-generated");
  const ElementGraph& nc = ctx.graph(GraphKind::nc);
  const ElementGraph& ncom = ctx.graph(GraphKind::non_commuting);
  const ComponentSummary& s = ctx.summary(GraphKind::nc);
  bool same_edges = nc.adj == ncom.adj;
  bool ok = connected_diameter_two(s, nc.vertices.size()) && same_edges;
  return make("C2.4", ctx, ok ? CheckStatus::pass : CheckStatus::fail,
              "connected, diameter 2, nc = non_commuting",
              summary_string(s) + (same_edges ? " edges=non_commuting" : " edges differ"));
}

Verdict check_p25(GroupContext& ctx) {
  if (ctx.centre().count() == ctx.group().order())
    return na("P2.5", ctx, "abelian");
  if (!ctx.predicates().is_two_generated)
    return na("P2.5", ctx, "not 2-generated");
  const SubgroupLattice& lat = ctx.lattice();
  const auto& zs = ctx.maximal_centres();
  const auto& cnc = ctx.contains_not_centralizing();
  const ElementGraph& nc = ctx.graph(GraphKind::nc);
  for (std::size_t v = 0; v < nc.vertices.size(); ++v) {
    const elem_t g = nc.vertices[v];
    const bool isolated = nc.adj[v].none();
    const auto& in_max = lat.elem_in_maximal[g];
    bool cond = false;
    if (in_max.count() == 1) {
      std::size_t k = in_max.first_set();
      cond = zs[k].test(g);
    }
    if (isolated != cond)
      return make("P2.5", ctx, CheckStatus::fail,
                  "isolated iff unique maximal M with g in Z(M)",
                  isolated ? "isolated without criterion" : "criterion without isolation",
                  "g=" + std::to_string(g));
    if (!isolated && cnc[g].none())
      return make("P2.5", ctx, CheckStatus::fail,
                  "non-isolated g lies in some L \\ Z(L)", "no such maximal",
                  "g=" + std::to_string(g));
  }
  return make("P2.5", ctx, CheckStatus::pass,
              "isolated iff unique maximal M with g in Z(M)",
              "holds for " + std::to_string(nc.vertices.size()) + " vertices");
}

Verdict check_p31(GroupContext& ctx) {
  const SubgroupLattice& lat = ctx.lattice();
  const auto& zs = ctx.maximal_centres();
  const DynBitset& z = ctx.centre();
  bool hypothesis = false;
  for (std::size_t k = 0; k < lat.maximal_ids.size(); ++k) {
    const std::uint32_t id = lat.maximal_ids[k];
    if (lat.normal[id] && !lat.abelian[id] && z.is_subset_of(zs[k]) && !(zs[k] == z)) {
      hypothesis = true;
      break;
    }
  }
  if (!hypothesis)
    return na("P3.1", ctx, "no normal non-abelian maximal M with Z(G) < Z(M)");
  for (std::uint32_t id : lat.maximal_ids)
    if (lat.abelian[id])
      return make("P3.1", ctx, CheckStatus::fail, "every maximal subgroup non-abelian",
                  "abelian maximal subgroup of order " +
                      std::to_string(lat.subgroups[id].order));
  return make("P3.1", ctx, CheckStatus::pass, "every maximal subgroup non-abelian",
              "all " + std::to_string(lat.maximal_ids.size()) + " non-abelian");
}

Verdict check_p32(GroupContext& ctx) {
  if (!ctx.predicates().is_two_generated)
    return na("P3.2", ctx, "not 2-generated");
  const SubgroupLattice& lat = ctx.lattice();
  const auto& zs = ctx.maximal_centres();
  std::size_t tested = 0;
  for (elem_t g = 0; g < ctx.group().order(); ++g) {
    const auto& in_max = lat.elem_in_maximal[g];
    if (in_max.count() != 1) continue;
    std::size_t k = in_max.first_set();
    const std::uint32_t id = lat.maximal_ids[k];
    if (!lat.normal[id] || !zs[k].test(g)) continue;
    ++tested;
    if (!lat.abelian[id])
      return make("P3.2", ctx, CheckStatus::fail, "M abelian",
                  "non-abelian M of order " + std::to_string(lat.subgroups[id].order),
                  "g=" + std::to_string(g));
  }
  if (tested == 0) return na("P3.2", ctx, "no (g, M) satisfying the hypotheses");
  return make("P3.2", ctx, CheckStatus::pass, "M abelian",
              "holds for " + std::to_string(tested) + " pairs");
}

Verdict check_l33(GroupContext& ctx) {
  if (!ctx.predicates().is_two_generated)
    return na("L3.3", ctx, "not 2-generated");
  const SubgroupLattice& lat = ctx.lattice();
  const auto& zs = ctx.maximal_centres();
  const auto& cnc = ctx.contains_not_centralizing();
  const ElementGraph& nc = ctx.graph(GraphKind::nc);
  const auto& dist = ctx.nc_distances();

  // candidate (element, maximal position) pairs with x in L \ Z(L), L normal
  // non-abelian maximal
  std::vector<std::size_t> mpos;
  for (std::size_t k = 0; k < lat.maximal_ids.size(); ++k) {
    const std::uint32_t id = lat.maximal_ids[k];
    if (lat.normal[id] && !lat.abelian[id]) mpos.push_back(k);
  }
  std::vector<std::pair<elem_t, std::size_t>> cands;
  for (std::size_t k : mpos)
    lat.subgroups[lat.maximal_ids[k]].members.for_each_set([&](std::size_t x) {
      if (!zs[k].test(x)) cands.emplace_back(static_cast<elem_t>(x), k);
    });
  if (cands.empty()) return na("L3.3", ctx, "no valid 4-tuples");

  for (auto [x, lk] : cands) {
    const std::int32_t px = nc.pos[x];
    for (auto [y, mk] : cands) {
      const std::uint16_t d = dist[px][nc.pos[y]];
      if (d == 0xFFFF || d > 3)
        return make("L3.3", ctx, CheckStatus::fail, "d(x,y) <= 3",
                    d == 0xFFFF ? "unreachable" : "d=" + std::to_string(d),
                    "x=" + std::to_string(x) + " y=" + std::to_string(y));
      const DynBitset& mmem = lat.subgroups[lat.maximal_ids[mk]].members;
      const DynBitset& lmem = lat.subgroups[lat.maximal_ids[lk]].members;
      bool clause_i = zs[mk].test(x) && !lmem.test(y) && cnc[y].count() == 1 &&
                      cnc[y].test(mk);
      bool clause_ii = zs[lk].test(y) && !mmem.test(x) && cnc[x].count() == 1 &&
                       cnc[x].test(lk);
      if ((d == 3) != (clause_i || clause_ii))
        return make("L3.3", ctx, CheckStatus::fail,
                    "d = 3 iff clause (i) or (ii)",
                    "d=" + std::to_string(d) + " clauses=" +
                        (clause_i || clause_ii ? "true" : "false"),
                    "x=" + std::to_string(x) + " y=" + std::to_string(y));
    }
  }
  return make("L3.3", ctx, CheckStatus::pass,
              "d <= 3 and d = 3 iff clause (i) or (ii)",
              "holds for " + std::to_string(cands.size() * cands.size()) + " tuples");
}

Verdict check_t35_style(const std::string& id, GroupContext& ctx, bool require_nilpotent) {
  if (require_nilpotent) {
    if (!is_nilpotent_p_closure(ctx.group())) return na(id, ctx, "not nilpotent");
  } else {
    const SubgroupLattice& lat = ctx.lattice();
    for (std::uint32_t mid : lat.maximal_ids)
      if (!lat.normal[mid]) return na(id, ctx, "a maximal subgroup is not normal");
  }
  const ElementGraph& nc = ctx.graph(GraphKind::nc);
  if (nc.edge_count() == 0) return na(id, ctx, "nc has no edge");
  const ComponentSummary& nd = ctx.summary(GraphKind::nd);
  bool ok = nd.connected() && nd.overall.kind == Diameter::Kind::finite &&
            (nd.overall.value == 2 || nd.overall.value == 3);
  std::size_t iso = ctx.summary(GraphKind::nc).isolated_vertex_ids.size();
  if (ok && nd.overall.value == 3 && iso != 0) ok = false;
  return make(id, ctx, ok ? CheckStatus::pass : CheckStatus::fail,
              "nd connected with diameter 2 or 3; nc = nd when diameter 3",
              summary_string(nd) + " nc_isolated=" + std::to_string(iso));
}

Verdict check_l41(GroupContext& ctx) {
  const auto& pred = ctx.predicates();
  if (!pred.is_p_group) return na("L4.1", ctx, "not a p-group");
  if (ctx.centre().count() == ctx.group().order()) return na("L4.1", ctx, "abelian");
  if (!pred.is_two_generated) return na("L4.1", ctx, "not 2-generated");

  const SubgroupLattice& lat = ctx.lattice();
  const std::uint32_t phi = lat.frattini_id;
  // (i) Phi maximal in each maximal subgroup
  for (std::uint32_t mid : lat.maximal_ids) {
    if (!(lat.leq[phi].test(mid) && lat.subgroups[phi].order < lat.subgroups[mid].order))
      return make("L4.1", ctx, CheckStatus::fail, "(i) Phi < M", "Phi not below M", "");
    for (std::size_t k = 0; k < lat.subgroups.size(); ++k)
      if (k != phi && k != mid && lat.leq[phi].test(k) && lat.leq[k].test(mid) &&
          lat.subgroups[k].order > lat.subgroups[phi].order &&
          lat.subgroups[k].order < lat.subgroups[mid].order)
        return make("L4.1", ctx, CheckStatus::fail,
                    "(i) Phi maximal in each maximal subgroup",
                    "intermediate subgroup of order " +
                        std::to_string(lat.subgroups[k].order), "");
  }
  // (ii) every element outside Phi lies in a unique maximal subgroup
  for (elem_t g = 0; g < ctx.group().order(); ++g)
    if (!lat.subgroups[phi].members.test(g) && lat.elem_in_maximal[g].count() != 1)
      return make("L4.1", ctx, CheckStatus::fail,
                  "(ii) unique maximal subgroup outside Phi",
                  std::to_string(lat.elem_in_maximal[g].count()) + " maximals",
                  "g=" + std::to_string(g));
  // (iii) Z <= Phi with equality iff minimal non-abelian
  const DynBitset& z = ctx.centre();
  if (!z.is_subset_of(lat.subgroups[phi].members))
    return make("L4.1", ctx, CheckStatus::fail, "(iii) Z(G) <= Phi(G)", "violated", "");
  bool z_equals_phi = z == lat.subgroups[phi].members;
  if (z_equals_phi != pred.is_minimal_nonabelian)
    return make("L4.1", ctx, CheckStatus::fail,
                "(iii) Z = Phi iff minimal non-abelian",
                z_equals_phi ? "Z = Phi, not minimal" : "Z < Phi, minimal", "");
  // (iv) at most one abelian maximal subgroup when not minimal non-abelian
  if (!pred.is_minimal_nonabelian) {
    std::size_t ab = 0;
    for (std::uint32_t mid : lat.maximal_ids) ab += lat.abelian[mid] ? 1 : 0;
    if (ab > 1)
      return make("L4.1", ctx, CheckStatus::fail,
                  "(iv) at most one abelian maximal subgroup",
                  std::to_string(ab) + " abelian maximals", "");
  }
  return make("L4.1", ctx, CheckStatus::pass, "(i)-(iv)", "all parts hold");
}

/// Compares a classification's prediction with brute-force observation.
Verdict check_prediction(const std::string& id, GroupContext& ctx,
                         const GraphPrediction& pred, const std::string& kase) {
  std::ostringstream want;
  const ElementGraph& target = ctx.graph(pred.target);
  const ComponentSummary& s = ctx.summary(pred.target);
  bool ok = true;
  std::ostringstream got;
  got << "case " << kase << ": ";
  if (pred.empty_graph) {
    want << "empty graph";
    ok = target.vertices.empty();
    got << "vertices=" << target.vertices.size();
  } else if (pred.no_edges) {
    want << "no edges";
    ok = target.edge_count() == 0;
    got << "edges=" << target.edge_count();
  } else {
    want << to_string(pred.target) << " connected, diameter " << *pred.diameter;
    ok = s.connected() && s.overall.is_finite(*pred.diameter);
    got << to_string(pred.target) << " " << summary_string(s);
  }
  std::string detail;
  if (ok && pred.isolated) {
    const auto& nc_iso = ctx.summary(GraphKind::nc).isolated_vertex_ids;
    if (!sets_equal(nc_iso, *pred.isolated)) {
      ok = false;
      detail = "isolated: predicted " + ids_string(*pred.isolated) + " observed " +
               ids_string(nc_iso);
    }
    want << ", nc isolated = " << pred.isolated->size() << " elements";
    got << " nc_isolated=" << nc_iso.size();
  }
  return make(id, ctx, ok ? CheckStatus::pass : CheckStatus::fail,
              "case " + kase + ": " + want.str(), got.str(), detail);
}

Verdict check_t12(GroupContext& ctx) {
  auto cls = ctx.p_group_classification();
  if (!cls) return na("T1.2", ctx, "not a nontrivial p-group");
  return check_prediction("T1.2", ctx, cls->prediction, to_string(cls->kase));
}

Verdict check_t13(GroupContext& ctx) {
  if (factorize(ctx.group().order()).size() < 2)
    return na("T1.3", ctx, "fewer than two prime divisors");
  if (!is_nilpotent_p_closure(ctx.group())) return na("T1.3", ctx, "not nilpotent");
  auto cls = ctx.nilpotent_classification();
  return check_prediction("T1.3", ctx, cls->prediction, to_string(cls->kase));
}

// --- direct-product checks -------------------------------------------------
// A product entry is direct_product(left, right); element (a, b) has index
// a*|right| + b.  Each check tries both orientations of the factors.

Verdict check_l51(GroupContext& ctx) {
  if (!ctx.has_factors()) return na("L5.1", ctx, "not a direct product entry");
  auto applies = [&](GroupContext& g, GroupContext& h) {
    return g.centre().count() != g.group().order() && !is_cyclic(h.group());
  };
  bool any = applies(ctx.left(), ctx.right()) || applies(ctx.right(), ctx.left());
  if (!any) return na("L5.1", ctx, "no orientation with G non-abelian, H non-cyclic");
  const ComponentSummary& s = ctx.summary(GraphKind::nc);
  bool ok = s.connected() && s.overall.is_finite(2);
  return make("L5.1", ctx, ok ? CheckStatus::pass : CheckStatus::fail,
              "nc connected with diameter 2", summary_string(s));
}

Verdict check_p52(GroupContext& ctx) {
  if (!ctx.has_factors()) return na("P5.2", ctx, "not a direct product entry");
  const ElementGraph& pg = ctx.graph(GraphKind::nc);
  const auto& pdist = ctx.nc_distances();

  std::size_t checked = 0;
  for (int side = 0; side < 2; ++side) {
    GroupContext& gx = side == 0 ? ctx.left() : ctx.right();
    GroupContext& hy = side == 0 ? ctx.right() : ctx.left();
    if (gx.centre().count() == gx.group().order()) continue;  // G must be non-abelian
    if (!is_cyclic(hy.group())) continue;                     // H must be cyclic
    const ElementGraph& fg = gx.graph(GraphKind::nc);
    const auto& fdist = gx.nc_distances();
    const std::uint32_t nh = hy.group().order();
    auto pidx = [&](elem_t a, elem_t b) {
      return side == 0 ? static_cast<std::size_t>(a) * nh + b
                       : static_cast<std::size_t>(b) * gx.group().order() + a;
    };
    // (i) d((g1,h1),(g2,h2)) <= d(g1,g2) for distinct non-central g1, g2
    for (std::size_t v1 = 0; v1 < fg.vertices.size(); ++v1)
      for (std::size_t v2 = 0; v2 < fg.vertices.size(); ++v2) {
        if (v1 == v2) continue;
        const std::uint16_t df = fdist[v1][v2];
        if (df == 0xFFFF) continue;
        for (elem_t h1 = 0; h1 < nh; ++h1)
          for (elem_t h2 = 0; h2 < nh; ++h2) {
            auto i1 = pg.pos[pidx(fg.vertices[v1], h1)];
            auto i2 = pg.pos[pidx(fg.vertices[v2], h2)];
            const std::uint16_t dp = pdist[i1][i2];
            ++checked;
            if (dp == 0xFFFF || dp > df)
              return make("P5.2", ctx, CheckStatus::fail,
                          "d((g1,h1),(g2,h2)) <= d(g1,g2)",
                          "product distance " +
                              (dp == 0xFFFF ? std::string("unreachable")
                                            : std::to_string(dp)) +
                              " vs " + std::to_string(df),
                          "g1=" + std::to_string(fg.vertices[v1]) +
                              " g2=" + std::to_string(fg.vertices[v2]));
          }
      }
    // (ii) non-isolated g1: d((g1,h1),(g1,h2)) in {0, 2}
    for (std::size_t v1 = 0; v1 < fg.vertices.size(); ++v1) {
      if (fg.adj[v1].none()) continue;
      for (elem_t h1 = 0; h1 < nh; ++h1)
        for (elem_t h2 = 0; h2 < nh; ++h2) {
          auto i1 = pg.pos[pidx(fg.vertices[v1], h1)];
          auto i2 = pg.pos[pidx(fg.vertices[v1], h2)];
          const std::uint16_t dp = pdist[i1][i2];
          ++checked;
          if (dp != (h1 == h2 ? 0 : 2))
            return make("P5.2", ctx, CheckStatus::fail,
                        "d((g1,h1),(g1,h2)) in {0,2}",
                        "d=" + (dp == 0xFFFF ? std::string("unreachable")
                                             : std::to_string(dp)),
                        "g1=" + std::to_string(fg.vertices[v1]));
        }
    }
    // rider: connected nc(G) of diameter k gives connected nc(GxH), diam <= k
    const ComponentSummary& fs = gx.summary(GraphKind::nc);
    if (fs.connected() && fs.overall.kind == Diameter::Kind::finite &&
        !fg.vertices.empty()) {
      const ComponentSummary& ps = ctx.summary(GraphKind::nc);
      if (!ps.connected() || ps.overall.kind != Diameter::Kind::finite ||
          ps.overall.value > fs.overall.value)
        return make("P5.2", ctx, CheckStatus::fail,
                    "nc(GxH) connected with diameter <= diam(nc(G))",
                    summary_string(ps) + " vs factor " + summary_string(fs));
    }
  }
  if (checked == 0) return na("P5.2", ctx, "no orientation with G non-abelian, H cyclic");
  return make("P5.2", ctx, CheckStatus::pass,
              "distances dominated by factor distances",
              "holds for " + std::to_string(checked) + " pairs");
}

Verdict check_l53(GroupContext& ctx) {
  if (!ctx.has_factors()) return na("L5.3", ctx, "not a direct product entry");
  if (!ctx.lattice_available()) return na("L5.3", ctx, "lattice cap");
  auto listed = goursat_maximal_subgroups(ctx.left().group(), ctx.right().group(),
                                          ctx.left().lattice(), ctx.right().lattice(),
                                          ctx.group());
  const SubgroupLattice& lat = ctx.lattice();
  std::unordered_set<DynBitset, DynBitsetHash> brute;
  for (std::uint32_t id : lat.maximal_ids) brute.insert(lat.subgroups[id].members);
  bool ok = listed.size() == brute.size();
  for (const auto& [triple, sub] : listed)
    if (ok && !brute.count(sub.members)) ok = false;
  std::size_t diag = 0;
  for (const auto& [triple, sub] : listed)
    if (triple.kind == GoursatKind::diagonal) ++diag;
  return make("L5.3", ctx, ok ? CheckStatus::pass : CheckStatus::fail,
              "subdirect classification = brute-force maximal subgroups",
              "listed=" + std::to_string(listed.size()) +
                  " brute=" + std::to_string(brute.size()) +
                  " diagonal=" + std::to_string(diag));
}

Verdict check_t54(GroupContext& ctx) {
  if (!ctx.has_factors()) return na("T5.4", ctx, "not a direct product entry");
  if (!ctx.lattice_available()) return na("T5.4", ctx, "lattice cap");
  const SubgroupLattice& plat = ctx.lattice();
  std::size_t checked = 0;
  for (int side = 0; side < 2; ++side) {
    GroupContext& gx = side == 0 ? ctx.left() : ctx.right();
    GroupContext& hy = side == 0 ? ctx.right() : ctx.left();
    if (is_cyclic(gx.group())) continue;
    const std::uint32_t nh = hy.group().order();
    auto pidx = [&](elem_t a, elem_t b) {
      return side == 0 ? static_cast<std::size_t>(a) * nh + b
                       : static_cast<std::size_t>(b) * gx.group().order() + a;
    };
    for (elem_t a = 0; a < gx.group().order(); ++a)
      for (elem_t b = 0; b < nh; ++b) {
        UniqueMaximalResult r = unique_maximal_membership(
            gx.group(), hy.group(), gx.lattice(), hy.lattice(), a, b);
        bool brute = plat.elem_in_maximal[pidx(a, b)].count() == 1;
        ++checked;
        if (r.unique != brute)
          return make("T5.4", ctx, CheckStatus::fail,
                      "criterion iff unique containing maximal",
                      std::string("criterion=") + (r.unique ? "true" : "false") +
                          " brute=" + (brute ? "true" : "false"),
                      "g=" + std::to_string(a) + " h=" + std::to_string(b));
      }
  }
  if (checked == 0) return na("T5.4", ctx, "both factors cyclic");
  return make("T5.4", ctx, CheckStatus::pass,
              "criterion iff unique containing maximal",
              "holds for " + std::to_string(checked) + " elements");
}

Verdict check_c55(GroupContext& ctx) {
  if (!ctx.has_factors()) return na("C5.5", ctx, "not a direct product entry");
  const ElementGraph& pg = ctx.graph(GraphKind::nc);
  std::size_t checked = 0;
  for (int side = 0; side < 2; ++side) {
    GroupContext& gx = side == 0 ? ctx.left() : ctx.right();
    GroupContext& hy = side == 0 ? ctx.right() : ctx.left();
    if (gx.centre().count() == gx.group().order()) continue;  // G non-abelian
    const ElementGraph& fg = gx.graph(GraphKind::nc);
    auto lset = normal_maximals_with_index_dividing(gx.lattice(), hy.group().order());
    const std::uint32_t nh = hy.group().order();
    auto pidx = [&](elem_t a, elem_t b) {
      return side == 0 ? static_cast<std::size_t>(a) * nh + b
                       : static_cast<std::size_t>(b) * gx.group().order() + a;
    };
    for (elem_t a = 0; a < gx.group().order(); ++a)
      for (elem_t b = 0; b < nh; ++b) {
        bool c1 = hy.group().element_order(b) == nh;
        bool c2 = fg.has_vertex(a) && fg.adj[fg.pos[a]].none();
        bool c3 = lset.size() <= 1 &&
                  (lset.empty() ||
                   gx.lattice().subgroups[lset[0]].members.test(a));
        std::size_t pi = pidx(a, b);
        bool observed = pg.has_vertex(static_cast<elem_t>(pi)) &&
                        pg.adj[pg.pos[pi]].none();
        ++checked;
        if ((c1 && c2 && c3) != observed)
          return make("C5.5", ctx, CheckStatus::fail,
                      "isolated iff three-clause criterion",
                      std::string("criterion=") + (c1 && c2 && c3 ? "true" : "false") +
                          " observed=" + (observed ? "true" : "false"),
                      "g=" + std::to_string(a) + " h=" + std::to_string(b));
      }
  }
  if (checked == 0) return na("C5.5", ctx, "no orientation with G non-abelian");
  return make("C5.5", ctx, CheckStatus::pass, "isolated iff three-clause criterion",
              "holds for " + std::to_string(checked) + " elements");
}

}  // namespace

Verdict run_check(const std::string& check_id, GroupContext& ctx) {
  if (check_id == "P2.1") return check_p21(ctx);
  if (check_id == "P2.2") return check_p22(ctx);
  if (check_id == "C2.3") return check_c23(ctx);
  if (check_id == "C2.4") return check_c24(ctx);
  if (check_id == "P2.5") return check_p25(ctx);
  if (check_id == "P3.1") return check_p31(ctx);
  if (check_id == "P3.2") return check_p32(ctx);
  if (check_id == "L3.3") return check_l33(ctx);
  if (check_id == "T3.5") return check_t35_style("T3.5", ctx, false);
  if (check_id == "T1.1") return check_t35_style("T1.1", ctx, true);
  if (check_id == "L4.1") return check_l41(ctx);
  if (check_id == "T1.2") return check_t12(ctx);
  if (check_id == "L5.1") return check_l51(ctx);
  if (check_id == "P5.2") return check_p52(ctx);
  if (check_id == "L5.3") return check_l53(ctx);
  if (check_id == "T5.4") return check_t54(ctx);
  if (check_id == "C5.5") return check_c55(ctx);
  if (check_id == "T1.3") return check_t13(ctx);
  throw std::invalid_argument("unknown check id: " + check_id);
}

std::vector<Verdict> verify_group(GroupContext& ctx) {
  std::vector<Verdict> out;
  out.reserve(all_check_ids().size());
  for (const std::string& id : all_check_ids()) out.push_back(run_check(id, ctx));
  return out;
}

}  // namespace ncg
