#include "ncgraph/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ncg {

void export_dot(const ElementGraph& g, std::ostream& os) {
  os << "// kind: " << to_string(g.kind) << "\n";
  os << "// group: " << g.group->name() << "\n";
  os << "graph \"" << to_string(g.kind) << "_" << g.group->name() << "\" {\n";
  for (elem_t v : g.vertices)
    os << "  e" << v << " [order=" << g.group->element_order(v) << "];\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    g.adj[i].for_each_set([&](std::size_t j) {
      if (j > i) os << "  e" << g.vertices[i] << " -- e" << g.vertices[j] << ";\n";
    });
  os << "}\n";
}

void export_dot(const ElementGraph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write DOT file " + path.string());
  export_dot(g, out);
}

GraphStats graph_stats(const ElementGraph& g, const ComponentSummary& s) {
  GraphStats st;
  st.kind = g.kind;
  st.vertices = g.vertices.size();
  st.edges = g.edge_count();
  st.components = s.component_count;
  st.diameter = s.overall;
  st.isolated = s.isolated_vertex_ids.size();
  return st;
}

std::string render_report(const Report& report) {
  std::vector<const GroupSection*> order;
  order.reserve(report.sections.size());
  for (const auto& s : report.sections) order.push_back(&s);
  std::sort(order.begin(), order.end(), [](const GroupSection* a, const GroupSection* b) {
    return a->group < b->group;
  });

  std::size_t pass = 0, fail = 0, not_applicable = 0;
  for (const auto* s : order)
    for (const Verdict& v : s->checks) {
      if (v.status == CheckStatus::pass) ++pass;
      if (v.status == CheckStatus::fail) ++fail;
      if (v.status == CheckStatus::not_applicable) ++not_applicable;
    }

  std::ostringstream os;
  os << "ncgraph report\n";
  os << "command: " << report.command << "\n";
  os << "groups: " << order.size() << "\n";
  os << "summary: pass=" << pass << " fail=" << fail
     << " not_applicable=" << not_applicable << "\n";
  for (const auto* s : order) {
    os << "\n";
    os << "group: " << s->group << "\n";
    os << "order: " << s->order << "\n";
    if (!s->predicates.empty()) os << "predicates: " << s->predicates << "\n";
    os << "p_group_case: " << s->p_group_case << "\n";
    os << "nilpotent_case: " << s->nilpotent_case << "\n";
    for (const GraphStats& g : s->graphs) {
      os << "kind: " << to_string(g.kind) << "\n";
      os << "vertices: " << g.vertices << "\n";
      os << "edges: " << g.edges << "\n";
      os << "components: " << g.components << "\n";
      os << "diameter: " << to_string(g.diameter) << "\n";
      os << "isolated: " << g.isolated << "\n";
    }
    std::vector<const Verdict*> checks;
    for (const Verdict& v : s->checks) checks.push_back(&v);
    std::sort(checks.begin(), checks.end(),
              [](const Verdict* a, const Verdict* b) { return a->check_id < b->check_id; });
    for (const Verdict* v : checks) {
      os << "check: id=" << v->check_id << " status=" << to_string(v->status) << "\n";
      if (v->status == CheckStatus::fail) {
        os << "  predicted: " << v->predicted << "\n";
        os << "  observed: " << v->observed << "\n";
        if (!v->detail.empty()) os << "  detail: " << v->detail << "\n";
      }
    }
  }
  return os.str();
}

void export_report(const Report& report, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write report file " + path.string());
  out << render_report(report);
}

}  // namespace ncg
