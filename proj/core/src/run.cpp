#include "ncgraph/run.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "ncgraph/corpus.hpp"
#include "ncgraph/group_io.hpp"
#include "ncgraph/report.hpp"

namespace ncg {
namespace {

std::shared_ptr<const FiniteGroup> resolve_group(const RunConfig& cfg) {
  if (cfg.group.empty()) throw std::invalid_argument("no group given");
  if (std::filesystem::exists(cfg.group)) {
    GroupFile gf = read_group_file(cfg.group);
    std::uint32_t cap = cfg.max_order ? cfg.max_order : kDefaultOrderCap;
    return std::make_shared<const FiniteGroup>(load_group(gf, cap, cfg.seed));
  }
  return std::make_shared<const FiniteGroup>(
      builtin(cfg.group, cfg.max_order ? cfg.max_order : kDefaultOrderCap));
}

GraphKind resolve_kind(const RunConfig& cfg) {
  auto k = graph_kind_from_string(cfg.kind);
  if (!k) throw std::invalid_argument("unknown graph kind: " + cfg.kind);
  return *k;
}

void emit(const std::string& text, const RunConfig& cfg, std::ostream& log) {
  if (cfg.out.empty()) {
    log << text;
  } else {
    std::ofstream out(cfg.out);
    if (!out) throw std::invalid_argument("cannot write " + cfg.out);
    out << text;
  }
}

GroupSection analyze_section(GroupContext& ctx, GraphKind kind) {
  GroupSection sec;
  sec.group = ctx.group().name();
  sec.order = ctx.group().order();
  sec.p_group_case = "-";
  sec.nilpotent_case = "-";
  if (ctx.lattice_available()) {
    const StructuralPredicates& p = ctx.predicates();
    std::ostringstream os;
    os << "abelian=" << (p.is_abelian ? "yes" : "no")
       << " nilpotent=" << (p.is_nilpotent ? "yes" : "no");
    if (p.is_p_group) os << " p_group=yes(p=" << p.p << ")";
    else os << " p_group=no";
    os << " two_generated=" << (p.is_two_generated ? "yes" : "no")
       << " minimal_nonabelian=" << (p.is_minimal_nonabelian ? "yes" : "no");
    if (p.is_p_group) os << " rank=" << p.generation_rank;
    sec.predicates = os.str();
    if (auto c = ctx.p_group_classification()) sec.p_group_case = to_string(c->kase);
    if (auto c = ctx.nilpotent_classification()) sec.nilpotent_case = to_string(c->kase);
  }
  sec.graphs.push_back(graph_stats(ctx.graph(kind), ctx.summary(kind)));
  return sec;
}

std::vector<CorpusEntry> resolve_corpus(const RunConfig& cfg) {
  std::vector<CorpusEntry> entries;
  if (!cfg.group.empty()) {
    auto g = resolve_group(cfg);
    entries.push_back({g->name(), std::make_shared<GroupContext>(g, cfg.lattice_cap)});
  } else {
    entries = standard_corpus(cfg.max_order ? cfg.max_order : 200, cfg.lattice_cap);
  }
  if (!cfg.fixtures_dir.empty()) {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(cfg.fixtures_dir))
      if (e.is_regular_file() && e.path().extension() == ".json")
        files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      GroupFile gf = read_group_file(f);
      auto g = std::make_shared<const FiniteGroup>(load_group(gf, kDefaultOrderCap, cfg.seed));
      entries.push_back({g->name(), std::make_shared<GroupContext>(g, cfg.lattice_cap)});
    }
  }
  return entries;
}

GroupSection verify_section(const CorpusEntry& entry) {
  GroupContext& ctx = *entry.ctx;
  GroupSection sec;
  sec.group = entry.name;
  sec.order = ctx.group().order();
  sec.p_group_case = "-";
  sec.nilpotent_case = "-";
  if (auto c = ctx.p_group_classification()) sec.p_group_case = to_string(c->kase);
  if (auto c = ctx.nilpotent_classification()) sec.nilpotent_case = to_string(c->kase);
  sec.graphs.push_back(graph_stats(ctx.graph(GraphKind::nc), ctx.summary(GraphKind::nc)));
  sec.graphs.push_back(graph_stats(ctx.graph(GraphKind::nd), ctx.summary(GraphKind::nd)));
  sec.checks = verify_group(ctx);
  return sec;
}

}  // namespace

std::string verify_report_text(const RunConfig& cfg, bool* any_fail) {
  std::vector<CorpusEntry> entries = resolve_corpus(cfg);
  Report report;
  report.command = "verify";
  report.sections.resize(entries.size());

  const unsigned jobs = std::max(1u, cfg.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < entries.size(); ++i)
      report.sections[i] = verify_section(entries[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> workers;
    for (unsigned w = 0; w < jobs; ++w)
      workers.push_back(std::async(std::launch::async, [&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= entries.size()) return;
          report.sections[i] = verify_section(entries[i]);
        }
      }));
    for (auto& w : workers) w.get();
  }

  bool fail = false;
  for (const auto& sec : report.sections)
    for (const Verdict& v : sec.checks)
      if (v.status == CheckStatus::fail) fail = true;
  if (any_fail) *any_fail = fail;
  // free the heavyweight contexts before rendering
  entries.clear();
  return render_report(report);
}

int cmd_analyze(const RunConfig& cfg, std::ostream& log) {
  auto g = resolve_group(cfg);
  GraphKind kind = resolve_kind(cfg);
  GroupContext ctx(g, cfg.lattice_cap);
  Report report;
  report.command = "analyze";
  report.sections.push_back(analyze_section(ctx, kind));
  emit(render_report(report), cfg, log);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& log) {
  bool fail = false;
  std::string text = verify_report_text(cfg, &fail);
  emit(text, cfg, log);
  return fail ? kExitCheckFailure : kExitOk;
}

int cmd_export_dot(const RunConfig& cfg, std::ostream& log) {
  auto g = resolve_group(cfg);
  GraphKind kind = resolve_kind(cfg);
  GroupContext ctx(g, cfg.lattice_cap);
  const ElementGraph& graph = ctx.graph(kind);
  if (cfg.out.empty()) {
    std::ostringstream os;
    export_dot(graph, os);
    log << os.str();
  } else {
    export_dot(graph, cfg.out);
  }
  return kExitOk;
}

int cmd_corpus(const RunConfig& cfg, std::ostream& log) {
  std::vector<CorpusEntry> entries =
      standard_corpus(cfg.max_order ? cfg.max_order : 200, cfg.lattice_cap);
  std::ostringstream os;
  for (const auto& e : entries)
    os << e.name << " " << e.ctx->group().order() << "\n";
  if (!cfg.out.empty()) {
    std::filesystem::create_directories(cfg.out);
    for (const auto& e : entries) {
      GroupFile gf = to_group_file(e.ctx->group());
      std::string fname = e.name;
      std::replace(fname.begin(), fname.end(), '^', 'p');
      write_group_file(gf, std::filesystem::path(cfg.out) / (fname + ".json"));
    }
    log << os.str();
  } else {
    log << os.str();
  }
  return kExitOk;
}

int run(const RunConfig& cfg, std::ostream& log) {
  try {
    switch (cfg.command) {
      case RunConfig::Command::analyze: return cmd_analyze(cfg, log);
      case RunConfig::Command::verify: return cmd_verify(cfg, log);
      case RunConfig::Command::export_dot: return cmd_export_dot(cfg, log);
      case RunConfig::Command::corpus: return cmd_corpus(cfg, log);
    }
    return kExitUsage;
  } catch (const cap_error& e) {
    log << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace ncg
