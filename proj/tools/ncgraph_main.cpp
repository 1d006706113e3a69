#include <iostream>

#include "CLI11.hpp"
#include "ncgraph/run.hpp"

namespace {

void add_common(CLI::App* sub, ncg::RunConfig& cfg) {
  sub->add_option("--max-order", cfg.max_order,
                  "order cap override (verify: corpus bound, default 200)");
  sub->add_option("--out", cfg.out, "output path (default: stdout)");
  sub->add_option("--seed", cfg.seed, "seed for sampled table validation (default 1)");
  sub->add_option("--lattice-cap", cfg.lattice_cap,
                  "largest order for full subgroup enumeration (default 400)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact graphs on finite groups: build, analyze, verify"};
  app.require_subcommand(1);

  ncg::RunConfig cfg;

  CLI::App* analyze = app.add_subcommand("analyze", "build one graph and report its stats");
  analyze->add_option("--group", cfg.group, "builtin spec (e.g. S4, D8xC3) or group file")
      ->required();
  analyze->add_option("--kind", cfg.kind, "graph kind (power, ..., nc, nd)")->required();
  add_common(analyze, cfg);

  CLI::App* verify = app.add_subcommand("verify", "run the fact catalog over a corpus");
  verify->add_option("--group", cfg.group, "verify a single group instead of the corpus");
  verify->add_option("--fixtures-dir", cfg.fixtures_dir, "directory of extra group files");
  verify->add_option("--jobs", cfg.jobs, "parallel workers (default 1)");
  add_common(verify, cfg);

  CLI::App* exp = app.add_subcommand("export-dot", "write a graph as DOT");
  exp->add_option("--group", cfg.group, "builtin spec or group file")->required();
  exp->add_option("--kind", cfg.kind, "graph kind")->required();
  add_common(exp, cfg);

  CLI::App* corpus = app.add_subcommand("corpus", "list the standard corpus");
  add_common(corpus, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : ncg::kExitUsage;
  }

  if (analyze->parsed()) cfg.command = ncg::RunConfig::Command::analyze;
  if (verify->parsed()) cfg.command = ncg::RunConfig::Command::verify;
  if (exp->parsed()) cfg.command = ncg::RunConfig::Command::export_dot;
  if (corpus->parsed()) cfg.command = ncg::RunConfig::Command::corpus;

  return ncg::run(cfg, std::cout);
}
