// Command-line front end. Talks to the library exclusively through the C
// interface in domdyn/domdyn.h.

#include <cstdint>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "domdyn/domdyn.h"

namespace {

int report(int status) {
  if (status != DOMDYN_OK) {
    std::fprintf(stderr, "error: %s\n", domdyn_last_error());
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dynamic dominator tree toolkit"};
  app.require_subcommand(1);

  // gen: write a synthetic graph instance.
  std::string gen_kind;
  int gen_n = 0;
  int gen_m = -1;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "generate a graph instance");
  gen->add_option("--kind", gen_kind, "family: fig1, fig2, random, randdag")->required();
  gen->add_option("--n", gen_n, "number of vertices")->required();
  gen->add_option("--m", gen_m, "number of edges (random families)");
  gen->add_option("--seed", gen_seed, "PRNG seed");
  gen->add_option("-o,--out", gen_out, "output graph file")->required();

  // seq: derive an update sequence from a graph file.
  std::string seq_graph;
  int seq_ifrac = 0;
  int seq_dfrac = 0;
  std::uint64_t seq_seed = 0;
  std::string seq_out;
  auto* seq = app.add_subcommand("seq", "generate an update sequence");
  seq->add_option("--graph", seq_graph, "input graph file")->required();
  seq->add_option("--ifrac", seq_ifrac, "percent of edges to insert")->required();
  seq->add_option("--dfrac", seq_dfrac, "percent of edges to delete")->required();
  seq->add_option("--seed", seq_seed, "PRNG seed")->required();
  seq->add_option("-o,--out", seq_out, "output sequence file")->required();

  // run: replay a sequence with one algorithm, print/append measurements.
  std::string run_graph, run_seq, run_algo, run_csv;
  int run_verify_every = 0;
  auto* run = app.add_subcommand("run", "run one algorithm over a sequence");
  run->add_option("--graph", run_graph, "input graph file")->required();
  run->add_option("--seq", run_seq, "input sequence file")->required();
  run->add_option("--algo", run_algo, "slt, dsnca, dbs or sgl")->required();
  run->add_option("--verify-every", run_verify_every,
                  "check the tree against a reference every K updates");
  run->add_option("--csv", run_csv, "append the measurement row to this file");

  // verify: run several algorithms in lock step and compare.
  std::string ver_graph, ver_seq, ver_algos;
  auto* ver = app.add_subcommand("verify", "cross-check algorithms in lock step");
  ver->add_option("--graph", ver_graph, "input graph file")->required();
  ver->add_option("--seq", ver_seq, "input sequence file")->required();
  ver->add_option("--algos", ver_algos, "comma-separated list, e.g. slt,dsnca,dbs")->required();

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed())
    return report(domdyn_gen_family(gen_kind.c_str(), gen_n, gen_m, gen_seed, gen_out.c_str()));
  if (seq->parsed())
    return report(domdyn_gen_sequence(seq_graph.c_str(), seq_ifrac, seq_dfrac, seq_seed,
                                      seq_out.c_str()));
  if (run->parsed())
    return report(domdyn_run(run_graph.c_str(), run_seq.c_str(), run_algo.c_str(),
                             run_verify_every, run_csv.empty() ? nullptr : run_csv.c_str()));
  if (ver->parsed()) {
    int rc = report(domdyn_verify(ver_graph.c_str(), ver_seq.c_str(), ver_algos.c_str()));
    if (rc == 0) std::printf("verify: all algorithms agree on every update\n");
    return rc;
  }
  return 1;
}
