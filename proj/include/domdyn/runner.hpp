#ifndef DOMDYN_RUNNER_HPP
#define DOMDYN_RUNNER_HPP

#include <optional>
#include <string>
#include <vector>

#include "domdyn/engine.hpp"
#include "domdyn/generator.hpp"

namespace domdyn {

struct RunReport {
  std::string graph_name;
  int n = 0;
  int m = 0;
  std::string algo;
  int i_frac = 0;
  int d_frac = 0;
  std::uint64_t seed = 0;
  long long insertions = 0;
  long long deletions = 0;
  double build_ms = 0.0;
  double update_ms = 0.0;
  double total_ms = 0.0;
  long long affected = 0;
  long long scanned = 0;
  std::string verified = "none";  // none | ok
};

std::string csv_header();
std::string to_csv_row(const RunReport& report);

struct VerificationError : std::runtime_error {
  VerificationError(std::string msg, std::size_t update_index, VertexId vertex,
                    VertexId expected, VertexId got)
      : std::runtime_error(std::move(msg)),
        update_index(update_index),
        vertex(vertex),
        expected(expected),
        got(got) {}
  std::size_t update_index;
  VertexId vertex;
  VertexId expected;
  VertexId got;
};

// Builds the chosen engine on the initial graph, replays the sequence, and
// (when verify_every > 0) checks the maintained tree every verify_every
// updates: against the brute-force oracle on desk-scale graphs, and against a
// from-scratch Lengauer-Tarjan run on larger ones. Throws VerificationError
// with a first-divergence diagnostic on mismatch.
RunReport run_benchmark(const GraphInstance& inst, const UpdateSequence& seq, Algo algo,
                        int verify_every, const std::string& graph_name);

// Lock-step differential run of several engines on the same sequence;
// compares parent arrays after every update. Throws on first divergence.
void verify_lockstep(const GraphInstance& inst, const UpdateSequence& seq,
                     const std::vector<Algo>& algos);

}  // namespace domdyn

#endif  // DOMDYN_RUNNER_HPP
