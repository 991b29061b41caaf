#include "domdyn/runner.hpp"

#include <chrono>
#include <sstream>

#include "domdyn/static_algos.hpp"

namespace domdyn {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// First divergence between a maintained tree and a reference parent array.
void compare_parents(const DominatorTree& tree, const std::vector<VertexId>& reference,
                     std::size_t update_index, const std::string& who) {
  for (VertexId v = 1; v < static_cast<VertexId>(reference.size()); ++v) {
    if (tree.parent(v) == reference[v]) continue;
    std::ostringstream msg;
    msg << who << " diverges after update " << update_index << ": parent(" << v
        << ") expected " << reference[v] << ", got " << tree.parent(v);
    throw VerificationError(msg.str(), update_index, v, reference[v], tree.parent(v));
  }
}

void verify_engine(const Engine& eng, std::size_t update_index) {
  const FlowGraph& g = eng.graph();
  std::vector<VertexId> reference;
  if (g.vertex_count() <= 500) {
    reference = oracle_dominators(g, g.start()).parents();
  } else {
    reference = slt(g, g.start());
  }
  compare_parents(eng.tree(), reference, update_index, std::string(eng.name()));
}

}  // namespace

std::string csv_header() {
  return "graph,n,m,algo,ifrac,dfrac,seed,insertions,deletions,build_ms,update_ms,"
         "total_ms,affected,scanned,verified";
}

std::string to_csv_row(const RunReport& r) {
  std::ostringstream out;
  out << r.graph_name << ',' << r.n << ',' << r.m << ',' << r.algo << ',' << r.i_frac
      << ',' << r.d_frac << ',' << r.seed << ',' << r.insertions << ',' << r.deletions
      << ',' << r.build_ms << ',' << r.update_ms << ',' << r.total_ms << ','
      << r.affected << ',' << r.scanned << ',' << r.verified;
  return out.str();
}

RunReport run_benchmark(const GraphInstance& inst, const UpdateSequence& seq, Algo algo,
                        int verify_every, const std::string& graph_name) {
  RunReport report;
  report.graph_name = graph_name;
  report.n = inst.n;
  report.m = static_cast<int>(inst.edges.size());
  report.algo = std::string(algo_name(algo));
  report.i_frac = seq.i_frac;
  report.d_frac = seq.d_frac;
  report.seed = seq.seed;

  auto t0 = Clock::now();
  std::unique_ptr<Engine> eng = make_engine(algo, inst.build(seq.initial_edge_count));
  report.build_ms = ms_since(t0);

  t0 = Clock::now();
  std::size_t idx = 0;
  for (const UpdateOp& op : seq.ops) {
    ++idx;
    switch (op.kind) {
      case UpdateOp::Kind::Insert:
        eng->insert(op.u, op.v);
        break;
      case UpdateOp::Kind::Delete:
        eng->remove(op.u, op.v);
        break;
      case UpdateOp::Kind::Query:
        (void)eng->tree().dominates(op.u, op.v);
        break;
    }
    if (verify_every > 0 && idx % static_cast<std::size_t>(verify_every) == 0) {
      verify_engine(*eng, idx);
      report.verified = "ok";
    }
  }
  report.update_ms = ms_since(t0);
  report.total_ms = report.build_ms + report.update_ms;

  const EngineCounters& c = eng->counters();
  report.insertions = c.insertions;
  report.deletions = c.deletions;
  report.affected = c.affected_total;
  report.scanned = c.scanned_total;
  return report;
}

void verify_lockstep(const GraphInstance& inst, const UpdateSequence& seq,
                     const std::vector<Algo>& algos) {
  if (algos.size() < 2) throw std::invalid_argument("lockstep verify needs two or more algorithms");
  std::vector<std::unique_ptr<Engine>> engines;
  engines.reserve(algos.size());
  for (Algo a : algos) engines.push_back(make_engine(a, inst.build(seq.initial_edge_count)));

  compare_parents(engines[0]->tree(), oracle_dominators(engines[0]->graph(), inst.start).parents(),
                  0, std::string(engines[0]->name()));
  for (std::size_t k = 1; k < engines.size(); ++k)
    compare_parents(engines[k]->tree(), engines[0]->tree().parents(), 0,
                    std::string(engines[k]->name()));

  std::size_t idx = 0;
  for (const UpdateOp& op : seq.ops) {
    ++idx;
    for (auto& eng : engines) {
      switch (op.kind) {
        case UpdateOp::Kind::Insert:
          eng->insert(op.u, op.v);
          break;
        case UpdateOp::Kind::Delete:
          eng->remove(op.u, op.v);
          break;
        case UpdateOp::Kind::Query:
          (void)eng->tree().dominates(op.u, op.v);
          break;
      }
    }
    for (std::size_t k = 1; k < engines.size(); ++k)
      compare_parents(engines[k]->tree(), engines[0]->tree().parents(), idx,
                      std::string(engines[k]->name()));
  }
  // Anchor the whole run to ground truth at the end.
  const FlowGraph& g = engines[0]->graph();
  std::vector<VertexId> reference = g.vertex_count() <= 500
                                        ? oracle_dominators(g, g.start()).parents()
                                        : slt(g, g.start());
  compare_parents(engines[0]->tree(), reference, idx, std::string(engines[0]->name()));
}

}  // namespace domdyn
