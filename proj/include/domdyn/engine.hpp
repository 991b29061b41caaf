#ifndef DOMDYN_ENGINE_HPP
#define DOMDYN_ENGINE_HPP

#include <memory>
#include <string>
#include <string_view>

#include "domdyn/domtree.hpp"
#include "domdyn/graph.hpp"

namespace domdyn {

struct EngineCounters {
  long long insertions = 0;
  long long deletions = 0;
  long long affected_total = 0;
  long long scanned_total = 0;
  long long full_rebuilds = 0;
  long long unchanged_shortcuts = 0;  // deletions dismissed by the t/g test
};

// A dominator-tree maintenance engine. Each engine owns its copy of the flow
// graph: insert()/remove() mutate the graph and then repair the tree, so the
// tree is current when the call returns (pre/size included).
class Engine {
 public:
  explicit Engine(FlowGraph g) : graph_(std::move(g)), tree_(graph_.vertex_count(), graph_.start()) {}
  virtual ~Engine() = default;

  virtual std::string_view name() const = 0;

  void insert(VertexId x, VertexId y) {
    graph_.add_edge(x, y);
    ++counters_.insertions;
    on_insert(x, y);
  }

  void remove(VertexId x, VertexId y) {
    bool x_was_reachable = tree_.reachable(x);
    graph_.remove_edge(x, y);
    ++counters_.deletions;
    if (x_was_reachable) on_delete(x, y);
  }

  const FlowGraph& graph() const { return graph_; }
  const DominatorTree& tree() const { return tree_; }
  const EngineCounters& counters() const { return counters_; }

 protected:
  virtual void on_insert(VertexId x, VertexId y) = 0;
  virtual void on_delete(VertexId x, VertexId y) = 0;

  // y stays reachable after losing an in-edge iff some remaining in-edge
  // (z,y) has reachable z not dominated by y. Walk-based so it is usable
  // while pre/size are stale.
  bool still_reachable(VertexId y) const {
    for (VertexId z : graph_.in(y)) {
      if (z == y || !tree_.reachable(z)) continue;
      if (!tree_.is_ancestor_by_walk(y, z)) return true;
    }
    return false;
  }

  FlowGraph graph_;
  DominatorTree tree_;
  EngineCounters counters_;
};

enum class Algo { Slt, Dsnca, Dbs, Sgl };

std::string_view algo_name(Algo a);
Algo algo_from_name(std::string_view name);
std::unique_ptr<Engine> make_engine(Algo a, FlowGraph g);

// Recomputes the exact dominator tree from scratch (simple Lengauer-Tarjan)
// after every update with reachable source.
class SltEngine final : public Engine {
 public:
  explicit SltEngine(FlowGraph g);
  std::string_view name() const override { return "slt"; }

 private:
  void on_insert(VertexId x, VertexId y) override;
  void on_delete(VertexId x, VertexId y) override;
  void rebuild();
};

}  // namespace domdyn

#endif  // DOMDYN_ENGINE_HPP
