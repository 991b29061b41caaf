#ifndef DOMDYN_SGL_HPP
#define DOMDYN_SGL_HPP

#include "domdyn/engine.hpp"
#include "domdyn/static_algos.hpp"

namespace domdyn {

// Sreedhar-Gao-Lee: DJ-graph driven search of the iterated dominance
// frontier for insertions; deletions find the possibly-affected siblings and
// refine them with the iterative algorithm seeded by the current tree.
//
// The d-edge/j-edge partition is derived from the graph and the tree on the
// fly: an occurrence of (u,w) is the d-edge of w iff u == d(w) and it is the
// first such occurrence; everything else is a j-edge. This keeps the DJ-graph
// consistent with the tree by construction.
class SglEngine final : public Engine {
 public:
  explicit SglEngine(FlowGraph g);
  std::string_view name() const override { return "sgl"; }

  const std::vector<VertexId>& last_affected() const { return last_affected_; }

  // Calls fn(w, u) for every j-edge occurrence (w, u) leaving w. The first
  // occurrence of (d(u), u) is the d-edge; duplicates count as j-edges.
  template <typename Fn>
  void for_each_j_edge(VertexId w, Fn&& fn) const {
    const auto& outs = graph_.out(w);
    for (std::size_t i = 0; i < outs.size(); ++i) {
      VertexId u = outs[i];
      if (u != w && tree_.reachable(u) && tree_.parent(u) == w) {
        bool first = true;
        for (std::size_t j = 0; j < i; ++j) {
          if (outs[j] == u) {
            first = false;
            break;
          }
        }
        if (first) continue;
      }
      fn(w, u);
    }
  }

  // Number of d-edges (one per reachable non-root vertex whose tree edge is
  // present in the graph); test surface for DJ-graph consistency.
  int d_edge_count() const;

 private:
  void on_insert(VertexId x, VertexId y) override;
  void on_delete(VertexId x, VertexId y) override;

  void insert_reachable(VertexId x, VertexId y);
  void delete_reachable(VertexId y);
  void delete_unreachable_cascade(VertexId y);

  std::vector<char> affected_;
  std::vector<std::vector<VertexId>> buckets_;
  std::vector<VertexId> last_affected_;
};

}  // namespace domdyn

#endif  // DOMDYN_SGL_HPP
