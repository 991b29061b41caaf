#ifndef DOMDYN_GRAPH_HPP
#define DOMDYN_GRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace domdyn {

// Vertices are integers in [1, n]; 0 is the "none" sentinel.
using VertexId = int;
constexpr VertexId kNoVertex = 0;

// Mutable flow graph: directed multigraph with a distinguished start vertex.
// Parallel edges and self-loops are stored; deletion removes one occurrence.
class FlowGraph {
 public:
  FlowGraph() = default;
  FlowGraph(int n, VertexId start);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  VertexId start() const { return s_; }

  const std::vector<VertexId>& out(VertexId u) const { return out_adj_[u]; }
  const std::vector<VertexId>& in(VertexId v) const { return in_adj_[v]; }

  void add_edge(VertexId u, VertexId v);
  // Removes one occurrence of (u,v); throws if the edge is absent.
  void remove_edge(VertexId u, VertexId v);

  bool has_edge(VertexId u, VertexId v) const;
  int count_edge(VertexId u, VertexId v) const;

  bool valid_vertex(VertexId v) const { return v >= 1 && v <= n_; }
  void check_vertex(VertexId v) const;

 private:
  int n_ = 0;
  VertexId s_ = kNoVertex;
  int m_ = 0;
  std::vector<std::vector<VertexId>> out_adj_;
  std::vector<std::vector<VertexId>> in_adj_;
};

struct UpdateOp {
  enum class Kind { Insert, Delete, Query };
  Kind kind;
  VertexId u;
  VertexId v;
};

struct UpdateSequence {
  int initial_edge_count = 0;  // m' = edges present before the dynamic phase
  std::vector<UpdateOp> ops;
  std::uint64_t seed = 0;
  int i_frac = 0;
  int d_frac = 0;
  // Delete tokens drawn while the simulated graph was empty; consumed as no-ops.
  int dropped_deletes = 0;
};

}  // namespace domdyn

#endif  // DOMDYN_GRAPH_HPP
