#include "domdyn/graph.hpp"

#include <algorithm>

namespace domdyn {

FlowGraph::FlowGraph(int n, VertexId start) : n_(n), s_(start) {
  if (n < 1) throw std::invalid_argument("FlowGraph: vertex count must be >= 1");
  if (start < 1 || start > n) throw std::invalid_argument("FlowGraph: start vertex out of range");
  out_adj_.assign(n + 1, {});
  in_adj_.assign(n + 1, {});
}

void FlowGraph::check_vertex(VertexId v) const {
  if (!valid_vertex(v)) throw std::invalid_argument("FlowGraph: vertex out of range");
}

void FlowGraph::add_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  out_adj_[u].push_back(v);
  in_adj_[v].push_back(u);
  ++m_;
}

void FlowGraph::remove_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  auto& outs = out_adj_[u];
  auto it = std::find(outs.begin(), outs.end(), v);
  if (it == outs.end()) throw std::invalid_argument("FlowGraph: edge not present");
  *it = outs.back();
  outs.pop_back();
  auto& ins = in_adj_[v];
  auto jt = std::find(ins.begin(), ins.end(), u);
  *jt = ins.back();
  ins.pop_back();
  --m_;
}

bool FlowGraph::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& outs = out_adj_[u];
  return std::find(outs.begin(), outs.end(), v) != outs.end();
}

int FlowGraph::count_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& outs = out_adj_[u];
  return static_cast<int>(std::count(outs.begin(), outs.end(), v));
}

}  // namespace domdyn
