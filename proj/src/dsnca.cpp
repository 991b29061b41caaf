#include "domdyn/dsnca.hpp"

#include <algorithm>

namespace domdyn {

DsncaEngine::DsncaEngine(FlowGraph g) : Engine(std::move(g)) {
  tg_valid_.assign(graph_.vertex_count() + 1, 0);
  rebuild_full();
  counters_.full_rebuilds = 0;  // the initial build is not an update rebuild
}

void DsncaEngine::rebuild_full() {
  SncaResult r = snca(graph_, graph_.start());
  dfs_ = std::move(r.dfs);
  semi_ = std::move(r.semi);
  tree_.assign(r.parent);
  std::fill(tg_valid_.begin(), tg_valid_.end(), 1);
  ++counters_.full_rebuilds;
}

void DsncaEngine::repair(int upto_pre) {
  std::vector<VertexId> parent = snca_repair(graph_, dfs_, upto_pre, semi_);
  tree_.assign(parent);
  for (int i = 1; i <= upto_pre && i <= dfs_.reached(); ++i) tg_valid_[dfs_.order[i - 1]] = 1;
}

void DsncaEngine::on_insert(VertexId x, VertexId y) {
  if (x == y) return;
  if (!tree_.reachable(x)) return;  // the new edge lies on no path from s
  // Scratch condition: y outside the DFS tree, or (x,y) incompatible with it.
  if (dfs_.pre[y] == 0 || (dfs_.pre[x] < dfs_.pre[y] && dfs_.post[x] < dfs_.post[y])) {
    rebuild_full();
    return;
  }
  repair(dfs_.pre[y]);
}

void DsncaEngine::on_delete(VertexId x, VertexId y) {
  if (x == y || y == tree_.root()) return;
  if (tg_valid_[y] && x != dfs_.tree_parent[y] && x != semi_.witness[y]) {
    ++counters_.unchanged_shortcuts;
    return;  // the deletion cannot affect the tree
  }
  if (!tg_valid_[y] || x == dfs_.tree_parent[y]) {
    rebuild_full();
    return;
  }
  // x == g(y): the DFS tree is intact, redo path minima up to pre(y).
  repair(dfs_.pre[y]);
}

}  // namespace domdyn
