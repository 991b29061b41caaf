#include "domdyn/dbs.hpp"

#include <algorithm>

namespace domdyn {

DbsEngine::DbsEngine(FlowGraph g) : Engine(std::move(g)) {
  int n = graph_.vertex_count();
  scanned_.assign(n + 1, 0);
  affected_.assign(n + 1, 0);
  buckets_.assign(n + 1, {});
  tg_valid_.assign(n + 1, 0);
  tg_parent_.assign(n + 1, kNoVertex);
  tg_witness_.assign(n + 1, kNoVertex);
  rebuild_full();
  counters_.full_rebuilds = 0;  // the initial build is not an update rebuild
}

void DbsEngine::rebuild_full() {
  SncaResult r = snca(graph_, graph_.start());
  tree_.assign(r.parent);
  for (VertexId v = 1; v <= graph_.vertex_count(); ++v) {
    if (r.dfs.pre[v] != 0) {
      tg_parent_[v] = r.dfs.tree_parent[v];
      tg_witness_[v] = r.semi.witness[v];
      tg_valid_[v] = 1;
    } else {
      tg_valid_[v] = 0;
    }
  }
  ++counters_.full_rebuilds;
}

bool DbsEngine::state_clean() const {
  for (VertexId v = 1; v <= graph_.vertex_count(); ++v) {
    if (scanned_[v] || affected_[v]) return false;
  }
  for (const auto& b : buckets_) {
    if (!b.empty()) return false;
  }
  return true;
}

void DbsEngine::scan(VertexId v, int level, VertexId z) {
  int z_depth = tree_.depth(z);
  std::vector<VertexId> stack = {v};
  scanned_[v] = 1;
  trace_.scanned.emplace_back(v, tree_.depth(v));
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId w : graph_.out(u)) {
      if (w == u) continue;
      int dw = tree_.depth(w);
      if (dw > level) {
        if (!scanned_[w]) {
          scanned_[w] = 1;
          trace_.scanned.emplace_back(w, dw);
          stack.push_back(w);
        }
      } else if (z_depth + 1 < dw && !affected_[w]) {
        affected_[w] = 1;
        buckets_[dw].push_back(w);
        trace_.affected.push_back(w);
      }
    }
  }
}

void DbsEngine::on_insert(VertexId x, VertexId y) {
  trace_ = {};
  if (x == y) return;
  if (!tree_.reachable(x)) return;  // adjacency update only
  if (!tree_.reachable(y)) {
    rebuild_full();
    return;
  }
  VertexId z = tree_.nca(x, y);
  trace_.nca = z;
  trace_.nca_depth = tree_.depth(z);
  if (z == y || z == tree_.parent(y)) return;

  affected_[y] = 1;
  buckets_[tree_.depth(y)].push_back(y);
  trace_.affected.push_back(y);
  std::size_t pending = 1;
  int cursor = tree_.depth(y);  // only moves downward within this insertion
  while (pending > 0) {
    while (buckets_[cursor].empty()) --cursor;
    VertexId v = buckets_[cursor].back();
    buckets_[cursor].pop_back();
    --pending;
    std::size_t before = trace_.affected.size();
    trace_.levels.push_back(cursor);
    scan(v, cursor, z);
    pending += trace_.affected.size() - before;
  }

  for (VertexId v : trace_.affected) {
    tree_.reattach(v, z);
    tg_valid_[v] = 0;
  }
  tree_.rebuild_order();
  counters_.affected_total += static_cast<long long>(trace_.affected.size());
  counters_.scanned_total += static_cast<long long>(trace_.scanned.size());
  for (VertexId v : trace_.affected) affected_[v] = 0;
  for (auto& [v, d] : trace_.scanned) scanned_[v] = 0;
}

void DbsEngine::snca_splice(VertexId sub_root, const std::vector<VertexId>& region,
                            const std::vector<VertexId>& extra_detach) {
  VertexMask mask(graph_.vertex_count() + 1, 0);
  for (VertexId v : region) mask[v] = 1;
  SncaResult r = snca(graph_, sub_root, &mask);
  for (VertexId v : region) {
    if (v == sub_root) continue;
    tree_.set_parent_raw(v, r.parent[v]);
    if (r.dfs.pre[v] != 0) {
      tg_parent_[v] = r.dfs.tree_parent[v];
      tg_witness_[v] = r.semi.witness[v];
      tg_valid_[v] = 1;
    } else {
      tg_valid_[v] = 0;
    }
  }
  for (VertexId v : extra_detach) {
    if (!mask[v]) {
      tree_.set_parent_raw(v, kNoVertex);
      tg_valid_[v] = 0;
    }
  }
  tree_.refresh();
}

void DbsEngine::on_delete(VertexId x, VertexId y) {
  if (x == y || y == tree_.root()) return;
  if (!tree_.reachable(y)) return;
  if (still_reachable(y)) {
    if (tg_valid_[y] && x != tg_parent_[y] && x != tg_witness_[y]) {
      ++counters_.unchanged_shortcuts;
      return;
    }
    VertexId sub_root = tree_.parent(y);
    snca_splice(sub_root, tree_.subtree_vertices(sub_root), {});
    return;
  }

  // y becomes unreachable: find V+(y) by a DFS over vertices no shallower
  // than y, collecting the targets that escape upward.
  int dy = tree_.depth(y);
  std::vector<char> visited(graph_.vertex_count() + 1, 0);
  std::vector<char> in_vplus(graph_.vertex_count() + 1, 0);
  std::vector<VertexId> vplus;
  std::vector<VertexId> stack = {y};
  visited[y] = 1;
  while (!stack.empty()) {
    VertexId w = stack.back();
    stack.pop_back();
    for (VertexId v : graph_.out(w)) {
      if (v == w) continue;
      int dv = tree_.depth(v);
      if (dv <= dy && !in_vplus[v]) {
        in_vplus[v] = 1;
        vplus.push_back(v);
      }
      if (dv >= dy && !visited[v]) {
        visited[v] = 1;
        stack.push_back(v);
      }
    }
  }

  VertexId pick = kNoVertex;
  for (VertexId v : vplus) {
    if (tree_.dominates(v, y)) continue;
    if (pick == kNoVertex || tree_.depth(v) < tree_.depth(pick)) pick = v;
  }

  std::vector<VertexId> lost = tree_.subtree_vertices(y);
  if (pick == kNoVertex) {
    // No escaping edge needs repair; only y's subtree drops out.
    tree_.detach_subtree(y);
    for (VertexId v : lost) tg_valid_[v] = 0;
    tree_.rebuild_order();
    return;
  }
  VertexId sub_root = tree_.parent(pick);
  snca_splice(sub_root, tree_.subtree_vertices(sub_root), lost);
}

}  // namespace domdyn
